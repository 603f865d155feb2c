// Embedded reference tables: the published classification rows this tool
// reproduces and validates against.  Rows whose derivations live in prior
// work are flagged reference; rows the pipelines re-derive are flagged
// derived.  Numeric columns only; no sheaf-theoretic data beyond degrees.
#pragma once

#include "birclass/types.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace birclass {

/// A classification-table row, carrying everything validate_row needs.
struct TableRow {
    std::string table_id;   // "1".."5"
    std::string line;       // roman numeral within the table
    Int r, n, d1, d2, a, Delta, lambda, g;
    std::string structure;
    bool derived_here = false;            // re-derived by a pipeline in this tool
    std::optional<Int> delta_stored;      // fourfold discriminant, when published
    std::optional<Int> nu;                // exceptional points, when pinned by the pipeline
};

/// Cubic transformations of P^n, n <= 6, type (3,d), d > 1.
inline const std::vector<TableRow>& table1() {
    static const std::vector<TableRow> rows = {
        {"1", "I",    1, 3, 3, 3, 0, 1,  6,  3, "Determinantal curve",                           false, std::nullopt, std::nullopt},
        {"1", "II",   1, 3, 3, 2, 1, 2,  5,  1, "Elliptic curve",                                false, std::nullopt, std::nullopt},
        {"1", "III",  2, 4, 3, 2, 0, 1,  5,  1, "Elliptic scroll",                               false, std::nullopt, std::nullopt},
        {"1", "IV",   3, 6, 3, 5, 0, 1, 14, 15, "Pfaffian threefold",                            true,  Int(14), Int(0)},
        {"1", "V",    3, 6, 3, 5, 0, 1, 13, 12, "Conic bundle over P2",                          true,  Int(14), Int(0)},
        {"1", "VI",   3, 6, 3, 3, 1, 3, 12, 10, "Sextic del Pezzo fibration over P1",            true,  Int(18), Int(0)},
        {"1", "VII",  3, 6, 3, 4, 1, 2, 12, 10, "Blow-up at one point of a quintic del Pezzo fibration over P1",
                                                                                                 true,  Int(12), Int(1)},
        {"1", "VIII", 3, 6, 3, 3, 2, 4, 11,  8, "Blow-up at three points of G(1,5) cap P9",      true,  Int(14), Int(3)},
        {"1", "IX",   3, 6, 3, 2, 3, 8, 10,  6, "Scroll over P2 with four double points blown up",
                                                                                                 true,  Int(14), std::nullopt},
    };
    return rows;
}

/// Quadratic transformations, type (2,d), d > 1 (reference data only).
inline const std::vector<TableRow>& table3() {
    static const std::vector<TableRow> rows = {
        {"3", "I",    1, 4, 2, 3, 0, 1,  5, 1, "Elliptic curve",                      false, std::nullopt, std::nullopt},
        {"3", "II",   1, 4, 2, 2, 1, 2,  4, 0, "Rational normal curve",               false, std::nullopt, std::nullopt},
        {"3", "III",  2, 5, 2, 2, 0, 1,  4, 0, "Veronese surface",                    false, std::nullopt, std::nullopt},
        {"3", "IV",   2, 6, 2, 4, 0, 1,  7, 1, "Elliptic scroll",                     false, std::nullopt, std::nullopt},
        {"3", "V",    2, 6, 2, 4, 0, 1,  8, 3, "Blow-up of P2 at 8 simple points",    false, std::nullopt, std::nullopt},
        {"3", "VI",   2, 6, 2, 3, 1, 2,  7, 2, "Blow-up of P2 at 5 simple points and one double point",
                                                                                      false, std::nullopt, std::nullopt},
        {"3", "VII",  2, 6, 2, 2, 2, 4,  6, 1, "Blow-up of P2 at 3 simple points",    false, std::nullopt, std::nullopt},
        {"3", "VIII", 3, 7, 2, 2, 1, 2,  6, 1, "Hyperplane section of P2 x P2",       false, std::nullopt, std::nullopt},
        {"3", "IX",   3, 8, 2, 5, 0, 1, 12, 6, "Scroll over a rational surface with K2 = 5",
                                                                                      false, std::nullopt, std::nullopt},
        {"3", "X",    3, 8, 2, 5, 0, 1, 13, 8, "Blow-up at one point of G(1,5) cap P9",
                                                                                      false, std::nullopt, std::nullopt},
        {"3", "XI",   3, 8, 2, 3, 1, 3, 11, 5, "Blow-up of Q3 at 5 points",           false, std::nullopt, std::nullopt},
        {"3", "XII",  3, 8, 2, 4, 1, 2, 11, 5, "Scroll over F1",                      false, std::nullopt, std::nullopt},
        {"3", "XIII", 3, 8, 2, 4, 1, 2, 12, 7, "Linear section of the spinor tenfold",
                                                                                      false, std::nullopt, std::nullopt},
        {"3", "XIV",  3, 8, 2, 3, 2, 4, 10, 4, "Scroll over Q2",                      false, std::nullopt, std::nullopt},
        {"3", "XV",   3, 8, 2, 2, 3, 8,  9, 3, "Scroll over P2",                      false, std::nullopt, std::nullopt},
    };
    return rows;
}

/// Quartic and quintic transformations, d > 1.
inline const std::vector<TableRow>& table4() {
    static const std::vector<TableRow> rows = {
        {"4", "I",   2, 4, 4, 4, 0, 1, 10, 11, "Determinantal surface",          false, std::nullopt, std::nullopt},
        {"4", "II",  2, 4, 4, 2, 1, 3,  9,  8, "K3 surface with five (-1)-lines", true, std::nullopt, std::nullopt},
        {"4", "III", 3, 5, 5, 5, 0, 1, 15, 26, "Determinantal threefold",        false, std::nullopt, std::nullopt},
        {"4", "IV",  3, 5, 5, 3, 1, 3, 14, 22, "Threefold linked to a threefold of degree 11 and sectional genus 13",
                                                                                 false, std::nullopt, std::nullopt},
    };
    return rows;
}

/// Transformations with linear inverse, type (d,1).
inline const std::vector<TableRow>& table5() {
    static const std::vector<TableRow> rows = {
        {"5", "I",    1, 3, 2, 1, 1,  2,  2,  0, "Conic",                            false, std::nullopt, std::nullopt},
        {"5", "II",   1, 3, 3, 1, 2,  4,  5,  2, "Curve of genus 2",                 true,  std::nullopt, std::nullopt},
        {"5", "III",  2, 4, 2, 1, 1,  2,  2,  0, "Two-dimensional quadric",          false, std::nullopt, std::nullopt},
        {"5", "IV",   2, 4, 3, 1, 2,  4,  5,  2, "Blow-up of P2 at 7 simple points and one double point",
                                                                                     true,  std::nullopt, std::nullopt},
        {"5", "V",    2, 4, 4, 1, 3,  8,  9,  9, "Surface linked to a cubic scroll in the c.i. of type (3,4)",
                                                                                     false, std::nullopt, std::nullopt},
        {"5", "VI",   3, 5, 2, 1, 1,  2,  2,  0, "Three-dimensional quadric",        false, std::nullopt, std::nullopt},
        {"5", "VII",  3, 5, 3, 1, 2,  4,  5,  2, "Quadric fibration over P1",        true,  std::nullopt, std::nullopt},
        {"5", "VIII", 3, 5, 4, 1, 3,  8,  9,  9, "Threefold linked to a cubic scroll in the c.i. of type (3,4)",
                                                                                     true,  std::nullopt, std::nullopt},
        {"5", "IX",   3, 5, 5, 1, 4, 16, 14, 23, "Threefold linked to a threefold of degree 11 and sectional genus 14",
                                                                                     false, std::nullopt, std::nullopt},
    };
    return rows;
}

/// The preliminary dimension classification (d2 > 1, r <= 3): columns
/// (n, r, r', d1, d2, c).  26 rows.
inline const std::vector<std::array<int, 6>>& preliminary_table() {
    static const std::vector<std::array<int, 6>> rows = {
        {3, 1, 1, 3, 2, 1}, {3, 1, 1, 3, 3, 0}, {4, 1, 2, 2, 2, 1}, {4, 1, 2, 2, 3, 0},
        {4, 2, 1, 3, 2, 0}, {4, 2, 2, 4, 2, 2}, {4, 2, 2, 4, 3, 1}, {4, 2, 2, 4, 4, 0},
        {5, 2, 2, 2, 2, 0}, {6, 2, 4, 2, 2, 2}, {6, 2, 4, 2, 3, 1}, {6, 2, 4, 2, 4, 0},
        {5, 3, 2, 4, 2, 1}, {5, 3, 3, 5, 2, 3}, {5, 3, 3, 5, 3, 2}, {5, 3, 3, 5, 4, 1},
        {5, 3, 3, 5, 5, 0}, {6, 3, 4, 3, 2, 3}, {6, 3, 4, 3, 3, 2}, {6, 3, 4, 3, 4, 1},
        {6, 3, 4, 3, 5, 0}, {7, 3, 4, 2, 2, 1}, {8, 3, 6, 2, 2, 3}, {8, 3, 6, 2, 3, 2},
        {8, 3, 6, 2, 4, 1}, {8, 3, 6, 2, 5, 0},
    };
    return rows;
}

/// One row of the fourfold-discriminant table: a hyperplane-section surface
/// of a base locus, the divisor label delta, and stored cohomology reference
/// data (h0(I_S(3)), h0(N_{S/P5}), h0(N_{S/X})) that is never recomputed.
struct FourfoldRow {
    std::string source;                           // which transformation row
    std::optional<TransformationProfile> profile; // known discrete signature
    Int delta_stored;
    std::array<Int, 3> h0;                        // reference data only
    bool conditional = false;  // profile lies outside the c.i. pipeline
};

inline const std::vector<FourfoldRow>& table2() {
    auto cp = [](Int l, Int g, Int D, Int d, Int a) {
        return TransformationProfile::cubic(std::move(l), std::move(g), std::move(D),
                                            std::move(d), std::move(a));
    };
    // The scroll into G(1,4) sits outside the complete-intersection pipeline;
    // its signature (Delta = 5, d = 3, a = 3) is stored here so delta can be
    // recomputed, and the row is flagged conditional.
    static const std::vector<FourfoldRow> rows = {
        {"scroll into G(1,4)", cp(10, 6, 5, 3, 3),  Int(8),  {Int(10), Int(57), Int(12)}, true},
        {"table 1 line IV",    cp(14, 15, 1, 5, 0), Int(14), {Int(7),  Int(77), Int(29)}, false},
        {"table 1 line V",     cp(13, 12, 1, 5, 0), Int(14), {Int(7),  Int(68), Int(20)}, false},
        {"table 1 line VI",    cp(12, 10, 3, 3, 1), Int(18), {Int(8),  Int(63), Int(16)}, false},
        {"table 1 line VII",   cp(12, 10, 2, 4, 1), Int(12), {Int(8),  Int(65), Int(18)}, false},
        {"table 1 line VIII",  cp(11, 8, 4, 3, 2),  Int(14), {Int(9),  Int(60), Int(14)}, false},
        {"table 1 line IX",    cp(10, 6, 8, 2, 3),  Int(14), {Int(10), Int(55), Int(10)}, false},
        {"cubo-linear, image of degree 57", cp(6, 1, 57, 1, 13),  Int(18), {Int(19), Int(39), Int(3)},  false},
        {"cubo-linear, image of degree 30", cp(9, 5, 30, 1, 7),   Int(18), {Int(13), Int(51), Int(9)},  false},
        {"cubo-linear, image of degree 25", cp(10, 7, 25, 1, 6),  Int(14), {Int(12), Int(58), Int(15)}, false},
        {"cubo-linear, image of degree 21", cp(11, 9, 21, 1, 5),  Int(14), {Int(11), Int(63), Int(19)}, false},
    };
    return rows;
}

/// Stored base-surface data for the two scroll-over-surface candidates:
/// (chi(O_Y), K_Y^2, c1(E)^2, c2(E)).  The exclusion test is c1(E)^2 <= 2g - 2.
struct ScrollSurfaceData {
    GammaTuple tuple;
    Int chiOY, KY2, c1E2, c2E;
};

inline const std::vector<ScrollSurfaceData>& scroll_surface_data() {
    static const std::vector<ScrollSurfaceData> rows = {
        {GammaTuple(10, 6, 8, 2, 3),  Int(1), Int(5),  Int(20), Int(10)},
        {GammaTuple(12, 11, 8, 2, 3), Int(4), Int(18), Int(29), Int(17)},
    };
    return rows;
}

}  // namespace birclass
