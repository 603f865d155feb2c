// Domain types: the discrete signature of a transformation, its intersection
// numbers, multidegrees, pluridegrees, and the candidate tuples handled by
// the enumerator.  All values are immutable once built and freely shareable.
#pragma once

#include "birclass/rational.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace birclass {

/// Discrete signature (n, d1, d2, a, Delta, lambda, g [, nu]) of a candidate
/// transformation.  eps is epsilon(d2): 1 iff the inverse is linear.  It is
/// fixed at construction and never recomputed downstream.
struct TransformationProfile {
    Int n;       // ambient dimension, >= 3
    Int d1;      // degree of the defining forms
    Int d2;      // degree d of the inverse
    Int a;       // codimension of the image
    Int Delta;   // degree of the image
    Int lambda;  // degree of the base locus
    Int g;       // sectional genus of the base locus
    std::optional<Int> nu;  // number of exceptional points, when known
    int eps = 0;

    TransformationProfile() = default;
    TransformationProfile(Int n_, Int d1_, Int d2_, Int a_, Int Delta_, Int lambda_, Int g_,
                          std::optional<Int> nu_ = std::nullopt)
        : n(std::move(n_)), d1(std::move(d1_)), d2(std::move(d2_)), a(std::move(a_)),
          Delta(std::move(Delta_)), lambda(std::move(lambda_)), g(std::move(g_)),
          nu(std::move(nu_)), eps(d2 == 1 ? 1 : 0) {}

    /// Cubic-case profile (n = 6, d1 = 3).
    static TransformationProfile cubic(Int lambda, Int g, Int Delta, Int d,
                                       Int a, std::optional<Int> nu = std::nullopt) {
        return {6, 3, std::move(d), std::move(a), std::move(Delta),
                std::move(lambda), std::move(g), std::move(nu)};
    }
};

/// Base-locus dimensions (r, r') and the coindex-like integer c >= 0.
struct DimensionPair {
    Int r;
    Int r_prime;
    Int c;
    bool operator==(const DimensionPair&) const = default;
};

/// Intersection numbers of the base locus: canonical, Chern and Segre degrees.
struct CanonicalDegrees {
    Int KH2, K2H, K3, H3;    // K.H^2, K^2.H, K^3, H^3
    Int c1H2, c2H, c3;       // Chern degrees of the tangent bundle
    Int s1H2, s2H, s3;       // Segre degrees of the normal bundle
    bool operator==(const CanonicalDegrees&) const = default;
};

/// Invariants of a smooth hyperplane-section surface of the base locus.
struct SurfaceSectionInvariants {
    Int KSHS, KS2, chiOS, c2TS;
    bool operator==(const SurfaceSectionInvariants&) const = default;
};

/// Projective degrees (delta_0, ..., delta_n) of a transformation.
struct MultiDegree {
    std::vector<Int> degrees;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<Int> d) : degrees(std::move(d)) {}
    MultiDegree(std::initializer_list<Int> d) : degrees(d) {}

    [[nodiscard]] std::size_t size() const { return degrees.size(); }
    const Int& operator[](std::size_t k) const { return degrees[k]; }
    bool operator==(const MultiDegree&) const = default;
};

/// Pluridegrees d_j = (K_R + H_R)^j . H_R^{3-j} of the minimal reduction.
struct Pluridegrees {
    Int d0, d1, d2, d3;
    bool operator==(const Pluridegrees&) const = default;
};

/// One linear condition on the Hilbert polynomial: chi(O_B(t)) = chi.
struct HilbertCondition {
    Int t;
    Int chi;
    bool operator==(const HilbertCondition&) const = default;
};
using HilbertConditions = std::vector<HilbertCondition>;

/// A candidate tuple (lambda, g [, nu], Delta, d, a) handled by the
/// enumerator.  Canonical order is lexicographic by (lambda, g, Delta, d, a, nu).
struct GammaTuple {
    Int lambda, g, Delta, d, a;
    std::optional<Int> nu;

    GammaTuple() = default;
    GammaTuple(Int lambda_, Int g_, Int Delta_, Int d_, Int a_,
               std::optional<Int> nu_ = std::nullopt)
        : lambda(std::move(lambda_)), g(std::move(g_)), Delta(std::move(Delta_)),
          d(std::move(d_)), a(std::move(a_)), nu(std::move(nu_)) {}

    [[nodiscard]] TransformationProfile cubic_profile() const {
        return TransformationProfile::cubic(lambda, g, Delta, d, a, nu);
    }

    [[nodiscard]] auto key() const {
        return std::make_tuple(lambda, g, Delta, d, a, nu.value_or(Int(-1)));
    }
    bool operator==(const GammaTuple& o) const { return key() == o.key(); }
    bool operator<(const GammaTuple& o) const { return key() < o.key(); }
};

/// A named, canonically ordered candidate set together with the list of
/// constraint identifiers that produced it.
struct CandidateSet {
    std::string name;
    std::vector<GammaTuple> tuples;
    std::vector<std::string> provenance;

    [[nodiscard]] std::size_t size() const { return tuples.size(); }
    [[nodiscard]] bool contains(const GammaTuple& t) const {
        return std::binary_search(tuples.begin(), tuples.end(), t);
    }
};

/// Complete-intersection type: hypersurface degrees e_1 <= ... <= e_a, each >= 2.
/// Product of the degrees is the image degree, their sum is a + c.
struct CIType {
    std::vector<Int> degrees;

    [[nodiscard]] Int product() const {
        Int p = 1;
        for (const auto& e : degrees) p *= e;
        return p;
    }
    [[nodiscard]] Int sum() const {
        Int s = 0;
        for (const auto& e : degrees) s += e;
        return s;
    }
};

}  // namespace birclass
