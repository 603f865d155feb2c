// Exhaustive enumeration of the finite candidate sets over bounded integer
// boxes, filtered through the Hodge-type and Livorni-Sommese inequality
// systems, the Castelnuovo genus bound and the Le Barz quadrisecant bound.
// Enumeration is deterministic: tuples are produced in canonical
// (lambda, g, Delta, d, a, nu) order regardless of the number of worker
// threads.
#pragma once

#include "birclass/invariants.hpp"
#include "birclass/rational.hpp"
#include "birclass/types.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace birclass {

/// Hodge (log-concavity) inequalities on the multidegree of a cubic
/// transformation of P^6, written out in (lambda, g, Delta, d):
///   delta1 delta3 >= delta4, delta1 delta4 >= delta5, delta3^2 >= delta2 delta4,
///   delta4^2 >= delta3 delta5, delta5^2 >= delta4 delta6.
inline bool hodge_check(const Int& l, const Int& g, const Int& D, const Int& d) {
    const Int Dd = D * d;
    if (2 * l - g + 1 < 0) return false;
    if (-21 * l + 6 * g - Dd + 237 < 0) return false;
    if (l * l + 9 * l - 18 * g + 18 < 0) return false;
    if (49 * l * l - 28 * l * g + 4 * g * g + (Dd - 1106) * l + 316 * g - 27 * Dd + 6241 < 0)
        return false;
    if (7 * D * l - 2 * D * g + D * D * d * d - 79 * D < 0) return false;
    return true;
}

/// The four Livorni-Sommese inequalities for threefolds in P^6 cut out by cubics.
inline bool livorni_sommese_check(const Int& l, const Int& g, const Int& D,
                                  const Int& d, const Int& a, const Int& eps) {
    const Int Dd = D * d;
    if (l * l + 7 * l - 10 * g - 2 * Dd + 12 * a - 12 * eps - 92 < 0) return false;
    if (-10 * l + 8 * g + 2 * Dd - 12 * a + 12 * eps + 94 < 0) return false;
    if (-290 * l + 140 * g - 13 * Dd + D + 2290 < 0) return false;
    if (-147 * l + 74 * g + 12 * Dd - D - 84 * a + 108 * eps + 1183 < 0) return false;
    return true;
}

/// Le Barz quadrisecant-count bound on the number nu of exceptional points,
/// as an exact rational, for the cubic case written in (lambda, g, Delta d, a).
inline Rat le_barz_bound(const Int& l, const Int& g, const Int& Dd, const Int& a) {
    return Rat(1, 8) * Rat(l) * l * l * l - Rat(1, 2) * Rat(l) * l * Dd +
           Rat(1, 2) * Rat(Dd) * Dd + Rat(3, 4) * Rat(l) * l * l - Rat(3 * l * l * g) +
           Rat(1, 2) * Rat(l) * Dd + Rat(5 * g * Dd) + Rat(3 * l * l * a) - Rat(6 * Dd * a) -
           Rat(433, 8) * Rat(l) * l + Rat(20 * l * g) + Rat(13 * g * g) +
           Rat(25, 2) * Rat(Dd) - Rat(7 * l * a) - Rat(30 * g * a) + Rat(18 * a * a) +
           Rat(2825, 4) * Rat(l) - Rat(98 * g) - Rat(21 * a) - Rat(2969);
}

/// Floor of the Le Barz bound for a cubic-case tuple (n = 6, d1 = 3, d != 1).
/// Negative values mean the tuple admits no reduction at all.
inline Int le_barz_max_nu(const Int& l, const Int& g, const Int& D, const Int& d,
                          const Int& a) {
    return floor_rat(le_barz_bound(l, g, D * d, a));
}

/// Le Barz bound valid for any eps.  The bound is a polynomial in the
/// section-surface invariants (deg, K.H, K^2, chi); in this family those
/// depend on a and eps only through a - eps (K^2 carries -12a + 12 eps, chi
/// carries -a + eps, the other two are eps-free), so the general case is the
/// printed eps = 0 polynomial evaluated at a - eps.
inline Int le_barz_max_nu_eps(const Int& l, const Int& g, const Int& D, const Int& d,
                              const Int& a, const Int& eps) {
    return floor_rat(le_barz_bound(l, g, D * d, a - eps));
}

/// The four nef-and-big slacks for K_R + H_R on the minimal reduction,
/// d1(R) - 1, d2(R) - 1, d3(R) - 1 and d1(R)^2 - d2(R) d0(R), written out for
/// a 6-tuple (lambda, g, nu, Delta, d, a) with d != 1.
inline std::array<Int, 4> reduction_quantities(const GammaTuple& t) {
    if (!t.nu) throw std::invalid_argument("reduction_quantities: tuple carries no nu");
    const Int &l = t.lambda, &g = t.g, &D = t.Delta, &d = t.d, &a = t.a;
    const Int nu = *t.nu;
    const Int Dd = D * d;
    return {-l + 2 * g - nu - 3,
            Dd - 42 * l + 18 * g + nu - 12 * a + 326,
            l * l - 199 * l + 62 * g - nu - D - 48 * a + 1674,
            -l * Dd - nu * Dd + 43 * l * l - 22 * l * g + 4 * g * g + 43 * l * nu - 22 * g * nu +
                12 * l * a + 12 * nu * a - 323 * l - 8 * g - 323 * nu + 4};
}

/// True iff all four reduction slacks are non-negative.
inline bool reduction_check(const GammaTuple& t) {
    for (const auto& q : reduction_quantities(t))
        if (q < 0) return false;
    return true;
}

/// { prod e_i : multisets e_1..e_a with e_i >= 2 and sum e_i = a + c }.
/// Empty iff a > c, since sum (e_i - 2) = c - a must be non-negative.
inline std::set<Int> ci_degree_options(const Int& a, const Int& c) {
    if (a < 1 || c < 1) throw std::invalid_argument("ci_degree_options: a, c >= 1 required");
    std::set<Int> out;
    // Recursive multiset partition of a + c into a parts, each >= the previous.
    struct Rec {
        std::set<Int>* out;
        void go(const Int& parts, const Int& remaining, const Int& mine, const Int& prod) const {
            if (parts == 0) {
                if (remaining == 0) out->insert(prod);
                return;
            }
            for (Int e = mine; e <= remaining - 2 * (parts - 1); ++e)
                go(parts - 1, remaining - e, e, prod * e);
        }
    };
    Rec rec{&out};
    rec.go(a, a + c, 2, 1);
    return out;
}

/// All complete-intersection types (e_1 <= ... <= e_a, e_i >= 2) with
/// sum e_i = a + c and prod e_i = Delta.
inline std::vector<CIType> ci_types(const Int& a, const Int& c, const Int& Delta) {
    std::vector<CIType> out;
    std::vector<Int> cur;
    struct Rec {
        std::vector<CIType>* out;
        const Int* Delta;
        void go(std::vector<Int>& cur, const Int& parts, const Int& remaining,
                const Int& mine, const Int& prod) const {
            if (parts == 0) {
                if (remaining == 0 && prod == *Delta) out->push_back(CIType{cur});
                return;
            }
            for (Int e = mine; e <= remaining - 2 * (parts - 1); ++e) {
                cur.push_back(e);
                go(cur, parts - 1, remaining - e, e, prod * e);
                cur.pop_back();
            }
        }
    };
    Rec rec{&out, &Delta};
    rec.go(cur, a, a + c, 2, 1);
    return out;
}

/// The three base candidate sets of the cubic-case enumeration.
struct BaseSets {
    CandidateSet full;              // all 5-tuples (lambda, g, Delta, d, a)
    CandidateSet d_ne_1;            // the d != 1 part
    CandidateSet d_eq_1_projected;  // the d = 1 part, as (lambda, g, Delta, a)
};

namespace detail {

// Enumerate one lambda slice of the base box.  The box is
//   3 <= lambda <= 27 (non-degenerate, cut out by cubics, codimension 3),
//   0 <= g <= Castelnuovo bound for the curve section in P^4,
//   d <= 5 with the degree pairing d = 5 <=> Delta = 1 (a = 0) and
//   d = 4 <=> Delta = 2 (a = 1); Delta >= 3 forces a >= 1.
// Bounds not part of the printed systems are implied by them and derived here:
//   Delta d <= -21 lambda + 6 g + 237        (second Hodge inequality)
//   12 a <= -10 lambda + 8 g + 2 Delta d + 12 eps + 94   (second L-S inequality)
// so the loops below cover every tuple that can pass the full filter.
inline void enumerate_lambda_slice(const Int& l, std::vector<GammaTuple>& out) {
    const Rat gmax = castelnuovo_bound_p4(l);
    for (Int g = 0; Rat(g) <= gmax; ++g) {
        for (Int d = 1; d <= 5; ++d) {
            const Int eps = (d == 1) ? 1 : 0;
            if (d >= 4) {
                const Int D = (d == 5) ? 1 : 2;
                const Int a = (d == 5) ? 0 : 1;
                if (hodge_check(l, g, D, d) && livorni_sommese_check(l, g, D, d, a, eps))
                    out.emplace_back(l, g, D, d, a);
                continue;
            }
            const Int Dd_max = -21 * l + 6 * g + 237;
            for (Int D = 3; D * d <= Dd_max; ++D) {
                if (!hodge_check(l, g, D, d)) continue;
                const Int a_hi = floor_div(-10 * l + 8 * g + 2 * D * d + 12 * eps + 94, 12);
                for (Int a = 1; a <= a_hi; ++a) {
                    if (livorni_sommese_check(l, g, D, d, a, eps))
                        out.emplace_back(l, g, D, d, a);
                }
            }
        }
    }
}

}  // namespace detail

inline const std::vector<std::string>& base_set_provenance() {
    static const std::vector<std::string> p = {"castelnuovo-p4", "degree-pairing", "hodge",
                                               "livorni-sommese"};
    return p;
}

/// Split the full base set into its d != 1 part and the projected d = 1 part.
inline BaseSets split_base_set(CandidateSet full) {
    BaseSets sets;
    sets.d_ne_1.name = "gamma5_d_ne_1";
    sets.d_ne_1.provenance = full.provenance;
    sets.d_ne_1.provenance.push_back("d-ne-1");
    sets.d_eq_1_projected.name = "gamma4";
    sets.d_eq_1_projected.provenance = full.provenance;
    sets.d_eq_1_projected.provenance.push_back("d-eq-1-projected");
    for (const auto& t : full.tuples)
        (t.d != 1 ? sets.d_ne_1 : sets.d_eq_1_projected).tuples.push_back(t);
    sets.full = std::move(full);
    return sets;
}

/// Enumerate the base candidate sets.  jobs > 1 partitions the lambda range
/// over worker threads; slices are merged in order, so the output is
/// byte-identical to the single-threaded run.
inline BaseSets enumerate_base_set(int jobs = 1) {
    constexpr int kLambdaLo = 3, kLambdaHi = 27;
    std::vector<std::vector<GammaTuple>> slices(kLambdaHi - kLambdaLo + 1);
    if (jobs <= 1) {
        for (int l = kLambdaLo; l <= kLambdaHi; ++l)
            detail::enumerate_lambda_slice(l, slices[static_cast<std::size_t>(l - kLambdaLo)]);
    } else {
        std::vector<std::thread> workers;
        std::atomic<int> next{kLambdaLo};
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (int l = next.fetch_add(1); l <= kLambdaHi; l = next.fetch_add(1))
                    detail::enumerate_lambda_slice(l, slices[static_cast<std::size_t>(l - kLambdaLo)]);
            });
        }
        for (auto& t : workers) t.join();
    }

    CandidateSet full;
    full.name = "gamma5";
    full.provenance = base_set_provenance();
    for (auto& s : slices)
        full.tuples.insert(full.tuples.end(), s.begin(), s.end());
    std::sort(full.tuples.begin(), full.tuples.end());
    return split_base_set(std::move(full));
}

/// Complete-intersection restriction: keep tuples of the d != 1 set whose
/// (Delta, d, a) is realized by hypersurface degrees e_1..e_a >= 2 with
/// a = sum e_i + d - 5 (so a + d <= 5); a = 0 demands Delta = 1.
inline CandidateSet ci_restriction(const CandidateSet& base) {
    CandidateSet out;
    out.name = "gamma5_ci";
    out.provenance = base.provenance;
    out.provenance.push_back("complete-intersection");
    for (const auto& t : base.tuples) {
        if (t.a + t.d > 5) continue;
        const Int c = 5 - t.d;
        bool keep = false;
        if (t.a == 0) {
            keep = (t.Delta == 1);
        } else if (c >= 1) {
            keep = ci_degree_options(t.a, c).count(t.Delta) > 0;
        }
        if (keep) out.tuples.push_back(t);
    }
    return out;
}

/// Extend each surviving 5-tuple by 0 <= nu <= Le Barz bound.
inline CandidateSet enumerate_with_nu(const CandidateSet& ci) {
    CandidateSet out;
    out.name = "gamma6";
    out.provenance = ci.provenance;
    out.provenance.push_back("le-barz-nu-extension");
    for (const auto& t : ci.tuples) {
        const Int nmax = le_barz_max_nu(t.lambda, t.g, t.Delta, t.d, t.a);
        for (Int nu = 0; nu <= nmax; ++nu)
            out.tuples.emplace_back(t.lambda, t.g, t.Delta, t.d, t.a, nu);
    }
    std::sort(out.tuples.begin(), out.tuples.end());
    return out;
}

/// Restriction of the complement set by a user-supplied (Delta, a) allowlist
/// (for images that are not complete intersections but carry externally
/// classified invariants).  Returns how many 5-tuples survive.  No allowlist
/// is built in.
inline CandidateSet fano_restriction(const CandidateSet& base,
                                     const std::vector<std::pair<Int, Int>>& allowed_Delta_a) {
    CandidateSet out;
    out.name = "gamma5_fano";
    out.provenance = base.provenance;
    out.provenance.push_back("user-Delta-a-allowlist");
    for (const auto& t : base.tuples) {
        for (const auto& [D, a] : allowed_Delta_a) {
            if (t.Delta == D && t.a == a) {
                out.tuples.push_back(t);
                break;
            }
        }
    }
    return out;
}

/// One row of the preliminary dimension classification.  Rows order by
/// base-locus dimension first, matching the printed table.
struct PreliminaryRow {
    Int n, r, r_prime, d1, d2, c;
    auto key() const { return std::tie(r, n, r_prime, d1, d2, c); }
    bool operator==(const PreliminaryRow& o) const { return key() == o.key(); }
    bool operator<(const PreliminaryRow& o) const { return key() < o.key(); }
};

/// All integer solutions of the dimension relations with d1, d2 >= 2, c >= 0,
/// 1 <= r <= 3, 1 <= r' <= n - 2, r <= n - 2.  The search is finite:
/// d1 = (r'+2)/(n-r-1) >= 2 forces n <= r + 1 + (r'+2)/2 <= (n+4)/2 + 4,
/// i.e. n <= 8 once r <= 3, and c <= r + 2 - 2 <= 3 from d2 >= 2.
inline std::vector<PreliminaryRow> preliminary_classification() {
    std::vector<PreliminaryRow> rows;
    for (Int n = 3; n <= 8; ++n) {
        for (Int r = 1; r <= 3 && r <= n - 2; ++r) {
            for (Int rp = 1; rp <= n - 2; ++rp) {
                if ((rp + 2) % (n - r - 1) != 0) continue;
                const Int d1 = (rp + 2) / (n - r - 1);
                if (d1 < 2) continue;
                for (Int c = 0; c <= r; ++c) {
                    if ((r - c + 2) % (n - rp - 1) != 0) continue;
                    const Int d2 = (r - c + 2) / (n - rp - 1);
                    if (d2 < 2) continue;
                    const auto sol = dimension_solve(n, d1, d2, c);
                    if (!sol || sol->r != r || sol->r_prime != rp) continue;
                    rows.push_back({n, r, rp, d1, d2, c});
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

}  // namespace birclass
