// Closed-form invariant engine: dimension relations, Hilbert-polynomial
// conditions and solver, canonical/Chern/Segre degrees, multidegrees,
// pluridegrees of the minimal reduction, and the fourfold discriminant.
// Every operation is a pure function evaluated in exact rational arithmetic;
// non-integral results reject a candidate instead of raising.
#pragma once

#include "birclass/rational.hpp"
#include "birclass/types.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace birclass {

/// Dimensions (r, r') of the base loci of a type-(d1,d2) transformation into
/// an image of coindex data c:
///   r  = (n d1 d2 - n d2 - d1 d2 - d2 - c + 2) / (d1 d2 - 1),
///   r' = (n - r - 1) d1 - 2.
/// Returns nullopt when r is not an integer or the inverse relations
/// d1 = (r'+2)/(n-r-1), d2 = (r-c+2)/(n-r'-1) fail to hold.
inline std::optional<DimensionPair> dimension_solve(const Int& n, const Int& d1,
                                                    const Int& d2, const Int& c) {
    if (n < 3 || d1 < 1 || d2 < 1 || c < 0 || d1 * d2 <= 1)
        throw std::invalid_argument("dimension_solve: preconditions violated");
    const Int num = n * d1 * d2 - n * d2 - d1 * d2 - d2 - c + 2;
    const Int den = d1 * d2 - 1;
    if (num % den != 0) return std::nullopt;
    const Int r = num / den;
    const Int rp = (n - r - 1) * d1 - 2;
    const Int m1 = n - r - 1, m2 = n - rp - 1;
    if (m1 <= 0 || m2 <= 0) return std::nullopt;
    if ((rp + 2) % m1 != 0 || (rp + 2) / m1 != d1) return std::nullopt;
    if ((r - c + 2) % m2 != 0 || (r - c + 2) / m2 != d2) return std::nullopt;
    return DimensionPair{r, rp, c};
}

/// Change-of-basis matrix from (H, E) to (H', E') on the blow-up:
/// ((d1, -1), (d1 d2 - 1, -d2)).  Its determinant is -1 for every (d1, d2).
inline std::array<std::array<Int, 2>, 2> change_basis_matrix(const Int& d1, const Int& d2) {
    return {{{d1, Int(-1)}, {d1 * d2 - 1, -d2}}};
}

/// Castelnuovo bound for the genus of a non-degenerate degree-lambda curve in P^4:
/// floor((l-2)/3) * (l - 4 - (floor((l-2)/3) - 1) * 3/2), exact rational.
inline Rat castelnuovo_bound_p4(const Int& lambda) {
    if (lambda < 3) throw std::invalid_argument("castelnuovo_bound_p4: lambda < 3");
    const Int f = floor_div(lambda - 2, 3);
    return Rat(f) * (Rat(lambda - 4) - Rat(f - 1) * Rat(3, 2));
}

/// Hilbert-polynomial conditions imposed on the base locus of a type-(d1,d2)
/// transformation into a non-degenerate linearly normal image in P^N, N = n+a:
///   chi(O_B(d1))   = C(n+d1, d1) - N - 1
///   chi(O_B(d1-1)) = C(n+d1-1, d1-1) + ceil((d2-1)/d2) - 1
/// and, when r' <= n-3,
///   chi(O_B(d1-j)) = C(n+d1-j, d1-j) for 2 <= j <= n-r'-1.
inline HilbertConditions hilbert_conditions(const Int& n, const Int& d1, const Int& d2,
                                            const Int& a, const Int& r_prime) {
    const Int N = n + a;
    HilbertConditions conds;
    conds.push_back({d1, binomial(n + d1, d1) - N - 1});
    const Int ceil_term = (d2 == 1) ? 0 : 1;  // ceil((d2-1)/d2)
    conds.push_back({d1 - 1, binomial(n + d1 - 1, d1 - 1) + ceil_term - 1});
    if (r_prime <= n - 3) {
        for (Int j = 2; j <= n - r_prime - 1; ++j)
            conds.push_back({d1 - j, binomial(n + d1 - j, d1 - j)});
    }
    return conds;
}

/// Hilbert polynomial chi(O_B(t)) of degree r, recovered from linear
/// conditions.  Accessors expose the degree lambda = r! * lead and the
/// sectional genus via the (r-1)-st finite difference:
///   g = 1 - sum_{k=0}^{r-1} (-1)^k C(r-1,k) chi(-k).
struct HilbertPolynomial {
    std::vector<Rat> coeffs;  // coeffs[i] multiplies t^i; size r+1

    [[nodiscard]] Int degree() const { return Int(coeffs.size()) - 1; }

    [[nodiscard]] Rat eval(const Rat& t) const {
        Rat acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
        return acc;
    }

    [[nodiscard]] Rat lambda() const { return coeffs.back() * Rat(factorial(degree())); }

    [[nodiscard]] Rat sectional_genus() const {
        const Int r = degree();
        Rat acc = 0;
        int sign = 1;
        for (Int k = 0; k <= r - 1; ++k, sign = -sign)
            acc += Rat(sign) * Rat(binomial(r - 1, k)) * eval(Rat(-k));
        return Rat(1) - acc;
    }
};

/// Solve the linear system for the r+1 coefficients of chi(O_B(t)).
/// With more than r+1 conditions the extra ones are checked for consistency;
/// nullopt flags an overdetermined-inconsistent system (candidate rejected).
inline std::optional<HilbertPolynomial> hilbert_polynomial_solve(const HilbertConditions& conds,
                                                                 const Int& r) {
    const std::size_t ncol = static_cast<std::size_t>(r) + 1;
    if (conds.size() < ncol)
        throw std::invalid_argument("hilbert_polynomial_solve: fewer conditions than coefficients");
    // Vandermonde rows [1, t, t^2, ..., t^r | chi], exact Gaussian elimination.
    std::vector<std::vector<Rat>> m;
    m.reserve(conds.size());
    for (const auto& c : conds) {
        std::vector<Rat> row(ncol + 1);
        Rat p = 1;
        for (std::size_t i = 0; i < ncol; ++i) { row[i] = p; p *= Rat(c.t); }
        row[ncol] = Rat(c.chi);
        m.push_back(std::move(row));
    }
    std::size_t piv = 0;
    for (std::size_t col = 0; col < ncol && piv < m.size(); ++col) {
        std::size_t sel = piv;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[piv], m[sel]);
        const Rat pv = m[piv][col];
        for (auto& x : m[piv]) x /= pv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == piv || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j <= ncol; ++j) m[i][j] -= f * m[piv][j];
        }
        ++piv;
    }
    for (std::size_t i = piv; i < m.size(); ++i)
        if (m[i][ncol] != 0) return std::nullopt;  // inconsistent extra condition
    if (piv < ncol) return std::nullopt;           // distinct t's make this unreachable
    HilbertPolynomial poly;
    poly.coeffs.assign(ncol, Rat(0));
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncol; ++col) {
        if (row < m.size() && m[row][col] == 1) poly.coeffs[col] = m[row++][ncol];
    }
    return poly;
}

/// Canonical, Chern and Segre degrees of a three-dimensional base locus of a
/// cubic transformation of P^6, together with the invariants of its smooth
/// hyperplane-section surface.  The Segre degrees are recovered from the
/// Chern degrees via the Whitney relations
///   c1.H^2 = 7 H^3 + s1.H^2,
///   c2.H   = 21 H^3 + 7 s1.H^2 + s2.H,
///   c3     = 35 H^3 + 21 s1.H^2 + 7 s2.H + s3.
inline std::pair<CanonicalDegrees, SurfaceSectionInvariants>
cubic_invariants(const TransformationProfile& p) {
    if (p.n != 6 || p.d1 != 3)
        throw std::invalid_argument("cubic_invariants: requires n = 6, d1 = 3");
    const Int &l = p.lambda, &g = p.g, &D = p.Delta, &d = p.d2, &a = p.a;
    const Int e = p.eps;
    const Int Dd = D * d;

    CanonicalDegrees cd;
    cd.H3 = l;
    cd.KH2 = -2 * l + 2 * g - 2;
    cd.K2H = -39 * l + 14 * g + Dd - 12 * a + 12 * e + 331;
    cd.K3 = l * l - 77 * l + 14 * g - 3 * Dd - D - 12 * a + 60 * e + 688;
    cd.c1H2 = 2 * l - 2 * g + 2;
    cd.c2H = -29 * l + 16 * g - Dd + 227;
    cd.c3 = 230 * l - 102 * g + 11 * Dd - D - 1842;
    cd.s1H2 = cd.c1H2 - 7 * cd.H3;
    cd.s2H = cd.c2H - 21 * cd.H3 - 7 * cd.s1H2;
    cd.s3 = cd.c3 - 35 * cd.H3 - 21 * cd.s1H2 - 7 * cd.s2H;

    SurfaceSectionInvariants s;
    s.KSHS = -l + 2 * g - 2;
    s.KS2 = -42 * l + 18 * g + Dd - 12 * a + 12 * e + 327;
    s.chiOS = -6 * l + 3 * g - a + e + 46;
    s.c2TS = -30 * l + 18 * g - Dd + 225;
    return {cd, s};
}

/// Multidegree (1, 3, 9, 27-lambda, -7 lambda + 2g + 79, Delta d, Delta) of a
/// cubic transformation of P^6 with three-dimensional base locus.
inline MultiDegree cubic_multidegree(const TransformationProfile& p) {
    if (p.n != 6 || p.d1 != 3)
        throw std::invalid_argument("cubic_multidegree: requires n = 6, d1 = 3");
    return MultiDegree{{Int(1), Int(3), Int(9), 27 - p.lambda,
                        -7 * p.lambda + 2 * p.g + 79, p.Delta * p.d2, p.Delta}};
}

/// Multidegree from the push-forward of the Segre class of the base locus:
///   delta_{n-k} = d1^{n-k} - C(n-k, r-k) d1^{r-k} deg
///                 - sum_{i=k}^{r-1} C(n-k, i-k) d1^{i-k} s_{r-i}.H^i,
/// with C(m,j) = 0 outside 0 <= j <= m, which makes the formula total.
/// segre[i] holds s_{r-i}.H^i for i = 0..r-1.
inline MultiDegree segre_multidegree(const Int& n, const Int& d1, const Int& r,
                                     const Int& deg, std::span<const Int> segre) {
    if (r < 1 || r > n - 2) throw std::invalid_argument("segre_multidegree: need 1 <= r <= n-2");
    if (Int(segre.size()) != r) throw std::invalid_argument("segre_multidegree: need r Segre degrees");
    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    for (Int k = n; k >= 0; --k) {
        Int pw = 1;
        for (Int i = 0; i < n - k; ++i) pw *= d1;
        Int v = pw;
        if (r - k >= 0) {
            Int pr = 1;
            for (Int i = 0; i < r - k; ++i) pr *= d1;
            v -= binomial(n - k, r - k) * pr * deg;
        }
        for (Int i = k; i <= r - 1; ++i) {
            if (i < 0) continue;
            Int pi = 1;
            for (Int t = 0; t < i - k; ++t) pi *= d1;
            v -= binomial(n - k, i - k) * pi * segre[static_cast<std::size_t>(i)];
        }
        out[static_cast<std::size_t>(n - k)] = v;
    }
    return MultiDegree{std::move(out)};
}

/// Pluridegrees of the minimal reduction (R, H_R) obtained by blowing down nu
/// exceptional points:
///   K_R.H_R^2 = K.H^2 - 2 nu,  K_R^2.H_R = K^2.H + 4 nu,
///   K_R^3 = K^3 - 8 nu,        H_R^3 = H^3 + nu,
/// then d_j = (K_R + H_R)^j . H_R^{3-j} by binomial expansion.
inline Pluridegrees pluridegrees(const CanonicalDegrees& cd, const Int& nu) {
    if (nu < 0) throw std::invalid_argument("pluridegrees: nu < 0");
    const Int k1 = cd.KH2 - 2 * nu;
    const Int k2 = cd.K2H + 4 * nu;
    const Int k3 = cd.K3 - 8 * nu;
    const Int h = cd.H3 + nu;
    return Pluridegrees{h, k1 + h, k2 + 2 * k1 + h, k3 + 3 * k2 + 3 * k1 + h};
}

/// Discriminant delta of the divisor of special cubic fourfolds through the
/// hyperplane-section surface of the base locus:
///   delta = -lambda^2 + 6 Delta d - 27 lambda + 18 g - 36 a + 36 eps + 288.
/// The right-hand side is always congruent to 0 or 2 mod 6.
inline Int delta_invariant(const TransformationProfile& p) {
    if (p.n != 6 || p.d1 != 3)
        throw std::invalid_argument("delta_invariant: requires n = 6, d1 = 3");
    const Int &l = p.lambda;
    return -l * l + 6 * p.Delta * p.d2 - 27 * l + 18 * p.g - 36 * p.a + 36 * p.eps + 288;
}

/// Invariants of a two-dimensional base locus of a quartic transformation of
/// P^4 with a >= 1, all exact rationals.  Integrality of K2, c2 and
/// Delta_required acts as a candidate filter downstream.
struct QuarticP4Invariants {
    Rat chiOB, g, K2, c2, s1H, s2, Delta_required;
};

inline QuarticP4Invariants quartic_p4_invariants(const Int& lambda, const Int& a) {
    if (a < 1) throw std::invalid_argument("quartic_p4_invariants: a >= 1 required");
    const Rat l(lambda), aa(a);
    QuarticP4Invariants q;
    q.chiOB = 6 * l + 3 * aa - 55;
    q.g = 4 * l + aa - 29;
    q.K2 = Rat(1, 2) * l * l + Rat(27, 2) * l + 13 * aa - 180;
    q.c2 = -Rat(1, 2) * l * l + Rat(117, 2) * l + 23 * aa - 480;
    q.s1H = -12 * l - 2 * aa + 60;
    q.s2 = -Rat(1, 2) * l * l + Rat(217, 2) * l + 33 * aa - 780;
    q.Delta_required = Rat(1, 2) * l * l - Rat(25, 2) * l - aa + 76;
    return q;
}

/// Invariants of a three-dimensional base locus of a quartic transformation
/// of P^5 of type (4,d), d in {1,2}.  Carries the two multidegree routes,
/// the codimension constraint a = (1/2) Delta d^2 + 2 eps - 3 and the
/// section-surface relation lambda^2 - 2 Delta d - 25 lambda - 2a + 16 eps + 150 = 0;
/// for d = 1 also the closed forms for Delta and a as functions of lambda.
struct QuarticP5Invariants {
    Int g;
    Int s1H2, s2H, s3;
    MultiDegree multidegree_from_type;    // (1, 4, 16-lambda, Delta d^2, Delta d, Delta)
    MultiDegree multidegree_from_segre;   // (1, 4, 16-lambda, 2a - 4 eps + 6, Delta d, Delta)
    Rat a_required;                       // (1/2) Delta d^2 + 2 eps - 3
    Int surface_relation;                 // must vanish
    std::optional<Rat> Delta_of_lambda;   // d = 1 only
    std::optional<Rat> a_of_lambda;       // d = 1 only
};

inline QuarticP5Invariants quartic_p5_invariants(const Int& lambda, const Int& d,
                                                 const Int& Delta, const Int& a) {
    if (d != 1 && d != 2) throw std::invalid_argument("quartic_p5_invariants: d in {1,2}");
    if (lambda < 1) throw std::invalid_argument("quartic_p5_invariants: lambda >= 1");
    const Int e = (d == 1) ? 1 : 0;
    const Int Dd = Delta * d;
    QuarticP5Invariants q;
    q.g = 4 * lambda - 2 * e + a - 28;
    q.s1H2 = -12 * lambda - 2 * a + 4 * e + 58;
    q.s2H = -Dd + 96 * lambda + 32 * a - 64 * e - 672;
    q.s3 = 20 * Dd - 640 * lambda - Delta - 320 * a + 640 * e + 5184;
    q.multidegree_from_type =
        MultiDegree{{Int(1), Int(4), 16 - lambda, Dd * d, Dd, Delta}};
    // independent route: push forward the Segre class of the base locus;
    // in closed form this is (1, 4, 16-lambda, 2a - 4 eps + 6, Delta d, Delta)
    const Int segre[] = {q.s3, q.s2H, q.s1H2};
    q.multidegree_from_segre = segre_multidegree(5, 4, 3, lambda, segre);
    q.a_required = Rat(1, 2) * Rat(Dd * d) + 2 * e - 3;
    q.surface_relation =
        lambda * lambda - 2 * Dd - 25 * lambda - 2 * a + 16 * e + 150;
    if (d == 1) {
        const Rat l(lambda);
        q.Delta_of_lambda = Rat(1, 3) * l * l - Rat(25, 3) * l + 56;
        q.a_of_lambda = Rat(1, 6) * l * l - Rat(25, 6) * l + 27;
    }
    return q;
}

}  // namespace birclass
