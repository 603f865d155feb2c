// Fourfold-discriminant bookkeeping: recompute the divisor label delta for
// every stored hyperplane-section surface and decide admissibility in the
// sense of the rationality conjecture for cubic fourfolds.
#pragma once

#include "birclass/invariants.hpp"
#include "birclass/tables.hpp"
#include "birclass/types.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace birclass {

/// Admissible discriminants: even delta > 6 not divisible by 4, by 9, nor by
/// any odd prime congruent to 2 mod 3.  Trial division; the inputs here stay
/// below a few hundred.
inline bool kuznetsov_admissible(const Int& delta) {
    if (delta <= 6 || delta % 2 != 0) return false;
    if (delta % 4 == 0 || delta % 9 == 0) return false;
    Int m = delta;
    while (m % 2 == 0) m /= 2;
    while (m % 3 == 0) m /= 3;
    for (Int p = 5; p * p <= m; p += 2) {
        if (m % p != 0) continue;
        if (p % 3 == 2) return false;
        while (m % p == 0) m /= p;
    }
    if (m > 1 && m % 3 == 2) return false;
    return true;
}

/// One audited row of the discriminant table.
struct FourfoldRecord {
    std::string source;
    Int delta;                              // stored divisor label
    std::optional<Int> delta_computed;      // recomputed from the signature
    bool admissible = false;
    std::array<Int, 3> reference_cohomology;  // stored h0 data, never recomputed
    bool conditional = false;               // signature lies outside the c.i. pipeline
};

/// Recompute delta for every stored surface row and compare against the
/// stored column; a mismatch raises.  Reference cohomology passes through.
inline std::vector<FourfoldRecord> table2_report() {
    std::vector<FourfoldRecord> out;
    for (const auto& row : table2()) {
        FourfoldRecord rec;
        rec.source = row.source;
        rec.delta = row.delta_stored;
        rec.reference_cohomology = row.h0;
        rec.conditional = row.conditional;
        if (row.profile) {
            rec.delta_computed = delta_invariant(*row.profile);
            if (*rec.delta_computed != row.delta_stored) {
                std::ostringstream os;
                os << "delta mismatch for '" << row.source << "': stored " << row.delta_stored
                   << ", computed " << *rec.delta_computed;
                throw std::runtime_error(os.str());
            }
        }
        rec.admissible = kuznetsov_admissible(rec.delta);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace birclass
