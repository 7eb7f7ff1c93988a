#pragma once

#include "altsum/family.hpp"

#include <vector>

namespace altsum {

struct DiscoveredFamily {
    FamilySpec family;
    ProofResult proof; // proven by construction
};

/// Scans every (d, b) in the inclusive ranges and emits the family
/// S_d((b^k - 3)/2) = sum b^(i*k + log_b c_i) + c_0 whenever the u-form
/// qualifies: every nonzero non-constant coefficient c_i an exact power of
/// b (b^0 = 1 admitted), and the constant term an integer that is zero
/// unless allow_const. Output sorted by (d, b), deterministic.
///
/// Throws std::domain_error unless 3 <= d_min <= d_max and
/// 2 <= b_min <= b_max.
std::vector<DiscoveredFamily> discover_families(unsigned d_min, unsigned d_max,
                                                long b_min, long b_max,
                                                bool allow_const);

} // namespace altsum
