#pragma once

#include "tuplerank/monotone_order.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tuplerank {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string counterexample;  ///< first failure, empty when passed
};

struct SelftestOptions {
    Dimension k_max{3};
    std::size_t count = 1000;
    /// Perturbs one computed rank so the harness can prove it detects faults.
    bool inject_fault = false;
};

/// For each k = 1..k_max over the first `count` ranks: enumerator/formula
/// agreement, rank round trips, successor coherence, and the
/// predecessor-counting prefix check. One result per (property, k).
std::vector<PropertyResult> run_selftest(const SelftestOptions& options);

}  // namespace tuplerank
