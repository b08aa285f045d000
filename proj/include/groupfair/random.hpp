#pragma once

#include <cstdint>

#include "groupfair/enumeration.hpp"
#include "groupfair/model.hpp"

namespace groupfair {

// Seeded instance generator. Identical arguments give identical instances on
// every platform (std::mt19937_64 is fully specified; no std distributions
// are used). Utilities are numerator/denominator draws with numerator in
// [0, value_bound] and denominator from {1, 2, 3, 4}.
Instance random_instance(int agent_count, int item_count, ModelKind kind,
                         std::uint64_t value_bound, std::uint64_t seed);

// Seeded lottery generator: 1..max_support distinct allocations (ascending
// enumeration index) with positive rational weights summing to 1.
Lottery random_lottery(const Instance& instance, int max_support, std::uint64_t seed,
                       const ScanOptions& options = {});

}  // namespace groupfair
