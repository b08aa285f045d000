#pragma once

#include "groupfair/model.hpp"

namespace groupfair {

// Three agents and three items with cyclically shifted values 1, 3/2, 2.
// Giving every agent its 3/2-item is proportional but not envy-free.
Instance example1_instance();

// The allocation above: o2 -> a1, o1 -> a2, o3 -> a3.
Allocation example1_balanced_allocation();

// Two agents, two items; a1 values (1, 2) and a2 values (2, 1). Handing both
// items to a1 is Pareto efficient but not utilitarian-efficient.
Instance example3_instance();

}  // namespace groupfair
