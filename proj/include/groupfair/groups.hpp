#pragma once

#include <vector>

#include "groupfair/model.hpp"

namespace groupfair {

enum class WelfareKind { utilitarian, egalitarian, nash };

// own[a] = u_a(pi_a).
std::vector<Rational> own_utilities(const Instance& instance, const Allocation& allocation);

// M[a][b] = u_a(pi_b): every agent's value for every agent's bundle.
std::vector<std::vector<Rational>> cross_utilities(const Instance& instance,
                                                   const Allocation& allocation);

// Arithmetic mean of the members' own-bundle utilities: (1/k) sum u_a(pi_a).
Rational group_own_utility(const Instance& instance, const Allocation& allocation,
                           const Group& group);

// Double mean over member pairs: (1/(k*h)) sum_{a in G} sum_{b in H} u_a(pi_b).
Rational group_cross_utility(const Instance& instance, const Allocation& allocation,
                             const Group& group, const Group& other);

// Sum / minimum / product of the agents' own-bundle utilities.
Rational welfare(const Instance& instance, const Allocation& allocation, WelfareKind kind);
Rational welfare_from_own(const std::vector<Rational>& own, WelfareKind kind);

// Weight-weighted per-agent own utilities over the lottery support.
std::vector<Rational> expected_own_utilities(const Instance& instance, const Lottery& lottery);

// Weight-linear expected group utility. When the two groups are equal the
// own-bundle mean is used (a group evaluates its own draw as received);
// otherwise the double-mean cross form applies per support element.
Rational expected_group_utility(const Instance& instance, const Lottery& lottery,
                                const Group& group, const Group& other);

}  // namespace groupfair
