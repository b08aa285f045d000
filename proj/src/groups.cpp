#include "groupfair/groups.hpp"

#include <algorithm>

namespace groupfair {

std::vector<Rational> own_utilities(const Instance& instance, const Allocation& allocation) {
    const int n = instance.agent_count();
    std::vector<Rational> own(n, Rational(0));
    const auto bundles = allocation.bundles(n);
    for (int a = 0; a < n; ++a) own[a] = instance.bundle_utility(a, bundles[a]);
    return own;
}

std::vector<std::vector<Rational>> cross_utilities(const Instance& instance,
                                                   const Allocation& allocation) {
    const int n = instance.agent_count();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
    const auto bundles = allocation.bundles(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) matrix[a][b] = instance.bundle_utility(a, bundles[b]);
    }
    return matrix;
}

Rational group_own_utility(const Instance& instance, const Allocation& allocation,
                           const Group& group) {
    validate_group(instance, group);
    const auto own = own_utilities(instance, allocation);
    Rational sum = 0;
    for (int a : group.members) sum += own[a];
    return sum / group.size();
}

Rational group_cross_utility(const Instance& instance, const Allocation& allocation,
                             const Group& group, const Group& other) {
    validate_group(instance, group);
    validate_group(instance, other);
    const auto matrix = cross_utilities(instance, allocation);
    Rational sum = 0;
    for (int a : group.members) {
        for (int b : other.members) sum += matrix[a][b];
    }
    return sum / (group.size() * other.size());
}

Rational welfare_from_own(const std::vector<Rational>& own, WelfareKind kind) {
    switch (kind) {
        case WelfareKind::utilitarian: {
            Rational sum = 0;
            for (const auto& u : own) sum += u;
            return sum;
        }
        case WelfareKind::egalitarian:
            return *std::min_element(own.begin(), own.end());
        case WelfareKind::nash: {
            Rational product = 1;
            for (const auto& u : own) product *= u;
            return product;
        }
    }
    return 0;
}

Rational welfare(const Instance& instance, const Allocation& allocation, WelfareKind kind) {
    return welfare_from_own(own_utilities(instance, allocation), kind);
}

std::vector<Rational> expected_own_utilities(const Instance& instance, const Lottery& lottery) {
    const int n = instance.agent_count();
    std::vector<Rational> expected(n, Rational(0));
    for (const auto& entry : lottery.support) {
        const auto own = own_utilities(instance, entry.allocation);
        for (int a = 0; a < n; ++a) expected[a] += entry.weight * own[a];
    }
    return expected;
}

Rational expected_group_utility(const Instance& instance, const Lottery& lottery,
                                const Group& group, const Group& other) {
    Rational total = 0;
    if (group == other) {
        for (const auto& entry : lottery.support) {
            total += entry.weight * group_own_utility(instance, entry.allocation, group);
        }
    } else {
        for (const auto& entry : lottery.support) {
            total += entry.weight * group_cross_utility(instance, entry.allocation, group, other);
        }
    }
    return total;
}

}  // namespace groupfair
