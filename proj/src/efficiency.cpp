#include "groupfair/efficiency.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "groupfair/simplex.hpp"

namespace groupfair {

namespace {

void check_args(const Instance& instance, int k, const Rational& alpha) {
    const int n = instance.agent_count();
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, " + std::to_string(n) + "]");
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must be in [0, 1]");
}

// Sum of u_G(pi_G) over all groups G of size k, from an own-utility profile.
Rational total_group_utility(const std::vector<Rational>& own, int k) {
    const int n = static_cast<int>(own.size());
    Rational total = 0;
    for_each_combination(n, k, [&](const std::vector<int>& g) {
        Rational sum = 0;
        for (int a : g) sum += own[a];
        total += sum / k;
    });
    return total;
}

Rational group_sum(const std::vector<Rational>& own, const std::vector<int>& members) {
    Rational sum = 0;
    for (int a : members) sum += own[a];
    return sum;
}

}  // namespace

bool profile_dominates(const std::vector<Rational>& candidate_own,
                       const std::vector<Rational>& incumbent_own, int k, const Rational& alpha) {
    const int n = static_cast<int>(candidate_own.size());
    std::vector<Rational> diffs(n);
    for (int a = 0; a < n; ++a) diffs[a] = alpha * candidate_own[a] - incumbent_own[a];
    std::sort(diffs.begin(), diffs.end());
    Rational low = 0, high = 0;
    for (int i = 0; i < k; ++i) {
        low += diffs[i];
        high += diffs[n - 1 - i];
    }
    return low >= 0 && high > 0;
}

bool group_dominates(const Instance& instance, const Allocation& candidate,
                     const Allocation& incumbent, int k, const Rational& alpha) {
    check_args(instance, k, alpha);
    validate_allocation(instance, candidate);
    validate_allocation(instance, incumbent);
    return profile_dominates(own_utilities(instance, candidate),
                             own_utilities(instance, incumbent), k, alpha);
}

GpeVerdict check_gpe(const Instance& instance, const Allocation& allocation, int k,
                     const Rational& alpha, const ScanOptions& options) {
    check_args(instance, k, alpha);
    validate_allocation(instance, allocation);
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto incumbent_own = own_utilities(instance, allocation);
    using Hit = std::optional<std::uint64_t>;
    const Hit hit = parallel_scan<Hit>(
        space.size(), options.threads, std::nullopt,
        [&](std::uint64_t begin, std::uint64_t end) -> Hit {
            Allocation candidate;
            for (std::uint64_t i = begin; i < end; ++i) {
                space.write_at(i, candidate);
                if (profile_dominates(own_utilities(instance, candidate), incumbent_own, k,
                                      alpha)) {
                    return i;
                }
            }
            return std::nullopt;
        },
        [](Hit acc, Hit next) { return acc.has_value() ? acc : next; });
    GpeVerdict verdict;
    if (hit) {
        verdict.holds = false;
        verdict.dominating_allocation = space.at(*hit);
    }
    return verdict;
}

bool GpeVector::downward_monotone() const {
    for (int k = 2; k <= size(); ++k) {
        if (entry(k) && !entry(k - 1)) return false;
    }
    return true;
}

GpeVector gpe_vector(const Instance& instance, const Allocation& allocation,
                     const Rational& alpha, const ScanOptions& options) {
    const int n = instance.agent_count();
    check_args(instance, 1, alpha);
    validate_allocation(instance, allocation);
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto incumbent_own = own_utilities(instance, allocation);

    // One pass over candidates resolves every layer.
    std::vector<std::uint8_t> dominated = parallel_scan<std::vector<std::uint8_t>>(
        space.size(), options.threads, std::vector<std::uint8_t>(n, 0),
        [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint8_t> local(n, 0);
            Allocation candidate;
            for (std::uint64_t i = begin; i < end; ++i) {
                space.write_at(i, candidate);
                const auto own = own_utilities(instance, candidate);
                for (int k = 1; k <= n; ++k) {
                    if (!local[k - 1] && profile_dominates(own, incumbent_own, k, alpha)) {
                        local[k - 1] = 1;
                    }
                }
            }
            return local;
        },
        [n](std::vector<std::uint8_t> acc, std::vector<std::uint8_t> next) {
            for (int k = 0; k < n; ++k) acc[k] = acc[k] || next[k];
            return acc;
        });

    GpeVector vector(n, alpha);
    for (int k = 1; k <= n; ++k) vector.set(k, !dominated[k - 1]);
    if (!vector.downward_monotone()) {
        throw std::logic_error("internal consistency failure: GPE vector is not monotone");
    }
    return vector;
}

std::vector<std::vector<Rational>> all_own_profiles(const Instance& instance,
                                                    const AllocationSpace& space, int threads) {
    std::vector<std::vector<Rational>> profiles(space.size());
    parallel_scan<int>(
        space.size(), threads, 0,
        [&](std::uint64_t begin, std::uint64_t end) {
            Allocation allocation;
            for (std::uint64_t i = begin; i < end; ++i) {
                space.write_at(i, allocation);
                profiles[i] = own_utilities(instance, allocation);
            }
            return 0;
        },
        [](int, int) { return 0; });
    return profiles;
}

std::vector<std::uint8_t> gpe_flags(const std::vector<std::vector<Rational>>& profiles, int k,
                                    int threads) {
    const std::uint64_t count = profiles.size();
    std::vector<std::uint8_t> flags(count, 1);
    parallel_scan<int>(
        count, threads, 0,
        [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t i = begin; i < end; ++i) {
                for (std::uint64_t j = 0; j < count; ++j) {
                    if (profile_dominates(profiles[j], profiles[i], k, 1)) {
                        flags[i] = 0;
                        break;
                    }
                }
            }
            return 0;
        },
        [](int, int) { return 0; });
    return flags;
}

GpeVerdict check_lottery_gpe(const Instance& instance, const Lottery& lottery, int k,
                             AdversaryMode mode, const Rational& alpha,
                             const ScanOptions& options) {
    check_args(instance, k, alpha);
    validate_lottery(instance, lottery);
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto expected_own = expected_own_utilities(instance, lottery);

    if (mode == AdversaryMode::deterministic) {
        using Hit = std::optional<std::uint64_t>;
        const Hit hit = parallel_scan<Hit>(
            space.size(), options.threads, std::nullopt,
            [&](std::uint64_t begin, std::uint64_t end) -> Hit {
                Allocation candidate;
                for (std::uint64_t i = begin; i < end; ++i) {
                    space.write_at(i, candidate);
                    if (profile_dominates(own_utilities(instance, candidate), expected_own, k,
                                          alpha)) {
                        return i;
                    }
                }
                return std::nullopt;
            },
            [](Hit acc, Hit next) { return acc.has_value() ? acc : next; });
        GpeVerdict verdict;
        if (hit) {
            verdict.holds = false;
            verdict.dominating_allocation = space.at(*hit);
        }
        return verdict;
    }

    // Lottery adversary: mixtures x over all allocations, x >= 0, sum x = 1,
    // alpha * sum_j x_j S_j(G) >= E(G) for every size-k group G; maximize the
    // total slack. The single-threaded exact search is the bottleneck only at
    // sizes the guard already bounds.
    const int n = instance.agent_count();
    const auto profiles = all_own_profiles(instance, space, options.threads);
    const std::uint64_t count = space.size();

    LpProblem lp;
    lp.objective.assign(count, Rational(0));
    for_each_combination(n, k, [&](const std::vector<int>& g) {
        LpConstraint constraint;
        constraint.coefficients.assign(count, Rational(0));
        for (std::uint64_t j = 0; j < count; ++j) {
            constraint.coefficients[j] = alpha * group_sum(profiles[j], g);
            lp.objective[j] += constraint.coefficients[j];
        }
        constraint.relation = LpRelation::greater_equal;
        constraint.rhs = group_sum(expected_own, g);
        lp.constraints.push_back(std::move(constraint));
    });
    Rational incumbent_total = 0;
    for (const auto& c : lp.constraints) incumbent_total += c.rhs;
    LpConstraint mixture;
    mixture.coefficients.assign(count, Rational(1));
    mixture.relation = LpRelation::equal;
    mixture.rhs = 1;
    lp.constraints.push_back(std::move(mixture));

    const LpSolution solution = lp_maximize(lp);
    GpeVerdict verdict;
    if (solution.status != LpStatus::optimal) return verdict;  // infeasible: no rival mixture
    if (solution.objective_value <= incumbent_total) return verdict;

    verdict.holds = false;
    Lottery dominator;
    for (std::uint64_t j = 0; j < count; ++j) {
        if (solution.values[j] > 0) {
            dominator.support.push_back({space.at(j), solution.values[j]});
        }
    }
    validate_lottery(instance, dominator);
    verdict.dominating_lottery = std::move(dominator);
    return verdict;
}

Lottery improve_lottery(const Instance& instance, const Lottery& lottery, int k,
                        const ScanOptions& options) {
    check_args(instance, k, 1);
    validate_lottery(instance, lottery);
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto profiles = all_own_profiles(instance, space, options.threads);
    const auto flags = gpe_flags(profiles, k, options.threads);

    std::vector<LotteryEntry> replaced;
    for (const auto& entry : lottery.support) {
        const std::uint64_t index = space.index_of(entry.allocation);
        if (flags[index]) {
            replaced.push_back(entry);
            continue;
        }
        // Pick the k-efficient dominator maximizing the total size-k group
        // utility; enumeration order breaks ties.
        std::optional<std::uint64_t> best;
        Rational best_total;
        for (std::uint64_t j = 0; j < space.size(); ++j) {
            if (!flags[j] || !profile_dominates(profiles[j], profiles[index], k, 1)) continue;
            const Rational total = total_group_utility(profiles[j], k);
            if (!best || total > best_total) {
                best = j;
                best_total = total;
            }
        }
        if (!best) {
            throw std::logic_error(
                "internal consistency failure: dominated allocation has no efficient dominator");
        }
        replaced.push_back({space.at(*best), entry.weight});
    }

    // Merge colliding support entries, preserving first-occurrence order.
    Lottery result;
    std::map<std::vector<int>, std::size_t> seen;
    for (auto& entry : replaced) {
        const auto [it, inserted] = seen.emplace(entry.allocation.assignment,
                                                 result.support.size());
        if (inserted) {
            result.support.push_back(std::move(entry));
        } else {
            result.support[it->second].weight += entry.weight;
        }
    }
    validate_lottery(instance, result);
    return result;
}

bool check_support_gpe(const Instance& instance, const Lottery& lottery, int k,
                       const ScanOptions& options) {
    check_args(instance, k, 1);
    validate_lottery(instance, lottery);
    for (const auto& entry : lottery.support) {
        if (!check_gpe(instance, entry.allocation, k, 1, options).holds) return false;
    }
    return true;
}

}  // namespace groupfair
