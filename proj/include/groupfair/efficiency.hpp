#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "groupfair/enumeration.hpp"
#include "groupfair/groups.hpp"
#include "groupfair/model.hpp"

namespace groupfair {

// Rival class quantified over when judging a lottery: single allocations, or
// arbitrary mixtures of allocations.
enum class AdversaryMode { deterministic, lottery };

struct GpeVerdict {
    bool holds = true;
    std::optional<Allocation> dominating_allocation;  // first in enumeration order
    std::optional<Lottery> dominating_lottery;        // lottery-mode witness
};

// True iff alpha * u_G(candidate_G) >= u_G(incumbent_G) for every group G of
// size k with strict inequality for at least one such group.
bool group_dominates(const Instance& instance, const Allocation& candidate,
                     const Allocation& incumbent, int k, const Rational& alpha = 1);

// Same predicate on precomputed own-utility profiles. Group sums reduce to
// sorted per-agent differences: all size-k groups weakly improve iff the k
// smallest differences sum to >= 0, and some group strictly improves iff the
// k largest sum to > 0.
bool profile_dominates(const std::vector<Rational>& candidate_own,
                       const std::vector<Rational>& incumbent_own, int k, const Rational& alpha);

// k-group Pareto efficiency of an allocation by exhaustive scan.
GpeVerdict check_gpe(const Instance& instance, const Allocation& allocation, int k,
                     const Rational& alpha = 1, const ScanOptions& options = {});

// Verdicts for every k in [1, n]; entry k implies entry j for all j <= k.
class GpeVector {
public:
    GpeVector(int n, Rational alpha) : alpha_(std::move(alpha)), holds_(n, false) {}

    int size() const { return static_cast<int>(holds_.size()); }
    const Rational& alpha() const { return alpha_; }
    bool entry(int k) const { return holds_[k - 1]; }
    void set(int k, bool value) { holds_[k - 1] = value; }
    bool downward_monotone() const;

private:
    Rational alpha_;
    std::vector<bool> holds_;
};

GpeVector gpe_vector(const Instance& instance, const Allocation& allocation,
                     const Rational& alpha = 1, const ScanOptions& options = {});

// Lottery efficiency. Deterministic mode scans single allocations against the
// expected own-utility profile. Lottery mode solves an exact feasibility
// search over mixtures of all enumerated allocations: maximize the total
// group-utility slack subject to weak improvement for every size-k group and
// the mixture constraints; the lottery is dominated iff the optimal slack is
// positive, and the optimizer is returned as the dominating lottery.
GpeVerdict check_lottery_gpe(const Instance& instance, const Lottery& lottery, int k,
                             AdversaryMode mode, const Rational& alpha = 1,
                             const ScanOptions& options = {});

// Replaces every support allocation that is not k-group Pareto efficient by
// the dominating k-efficient allocation with the largest total size-k group
// utility (ties to enumeration order), keeping weights; colliding support
// entries are merged by weight. The result either equals the input or
// dominates it in lottery mode.
Lottery improve_lottery(const Instance& instance, const Lottery& lottery, int k,
                        const ScanOptions& options = {});

// True iff every support allocation is k-group Pareto efficient (alpha = 1).
bool check_support_gpe(const Instance& instance, const Lottery& lottery, int k,
                       const ScanOptions& options = {});

// Own-utility profiles of every allocation in enumeration order.
std::vector<std::vector<Rational>> all_own_profiles(const Instance& instance,
                                                    const AllocationSpace& space, int threads);

// k-GPE membership flags (alpha = 1) for every allocation given its profile.
std::vector<std::uint8_t> gpe_flags(const std::vector<std::vector<Rational>>& profiles, int k,
                                    int threads);

}  // namespace groupfair
