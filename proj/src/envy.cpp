#include "groupfair/envy.hpp"

#include <stdexcept>

namespace groupfair {

namespace {

void check_layer_args(const Instance& instance, int k, int h, const Rational& alpha) {
    const int n = instance.agent_count();
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, " + std::to_string(n) + "]");
    if (h < 1 || h > n) throw std::invalid_argument("h must be in [1, " + std::to_string(n) + "]");
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must be in [0, 1]");
}

// Scans ordered pairs (G, H) in lexicographic member order and reports the
// first violation. Comparisons are cleared of divisions:
//   ownSum/k >= alpha * crossSum/(k*h)   <=>   h * ownSum >= alpha * crossSum.
template <typename OnViolation>
bool scan_pairs(const std::vector<std::vector<Rational>>& cross, int n, int k, int h,
                const Rational& alpha, OnViolation&& on_violation) {
    bool holds = true;
    for_each_combination(n, k, [&](const std::vector<int>& g) {
        if (!holds) return;
        Rational own_sum = 0;
        for (int a : g) own_sum += cross[a][a];
        const Rational own_scaled = h * own_sum;
        for_each_combination(n, h, [&](const std::vector<int>& hh) {
            if (!holds) return;
            if (k == h && g == hh && k == n) return;  // grand self-pair is vacuous
            Rational cross_sum = 0;
            for (int a : g) {
                for (int b : hh) cross_sum += cross[a][b];
            }
            if (own_scaled < alpha * cross_sum) {
                holds = false;
                on_violation(g, hh, own_sum / k, cross_sum / (k * h));
            }
        });
    });
    return holds;
}

}  // namespace

bool gef_entry_from_cross(const std::vector<std::vector<Rational>>& cross, int k, int h,
                          const Rational& alpha) {
    return scan_pairs(cross, static_cast<int>(cross.size()), k, h, alpha,
                      [](const auto&, const auto&, const Rational&, const Rational&) {});
}

GefVerdict check_gef(const Instance& instance, const Allocation& allocation, int k, int h,
                     const Rational& alpha) {
    check_layer_args(instance, k, h, alpha);
    validate_allocation(instance, allocation);
    const auto cross = cross_utilities(instance, allocation);
    GefVerdict verdict;
    scan_pairs(cross, instance.agent_count(), k, h, alpha,
               [&](const std::vector<int>& g, const std::vector<int>& hh, Rational own,
                   Rational crossval) {
                   verdict.holds = false;
                   verdict.witness = GefWitness{Group{g}, Group{hh}, std::move(own),
                                                std::move(crossval)};
               });
    verdict.holds = !verdict.witness.has_value();
    return verdict;
}

bool GefMatrix::monotone() const {
    const int n = size();
    for (int k = 1; k <= n; ++k) {
        for (int h = 1; h <= n; ++h) {
            if (!entry(k, h)) continue;
            if (h < n && !entry(k, h + 1)) return false;
            if (k < n && !entry(k + 1, h)) return false;
        }
    }
    return entry(n, n);
}

GefMatrix gef_taxonomy(const Instance& instance, const Allocation& allocation,
                       const Rational& alpha) {
    const int n = instance.agent_count();
    check_layer_args(instance, 1, 1, alpha);
    validate_allocation(instance, allocation);
    const auto cross = cross_utilities(instance, allocation);
    GefMatrix matrix(n, alpha);
    for (int k = 1; k <= n; ++k) {
        for (int h = 1; h <= n; ++h) {
            matrix.set(k, h, gef_entry_from_cross(cross, k, h, alpha));
        }
    }
    if (!matrix.monotone()) {
        throw std::logic_error("internal consistency failure: GEF taxonomy is not monotone");
    }
    return matrix;
}

std::optional<Allocation> exists_gef(const Instance& instance, int k, int h,
                                     const Rational& alpha, const ScanOptions& options) {
    check_layer_args(instance, k, h, alpha);
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    using Hit = std::optional<std::uint64_t>;
    const Hit hit = parallel_scan<Hit>(
        space.size(), options.threads, std::nullopt,
        [&](std::uint64_t begin, std::uint64_t end) -> Hit {
            Allocation candidate;
            for (std::uint64_t i = begin; i < end; ++i) {
                space.write_at(i, candidate);
                const auto cross = cross_utilities(instance, candidate);
                if (gef_entry_from_cross(cross, k, h, alpha)) return i;
            }
            return std::nullopt;
        },
        [](Hit acc, Hit next) { return acc.has_value() ? acc : next; });
    if (!hit) return std::nullopt;
    return space.at(*hit);
}

}  // namespace groupfair
