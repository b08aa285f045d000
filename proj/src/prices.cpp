#include "groupfair/prices.hpp"

#include <stdexcept>

#include "groupfair/efficiency.hpp"
#include "groupfair/envy.hpp"

namespace groupfair {

namespace {

// Welfare extrema of one property layer, with first achievers.
struct LayerStats {
    bool any = false;
    Rational max_welfare, min_welfare;
    std::uint64_t arg_max = 0, arg_min = 0;

    void feed(const Rational& w, std::uint64_t index) {
        if (!any) {
            any = true;
            max_welfare = min_welfare = w;
            arg_max = arg_min = index;
            return;
        }
        if (w > max_welfare) {
            max_welfare = w;
            arg_max = index;
        }
        if (w < min_welfare) {
            min_welfare = w;
            arg_min = index;
        }
    }

    void merge(const LayerStats& later) {
        if (!later.any) return;
        feed(later.max_welfare, later.arg_max);
        feed(later.min_welfare, later.arg_min);
    }
};

// Per-layer stats for the diagonal envy layers (k,k) and the efficiency
// layers k, memoized in one enumeration pass plus one pairwise pass.
struct PropertyAggregates {
    std::vector<LayerStats> gef;  // index k-1
    std::vector<LayerStats> gpe;  // index k-1
};

PropertyAggregates aggregate_properties(const Instance& instance, const AllocationSpace& space,
                                        WelfareKind kind, const ScanOptions& options) {
    const int n = instance.agent_count();
    const std::uint64_t count = space.size();
    const auto profiles = all_own_profiles(instance, space, options.threads);

    std::vector<Rational> welfares(count);
    parallel_scan<int>(
        count, options.threads, 0,
        [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t i = begin; i < end; ++i) {
                welfares[i] = welfare_from_own(profiles[i], kind);
            }
            return 0;
        },
        [](int, int) { return 0; });

    PropertyAggregates agg;
    agg.gef.resize(n);
    agg.gpe.resize(n);

    struct Partial {
        std::vector<LayerStats> gef, gpe;
    };
    const Partial merged = parallel_scan<Partial>(
        count, options.threads, Partial{std::vector<LayerStats>(n), std::vector<LayerStats>(n)},
        [&](std::uint64_t begin, std::uint64_t end) {
            Partial local{std::vector<LayerStats>(n), std::vector<LayerStats>(n)};
            Allocation allocation;
            for (std::uint64_t i = begin; i < end; ++i) {
                space.write_at(i, allocation);
                const auto cross = cross_utilities(instance, allocation);
                for (int k = 1; k <= n; ++k) {
                    if (gef_entry_from_cross(cross, k, k, 1)) {
                        local.gef[k - 1].feed(welfares[i], i);
                    }
                }
                for (int k = 1; k <= n; ++k) {
                    bool dominated = false;
                    for (std::uint64_t j = 0; j < count && !dominated; ++j) {
                        dominated = profile_dominates(profiles[j], profiles[i], k, 1);
                    }
                    if (!dominated) local.gpe[k - 1].feed(welfares[i], i);
                }
            }
            return local;
        },
        [n](Partial acc, Partial next) {
            for (int k = 0; k < n; ++k) {
                acc.gef[k].merge(next.gef[k]);
                acc.gpe[k].merge(next.gpe[k]);
            }
            return acc;
        });
    agg.gef = merged.gef;
    agg.gpe = merged.gpe;
    return agg;
}

PriceValue ratio_of(const Rational& numerator, const Rational& denominator) {
    if (denominator == 0) {
        return numerator == 0 ? PriceValue::finite(1) : PriceValue::infinite();
    }
    return PriceValue::finite(numerator / denominator);
}

struct PairScan {
    const AllocationSpace& space;
    WelfareKind kind;
    PriceResult result;

    explicit PairScan(const AllocationSpace& s, WelfareKind w) : space(s), kind(w) {
        result.welfare = w;
        result.value = PriceValue::undefined();
    }

    void consider(const LayerStats& numerator, const LayerStats& denominator, int num_layer,
                  int den_layer) {
        if (!numerator.any || !denominator.any) return;  // empty layer: pair skipped
        PriceValue candidate = ratio_of(numerator.max_welfare, denominator.min_welfare);
        if (!candidate.better_than(result.value)) return;
        result.value = std::move(candidate);
        result.numerator_layer = num_layer;
        result.denominator_layer = den_layer;
        result.numerator = PriceSide{numerator.max_welfare, space.at(numerator.arg_max)};
        result.denominator = PriceSide{denominator.min_welfare, space.at(denominator.arg_min)};
    }
};

}  // namespace

bool PriceValue::better_than(const PriceValue& other) const {
    if (!is_defined()) return false;
    if (!other.is_defined()) return true;
    if (is_infinite()) return !other.is_infinite();
    if (other.is_infinite()) return false;
    return value > other.value;
}

std::optional<std::pair<Rational, Allocation>> extremal_welfare(
    const Instance& instance, const std::function<bool(const Allocation&)>& predicate,
    WelfareKind kind, Direction direction, const ScanOptions& options) {
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    struct Best {
        bool any = false;
        Rational value;
        std::uint64_t index = 0;
    };
    const Best best = parallel_scan<Best>(
        space.size(), options.threads, Best{},
        [&](std::uint64_t begin, std::uint64_t end) {
            Best local;
            Allocation allocation;
            for (std::uint64_t i = begin; i < end; ++i) {
                space.write_at(i, allocation);
                if (!predicate(allocation)) continue;
                const Rational w = welfare(instance, allocation, kind);
                const bool better = !local.any || (direction == Direction::maximize
                                                       ? w > local.value
                                                       : w < local.value);
                if (better) local = Best{true, w, i};
            }
            return local;
        },
        [&](Best acc, Best next) {
            if (!next.any) return acc;
            if (!acc.any) return next;
            const bool better = direction == Direction::maximize ? next.value > acc.value
                                                                 : next.value < acc.value;
            return better ? next : acc;
        });
    if (!best.any) return std::nullopt;
    return std::make_pair(best.value, space.at(best.index));
}

PriceResult price_gef(const Instance& instance, WelfareKind kind, const ScanOptions& options) {
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto agg = aggregate_properties(instance, space, kind, options);
    const int n = instance.agent_count();
    PairScan scan(space, kind);
    for (int k = 1; k <= n; ++k) {
        for (int h = 1; h <= k; ++h) {
            scan.consider(agg.gef[h - 1], agg.gef[k - 1], h, k);
        }
    }
    return scan.result;
}

PriceResult price_gpe(const Instance& instance, WelfareKind kind, const ScanOptions& options) {
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto agg = aggregate_properties(instance, space, kind, options);
    const int n = instance.agent_count();
    PairScan scan(space, kind);
    for (int k = 1; k <= n; ++k) {
        for (int h = k; h <= n; ++h) {
            scan.consider(agg.gpe[h - 1], agg.gpe[k - 1], h, k);
        }
    }
    return scan.result;
}

PriceResult price_fair(const Instance& instance, WelfareKind kind, const ScanOptions& options) {
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    const auto agg = aggregate_properties(instance, space, kind, options);
    const int n = instance.agent_count();
    PairScan scan(space, kind);
    for (int k = 1; k <= n; ++k) {
        scan.consider(agg.gef[k - 1], agg.gpe[k - 1], k, k);
    }
    return scan.result;
}

Instance theorem6_instance(int n, const Rational& eps) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie strictly between 0 and 1");
    Instance instance;
    for (int i = 0; i < n; ++i) {
        instance.agent_names.push_back("a" + std::to_string(i + 1));
        instance.item_names.push_back("o" + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i) {
        AdditiveModel model;
        for (int j = 0; j < n; ++j) model.item_values.push_back(i == j ? Rational(1) : eps);
        instance.models.push_back(std::move(model));
    }
    return instance;
}

}  // namespace groupfair
