#include "groupfair/random.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace groupfair {

namespace {

constexpr std::uint64_t kDenominators[] = {1, 2, 3, 4};

Rational draw_value(std::mt19937_64& rng, std::uint64_t value_bound) {
    const std::uint64_t numerator = rng() % (value_bound + 1);
    const std::uint64_t denominator = kDenominators[rng() % 4];
    Rational value(static_cast<unsigned long>(numerator), static_cast<unsigned long>(denominator));
    value.canonicalize();
    return value;
}

}  // namespace

Instance random_instance(int agent_count, int item_count, ModelKind kind,
                         std::uint64_t value_bound, std::uint64_t seed) {
    if (agent_count < 1) throw std::invalid_argument("agent count must be positive");
    if (item_count < 0) throw std::invalid_argument("item count must be nonnegative");
    if (value_bound < 1) throw std::invalid_argument("value bound must be at least 1");
    if (kind == ModelKind::bundle && item_count > 16) {
        throw std::invalid_argument("random bundle tables are limited to 16 items");
    }

    std::mt19937_64 rng(seed);
    Instance instance;
    for (int a = 0; a < agent_count; ++a) instance.agent_names.push_back("a" + std::to_string(a + 1));
    for (int i = 0; i < item_count; ++i) instance.item_names.push_back("o" + std::to_string(i + 1));

    for (int a = 0; a < agent_count; ++a) {
        if (kind == ModelKind::additive) {
            AdditiveModel model;
            for (int i = 0; i < item_count; ++i) model.item_values.push_back(draw_value(rng, value_bound));
            instance.models.push_back(std::move(model));
        } else {
            BundleModel model;
            const std::uint64_t subsets =
                item_count == 0 ? 0 : (std::uint64_t{1} << item_count) - 1;
            for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
                model.values.emplace(mask, draw_value(rng, value_bound));
            }
            instance.models.push_back(std::move(model));
        }
    }
    instance.validate();
    return instance;
}

Lottery random_lottery(const Instance& instance, int max_support, std::uint64_t seed,
                       const ScanOptions& options) {
    if (max_support < 1) throw std::invalid_argument("max support must be positive");
    const AllocationSpace space = AllocationSpace::for_instance(instance, options);
    std::mt19937_64 rng(seed);

    const std::uint64_t cap = std::min<std::uint64_t>(space.size(),
                                                      static_cast<std::uint64_t>(max_support));
    const std::uint64_t support_size = 1 + rng() % cap;
    std::set<std::uint64_t> indices;
    while (indices.size() < support_size) indices.insert(rng() % space.size());

    std::vector<Rational> weights;
    Rational total = 0;
    for (std::uint64_t i = 0; i < support_size; ++i) {
        Rational w(static_cast<unsigned long>(1 + rng() % 9));
        total += w;
        weights.push_back(std::move(w));
    }

    Lottery lottery;
    std::size_t pos = 0;
    for (std::uint64_t index : indices) {
        lottery.support.push_back({space.at(index), weights[pos++] / total});
    }
    validate_lottery(instance, lottery);
    return lottery;
}

}  // namespace groupfair
