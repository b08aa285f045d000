#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "groupfair/rational.hpp"

namespace groupfair {

enum class ModelKind { additive, bundle };

// Per-item values; the value of a bundle is the sum over its items.
struct AdditiveModel {
    std::vector<Rational> item_values;

    bool operator==(const AdditiveModel&) const = default;
};

// Explicit value for every nonempty item subset, keyed by bitmask over item
// indices. Tables must be complete; there is no interpolation. Requires
// item_count <= 63.
struct BundleModel {
    std::unordered_map<std::uint64_t, Rational> values;

    bool operator==(const BundleModel&) const = default;
};

using UtilityModel = std::variant<AdditiveModel, BundleModel>;

// A fair-division instance: named agents and items plus one utility model per
// agent. All utilities are nonnegative exact rationals. Immutable after
// construction/parsing; safe to share across threads.
struct Instance {
    std::vector<std::string> agent_names;
    std::vector<std::string> item_names;
    std::vector<UtilityModel> models;  // one per agent

    int agent_count() const { return static_cast<int>(agent_names.size()); }
    int item_count() const { return static_cast<int>(item_names.size()); }

    ModelKind model_kind(int agent) const {
        return std::holds_alternative<AdditiveModel>(models[agent]) ? ModelKind::additive
                                                                    : ModelKind::bundle;
    }

    // Utility of `agent` for the item set `items` (indices, duplicate-free).
    // The empty bundle is worth 0 under both models.
    Rational bundle_utility(int agent, const std::vector<int>& items) const;

    // Checks every structural invariant; throws ParseError with a message
    // naming the first violation.
    void validate() const;

    bool operator==(const Instance&) const = default;
};

// item -> agent assignment; a partition of all items by construction.
struct Allocation {
    std::vector<int> assignment;

    auto operator<=>(const Allocation&) const = default;

    // Per-agent bundles as ascending item-index lists.
    std::vector<std::vector<int>> bundles(int agent_count) const;
};

// Throws ParseError if the allocation does not fit the instance.
void validate_allocation(const Instance& instance, const Allocation& allocation);

struct LotteryEntry {
    Allocation allocation;
    Rational weight;

    bool operator==(const LotteryEntry&) const = default;
};

// Finitely supported probability distribution over allocations. Valid
// lotteries have strictly positive weights summing to exactly 1 and pairwise
// distinct support allocations.
struct Lottery {
    std::vector<LotteryEntry> support;

    bool operator==(const Lottery&) const = default;
};

// Throws ParseError naming the first violated lottery invariant.
void validate_lottery(const Instance& instance, const Lottery& lottery);

// Nonempty, strictly increasing agent indices.
struct Group {
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const Group&) const = default;
};

void validate_group(const Instance& instance, const Group& group);

}  // namespace groupfair
