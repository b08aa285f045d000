#include "groupfair/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "groupfair/errors.hpp"

namespace groupfair {

namespace {

std::uint64_t mask_of(const std::vector<int>& items, int item_count) {
    std::uint64_t mask = 0;
    for (int i : items) {
        if (i < 0 || i >= item_count) {
            throw ParseError("item index " + std::to_string(i) + " out of range");
        }
        mask |= std::uint64_t{1} << i;
    }
    return mask;
}

}  // namespace

Rational Instance::bundle_utility(int agent, const std::vector<int>& items) const {
    if (const auto* additive = std::get_if<AdditiveModel>(&models[agent])) {
        Rational total = 0;
        for (int i : items) total += additive->item_values[i];
        return total;
    }
    const auto& table = std::get<BundleModel>(models[agent]).values;
    const std::uint64_t mask = mask_of(items, item_count());
    if (mask == 0) return 0;
    return table.at(mask);
}

void Instance::validate() const {
    if (agent_names.empty()) throw ParseError("instance must have at least one agent");
    if (models.size() != agent_names.size()) {
        throw ParseError("instance must have one utility model per agent");
    }
    const auto check_unique = [](const std::vector<std::string>& names, const char* what) {
        std::unordered_set<std::string> seen;
        for (const auto& name : names) {
            if (name.empty()) throw ParseError(std::string("empty ") + what + " name");
            if (!seen.insert(name).second) {
                throw ParseError("duplicate " + std::string(what) + " name '" + name + "'");
            }
        }
    };
    check_unique(agent_names, "agent");
    check_unique(item_names, "item");

    const int m = item_count();
    for (int a = 0; a < agent_count(); ++a) {
        if (model_kind(a) != model_kind(0)) {
            throw ParseError("all agents must use the same utility model type");
        }
        if (const auto* additive = std::get_if<AdditiveModel>(&models[a])) {
            if (static_cast<int>(additive->item_values.size()) != m) {
                throw ParseError("row length mismatch for agent '" + agent_names[a] +
                                 "': expected " + std::to_string(m) + " entries, got " +
                                 std::to_string(additive->item_values.size()));
            }
            for (const auto& v : additive->item_values) {
                if (v < 0) throw ParseError("negative utility for agent '" + agent_names[a] + "'");
            }
        } else {
            if (m > 63) throw ParseError("bundle tables support at most 63 items");
            const auto& table = std::get<BundleModel>(models[a]).values;
            const std::uint64_t subsets = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
            if (table.size() != subsets) {
                throw ParseError("incomplete bundle table for agent '" + agent_names[a] +
                                 "': expected " + std::to_string(subsets) + " entries, got " +
                                 std::to_string(table.size()));
            }
            for (const auto& [mask, value] : table) {
                if (mask == 0 || mask > subsets) {
                    throw ParseError("bundle table for agent '" + agent_names[a] +
                                     "' has an out-of-range bundle");
                }
                if (value < 0) {
                    throw ParseError("negative utility for agent '" + agent_names[a] + "'");
                }
            }
        }
    }
}

std::vector<std::vector<int>> Allocation::bundles(int agent_count) const {
    std::vector<std::vector<int>> result(agent_count);
    for (int i = 0; i < static_cast<int>(assignment.size()); ++i) {
        result[assignment[i]].push_back(i);
    }
    return result;
}

void validate_allocation(const Instance& instance, const Allocation& allocation) {
    if (static_cast<int>(allocation.assignment.size()) != instance.item_count()) {
        throw ParseError("allocation has " + std::to_string(allocation.assignment.size()) +
                         " entries, expected " + std::to_string(instance.item_count()));
    }
    for (int owner : allocation.assignment) {
        if (owner < 0 || owner >= instance.agent_count()) {
            throw ParseError("assignment out of range: agent index " + std::to_string(owner));
        }
    }
}

void validate_lottery(const Instance& instance, const Lottery& lottery) {
    if (lottery.support.empty()) throw ParseError("lottery support is empty");
    Rational total = 0;
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < lottery.support.size(); ++i) {
        const auto& entry = lottery.support[i];
        validate_allocation(instance, entry.allocation);
        if (entry.weight <= 0) {
            throw ParseError("nonpositive weight " + format_rational(entry.weight) +
                             " at support index " + std::to_string(i));
        }
        if (!seen.insert(entry.allocation.assignment).second) {
            throw ParseError("duplicate support allocation at index " + std::to_string(i));
        }
        total += entry.weight;
    }
    if (total != 1) {
        throw ParseError("lottery weights sum to " + format_rational(total) + ", expected 1");
    }
}

void validate_group(const Instance& instance, const Group& group) {
    if (group.members.empty()) throw ParseError("group is empty");
    int prev = -1;
    for (int a : group.members) {
        if (a < 0 || a >= instance.agent_count()) {
            throw ParseError("group member " + std::to_string(a) + " out of range");
        }
        if (a <= prev) throw ParseError("group members must be strictly increasing");
        prev = a;
    }
}

}  // namespace groupfair
