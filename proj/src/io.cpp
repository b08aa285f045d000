#include "groupfair/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

#include "groupfair/errors.hpp"

namespace groupfair {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError(std::string(what) + " document is not valid JSON");
    }
    return doc;
}

const json& require(const json& doc, const char* field, const char* what) {
    if (!doc.is_object() || !doc.contains(field)) {
        throw ParseError(std::string(what) + " document is missing field '" + field + "'");
    }
    return doc.at(field);
}

std::vector<std::string> parse_names(const json& node, const char* field) {
    if (!node.is_array()) throw ParseError(std::string("'") + field + "' must be an array");
    std::vector<std::string> names;
    for (const auto& entry : node) {
        if (!entry.is_string()) {
            throw ParseError(std::string("'") + field + "' entries must be strings");
        }
        names.push_back(entry.get<std::string>());
    }
    return names;
}

Rational parse_rational_node(const json& node, const std::string& context) {
    if (node.is_number_unsigned()) {
        return Rational(node.get<std::uint64_t>());
    }
    if (!node.is_string()) {
        throw ParseError(context + " must be a rational string like \"3/2\"");
    }
    return parse_rational(node.get<std::string>());
}

std::vector<int> parse_index_list(const json& node, const std::string& context) {
    if (!node.is_array()) throw ParseError(context + " must be an array of indices");
    std::vector<int> indices;
    for (const auto& entry : node) {
        if (!entry.is_number_integer() || entry.get<long long>() < 0) {
            throw ParseError(context + " entries must be nonnegative integers");
        }
        indices.push_back(entry.get<int>());
    }
    return indices;
}

json rational_node(const Rational& value) { return json(format_rational(value)); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text, "instance");
    Instance instance;
    instance.agent_names = parse_names(require(doc, "agents", "instance"), "agents");
    instance.item_names = parse_names(require(doc, "items", "instance"), "items");
    const json& utilities = require(doc, "utilities", "instance");
    const json& type = require(utilities, "type", "utilities");
    const int n = instance.agent_count();
    const int m = instance.item_count();

    if (type == "additive") {
        const json& matrix = require(utilities, "matrix", "utilities");
        if (!matrix.is_array() || static_cast<int>(matrix.size()) != n) {
            throw ParseError("utilities matrix must have " + std::to_string(n) + " rows");
        }
        for (int a = 0; a < n; ++a) {
            const json& row = matrix.at(a);
            if (!row.is_array()) throw ParseError("matrix rows must be arrays");
            AdditiveModel model;
            for (const auto& cell : row) {
                model.item_values.push_back(
                    parse_rational_node(cell, "matrix entry for agent '" + instance.agent_names[a] + "'"));
            }
            instance.models.push_back(std::move(model));
        }
    } else if (type == "bundle") {
        const json& tables = require(utilities, "tables", "utilities");
        if (!tables.is_array() || static_cast<int>(tables.size()) != n) {
            throw ParseError("utilities tables must have " + std::to_string(n) + " entries");
        }
        if (m > 63) throw ParseError("bundle tables support at most 63 items");
        for (int a = 0; a < n; ++a) {
            const json& table = tables.at(a);
            if (!table.is_array()) throw ParseError("bundle tables must be arrays");
            BundleModel model;
            for (const auto& entry : table) {
                const auto items = parse_index_list(require(entry, "bundle", "bundle entry"),
                                                    "bundle");
                if (items.empty()) throw ParseError("bundle entries must be nonempty");
                if (std::adjacent_find(items.begin(), items.end(), std::greater_equal<int>()) !=
                    items.end()) {
                    throw ParseError("bundle item indices must be sorted and distinct");
                }
                std::uint64_t mask = 0;
                for (int i : items) {
                    if (i >= m) throw ParseError("bundle item index " + std::to_string(i) +
                                                 " out of range");
                    mask |= std::uint64_t{1} << i;
                }
                const Rational value = parse_rational_node(require(entry, "value", "bundle entry"),
                                                           "bundle value");
                if (!model.values.emplace(mask, value).second) {
                    throw ParseError("duplicate bundle in table for agent '" +
                                     instance.agent_names[a] + "'");
                }
            }
            instance.models.push_back(std::move(model));
        }
    } else {
        throw ParseError("utilities type must be 'additive' or 'bundle'");
    }

    instance.validate();
    return instance;
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    doc["agents"] = instance.agent_names;
    doc["items"] = instance.item_names;
    json utilities;
    // validate() guarantees a single model kind across agents.
    const bool additive = !instance.models.empty() &&
                          instance.model_kind(0) == ModelKind::additive;
    if (additive) {
        utilities["type"] = "additive";
        json matrix = json::array();
        for (const auto& model : instance.models) {
            json row = json::array();
            for (const auto& value : std::get<AdditiveModel>(model).item_values) {
                row.push_back(rational_node(value));
            }
            matrix.push_back(std::move(row));
        }
        utilities["matrix"] = std::move(matrix);
    } else {
        utilities["type"] = "bundle";
        json tables = json::array();
        for (const auto& model : instance.models) {
            const auto& values = std::get<BundleModel>(model).values;
            std::vector<std::uint64_t> masks;
            masks.reserve(values.size());
            for (const auto& [mask, value] : values) masks.push_back(mask);
            std::sort(masks.begin(), masks.end());
            json table = json::array();
            for (std::uint64_t mask : masks) {
                json entry;
                json bundle = json::array();
                for (int i = 0; i < 64; ++i) {
                    if (mask & (std::uint64_t{1} << i)) bundle.push_back(i);
                }
                entry["bundle"] = std::move(bundle);
                entry["value"] = rational_node(values.at(mask));
                table.push_back(std::move(entry));
            }
            tables.push_back(std::move(table));
        }
        utilities["tables"] = std::move(tables);
    }
    doc["utilities"] = std::move(utilities);
    return dump(doc);
}

Allocation parse_allocation(std::string_view text) {
    const json doc = parse_json(text, "allocation");
    Allocation allocation;
    allocation.assignment = parse_index_list(require(doc, "assignment", "allocation"),
                                             "assignment");
    return allocation;
}

std::string serialize_allocation(const Allocation& allocation) {
    json doc;
    doc["assignment"] = allocation.assignment;
    return dump(doc);
}

Lottery parse_lottery(std::string_view text) {
    const json doc = parse_json(text, "lottery");
    const json& support = require(doc, "support", "lottery");
    if (!support.is_array()) throw ParseError("'support' must be an array");
    Lottery lottery;
    for (const auto& entry : support) {
        LotteryEntry parsed;
        const json& allocation = require(entry, "allocation", "support entry");
        parsed.allocation.assignment =
            parse_index_list(require(allocation, "assignment", "allocation"), "assignment");
        parsed.weight = parse_rational_node(require(entry, "weight", "support entry"), "weight");
        lottery.support.push_back(std::move(parsed));
    }
    return lottery;
}

std::string serialize_lottery(const Lottery& lottery) {
    json support = json::array();
    for (const auto& entry : lottery.support) {
        json node;
        node["allocation"] = json{{"assignment", entry.allocation.assignment}};
        node["weight"] = rational_node(entry.weight);
        support.push_back(std::move(node));
    }
    json doc;
    doc["support"] = std::move(support);
    return dump(doc);
}

}  // namespace groupfair
