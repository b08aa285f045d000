#pragma once

#include <string>
#include <string_view>

#include "groupfair/model.hpp"

namespace groupfair {

// Document formats (JSON, alphabetical keys, 2-space indent, trailing
// newline; rationals as "p/q" or "p" strings):
//
//   instance:   {"agents": [...], "items": [...],
//                "utilities": {"type": "additive", "matrix": [[...], ...]}}
//            or {"agents": ..., "items": ...,
//                "utilities": {"type": "bundle",
//                              "tables": [[{"bundle": [0,1], "value": "5"}, ...], ...]}}
//   allocation: {"assignment": [agent indices, one per item]}
//   lottery:    {"support": [{"allocation": {"assignment": [...]}, "weight": "3/4"}, ...]}
//
// Parsing validates every structural invariant; serialize(parse(x)) is
// byte-stable.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

Allocation parse_allocation(std::string_view text);
std::string serialize_allocation(const Allocation& allocation);

Lottery parse_lottery(std::string_view text);
std::string serialize_lottery(const Lottery& lottery);

}  // namespace groupfair
