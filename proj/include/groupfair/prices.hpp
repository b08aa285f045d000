#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "groupfair/enumeration.hpp"
#include "groupfair/groups.hpp"
#include "groupfair/model.hpp"

namespace groupfair {

// A price is an exact rational, +infinity (welfare-free allocations exist in
// the weaker layer while the stronger layer retains welfare), or undefined
// (no admissible layer pair).
struct PriceValue {
    enum class Kind { finite, infinite, undefined };
    Kind kind = Kind::undefined;
    Rational value;  // meaningful only when finite

    static PriceValue finite(Rational v) { return {Kind::finite, std::move(v)}; }
    static PriceValue infinite() { return {Kind::infinite, {}}; }
    static PriceValue undefined() { return {Kind::undefined, {}}; }

    bool is_finite() const { return kind == Kind::finite; }
    bool is_infinite() const { return kind == Kind::infinite; }
    bool is_defined() const { return kind != Kind::undefined; }

    // Total order with +infinity on top; undefined compares below everything.
    bool better_than(const PriceValue& other) const;
};

struct PriceSide {
    Rational welfare_value;
    Allocation allocation;  // first achiever in enumeration order
};

struct PriceResult {
    WelfareKind welfare = WelfareKind::utilitarian;
    PriceValue value;
    // Layer parameters of the achieving pair: numerator_layer = h (stronger
    // side), denominator_layer = k. For the fairness price both equal k.
    std::optional<int> numerator_layer;
    std::optional<int> denominator_layer;
    std::optional<PriceSide> numerator;
    std::optional<PriceSide> denominator;
};

enum class Direction { maximize, minimize };

// Extremal welfare over allocations satisfying `predicate`, with the first
// achiever in enumeration order; nullopt when no allocation qualifies. The
// predicate must be pure (it may be evaluated from several threads).
std::optional<std::pair<Rational, Allocation>> extremal_welfare(
    const Instance& instance, const std::function<bool(const Allocation&)>& predicate,
    WelfareKind kind, Direction direction, const ScanOptions& options = {});

// max over layer pairs h <= k of
//   max{w(pi) : pi is (h,h)-group envy-free} / min{w(pi) : pi is (k,k)-group envy-free}.
// Pairs whose numerator layer is empty are skipped; 0-welfare denominator
// with positive numerator gives +infinity; 0/0 contributes 1.
PriceResult price_gef(const Instance& instance, WelfareKind kind, const ScanOptions& options = {});

// max over layer pairs h >= k of
//   max{w : h-group Pareto efficient} / min{w : k-group Pareto efficient}.
PriceResult price_gpe(const Instance& instance, WelfareKind kind, const ScanOptions& options = {});

// max over k of max{w : (k,k)-group envy-free} / min{w : k-group Pareto efficient}.
PriceResult price_fair(const Instance& instance, WelfareKind kind,
                       const ScanOptions& options = {});

// n agents and n items; agent i values item i at 1 and every other item at
// eps, 0 < eps < 1.
Instance theorem6_instance(int n, const Rational& eps);

}  // namespace groupfair
