#pragma once

#include <optional>
#include <vector>

#include "groupfair/enumeration.hpp"
#include "groupfair/groups.hpp"
#include "groupfair/model.hpp"

namespace groupfair {

struct GefWitness {
    Group envious;        // G, size k
    Group envied;         // H, size h
    Rational own_value;   // u_G(pi_G)
    Rational cross_value; // u_G(pi_H); violation means own < alpha * cross
};

struct GefVerdict {
    bool holds = true;
    std::optional<GefWitness> witness;  // present iff !holds; lexicographically
                                        // first violating (G, H)
};

// Group envy-freeness at sizes (k, h), relaxed by alpha in [0, 1]:
// every ordered pair (G, H) with |G| = k, |H| = h must satisfy
// u_G(pi_G) >= alpha * u_G(pi_H). Groups may overlap. Self-pairs (G == H)
// compare the members' own-bundle mean against the piece-averaged mean
// u_G(pi_G) >= alpha * (1/k^2) sum_{a,b in G} u_a(pi_b), except the grand
// self-pair (G == H == N), which is vacuous.
GefVerdict check_gef(const Instance& instance, const Allocation& allocation, int k, int h,
                     const Rational& alpha = 1);

// All n*n layer verdicts at one alpha. Entries are monotone: entry (k, h)
// implies every entry (p, q) with p >= k, q >= h, and entry (n, n) is always
// true. A non-monotone result indicates an implementation fault and throws.
class GefMatrix {
public:
    GefMatrix(int n, Rational alpha) : alpha_(std::move(alpha)),
                                       entries_(n, std::vector<bool>(n, false)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    const Rational& alpha() const { return alpha_; }
    bool entry(int k, int h) const { return entries_[k - 1][h - 1]; }
    void set(int k, int h, bool value) { entries_[k - 1][h - 1] = value; }
    bool monotone() const;

private:
    Rational alpha_;
    std::vector<std::vector<bool>> entries_;
};

GefMatrix gef_taxonomy(const Instance& instance, const Allocation& allocation,
                       const Rational& alpha = 1);

// Matrix entries computed from a prebuilt cross-utility matrix; used by the
// exhaustive passes to avoid rebuilding utilities per (k, h) layer.
bool gef_entry_from_cross(const std::vector<std::vector<Rational>>& cross, int k, int h,
                          const Rational& alpha);

// First allocation in enumeration order satisfying GEF^alpha_{k,h}, if any.
std::optional<Allocation> exists_gef(const Instance& instance, int k, int h,
                                     const Rational& alpha = 1, const ScanOptions& options = {});

}  // namespace groupfair
