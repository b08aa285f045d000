#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupfair/enumeration.hpp"
#include "groupfair/model.hpp"
#include "groupfair/rational.hpp"

namespace groupfair {

// Seeded empirical verification of the implication structure at enumerable
// scale: the envy lattice (T1-T3), efficiency monotonicity (T4), the lottery
// support theorem and improvement procedure (T5), the price bounds on the
// diagonal-1/off-diagonal-eps family (T6), and alpha-monotonicity of both
// relaxation families.
struct VerifyConfig {
    std::uint64_t seed = 0;
    int instance_count = 100;
    int max_agents = 3;
    int max_items = 4;
    int lottery_count = 50;
    int lottery_max_agents = 3;
    int lottery_max_items = 3;
    int lottery_max_support = 4;
    std::uint64_t value_bound = 10;
    std::vector<Rational> alphas = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                    Rational(1)};
    std::vector<int> price_family_sizes = {2, 3, 4};
    Rational price_eps = Rational(1, 1000);
    ScanOptions options;
};

struct Counterexample {
    std::string detail;
    std::uint64_t instance_seed = 0;             // generator seed (0 for fixed families)
    std::string instance_document;               // full reproduction data
    std::optional<std::string> allocation_document;
    std::optional<std::string> lottery_document;
};

struct TheoremRecord {
    std::string id;
    long instances_checked = 0;
    long long allocations_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;

    bool verified() const { return counterexamples.empty(); }
};

struct VerifyReport {
    std::vector<TheoremRecord> records;

    bool all_verified() const;
    const TheoremRecord& record(const std::string& id) const;
};

VerifyReport run_verification(const VerifyConfig& config);

}  // namespace groupfair
