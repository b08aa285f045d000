#include <doctest.h>

#include <set>

#include "groupfair/enumeration.hpp"
#include "groupfair/errors.hpp"
#include "groupfair/io.hpp"
#include "groupfair/presets.hpp"
#include "groupfair/random.hpp"
#include "oracles.hpp"

using namespace groupfair;

namespace {

const char* kExample1Doc = R"({
  "agents": ["a1", "a2", "a3"],
  "items": ["o1", "o2", "o3"],
  "utilities": {
    "type": "additive",
    "matrix": [["1", "3/2", "2"], ["3/2", "2", "1"], ["2", "1", "3/2"]]
  }
})";

}  // namespace

TEST_CASE("the worked 3-agent instance parses") {
    const Instance instance = parse_instance(kExample1Doc);
    CHECK(instance.agent_count() == 3);
    CHECK(instance.item_count() == 3);
    CHECK(instance == example1_instance());
}

TEST_CASE("zero items is a valid instance with all-zero utilities") {
    const Instance instance = parse_instance(R"({
      "agents": ["a1", "a2"],
      "items": [],
      "utilities": {"type": "additive", "matrix": [[], []]}
    })");
    CHECK(instance.item_count() == 0);
    CHECK(instance.bundle_utility(0, {}) == 0);
    CHECK(instance.bundle_utility(1, {}) == 0);
}

TEST_CASE("instance documents are validated") {
    CHECK_THROWS_WITH_AS(parse_instance(R"({
      "agents": ["a1", "a2", "a3"],
      "items": ["o1", "o2", "o3"],
      "utilities": {"type": "additive",
                    "matrix": [["1", "3/2"], ["3/2", "2", "1"], ["2", "1", "3/2"]]}
    })"),
                         doctest::Contains("row length mismatch"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance(R"({
      "agents": ["a1"], "items": ["o1"],
      "utilities": {"type": "additive", "matrix": [["-1"]]}
    })"),
                         doctest::Contains("negative utility"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance(R"({
      "agents": ["a1", "a1"], "items": ["o1"],
      "utilities": {"type": "additive", "matrix": [["1"], ["1"]]}
    })"),
                         doctest::Contains("duplicate agent name"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance(R"({
      "agents": ["a1"], "items": ["o1", "o2"],
      "utilities": {"type": "bundle",
                    "tables": [[{"bundle": [0], "value": "1"}, {"bundle": [1], "value": "2"}]]}
    })"),
                         doctest::Contains("incomplete bundle table"), ParseError);
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
}

TEST_CASE("bundle tables take precedence over any additive reading") {
    const Instance instance = parse_instance(R"({
      "agents": ["a1"],
      "items": ["o1", "o2"],
      "utilities": {"type": "bundle",
                    "tables": [[{"bundle": [0], "value": "1"},
                                {"bundle": [1], "value": "1"},
                                {"bundle": [0, 1], "value": "5"}]]}
    })");
    CHECK(instance.bundle_utility(0, {0, 1}) == 5);
    CHECK(instance.bundle_utility(0, {0}) == 1);
    CHECK(instance.bundle_utility(0, {}) == 0);
}

TEST_CASE("additive bundle utilities add up") {
    const Instance instance = example3_instance();
    CHECK(instance.bundle_utility(0, {0, 1}) == 3);
    CHECK(instance.bundle_utility(1, {0, 1}) == 3);
    CHECK(instance.bundle_utility(0, {}) == 0);
}

TEST_CASE("enumeration follows the base-n encoding") {
    const AllocationSpace space(3, 3, kDefaultMaxAllocations);
    CHECK(space.size() == 27);
    CHECK(space.at(0).assignment == std::vector<int>{0, 0, 0});
    CHECK(space.at(1).assignment == std::vector<int>{1, 0, 0});
    CHECK(space.at(3).assignment == std::vector<int>{0, 1, 0});
    CHECK(space.index_of(space.at(19)) == 19);

    const AllocationSpace tiny(2, 2, kDefaultMaxAllocations);
    CHECK(tiny.size() == 4);
    CHECK(tiny.at(0).assignment == std::vector<int>{0, 0});

    const AllocationSpace empty(5, 0, kDefaultMaxAllocations);
    CHECK(empty.size() == 1);
    CHECK(empty.at(0).assignment.empty());
}

TEST_CASE("enumeration yields exactly the distinct allocations") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 4; ++m) {
            const AllocationSpace space(n, m, kDefaultMaxAllocations);
            std::set<std::vector<int>> seen;
            for (std::uint64_t i = 0; i < space.size(); ++i) {
                const Allocation a = space.at(i);
                CHECK(static_cast<int>(a.assignment.size()) == m);
                // bundles partition the items
                const auto bundles = a.bundles(n);
                std::size_t covered = 0;
                for (const auto& bundle : bundles) covered += bundle.size();
                CHECK(covered == static_cast<std::size_t>(m));
                for (int agent = 0; agent < n; ++agent) {
                    for (int item : bundles[agent]) CHECK(a.assignment[item] == agent);
                }
                seen.insert(a.assignment);
            }
            std::uint64_t expected = 1;
            for (int i = 0; i < m; ++i) expected *= n;
            CHECK(seen.size() == expected);
        }
    }
}

TEST_CASE("the size guard refuses oversized spaces with exact counts") {
    // 5^10 = 9765625 still fits under the default guard; 6^10 does not.
    CHECK_NOTHROW(AllocationSpace(5, 10, kDefaultMaxAllocations));
    try {
        AllocationSpace space(6, 10, kDefaultMaxAllocations);
        FAIL("guard did not trigger");
    } catch (const SizeLimitError& e) {
        CHECK(e.space_size() == "60466176");
        CHECK(e.limit() == kDefaultMaxAllocations);
    }
    CHECK_NOTHROW(AllocationSpace(6, 10, 100'000'000ULL));
    // Raising the guard cannot bypass the index-width cap.
    CHECK_THROWS_AS(AllocationSpace(2, 100, UINT64_MAX), SizeLimitError);
}

TEST_CASE("range partitioning merges to the sequential scan") {
    const AllocationSpace space(3, 3, kDefaultMaxAllocations);
    const auto collect = [&](int threads) {
        return parallel_scan<std::vector<std::uint64_t>>(
            space.size(), threads, {},
            [&](std::uint64_t begin, std::uint64_t end) {
                std::vector<std::uint64_t> ids;
                for (std::uint64_t i = begin; i < end; ++i) ids.push_back(i);
                return ids;
            },
            [](std::vector<std::uint64_t> acc, std::vector<std::uint64_t> next) {
                acc.insert(acc.end(), next.begin(), next.end());
                return acc;
            });
    };
    const auto sequential = collect(1);
    CHECK(sequential.size() == 27);
    CHECK(collect(4) == sequential);
    CHECK(collect(32) == sequential);
}

TEST_CASE("lottery validation enforces the distribution invariants") {
    const Instance instance = example3_instance();

    Lottery ok;
    ok.support.push_back({Allocation{{0, 0}}, Rational(3, 4)});
    ok.support.push_back({Allocation{{0, 1}}, Rational(1, 4)});
    CHECK_NOTHROW(validate_lottery(instance, ok));

    Lottery bad_sum;
    bad_sum.support.push_back({Allocation{{0, 0}}, Rational(1, 2)});
    bad_sum.support.push_back({Allocation{{0, 1}}, Rational(1, 3)});
    CHECK_THROWS_WITH_AS(validate_lottery(instance, bad_sum),
                         doctest::Contains("weights sum to 5/6"), ParseError);

    Lottery zero_weight;
    zero_weight.support.push_back({Allocation{{0, 0}}, Rational(1)});
    zero_weight.support.push_back({Allocation{{0, 1}}, Rational(0)});
    CHECK_THROWS_WITH_AS(validate_lottery(instance, zero_weight),
                         doctest::Contains("nonpositive weight"), ParseError);

    Lottery duplicate;
    duplicate.support.push_back({Allocation{{0, 0}}, Rational(1, 2)});
    duplicate.support.push_back({Allocation{{0, 0}}, Rational(1, 2)});
    CHECK_THROWS_WITH_AS(validate_lottery(instance, duplicate),
                         doctest::Contains("duplicate support allocation"), ParseError);

    Lottery out_of_range;
    out_of_range.support.push_back({Allocation{{0, 7}}, Rational(1)});
    CHECK_THROWS_WITH_AS(validate_lottery(instance, out_of_range),
                         doctest::Contains("assignment out of range"), ParseError);
}

TEST_CASE("documents round-trip byte-identically") {
    for (std::uint64_t seed : {0ULL, 7ULL, 99ULL}) {
        for (ModelKind kind : {ModelKind::additive, ModelKind::bundle}) {
            const Instance instance = random_instance(3, 3, kind, 10, seed);
            const std::string once = serialize_instance(instance);
            const Instance reparsed = parse_instance(once);
            CHECK(reparsed == instance);
            CHECK(serialize_instance(reparsed) == once);

            const Lottery lottery = random_lottery(instance, 4, seed);
            const std::string text = serialize_lottery(lottery);
            CHECK(parse_lottery(text) == lottery);
            CHECK(serialize_lottery(parse_lottery(text)) == text);
        }
    }
    const Allocation allocation{{1, 0, 2}};
    CHECK(parse_allocation(serialize_allocation(allocation)) == allocation);
}

TEST_CASE("seeded generation is reproducible") {
    const Instance a = random_instance(3, 3, ModelKind::additive, 10, 7);
    const Instance b = random_instance(3, 3, ModelKind::additive, 10, 7);
    CHECK(a == b);
    CHECK(serialize_instance(a) == serialize_instance(b));

    const Instance bundle = random_instance(2, 2, ModelKind::bundle, 10, 1);
    for (const auto& model : bundle.models) {
        CHECK(std::get<BundleModel>(model).values.size() == 3);
    }

    const Instance solo = random_instance(1, 4, ModelKind::additive, 10, 0);
    CHECK(solo.agent_count() == 1);

    const Lottery l1 = random_lottery(a, 4, 11);
    const Lottery l2 = random_lottery(b, 4, 11);
    CHECK(l1 == l2);
}

TEST_CASE("agents cannot mix utility model types") {
    Instance mixed;
    mixed.agent_names = {"a1", "a2"};
    mixed.item_names = {"o1"};
    mixed.models.push_back(AdditiveModel{{Rational(1)}});
    mixed.models.push_back(BundleModel{{{1, Rational(2)}}});
    CHECK_THROWS_WITH_AS(mixed.validate(), doctest::Contains("same utility model"), ParseError);
}

TEST_CASE("additivity over disjoint unions holds for additive models") {
    const Instance instance = random_instance(2, 6, ModelKind::additive, 12, 3);
    const std::vector<int> left{0, 2, 4};
    const std::vector<int> right{1, 5};
    std::vector<int> both{0, 1, 2, 4, 5};
    CHECK(instance.bundle_utility(0, both) ==
          instance.bundle_utility(0, left) + instance.bundle_utility(0, right));
}
