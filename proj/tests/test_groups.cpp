#include <doctest.h>

#include "groupfair/groups.hpp"
#include "groupfair/presets.hpp"
#include "groupfair/random.hpp"
#include "oracles.hpp"

using namespace groupfair;

TEST_CASE("the balanced allocation gives every group utility 3/2") {
    const Instance instance = example1_instance();
    const Allocation pistar = example1_balanced_allocation();
    const Group all{{0, 1, 2}};
    const Rational half3(3, 2);

    CHECK(group_own_utility(instance, pistar, all) == half3);
    CHECK(group_own_utility(instance, pistar, Group{{0}}) == half3);
    for (int b = 0; b < 3; ++b) {
        CHECK(group_cross_utility(instance, pistar, all, Group{{b}}) == half3);
    }
    CHECK(group_cross_utility(instance, pistar, Group{{0, 1}}, Group{{0}}) == Rational(7, 4));
}

TEST_CASE("singleton groups collapse to individual utilities") {
    const Instance instance = example1_instance();
    const Allocation pistar = example1_balanced_allocation();
    for (int a = 0; a < 3; ++a) {
        const Group g{{a}};
        CHECK(group_cross_utility(instance, pistar, g, g) == group_own_utility(instance, pistar, g));
    }
}

TEST_CASE("handing everything to one agent halves the pair utility") {
    const Instance instance = example3_instance();
    const Allocation everything_to_a1{{0, 0}};
    const Allocation swap{{1, 0}};
    const Group both{{0, 1}};
    CHECK(group_own_utility(instance, everything_to_a1, both) == Rational(3, 2));
    CHECK(group_own_utility(instance, swap, both) == 2);
}

TEST_CASE("welfare functions") {
    const Instance instance = example3_instance();
    const Allocation swap{{1, 0}};
    CHECK(welfare(instance, swap, WelfareKind::utilitarian) == 4);
    CHECK(welfare(instance, swap, WelfareKind::egalitarian) == 2);
    CHECK(welfare(instance, swap, WelfareKind::nash) == 4);

    const Allocation lopsided{{0, 0}};
    CHECK(welfare(instance, lopsided, WelfareKind::nash) == 0);

    const Instance solo = random_instance(1, 3, ModelKind::additive, 9, 2);
    const Allocation everything{{0, 0, 0}};
    const Rational u = welfare(solo, everything, WelfareKind::utilitarian);
    CHECK(welfare(solo, everything, WelfareKind::egalitarian) == u);
    CHECK(welfare(solo, everything, WelfareKind::nash) == u);
}

namespace {

Lottery slice_lottery(const Rational& eps) {
    // All items to a1 with weight 1-eps; a2 gets the second item with weight eps.
    Lottery lottery;
    if (eps < 1) lottery.support.push_back({Allocation{{0, 0}}, 1 - eps});
    if (eps > 0) lottery.support.push_back({Allocation{{0, 1}}, eps});
    return lottery;
}

}  // namespace

TEST_CASE("expected utilities are weight-linear") {
    const Instance instance = example3_instance();
    const Rational eps(1, 4);
    const Lottery lottery = slice_lottery(eps);
    validate_lottery(instance, lottery);

    CHECK(expected_group_utility(instance, lottery, Group{{0}}, Group{{0}}) == 3 - 2 * eps);
    CHECK(expected_group_utility(instance, lottery, Group{{1}}, Group{{1}}) == eps);

    const auto expected = expected_own_utilities(instance, lottery);
    CHECK(expected[0] == Rational(5, 2));
    CHECK(expected[1] == Rational(1, 4));

    Lottery degenerate;
    degenerate.support.push_back({Allocation{{1, 0}}, Rational(1)});
    CHECK(expected_group_utility(instance, degenerate, Group{{0, 1}}, Group{{0, 1}}) ==
          group_own_utility(instance, Allocation{{1, 0}}, Group{{0, 1}}));
}

TEST_CASE("mixing two lotteries mixes expected utilities exactly") {
    const Instance instance = example3_instance();
    const Lottery a = slice_lottery(Rational(1, 4));
    const Lottery b = slice_lottery(Rational(1, 2));
    const Rational lambda(2, 7);

    Lottery mix;
    mix.support.push_back({Allocation{{0, 0}}, lambda * Rational(3, 4) + (1 - lambda) * Rational(1, 2)});
    mix.support.push_back({Allocation{{0, 1}}, lambda * Rational(1, 4) + (1 - lambda) * Rational(1, 2)});
    validate_lottery(instance, mix);

    for (const Group& g : {Group{{0}}, Group{{1}}, Group{{0, 1}}}) {
        const Rational mixed = expected_group_utility(instance, mix, g, g);
        const Rational split = lambda * expected_group_utility(instance, a, g, g) +
                               (1 - lambda) * expected_group_utility(instance, b, g, g);
        CHECK(mixed == split);
    }
}

TEST_CASE("group utilities are order-invariant and mean-bounded") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 1 + static_cast<int>(seed % 3);
        const Instance instance =
            random_instance(n, 3, seed % 2 ? ModelKind::bundle : ModelKind::additive, 10, seed);
        for (const Allocation& allocation : oracles::all_allocations(instance)) {
            const auto own = own_utilities(instance, allocation);
            Group grand;
            for (int a = 0; a < n; ++a) grand.members.push_back(a);

            const Rational mean = group_own_utility(instance, allocation, grand);
            const Rational lo = *std::min_element(own.begin(), own.end());
            const Rational hi = *std::max_element(own.begin(), own.end());
            CHECK(lo <= mean);
            CHECK(mean <= hi);
            CHECK(mean * n == welfare(instance, allocation, WelfareKind::utilitarian));
        }
    }
}

TEST_CASE("common positive scaling acts predictably") {
    const Rational c(5, 3);
    Instance instance = random_instance(3, 3, ModelKind::additive, 10, 17);
    Instance scaled = instance;
    for (auto& model : scaled.models) {
        for (auto& v : std::get<AdditiveModel>(model).item_values) v *= c;
    }
    const Allocation allocation{{2, 0, 1}};
    const Group g{{0, 2}};
    const Group h{{1}};
    CHECK(group_own_utility(scaled, allocation, g) == c * group_own_utility(instance, allocation, g));
    CHECK(group_cross_utility(scaled, allocation, g, h) ==
          c * group_cross_utility(instance, allocation, g, h));
    CHECK(welfare(scaled, allocation, WelfareKind::utilitarian) ==
          c * welfare(instance, allocation, WelfareKind::utilitarian));
    CHECK(welfare(scaled, allocation, WelfareKind::egalitarian) ==
          c * welfare(instance, allocation, WelfareKind::egalitarian));
    CHECK(welfare(scaled, allocation, WelfareKind::nash) ==
          c * c * c * welfare(instance, allocation, WelfareKind::nash));
}
