#include "groupfair/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "groupfair/efficiency.hpp"
#include "groupfair/envy.hpp"
#include "groupfair/io.hpp"
#include "groupfair/prices.hpp"
#include "groupfair/random.hpp"

namespace groupfair {

namespace {

TheoremRecord make_record(const char* id) {
    TheoremRecord record;
    record.id = id;
    return record;
}

struct Recorder {
    TheoremRecord t1 = make_record("T1"), t2 = make_record("T2"), t3 = make_record("T3"),
                  t4 = make_record("T4"), t5 = make_record("T5"), t6 = make_record("T6"),
                  alpha_mono = make_record("alpha-monotonicity");

    std::vector<TheoremRecord> take() {
        return {std::move(t1), std::move(t2), std::move(t3), std::move(t4),
                std::move(t5), std::move(t6), std::move(alpha_mono)};
    }
};

std::string layer_text(int k, int h) {
    return "(" + std::to_string(k) + "," + std::to_string(h) + ")";
}

// Full GEF matrix entries for one cross matrix at one alpha.
std::vector<std::vector<bool>> matrix_entries(const std::vector<std::vector<Rational>>& cross,
                                              int n, const Rational& alpha) {
    std::vector<std::vector<bool>> entries(n, std::vector<bool>(n, false));
    for (int k = 1; k <= n; ++k) {
        for (int h = 1; h <= n; ++h) {
            entries[k - 1][h - 1] = gef_entry_from_cross(cross, k, h, alpha);
        }
    }
    return entries;
}

// Per-k domination flags of `incumbent` by `candidate` from one sorted
// difference pass.
std::vector<bool> dominated_layers(const std::vector<Rational>& candidate,
                                   const std::vector<Rational>& incumbent, const Rational& alpha) {
    const int n = static_cast<int>(candidate.size());
    std::vector<Rational> diffs(n);
    for (int a = 0; a < n; ++a) diffs[a] = alpha * candidate[a] - incumbent[a];
    std::sort(diffs.begin(), diffs.end());
    std::vector<bool> dominated(n, false);
    Rational low = 0, high = 0;
    for (int k = 1; k <= n; ++k) {
        low += diffs[k - 1];
        high += diffs[n - k];
        dominated[k - 1] = low >= 0 && high > 0;
    }
    return dominated;
}

struct GeneratedInstance {
    Instance instance;
    std::uint64_t seed = 0;
    std::string document;
};

GeneratedInstance draw_instance(std::mt19937_64& meta, int max_agents, int max_items,
                                std::uint64_t value_bound, bool bundle_allowed) {
    const int n = 1 + static_cast<int>(meta() % static_cast<std::uint64_t>(max_agents));
    const int m = static_cast<int>(meta() % static_cast<std::uint64_t>(max_items + 1));
    const ModelKind kind = (bundle_allowed && meta() % 2 == 1) ? ModelKind::bundle
                                                               : ModelKind::additive;
    const std::uint64_t seed = meta();
    GeneratedInstance out;
    out.instance = random_instance(n, m, kind, value_bound, seed);
    out.seed = seed;
    out.document = serialize_instance(out.instance);
    return out;
}

void verify_instances(const VerifyConfig& config, Recorder& rec) {
    std::mt19937_64 meta(config.seed);
    std::vector<Rational> alphas = config.alphas;
    std::sort(alphas.begin(), alphas.end());
    const int alpha_count = static_cast<int>(alphas.size());

    for (int t = 0; t < config.instance_count; ++t) {
        const GeneratedInstance gen =
            draw_instance(meta, config.max_agents, config.max_items, config.value_bound, true);
        const Instance& instance = gen.instance;
        const int n = instance.agent_count();
        const AllocationSpace space = AllocationSpace::for_instance(instance, config.options);
        const auto profiles = all_own_profiles(instance, space, config.options.threads);
        const std::uint64_t count = space.size();

        // GPE layer flags per alpha: gpe[ai][i][k-1].
        std::vector<std::vector<std::vector<bool>>> gpe(
            alpha_count, std::vector<std::vector<bool>>(count, std::vector<bool>(n, true)));
        for (int ai = 0; ai < alpha_count; ++ai) {
            for (std::uint64_t i = 0; i < count; ++i) {
                for (std::uint64_t j = 0; j < count; ++j) {
                    const auto dom = dominated_layers(profiles[j], profiles[i], alphas[ai]);
                    for (int k = 0; k < n; ++k) {
                        if (dom[k]) gpe[ai][i][k] = false;
                    }
                }
            }
        }

        Allocation allocation;
        for (std::uint64_t i = 0; i < count; ++i) {
            space.write_at(i, allocation);
            const std::string allocation_doc = serialize_allocation(allocation);
            const auto cross = cross_utilities(instance, allocation);

            std::vector<std::vector<std::vector<bool>>> gef(alpha_count);
            for (int ai = 0; ai < alpha_count; ++ai) {
                gef[ai] = matrix_entries(cross, n, alphas[ai]);
            }

            const auto report = [&](TheoremRecord& record, std::string detail) {
                record.counterexamples.push_back(Counterexample{std::move(detail), gen.seed,
                                                                gen.document, allocation_doc,
                                                                std::nullopt});
            };

            for (int ai = 0; ai < alpha_count; ++ai) {
                const std::string alpha_text = format_rational(alphas[ai]);
                // Envy lattice: adjacent implications cover the full closure.
                for (int k = 1; k <= n; ++k) {
                    for (int h = 1; h <= n; ++h) {
                        if (!gef[ai][k - 1][h - 1]) continue;
                        if (h < n && !gef[ai][k - 1][h]) {
                            report(k == 1 ? rec.t1 : rec.t3,
                                   "GEF" + layer_text(k, h) + " holds but GEF" +
                                       layer_text(k, h + 1) + " fails at alpha=" + alpha_text);
                        }
                        if (k < n && !gef[ai][k][h - 1]) {
                            report(h == 1 ? rec.t2 : rec.t3,
                                   "GEF" + layer_text(k, h) + " holds but GEF" +
                                       layer_text(k + 1, h) + " fails at alpha=" + alpha_text);
                        }
                    }
                }
                // Efficiency monotonicity.
                for (int k = 2; k <= n; ++k) {
                    if (gpe[ai][i][k - 1] && !gpe[ai][i][k - 2]) {
                        report(rec.t4, "GPE_" + std::to_string(k) + " holds but GPE_" +
                                           std::to_string(k - 1) + " fails at alpha=" + alpha_text);
                    }
                }
                // Alpha-monotonicity against the next smaller alpha.
                if (ai > 0) {
                    const std::string pair_text =
                        " (alpha " + format_rational(alphas[ai - 1]) + " vs " + alpha_text + ")";
                    for (int k = 1; k <= n; ++k) {
                        for (int h = 1; h <= n; ++h) {
                            if (gef[ai][k - 1][h - 1] && !gef[ai - 1][k - 1][h - 1]) {
                                report(rec.alpha_mono,
                                       "GEF" + layer_text(k, h) + " alpha-monotonicity fails" +
                                           pair_text);
                            }
                        }
                        if (gpe[ai][i][k - 1] && !gpe[ai - 1][i][k - 1]) {
                            report(rec.alpha_mono, "GPE_" + std::to_string(k) +
                                                       " alpha-monotonicity fails" + pair_text);
                        }
                    }
                }
            }
        }

        for (TheoremRecord* record : {&rec.t1, &rec.t2, &rec.t3, &rec.t4, &rec.alpha_mono}) {
            record->instances_checked += 1;
            record->allocations_checked += static_cast<long long>(count);
        }
    }
}

void verify_lotteries(const VerifyConfig& config, Recorder& rec) {
    std::mt19937_64 meta(config.seed * 0x9e3779b97f4a7c15ULL + 1);
    for (int t = 0; t < config.lottery_count; ++t) {
        const GeneratedInstance gen = draw_instance(meta, config.lottery_max_agents,
                                                    config.lottery_max_items, config.value_bound,
                                                    true);
        const Instance& instance = gen.instance;
        const int n = instance.agent_count();
        const std::uint64_t lottery_seed = meta();
        const Lottery lottery =
            random_lottery(instance, config.lottery_max_support, lottery_seed, config.options);
        const std::string lottery_doc = serialize_lottery(lottery);
        const AllocationSpace space = AllocationSpace::for_instance(instance, config.options);
        const auto profiles = all_own_profiles(instance, space, config.options.threads);

        const auto report = [&](std::string detail) {
            rec.t5.counterexamples.push_back(Counterexample{std::move(detail), gen.seed,
                                                            gen.document, std::nullopt,
                                                            lottery_doc});
        };

        const auto expected_before = expected_own_utilities(instance, lottery);

        std::vector<GpeVerdict> verdicts;
        for (int k = 1; k <= n; ++k) {
            verdicts.push_back(
                check_lottery_gpe(instance, lottery, k, AdversaryMode::lottery, 1, config.options));
            const GpeVerdict& verdict = verdicts.back();
            const bool support_ok = check_support_gpe(instance, lottery, k, config.options);
            if (verdict.holds && !support_ok) {
                report("lottery judged GPE_" + std::to_string(k) +
                       " but its support contains an inefficient allocation");
            }
            if (!verdict.holds) {
                const auto expected_dom =
                    expected_own_utilities(instance, *verdict.dominating_lottery);
                if (!profile_dominates(expected_dom, expected_before, k, 1)) {
                    report("reported dominating lottery does not dominate at k=" +
                           std::to_string(k));
                }
            }

            const Lottery improved = improve_lottery(instance, lottery, k, config.options);
            if (!check_support_gpe(instance, improved, k, config.options)) {
                report("improve_lottery left an inefficient support allocation at k=" +
                       std::to_string(k));
            }
            if (!(improved == lottery)) {
                const auto expected_after = expected_own_utilities(instance, improved);
                if (!profile_dominates(expected_after, expected_before, k, 1)) {
                    report("improve_lottery output neither equals nor dominates its input at k=" +
                           std::to_string(k));
                }
            }
        }

        // Utilitarian characterization of the top layer.
        Rational best_total = 0;
        std::vector<Rational> totals(space.size());
        for (std::uint64_t j = 0; j < space.size(); ++j) {
            totals[j] = welfare_from_own(profiles[j], WelfareKind::utilitarian);
            if (j == 0 || totals[j] > best_total) best_total = totals[j];
        }
        bool support_maximal = true;
        for (const auto& entry : lottery.support) {
            if (totals[space.index_of(entry.allocation)] != best_total) support_maximal = false;
        }
        const bool top_holds = verdicts.back().holds;
        if (top_holds != support_maximal) {
            report(std::string("top-layer lottery verdict (") + (top_holds ? "holds" : "fails") +
                   ") disagrees with utilitarian-maximal support");
        }

        rec.t5.instances_checked += 1;
        rec.t5.allocations_checked += static_cast<long long>(space.size());
    }
}

void verify_prices(const VerifyConfig& config, Recorder& rec) {
    const Rational eps = config.price_eps;
    for (int n : config.price_family_sizes) {
        const Instance instance = theorem6_instance(n, eps);
        const std::string doc = serialize_instance(instance);
        const AllocationSpace space = AllocationSpace::for_instance(instance, config.options);

        const auto report = [&](std::string detail) {
            rec.t6.counterexamples.push_back(
                Counterexample{std::move(detail), 0, doc, std::nullopt, std::nullopt});
        };

        // Exact per-instance bounds: the utilitarian envy price reaches 1/eps
        // >= n, while the efficiency and fairness prices reach exactly
        // n / (1 + (n-1) eps); the limiting value n is approached only as
        // eps -> 0. Egalitarian and Nash prices blow up at rate >= 1/eps.
        const Rational family_ratio = Rational(n) / (1 + (n - 1) * eps);
        const Rational blow_up = 1 / eps;

        const auto check_utilitarian = [&](const char* name, const PriceResult& result,
                                           const Rational& bound) {
            if (!result.value.is_defined()) {
                report(std::string(name) + " undefined for n=" + std::to_string(n));
            } else if (result.value.is_finite() && result.value.value < bound) {
                report(std::string(name) + " = " + format_rational(result.value.value) +
                       " falls below " + format_rational(bound) + " for n=" + std::to_string(n));
            }
        };
        const auto u_gef = price_gef(instance, WelfareKind::utilitarian, config.options);
        const auto u_gpe = price_gpe(instance, WelfareKind::utilitarian, config.options);
        const auto u_fair = price_fair(instance, WelfareKind::utilitarian, config.options);
        check_utilitarian("p^u_GEF", u_gef, Rational(n));
        check_utilitarian("p^u_GPE", u_gpe, family_ratio);
        check_utilitarian("p^u_FAIR", u_fair, family_ratio);
        rec.t6.notes.push_back(
            "n=" + std::to_string(n) + ": p^u_GEF=" +
            (u_gef.value.is_finite() ? format_rational(u_gef.value.value) : "+inf") +
            " p^u_GPE=" + (u_gpe.value.is_finite() ? format_rational(u_gpe.value.value) : "+inf") +
            " p^u_FAIR=" +
            (u_fair.value.is_finite() ? format_rational(u_fair.value.value) : "+inf"));

        const auto check_blow_up = [&](const char* name, const PriceResult& result) {
            if (!result.value.is_defined()) {
                report(std::string(name) + " undefined for n=" + std::to_string(n));
            } else if (result.value.is_finite() && result.value.value < blow_up) {
                report(std::string(name) + " = " + format_rational(result.value.value) +
                       " falls below 1/eps for n=" + std::to_string(n));
            }
        };
        for (const WelfareKind kind : {WelfareKind::egalitarian, WelfareKind::nash}) {
            const char* w = kind == WelfareKind::egalitarian ? "e" : "n";
            check_blow_up((std::string("p^") + w + "_GEF").c_str(),
                          price_gef(instance, kind, config.options));
            check_blow_up((std::string("p^") + w + "_GPE").c_str(),
                          price_gpe(instance, kind, config.options));
            check_blow_up((std::string("p^") + w + "_FAIR").c_str(),
                          price_fair(instance, kind, config.options));
        }

        // Does the family's nominal layer witness exist: a permutation with
        // exactly k fixed points that is both (k,k)-envy-free and k-efficient?
        const auto profiles = all_own_profiles(instance, space, config.options.threads);
        for (int k = 1; k <= n; ++k) {
            bool found = false;
            Allocation allocation;
            for (std::uint64_t i = 0; i < space.size() && !found; ++i) {
                space.write_at(i, allocation);
                std::vector<bool> used(n, false);
                int fixed = 0;
                bool permutation = true;
                for (int item = 0; item < n && permutation; ++item) {
                    const int agent = allocation.assignment[item];
                    if (used[agent]) permutation = false;
                    used[agent] = true;
                    if (agent == item) ++fixed;
                }
                if (!permutation || fixed != k) continue;
                bool dominated = false;
                for (std::uint64_t j = 0; j < space.size() && !dominated; ++j) {
                    dominated = profile_dominates(profiles[j], profiles[i], k, 1);
                }
                if (dominated) continue;
                const auto cross = cross_utilities(instance, allocation);
                if (gef_entry_from_cross(cross, k, k, 1)) found = true;
            }
            rec.t6.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   ": layer witness with exactly k own items " +
                                   (found ? "exists" : "does not exist"));
        }

        rec.t6.instances_checked += 1;
        rec.t6.allocations_checked += static_cast<long long>(space.size());
    }
}

}  // namespace

bool VerifyReport::all_verified() const {
    return std::all_of(records.begin(), records.end(),
                       [](const TheoremRecord& r) { return r.verified(); });
}

const TheoremRecord& VerifyReport::record(const std::string& id) const {
    for (const auto& r : records) {
        if (r.id == id) return r;
    }
    throw std::invalid_argument("unknown theorem record '" + id + "'");
}

VerifyReport run_verification(const VerifyConfig& config) {
    Recorder rec;
    verify_instances(config, rec);
    verify_lotteries(config, rec);
    verify_prices(config, rec);
    VerifyReport report;
    report.records = rec.take();
    return report;
}

}  // namespace groupfair
