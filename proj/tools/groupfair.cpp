// Command-line driver: exact group-fairness verdicts, taxonomies, prices,
// lottery efficiency, theorem verification, and instance generation.
//
// Exit codes: 0 evaluated, 1 violation (under --fail-on-violation) or
// verification counterexample, 2 usage/parse error, 3 size-guard refusal.
// Structured output is a single JSON document on stdout; logs go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "groupfair/efficiency.hpp"
#include "groupfair/envy.hpp"
#include "groupfair/errors.hpp"
#include "groupfair/io.hpp"
#include "groupfair/prices.hpp"
#include "groupfair/presets.hpp"
#include "groupfair/random.hpp"
#include "groupfair/verify.hpp"

namespace {

using nlohmann::json;
using namespace groupfair;

enum class OutputMode { structured, table };

struct CommonArgs {
    std::uint64_t max_size = kDefaultMaxAllocations;
    int threads = 1;
    OutputMode output = OutputMode::structured;
    bool fail_on_violation = false;

    ScanOptions scan() const { return ScanOptions{max_size, threads}; }
};

// --h is a layer parameter, so help answers only to --help.
CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->set_help_flag("--help", "print help");
    return cmd;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_fail_flag = true) {
    cmd->add_option("--max-size", args.max_size, "allocation-space guard")
        ->envname("GROUPFAIR_MAX_SIZE");
    cmd->add_option("--threads", args.threads, "worker threads for scans")
        ->envname("GROUPFAIR_THREADS");
    std::map<std::string, OutputMode> modes{{"structured", OutputMode::structured},
                                            {"table", OutputMode::table}};
    cmd->add_option("--output", args.output, "output rendering")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    if (with_fail_flag) {
        cmd->add_flag("--fail-on-violation", args.fail_on_violation,
                      "exit 1 when the checked property fails");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Rational parse_alpha(const std::string& text) {
    const Rational alpha = parse_rational(text);
    if (alpha < 0 || alpha > 1) throw ParseError("alpha must be in [0, 1]");
    return alpha;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string decimal_hint(const Rational& value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4g", value.get_d());
    return std::string("~") + buffer;
}

std::string group_names(const Instance& instance, const Group& group) {
    std::string out = "{";
    for (std::size_t i = 0; i < group.members.size(); ++i) {
        if (i) out += ", ";
        out += instance.agent_names[group.members[i]];
    }
    return out + "}";
}

json lottery_json(const Lottery& lottery) {
    json support = json::array();
    for (const auto& entry : lottery.support) {
        support.push_back(json{{"allocation", json{{"assignment", entry.allocation.assignment}}},
                               {"weight", format_rational(entry.weight)}});
    }
    return json{{"support", support}};
}

// ---------------------------------------------------------------- check ----

int cmd_check(const std::string& instance_path, const std::string& allocation_path, int k, int h,
              const std::string& alpha_text, const CommonArgs& args) {
    const Instance instance = parse_instance(read_file(instance_path));
    const Allocation allocation = parse_allocation(read_file(allocation_path));
    validate_allocation(instance, allocation);
    const Rational alpha = parse_alpha(alpha_text);

    const GefVerdict verdict = check_gef(instance, allocation, k, h, alpha);
    if (args.output == OutputMode::structured) {
        json doc{{"command", "check"},
                 {"k", k},
                 {"h", h},
                 {"alpha", format_rational(alpha)},
                 {"holds", verdict.holds}};
        if (verdict.witness) {
            doc["witness"] = json{{"envious", verdict.witness->envious.members},
                                  {"envied", verdict.witness->envied.members},
                                  {"own", format_rational(verdict.witness->own_value)},
                                  {"cross", format_rational(verdict.witness->cross_value)}};
        }
        emit(doc);
    } else {
        std::cout << "GEF(k=" << k << ", h=" << h << ", alpha=" << format_rational(alpha)
                  << "): " << (verdict.holds ? "holds" : "fails") << "\n";
        if (verdict.witness) {
            std::cout << "witness: G = " << group_names(instance, verdict.witness->envious)
                      << ", H = " << group_names(instance, verdict.witness->envied)
                      << ", own = " << format_rational(verdict.witness->own_value)
                      << ", cross = " << format_rational(verdict.witness->cross_value) << "\n";
        }
    }
    return !verdict.holds && args.fail_on_violation ? 1 : 0;
}

// ------------------------------------------------------------- taxonomy ----

int cmd_taxonomy(const std::string& instance_path, const std::string& allocation_path,
                 const std::string& alpha_text, const CommonArgs& args) {
    const Instance instance = parse_instance(read_file(instance_path));
    const Allocation allocation = parse_allocation(read_file(allocation_path));
    validate_allocation(instance, allocation);
    const Rational alpha = parse_alpha(alpha_text);
    const int n = instance.agent_count();

    const GefMatrix matrix = gef_taxonomy(instance, allocation, alpha);
    const GpeVector vector = gpe_vector(instance, allocation, alpha, args.scan());
    const bool monotone = matrix.monotone() && vector.downward_monotone();

    if (args.output == OutputMode::structured) {
        json gef = json::array();
        for (int k = 1; k <= n; ++k) {
            json row = json::array();
            for (int h = 1; h <= n; ++h) row.push_back(matrix.entry(k, h));
            gef.push_back(std::move(row));
        }
        json gpe = json::array();
        for (int k = 1; k <= n; ++k) gpe.push_back(vector.entry(k));
        emit(json{{"command", "taxonomy"},
                  {"alpha", format_rational(alpha)},
                  {"gef", gef},
                  {"gpe", gpe},
                  {"monotone", monotone}});
    } else {
        std::cout << "GEF matrix (alpha = " << format_rational(alpha) << ")\n     ";
        for (int h = 1; h <= n; ++h) std::cout << " h=" << h;
        std::cout << "\n";
        for (int k = 1; k <= n; ++k) {
            std::cout << "  k=" << k;
            for (int h = 1; h <= n; ++h) std::cout << (matrix.entry(k, h) ? "  yes" : "   no");
            std::cout << "\n";
        }
        std::cout << "GPE vector:";
        for (int k = 1; k <= n; ++k) {
            std::cout << " k=" << k << ":" << (vector.entry(k) ? "yes" : "no");
        }
        std::cout << "\nmonotone: " << (monotone ? "yes" : "no") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ gpe ----

int cmd_gpe(const std::string& instance_path, const std::string& allocation_path, int k,
            const std::string& alpha_text, const CommonArgs& args) {
    const Instance instance = parse_instance(read_file(instance_path));
    const Allocation allocation = parse_allocation(read_file(allocation_path));
    validate_allocation(instance, allocation);
    const Rational alpha = parse_alpha(alpha_text);

    const GpeVerdict verdict = check_gpe(instance, allocation, k, alpha, args.scan());
    if (args.output == OutputMode::structured) {
        json doc{{"command", "gpe"},
                 {"k", k},
                 {"alpha", format_rational(alpha)},
                 {"holds", verdict.holds}};
        if (verdict.dominating_allocation) {
            doc["dominator"] = json{{"assignment", verdict.dominating_allocation->assignment}};
        }
        emit(doc);
    } else {
        std::cout << "GPE(k=" << k << ", alpha=" << format_rational(alpha)
                  << "): " << (verdict.holds ? "holds" : "fails") << "\n";
        if (verdict.dominating_allocation) {
            std::cout << "dominator assignment:";
            for (int owner : verdict.dominating_allocation->assignment) {
                std::cout << " " << instance.agent_names[owner];
            }
            std::cout << "\n";
        }
    }
    return !verdict.holds && args.fail_on_violation ? 1 : 0;
}

// --------------------------------------------------------------- prices ----

json price_json(const PriceResult& result) {
    json doc;
    switch (result.value.kind) {
        case PriceValue::Kind::finite:
            doc["value"] = format_rational(result.value.value);
            break;
        case PriceValue::Kind::infinite:
            doc["value"] = "+inf";
            break;
        case PriceValue::Kind::undefined:
            doc["value"] = "undefined";
            break;
    }
    if (result.numerator_layer) doc["numerator_layer"] = *result.numerator_layer;
    if (result.denominator_layer) doc["denominator_layer"] = *result.denominator_layer;
    if (result.numerator) {
        doc["numerator"] = json{{"welfare", format_rational(result.numerator->welfare_value)},
                                {"assignment", result.numerator->allocation.assignment}};
    }
    if (result.denominator) {
        doc["denominator"] = json{{"welfare", format_rational(result.denominator->welfare_value)},
                                  {"assignment", result.denominator->allocation.assignment}};
    }
    return doc;
}

std::string price_text(const PriceResult& result) {
    switch (result.value.kind) {
        case PriceValue::Kind::finite:
            return format_rational(result.value.value) + " (" + decimal_hint(result.value.value) +
                   ")";
        case PriceValue::Kind::infinite:
            return "+inf";
        default:
            return "undefined";
    }
}

int cmd_prices(const std::string& instance_path, const std::string& welfare_text,
               const CommonArgs& args) {
    const Instance instance = parse_instance(read_file(instance_path));
    std::vector<WelfareKind> kinds;
    if (welfare_text == "all") {
        kinds = {WelfareKind::utilitarian, WelfareKind::egalitarian, WelfareKind::nash};
    } else if (welfare_text == "utilitarian") {
        kinds = {WelfareKind::utilitarian};
    } else if (welfare_text == "egalitarian") {
        kinds = {WelfareKind::egalitarian};
    } else if (welfare_text == "nash") {
        kinds = {WelfareKind::nash};
    } else {
        throw ParseError("unknown welfare '" + welfare_text + "'");
    }
    const auto name = [](WelfareKind kind) {
        switch (kind) {
            case WelfareKind::utilitarian: return "utilitarian";
            case WelfareKind::egalitarian: return "egalitarian";
            default: return "nash";
        }
    };

    if (args.output == OutputMode::structured) {
        json results = json::array();
        for (const WelfareKind kind : kinds) {
            results.push_back(json{{"welfare", name(kind)},
                                   {"gef", price_json(price_gef(instance, kind, args.scan()))},
                                   {"gpe", price_json(price_gpe(instance, kind, args.scan()))},
                                   {"fair", price_json(price_fair(instance, kind, args.scan()))}});
        }
        emit(json{{"command", "prices"}, {"results", results}});
    } else {
        std::cout << "welfare       p_GEF                p_GPE                p_FAIR\n";
        for (const WelfareKind kind : kinds) {
            std::printf("%-13s %-20s %-20s %-20s\n", name(kind),
                        price_text(price_gef(instance, kind, args.scan())).c_str(),
                        price_text(price_gpe(instance, kind, args.scan())).c_str(),
                        price_text(price_fair(instance, kind, args.scan())).c_str());
        }
    }
    return 0;
}

// -------------------------------------------------------------- lottery ----

int cmd_lottery(const std::string& instance_path, const std::string& lottery_path, int k,
                const std::string& mode_text, const std::string& alpha_text,
                const CommonArgs& args) {
    const Instance instance = parse_instance(read_file(instance_path));
    const Lottery lottery = parse_lottery(read_file(lottery_path));
    validate_lottery(instance, lottery);
    const Rational alpha = parse_alpha(alpha_text);
    AdversaryMode mode;
    if (mode_text == "deterministic") {
        mode = AdversaryMode::deterministic;
    } else if (mode_text == "lottery") {
        mode = AdversaryMode::lottery;
    } else {
        throw ParseError("unknown mode '" + mode_text + "'");
    }

    const GpeVerdict verdict = check_lottery_gpe(instance, lottery, k, mode, alpha, args.scan());
    if (args.output == OutputMode::structured) {
        json doc{{"command", "lottery"},
                 {"k", k},
                 {"mode", mode_text},
                 {"alpha", format_rational(alpha)},
                 {"holds", verdict.holds}};
        if (verdict.dominating_allocation) {
            doc["dominator"] = json{{"assignment", verdict.dominating_allocation->assignment}};
        }
        if (verdict.dominating_lottery) {
            doc["dominator_lottery"] = lottery_json(*verdict.dominating_lottery);
        }
        emit(doc);
    } else {
        std::cout << "lottery GPE(k=" << k << ", mode=" << mode_text
                  << ", alpha=" << format_rational(alpha)
                  << "): " << (verdict.holds ? "holds" : "fails") << "\n";
        if (verdict.dominating_allocation) {
            std::cout << "dominating allocation assignment:";
            for (int owner : verdict.dominating_allocation->assignment) {
                std::cout << " " << owner;
            }
            std::cout << "\n";
        }
        if (verdict.dominating_lottery) {
            std::cout << "dominating lottery:\n";
            for (const auto& entry : verdict.dominating_lottery->support) {
                std::cout << "  weight " << format_rational(entry.weight) << " assignment";
                for (int owner : entry.allocation.assignment) std::cout << " " << owner;
                std::cout << "\n";
            }
        }
    }
    return !verdict.holds && args.fail_on_violation ? 1 : 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const VerifyConfig& config, const CommonArgs& args) {
    const VerifyReport report = run_verification(config);

    if (args.output == OutputMode::structured) {
        json records = json::array();
        for (const auto& record : report.records) {
            json counterexamples = json::array();
            for (const auto& cex : record.counterexamples) {
                json c{{"detail", cex.detail},
                       {"instance_seed", cex.instance_seed},
                       {"instance", json::parse(cex.instance_document)}};
                if (cex.allocation_document) {
                    c["allocation"] = json::parse(*cex.allocation_document);
                }
                if (cex.lottery_document) c["lottery"] = json::parse(*cex.lottery_document);
                counterexamples.push_back(std::move(c));
            }
            records.push_back(json{{"id", record.id},
                                   {"instances_checked", record.instances_checked},
                                   {"allocations_checked", record.allocations_checked},
                                   {"status", record.verified() ? "verified" : "failed"},
                                   {"counterexamples", counterexamples},
                                   {"notes", record.notes}});
        }
        emit(json{{"command", "verify"},
                  {"seed", config.seed},
                  {"instances", config.instance_count},
                  {"lotteries", config.lottery_count},
                  {"records", records},
                  {"verified", report.all_verified()}});
    } else {
        for (const auto& record : report.records) {
            std::printf("%-20s instances=%-6ld allocations=%-9lld %s\n", record.id.c_str(),
                        record.instances_checked, record.allocations_checked,
                        record.verified() ? "verified" : "FAILED");
            for (const auto& cex : record.counterexamples) {
                std::cout << "  counterexample: " << cex.detail << "\n";
                std::cout << "    instance: " << json::parse(cex.instance_document).dump() << "\n";
                if (cex.allocation_document) {
                    std::cout << "    allocation: " << json::parse(*cex.allocation_document).dump()
                              << "\n";
                }
                if (cex.lottery_document) {
                    std::cout << "    lottery: " << json::parse(*cex.lottery_document).dump()
                              << "\n";
                }
            }
            for (const auto& note : record.notes) std::cout << "  note: " << note << "\n";
        }
    }
    return report.all_verified() ? 0 : 1;
}

// ------------------------------------------------------------------ gen ----

int cmd_gen(const std::string& preset, int n, int m, const std::string& model_text,
            std::uint64_t value_bound, std::uint64_t seed, const std::string& eps_text,
            const std::string& out_path) {
    Instance instance;
    if (preset == "example1") {
        instance = example1_instance();
    } else if (preset == "example3") {
        instance = example3_instance();
    } else if (preset == "theorem6") {
        instance = theorem6_instance(n, parse_rational(eps_text));
    } else if (preset.empty()) {
        ModelKind kind;
        if (model_text == "additive") {
            kind = ModelKind::additive;
        } else if (model_text == "bundle") {
            kind = ModelKind::bundle;
        } else {
            throw ParseError("unknown model '" + model_text + "'");
        }
        instance = random_instance(n, m, kind, value_bound, seed);
    } else {
        throw ParseError("unknown preset '" + preset + "'");
    }

    const std::string document = serialize_instance(instance);
    if (out_path.empty()) {
        std::cout << document;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << document;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verdicts for group envy-freeness, group Pareto efficiency, and the "
                 "prices of group fairness"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // check
    auto* check = add_subcommand(app, "check", "group envy-freeness of an allocation");
    std::string check_instance, check_allocation, check_alpha = "1";
    int check_k = 1, check_h = 1;
    CommonArgs check_args;
    check->add_option("--instance", check_instance)->required();
    check->add_option("--allocation", check_allocation)->required();
    check->add_option("--k", check_k)->required();
    check->add_option("--h", check_h)->required();
    check->add_option("--alpha", check_alpha);
    add_common(check, check_args);

    // taxonomy
    auto* taxonomy = add_subcommand(app, "taxonomy", "full layer matrix and efficiency vector");
    std::string tax_instance, tax_allocation, tax_alpha = "1";
    CommonArgs tax_args;
    taxonomy->add_option("--instance", tax_instance)->required();
    taxonomy->add_option("--allocation", tax_allocation)->required();
    taxonomy->add_option("--alpha", tax_alpha);
    add_common(taxonomy, tax_args, false);

    // gpe
    auto* gpe = add_subcommand(app, "gpe", "group Pareto efficiency of an allocation");
    std::string gpe_instance, gpe_allocation, gpe_alpha = "1";
    int gpe_k = 1;
    CommonArgs gpe_args;
    gpe->add_option("--instance", gpe_instance)->required();
    gpe->add_option("--allocation", gpe_allocation)->required();
    gpe->add_option("--k", gpe_k)->required();
    gpe->add_option("--alpha", gpe_alpha);
    add_common(gpe, gpe_args);

    // prices
    auto* prices = add_subcommand(app, "prices", "prices of group fairness");
    std::string prices_instance, prices_welfare = "all";
    CommonArgs prices_args;
    prices->add_option("--instance", prices_instance)->required();
    prices->add_option("--welfare", prices_welfare, "utilitarian, egalitarian, nash, or all");
    add_common(prices, prices_args, false);

    // lottery
    auto* lottery = add_subcommand(app, "lottery", "group Pareto efficiency of a lottery");
    std::string lot_instance, lot_lottery, lot_mode = "deterministic", lot_alpha = "1";
    int lot_k = 1;
    CommonArgs lot_args;
    lottery->add_option("--instance", lot_instance)->required();
    lottery->add_option("--lottery", lot_lottery)->required();
    lottery->add_option("--k", lot_k)->required();
    lottery->add_option("--mode", lot_mode, "deterministic or lottery adversaries");
    lottery->add_option("--alpha", lot_alpha);
    add_common(lottery, lot_args);

    // verify
    auto* verify = add_subcommand(app, "verify", "seeded verification of the theorem suite");
    VerifyConfig verify_config;
    CommonArgs verify_args;
    verify->add_option("--seed", verify_config.seed);
    verify->add_option("--instances", verify_config.instance_count);
    verify->add_option("--lotteries", verify_config.lottery_count);
    verify->add_option("--max-n", verify_config.max_agents);
    verify->add_option("--max-m", verify_config.max_items);
    add_common(verify, verify_args, false);

    // gen
    auto* gen = add_subcommand(app, "gen", "generate an instance document");
    std::string gen_preset, gen_model = "additive", gen_eps = "1/100", gen_out;
    int gen_n = 3, gen_m = 3;
    std::uint64_t gen_bound = 10, gen_seed = 0;
    gen->add_option("--preset", gen_preset, "example1, example3, or theorem6");
    gen->add_option("--n", gen_n);
    gen->add_option("--m", gen_m);
    gen->add_option("--model", gen_model, "additive or bundle");
    gen->add_option("--value-bound", gen_bound);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--eps", gen_eps, "theorem6 off-diagonal value");
    gen->add_option("--out", gen_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) {
            return cmd_check(check_instance, check_allocation, check_k, check_h, check_alpha,
                             check_args);
        }
        if (taxonomy->parsed()) {
            return cmd_taxonomy(tax_instance, tax_allocation, tax_alpha, tax_args);
        }
        if (gpe->parsed()) {
            return cmd_gpe(gpe_instance, gpe_allocation, gpe_k, gpe_alpha, gpe_args);
        }
        if (prices->parsed()) return cmd_prices(prices_instance, prices_welfare, prices_args);
        if (lottery->parsed()) {
            return cmd_lottery(lot_instance, lot_lottery, lot_k, lot_mode, lot_alpha, lot_args);
        }
        if (verify->parsed()) {
            verify_config.options = verify_args.scan();
            return cmd_verify(verify_config, verify_args);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_preset, gen_n, gen_m, gen_model, gen_bound, gen_seed, gen_eps,
                           gen_out);
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
