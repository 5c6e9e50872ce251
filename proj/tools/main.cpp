// Command-line front end: analyze a table pair, inspect the bundled
// corpus, track a stream of accumulating snapshots, run the exhaustive
// property sweeps, and expose the generators.
#include "simpson/classify.hpp"
#include "simpson/conditions.hpp"
#include "simpson/generate.hpp"
#include "simpson/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace simpson;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitNonPositive = 2;
constexpr int kExitSpFound = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TablePair table_pair_from_strings(const std::vector<std::string>& t1,
                                  const std::vector<std::string>& t2) {
    return {from_counts(parse_rational(t1[0]), parse_rational(t1[1]), parse_rational(t1[2]),
                        parse_rational(t1[3])),
            from_counts(parse_rational(t2[0]), parse_rational(t2[1]), parse_rational(t2[2]),
                        parse_rational(t2[3]))};
}

json corpus_entry_to_json(const CorpusEntry& e) {
    json contexts = json::array();
    for (const CorpusContext& c : e.contexts) {
        contexts.push_back({{"title", c.title}, {"M", c.m}, {"X", c.x}, {"Y", c.y},
                            {"note", c.note}});
    }
    return {{"id", e.id},
            {"pair", pair_to_json(e.pair)},
            {"expected_case", e.expected_case},
            {"contexts", contexts}};
}

int run_analyze(const TablePair& pair, bool as_json, bool exit_on_sp) {
    AnalysisReport report = analyze(pair);
    if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << report_to_text(report);
    }
    if (exit_on_sp && report.verdict != SpVerdict::None) return kExitSpFound;
    return kExitOk;
}

int run_corpus(const std::string& action, const std::string& name, bool as_json) {
    const auto& corpus = literature_corpus();
    if (action == "list") {
        if (as_json) {
            json j = json::array();
            for (const CorpusEntry& e : corpus) {
                j.push_back({{"id", e.id}, {"expected_case", e.expected_case}});
            }
            for (CaseId c = 1; c <= 27; ++c) {
                j.push_back({{"id", "case" + std::to_string(c)}, {"expected_case", c}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "Literature examples:\n";
            for (const CorpusEntry& e : corpus) {
                std::cout << "  " << e.id << " (case " << e.expected_case << ")\n";
            }
            std::cout << "Case representatives: case1 .. case27\n";
        }
        return kExitOk;
    }
    if (action == "show") {
        CorpusEntry entry = literature_example(name);
        if (as_json) {
            std::cout << corpus_entry_to_json(entry).dump(2) << "\n";
        } else {
            std::cout << entry.id << " (expected case " << entry.expected_case << ")\n"
                      << report_to_text(analyze(entry.pair)) << "Contexts:\n";
            for (const CorpusContext& c : entry.contexts) {
                std::cout << "  " << c.title << "\n    M: " << c.m << "\n    X: " << c.x
                          << "\n    Y: " << c.y << "\n    " << c.note << "\n";
            }
        }
        return kExitOk;
    }
    if (action == "verify") {
        bool all_ok = true;
        json results = json::array();
        auto record = [&](const std::string& id, CaseId expected, const TablePair& p) {
            CaseId got = case_of(p);
            bool ok = got == expected;
            all_ok = all_ok && ok;
            results.push_back({{"id", id}, {"expected_case", expected}, {"case", got}, {"ok", ok}});
            if (!as_json) {
                std::cout << (ok ? "PASS " : "FAIL ") << id << ": case " << got << " (expected "
                          << expected << ")\n";
            }
        };
        for (const CorpusEntry& e : corpus) record(e.id, e.expected_case, e.pair);
        for (CaseId c = 1; c <= 27; ++c) record("case" + std::to_string(c), c, representative(c));
        if (as_json) std::cout << results.dump(2) << "\n";
        return all_ok ? kExitOk : kExitMalformed;
    }
    std::cerr << "corpus action must be list, show or verify\n";
    return kExitMalformed;
}

int run_stream(const std::string& path, bool as_json) {
    std::vector<TablePair> pairs = parse_stream_text(read_file(path));
    MonotonicityReport mono = is_monotonic(pairs);

    json snapshots = json::array();
    std::vector<std::size_t> transitions;
    bool prev_sp = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CaseId c = case_of(pairs[i]);
        SpVerdict v = sp(pairs[i]);
        bool now_sp = v != SpVerdict::None;
        if (i > 0 && now_sp != prev_sp) transitions.push_back(i);
        prev_sp = now_sp;
        snapshots.push_back({{"index", i},
                             {"case", c},
                             {"class", to_string(class_of(c))},
                             {"sp", to_string(v)}});
    }

    if (as_json) {
        json j = {{"snapshots", snapshots},
                  {"monotonic", mono.monotonic},
                  {"sp_transitions", transitions}};
        if (mono.first_violation) j["first_monotonicity_violation"] = *mono.first_violation;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const json& s : snapshots) {
            std::cout << "k=" << s["index"] << "  case " << s["case"] << " (" <<
                s["class"].get<std::string>() << ")  sp=" << s["sp"].get<std::string>() << "\n";
        }
        std::cout << "monotonic: " << (mono.monotonic ? "yes" : "no");
        if (mono.first_violation) std::cout << " (first violation after index " << *mono.first_violation << ")";
        std::cout << "\nSP on/off transitions at indices:";
        for (std::size_t t : transitions) std::cout << " " << t;
        std::cout << "\n";
    }
    return kExitOk;
}

struct SweepOutcome {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<TablePair> first_violation;
};

SweepOutcome sweep(int max_entry, const std::function<bool(const TablePair&)>& holds) {
    SweepOutcome out;
    for_each_pair(max_entry, [&](const TablePair& p) {
        ++out.checked;
        if (!holds(p)) {
            ++out.violations;
            if (!out.first_violation) out.first_violation = p;
        }
    });
    return out;
}

int run_enumerate(int max_entry, const std::string& property, bool as_json) {
    std::function<bool(const TablePair&)> holds;
    if (property == "thm2") {
        holds = [](const TablePair& p) {
            if (sp(p) == SpVerdict::None) return true;
            NecessaryConditionsReport r = necessary_conditions(p);
            return r.a_rates_differ && r.c_rates_differ && r.margins_differ;
        };
    } else if (property == "thm3") {
        holds = [](const TablePair& p) {
            SpVerdict v = sp(p);
            return v == sp_via_odds(p) && v == sp_via_association(p);
        };
    } else if (property == "thm4") {
        holds = [](const TablePair& p) {
            const Rational k1 = odds_ratio(p.t1);
            const Rational k2 = odds_ratio(p.t2);
            const Rational ka = odds_ratio(p.aggregate());
            bool no_sp_char = (!(k1 > 1 && k2 > 1) || ka > 1) && (!(k1 < 1 && k2 < 1) || ka < 1);
            return (sp(p) == SpVerdict::None) == no_sp_char;
        };
    } else if (property == "thm5") {
        holds = [](const TablePair& p) {
            return !mittal_homogeneous(p).holds || sp(p) == SpVerdict::None;
        };
    } else if (property == "thm6") {
        holds = [](const TablePair& p) { return !worh(p) || sp(p) == SpVerdict::None; };
    } else if (property == "thm7sym") {
        holds = [](const TablePair& p) {
            return positive_association(p.t1) == positive_association(transpose(p.t1)) &&
                   positive_association(p.t2) == positive_association(transpose(p.t2));
        };
    } else if (property == "sp-marginal-nonunit") {
        holds = [](const TablePair& p) {
            if (sp(p) == SpVerdict::None) return true;
            MarginalTables m = marginal_tables(p);
            return det_sign(m.s1) != Relation::Eq && det_sign(m.s2) != Relation::Eq;
        };
    } else if (property == "thm9-pattern-census") {
        std::uint64_t checked = 0, with_hypotheses = 0, match_a = 0, match_b = 0, mixed = 0;
        for_each_pair(max_entry, [&](const TablePair& p) {
            ++checked;
            DichotomyDiagnostic d = dichotomy_diagnostic(p);
            if (!d.hypotheses_hold) return;
            ++with_hypotheses;
            if (d.pattern.x_assoc == MtoX::MwithX && d.pattern.y_assoc == MtoY::MwithY) {
                ++match_a;
            } else if (d.pattern.x_assoc == MtoX::MwithNotX &&
                       d.pattern.y_assoc == MtoY::MwithNotY) {
                ++match_b;
            } else {
                ++mixed;
            }
        });
        if (as_json) {
            std::cout << json{{"pairs_checked", checked},
                              {"hypotheses_hold", with_hypotheses},
                              {"pattern_a", match_a},
                              {"pattern_b", match_b},
                              {"mixed", mixed}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << checked << " pairs checked, " << with_hypotheses
                      << " satisfy the hypotheses\n"
                      << "  (a) M~X and M~Y   : " << match_a << "\n"
                      << "  (b) M~!X and M~!Y : " << match_b << "\n"
                      << "  mixed             : " << mixed << "\n";
        }
        return kExitOk;
    } else {
        std::cerr << "unknown property '" << property
                  << "'; expected one of thm2 thm3 thm4 thm5 thm6 thm7sym "
                     "sp-marginal-nonunit thm9-pattern-census\n";
        return kExitMalformed;
    }

    SweepOutcome out = sweep(max_entry, holds);
    if (as_json) {
        json j = {{"pairs_checked", out.checked}, {"violations", out.violations}};
        if (out.first_violation) j["first_counterexample"] = pair_to_json(*out.first_violation);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.checked << " pairs checked, " << out.violations << " violations\n";
        if (out.first_violation) {
            std::cout << "first counterexample:\n"
                      << pair_to_json(*out.first_violation).dump(2) << "\n";
        }
    }
    return out.violations == 0 ? kExitOk : kExitMalformed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of Simpson's paradox in pairs of 2x2 contingency tables"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");
    app.fallthrough();  // lets --json appear after the subcommand too

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "run the full analysis battery on one pair");
    std::string analyze_path;
    std::vector<std::string> t1_counts, t2_counts;
    bool exit_on_sp = false;
    analyze_cmd->add_option("file", analyze_path, "pair file (JSON or CSV)");
    analyze_cmd->add_option("--t1", t1_counts, "inline counts a b c d for T1")->expected(4);
    analyze_cmd->add_option("--t2", t2_counts, "inline counts a b c d for T2")->expected(4);
    analyze_cmd->add_flag("--exit-on-sp", exit_on_sp,
                          "exit with code 3 when Simpson's paradox is present");

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "list, show or verify the bundled corpus");
    std::string corpus_action, corpus_name;
    corpus_cmd->add_option("action", corpus_action, "list | show | verify")->required();
    corpus_cmd->add_option("name", corpus_name, "entry name for 'show'");

    // stream
    auto* stream_cmd = app.add_subcommand("stream", "analyze an ordered file of pair snapshots");
    std::string stream_path;
    stream_cmd->add_option("file", stream_path, "JSON array of pair objects")->required();

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive property sweep at desk scale");
    int max_entry = 2;
    std::string property = "thm3";
    enum_cmd->add_option("--max-entry", max_entry, "entries range over [1, max-entry]")
        ->check(CLI::PositiveNumber);
    enum_cmd->add_option("--property", property,
                         "thm2 | thm3 | thm4 | thm5 | thm6 | thm7sym | sp-marginal-nonunit | "
                         "thm9-pattern-census");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit pairs from the built-in generators");
    std::string gen_kind;
    int gen_case = 3;
    std::size_t gen_count = 12;
    std::uint64_t gen_seed = 0;
    int gen_max_entry = 9;
    gen_cmd->add_option("kind", gen_kind, "figure3 | representative | toggling | random")
        ->required();
    gen_cmd->add_option("--case", gen_case, "case number 1..27 (figure3, representative)");
    gen_cmd->add_option("-n,--count", gen_count, "number of terms / pairs");
    gen_cmd->add_option("--seed", gen_seed, "seed for random (pair i uses seed+i)");
    gen_cmd->add_option("--max-entry", gen_max_entry, "entry bound for random")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            TablePair pair = [&] {
                if (!t1_counts.empty() || !t2_counts.empty()) {
                    if (t1_counts.size() != 4 || t2_counts.size() != 4) {
                        throw ParseError("inline input needs --t1 and --t2, four counts each");
                    }
                    return table_pair_from_strings(t1_counts, t2_counts);
                }
                if (analyze_path.empty()) {
                    throw ParseError("provide a pair file or inline --t1/--t2 counts");
                }
                return parse_pair_text(read_file(analyze_path));
            }();
            return run_analyze(pair, as_json, exit_on_sp);
        }
        if (*corpus_cmd) return run_corpus(corpus_action, corpus_name, as_json);
        if (*stream_cmd) return run_stream(stream_path, as_json);
        if (*enum_cmd) return run_enumerate(max_entry, property, as_json);
        if (*gen_cmd) {
            json out = json::array();
            if (gen_kind == "figure3") {
                out.push_back(pair_to_json(figure3_example(gen_case)));
            } else if (gen_kind == "representative") {
                out.push_back(pair_to_json(representative(gen_case)));
            } else if (gen_kind == "toggling") {
                for (const TablePair& p : toggling_sequence(gen_count)) {
                    out.push_back(pair_to_json(p));
                }
            } else if (gen_kind == "random") {
                for (std::size_t i = 0; i < gen_count; ++i) {
                    out.push_back(pair_to_json(random_pair(gen_seed + i, gen_max_entry)));
                }
            } else {
                std::cerr << "unknown generator '" << gen_kind << "'\n";
                return kExitMalformed;
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const NonPositiveEntry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonPositive;
    } catch (const NonPositiveScale& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonPositive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitOk;
}
