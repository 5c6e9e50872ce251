#include "simpson/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace simpson {

using nlohmann::json;

AnalysisReport analyze(const TablePair& p) {
    AnalysisReport r{
        .input = p,
        .aggregated = p.aggregate(),
        .quantities = quantities(p),
        .triple = relation_triple(p),
        .case_id = case_of(p),
        .class_label = class_of(case_of(p)),
        .verdict = sp(p),
        .verdict_via_odds = sp_via_odds(p),
        .verdict_via_association = sp_via_association(p),
        .definitions = definition_verdicts(p),
        .kappa_t1 = odds_ratio(p.t1),
        .kappa_t2 = odds_ratio(p.t2),
        .kappa_agg = odds_ratio(p.aggregate()),
        .det_t1 = det_sign(p.t1),
        .det_t2 = det_sign(p.t2),
        .det_agg = det_sign(p.aggregate()),
        .necessary = necessary_conditions(p),
        .mittal = mittal_homogeneous(p),
        .orh = simpson::orh(p),
        .worh = simpson::worh(p),
        .marginals = marginal_tables(p),
        .kappa_s1 = odds_ratio(marginal_tables(p).s1),
        .kappa_s2 = odds_ratio(marginal_tables(p).s2),
        .pattern = association_pattern(p),
        .dichotomy = dichotomy_diagnostic(p),
        .decomposition = decompose(p),
    };
    return r;
}

json rational_to_json(const Rational& r) {
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"approx", approx(r)}};
}

namespace {

json table_to_json(const Table2x2& t) {
    return json{{"a", to_fraction_string(t.a())},
                {"b", to_fraction_string(t.b())},
                {"c", to_fraction_string(t.c())},
                {"d", to_fraction_string(t.d())}};
}

std::string det_str(Relation r) {
    switch (r) {
        case Relation::Gt: return "positive";
        case Relation::Eq: return "zero";
        case Relation::Lt: return "negative";
    }
    return {};
}

Rational entry_from_json(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing table entry '") + key + "'");
    const json& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
    if (v.is_number_float()) {
        throw ParseError(std::string("entry '") + key +
                         "' is a floating-point number; pass it as a string for an exact parse");
    }
    throw ParseError(std::string("entry '") + key + "' must be an integer or a numeric string");
}

Table2x2 table_from_json(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError(std::string("'") + name + "' must be an object");
    return from_counts(entry_from_json(j, "a"), entry_from_json(j, "b"), entry_from_json(j, "c"),
                       entry_from_json(j, "d"));
}

Table2x2 table_from_csv_fields(const std::vector<std::string>& fields) {
    return from_counts(parse_rational(fields[1]), parse_rational(fields[2]),
                       parse_rational(fields[3]), parse_rational(fields[4]));
}

}  // namespace

TablePair pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("t1") || !j.contains("t2")) {
        throw ParseError("pair object must contain 't1' and 't2'");
    }
    return {table_from_json(j.at("t1"), "t1"), table_from_json(j.at("t2"), "t2")};
}

json pair_to_json(const TablePair& p) {
    return json{{"t1", table_to_json(p.t1)}, {"t2", table_to_json(p.t2)}};
}

TablePair parse_pair_text(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON pair file");
        return pair_from_json(j);
    }

    // CSV: lines "t1,a,b,c,d" and "t2,a,b,c,d" in either order.
    std::istringstream in(text);
    std::string line;
    std::optional<Table2x2> t1, t2;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw ParseError("CSV line must have 5 fields: " + line);
        if (fields[0] == "t1") {
            t1 = table_from_csv_fields(fields);
        } else if (fields[0] == "t2") {
            t2 = table_from_csv_fields(fields);
        } else {
            throw ParseError("CSV row label must be 't1' or 't2', got '" + fields[0] + "'");
        }
    }
    if (!t1 || !t2) throw ParseError("CSV input must provide both t1 and t2 rows");
    return {*t1, *t2};
}

std::vector<TablePair> parse_stream_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw ParseError("stream file must be a JSON array of pair objects");
    }
    std::vector<TablePair> pairs;
    pairs.reserve(j.size());
    for (const json& item : j) pairs.push_back(pair_from_json(item));
    return pairs;
}

json report_to_json(const AnalysisReport& r) {
    const Quantities& q = r.quantities;
    json j;
    j["input"] = pair_to_json(r.input);
    j["aggregated"] = table_to_json(r.aggregated);
    j["quantities"] = {
        {"alpha1", rational_to_json(q.alpha1)}, {"alpha2", rational_to_json(q.alpha2)},
        {"gamma1", rational_to_json(q.gamma1)}, {"gamma2", rational_to_json(q.gamma2)},
        {"A1", rational_to_json(q.A1)},         {"A2", rational_to_json(q.A2)},
        {"C1", rational_to_json(q.C1)},         {"C2", rational_to_json(q.C2)},
        {"mu", rational_to_json(q.mu)},         {"nu", rational_to_json(q.nu)},
    };
    j["relations"] = {{"t1", std::string(1, relation_symbol(r.triple.on_t1))},
                      {"t2", std::string(1, relation_symbol(r.triple.on_t2))},
                      {"aggregate", std::string(1, relation_symbol(r.triple.on_agg))}};
    j["case"] = r.case_id;
    j["class"] = to_string(r.class_label);
    j["sp"] = {{"verdict", to_string(r.verdict)},
               {"via_odds_ratio", to_string(r.verdict_via_odds)},
               {"via_association", to_string(r.verdict_via_association)}};
    j["definitions"] = {
        {"B72", r.definitions.b72},
        {"B72'", r.definitions.b72_prime},
        {"Exp-B72", r.definitions.exp_b72},
        {"M91", r.definitions.m91},
        {"BNGBB11", r.definitions.bngbb11},
        {"BNGBB11'", r.definitions.bngbb11_prime},
        {"Exp-BNGBB11", r.definitions.exp_bngbb11},
        {"SP", r.definitions.sp},
    };
    j["odds_ratios"] = {{"t1", rational_to_json(r.kappa_t1)},
                        {"t2", rational_to_json(r.kappa_t2)},
                        {"aggregate", rational_to_json(r.kappa_agg)}};
    j["det_signs"] = {{"t1", det_str(r.det_t1)},
                      {"t2", det_str(r.det_t2)},
                      {"aggregate", det_str(r.det_agg)}};
    j["necessary_conditions"] = {{"a_rates_differ", r.necessary.a_rates_differ},
                                 {"c_rates_differ", r.necessary.c_rates_differ},
                                 {"margins_differ", r.necessary.margins_differ}};
    j["homogeneity"] = {
        {"mittal", {{"holds", r.mittal.holds}, {"conditions", r.mittal.which}}},
        {"orh", r.orh},
        {"worh", r.worh},
    };
    j["marginal_tables"] = {{"s1", table_to_json(r.marginals.s1)},
                            {"s2", table_to_json(r.marginals.s2)},
                            {"kappa_s1", rational_to_json(r.kappa_s1)},
                            {"kappa_s2", rational_to_json(r.kappa_s2)}};
    j["association_pattern"] = {{"x", to_string(r.pattern.x_assoc)},
                                {"y", to_string(r.pattern.y_assoc)}};
    json t9 = {{"hypotheses_hold", r.dichotomy.hypotheses_hold}};
    if (r.dichotomy.matches_dichotomy.has_value()) {
        t9["matches_dichotomy"] = *r.dichotomy.matches_dichotomy;
    }
    j["dichotomy_diagnostic"] = t9;
    const Decomposition& d = r.decomposition;
    j["decomposition"] = {
        {"w_m_given_x", rational_to_json(d.w_m_given_x)},
        {"w_m_given_notx", rational_to_json(d.w_m_given_notx)},
        {"reconstructed_mu", rational_to_json(d.mu)},
        {"reconstructed_nu", rational_to_json(d.nu)},
    };
    return j;
}

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << to_fraction_string(r) << " (~" << approx(r) << ")";
    return os.str();
}

void print_table(std::ostream& os, const char* name, const Table2x2& t) {
    os << "  " << name << " = [[" << to_fraction_string(t.a()) << ", " << to_fraction_string(t.b())
       << "], [" << to_fraction_string(t.c()) << ", " << to_fraction_string(t.d()) << "]]\n";
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    const Quantities& q = r.quantities;
    os << "Tables:\n";
    print_table(os, "T1   ", r.input.t1);
    print_table(os, "T2   ", r.input.t2);
    print_table(os, "T1+T2", r.aggregated);
    os << "Rates:\n"
       << "  A1 = " << rat_str(q.A1) << "  C1 = " << rat_str(q.C1) << "\n"
       << "  A2 = " << rat_str(q.A2) << "  C2 = " << rat_str(q.C2) << "\n"
       << "  mu = " << rat_str(q.mu) << "  nu = " << rat_str(q.nu) << "\n";
    os << "Relations: A1 " << relation_symbol(r.triple.on_t1) << " C1, A2 "
       << relation_symbol(r.triple.on_t2) << " C2, mu " << relation_symbol(r.triple.on_agg)
       << " nu\n";
    os << "Case " << r.case_id << " (" << to_string(r.class_label) << ")\n";
    os << "Simpson's paradox: " << to_string(r.verdict)
       << " (odds-ratio route: " << to_string(r.verdict_via_odds)
       << ", association route: " << to_string(r.verdict_via_association) << ")\n";
    os << "Definition verdicts: B72=" << r.definitions.b72 << " B72'=" << r.definitions.b72_prime
       << " Exp-B72=" << r.definitions.exp_b72 << " M91=" << r.definitions.m91
       << " BNGBB11=" << r.definitions.bngbb11 << " BNGBB11'=" << r.definitions.bngbb11_prime
       << " Exp-BNGBB11=" << r.definitions.exp_bngbb11 << " SP=" << r.definitions.sp << "\n";
    os << "Odds ratios: kappa(T1) = " << rat_str(r.kappa_t1)
       << ", kappa(T2) = " << rat_str(r.kappa_t2) << ", kappa(T1+T2) = " << rat_str(r.kappa_agg)
       << "\n";
    os << "Determinant signs: " << det_str(r.det_t1) << ", " << det_str(r.det_t2) << ", "
       << det_str(r.det_agg) << "\n";
    os << "Necessary conditions: A1!=A2=" << r.necessary.a_rates_differ
       << " C1!=C2=" << r.necessary.c_rates_differ << " margins differ=" << r.necessary.margins_differ
       << "\n";
    os << "Homogeneity: Mittal=" << r.mittal.holds << " (conditions " << r.mittal.which[0]
       << r.mittal.which[1] << r.mittal.which[2] << r.mittal.which[3] << "), ORH=" << r.orh
       << ", WORH=" << r.worh << "\n";
    os << "Marginal tables:\n";
    print_table(os, "S1   ", r.marginals.s1);
    print_table(os, "S2   ", r.marginals.s2);
    os << "  kappa(S1) = " << rat_str(r.kappa_s1) << ", kappa(S2) = " << rat_str(r.kappa_s2)
       << "\n";
    os << "Association pattern: " << to_string(r.pattern.x_assoc) << ", "
       << to_string(r.pattern.y_assoc) << "\n";
    os << "Dichotomy diagnostic: hypotheses "
       << (r.dichotomy.hypotheses_hold ? "hold" : "do not hold");
    if (r.dichotomy.matches_dichotomy.has_value()) {
        os << ", pattern " << (*r.dichotomy.matches_dichotomy ? "matches" : "is mixed");
    }
    os << "\n";
    os << "Mixture weights: Pr[M|X] = " << rat_str(r.decomposition.w_m_given_x)
       << ", Pr[M|!X] = " << rat_str(r.decomposition.w_m_given_notx) << "\n";
    return os.str();
}

}  // namespace simpson
