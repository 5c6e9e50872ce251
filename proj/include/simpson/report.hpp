#ifndef SIMPSON_REPORT_HPP
#define SIMPSON_REPORT_HPP

#include "simpson/classify.hpp"
#include "simpson/conditions.hpp"
#include "simpson/table.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace simpson {

// Everything the analysis battery produces for one table pair. The three
// SP routes (definition, odds ratio, association) are all recorded and
// must agree inside any one report.
struct AnalysisReport {
    TablePair input;
    Table2x2 aggregated;
    Quantities quantities;
    RelationTriple triple;
    CaseId case_id;
    ClassLabel class_label;
    SpVerdict verdict;
    SpVerdict verdict_via_odds;
    SpVerdict verdict_via_association;
    DefinitionVerdicts definitions;
    Rational kappa_t1, kappa_t2, kappa_agg;
    Relation det_t1, det_t2, det_agg;
    NecessaryConditionsReport necessary;
    MittalHomogeneityReport mittal;
    bool orh = false;
    bool worh = false;
    MarginalTables marginals;
    Rational kappa_s1, kappa_s2;
    AssociationPattern pattern;
    DichotomyDiagnostic dichotomy;
    Decomposition decomposition;
};

AnalysisReport analyze(const TablePair& p);

nlohmann::json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

// Pair files are JSON objects {"t1": {"a": ..., "b": ..., "c": ..., "d": ...},
// "t2": {...}} with entries given as integer JSON numbers or as exact
// numeric strings (integer, finite decimal, or "p/q"). Floating JSON
// numbers are rejected so binary floats never contaminate the input.
// The CSV alternative is two lines: "t1,a,b,c,d" and "t2,a,b,c,d".
// A stream file is a JSON array of pair objects.
TablePair pair_from_json(const nlohmann::json& j);
nlohmann::json pair_to_json(const TablePair& p);
TablePair parse_pair_text(const std::string& text);  // JSON or CSV, auto-detected
std::vector<TablePair> parse_stream_text(const std::string& text);

nlohmann::json rational_to_json(const Rational& r);  // {"num","den","approx"}

}  // namespace simpson

#endif
