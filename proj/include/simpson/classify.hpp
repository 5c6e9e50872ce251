#ifndef SIMPSON_CLASSIFY_HPP
#define SIMPSON_CLASSIFY_HPP

#include "simpson/table.hpp"

#include <array>
#include <set>
#include <string>

namespace simpson {

enum class Relation { Gt, Eq, Lt };

Relation relation_of(const Rational& lhs, const Rational& rhs);
char relation_symbol(Relation r);  // '>', '=', '<'

struct RelationTriple {
    Relation on_t1;   // A1 vs C1
    Relation on_t2;   // A2 vs C2
    Relation on_agg;  // mu vs nu

    bool operator==(const RelationTriple&) const = default;
};

/// Exact comparisons of (A1 vs C1), (A2 vs C2), (mu vs nu).
RelationTriple relation_triple(const TablePair& p);

// Case numbers 1..27 are in bijection with relation triples via
// 9*i(r1) + 3*i(r2) + i(r3) + 1 where i(Gt)=0, i(Eq)=1, i(Lt)=2.
// This matches the row order of the 27-case classification table.
using CaseId = int;

CaseId case_from_triple(const RelationTriple& t);
RelationTriple triple_from_case(CaseId c);
CaseId case_of(const TablePair& p);

enum class ClassLabel {
    Aligned,
    WeakParadox,
    Paradox,
    Class0,
    Class1,
    Class2,
    Class3,
    Class4,
    Class5,
    Class6,
};

ClassLabel class_of(CaseId c);
std::string to_string(ClassLabel label);

enum class SpVerdict { None, SP1, SP2 };

std::string to_string(SpVerdict v);

/// SP1 iff (A1>C1) and (A2>C2) and not (mu>nu);
/// SP2 iff (A1<C1) and (A2<C2) and not (mu<nu).
SpVerdict sp(const TablePair& p);

// The literature definitions evaluated literally, with their original
// non-strict inequality forms, alongside SP. They disagree on several
// cases and exhibiting those disagreements is part of the point.
struct DefinitionVerdicts {
    bool b72 = false;          // (A1>=C1) & (A2>=C2) & (mu<nu)
    bool b72_prime = false;    // (A1<=C1) & (A2<=C2) & (mu>nu)
    bool exp_b72 = false;      // b72 | b72_prime
    bool m91 = false;
    bool bngbb11 = false;        // B72 with mu<=nu, at least one strict
    bool bngbb11_prime = false;  // mirrored form
    bool exp_bngbb11 = false;
    bool sp = false;

    bool operator==(const DefinitionVerdicts&) const = default;
};

DefinitionVerdicts definition_verdicts(const TablePair& p);

enum class DefinitionName { B72, B72Prime, ExpB72, M91, BNGBB11, BNGBB11Prime, ExpBNGBB11, SP };

/// Cases on which the named definition holds, computed by evaluating the
/// definition on one representative pair per case (not hard-coded).
std::set<CaseId> coverage_set(DefinitionName d);

}  // namespace simpson

#endif
