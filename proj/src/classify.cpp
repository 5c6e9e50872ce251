#include "simpson/classify.hpp"

#include "simpson/generate.hpp"

#include <stdexcept>

namespace simpson {

namespace {

int index_of(Relation r) {
    switch (r) {
        case Relation::Gt: return 0;
        case Relation::Eq: return 1;
        case Relation::Lt: return 2;
    }
    throw std::logic_error("unreachable");
}

Relation relation_at(int i) {
    switch (i) {
        case 0: return Relation::Gt;
        case 1: return Relation::Eq;
        case 2: return Relation::Lt;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Relation relation_of(const Rational& lhs, const Rational& rhs) {
    if (lhs > rhs) return Relation::Gt;
    if (lhs < rhs) return Relation::Lt;
    return Relation::Eq;
}

char relation_symbol(Relation r) {
    switch (r) {
        case Relation::Gt: return '>';
        case Relation::Eq: return '=';
        case Relation::Lt: return '<';
    }
    throw std::logic_error("unreachable");
}

RelationTriple relation_triple(const TablePair& p) {
    Quantities q = quantities(p);
    return {relation_of(q.A1, q.C1), relation_of(q.A2, q.C2), relation_of(q.mu, q.nu)};
}

CaseId case_from_triple(const RelationTriple& t) {
    return 9 * index_of(t.on_t1) + 3 * index_of(t.on_t2) + index_of(t.on_agg) + 1;
}

RelationTriple triple_from_case(CaseId c) {
    if (c < 1 || c > 27) throw std::out_of_range("case number must be in 1..27");
    int k = c - 1;
    return {relation_at(k / 9), relation_at((k / 3) % 3), relation_at(k % 3)};
}

CaseId case_of(const TablePair& p) { return case_from_triple(relation_triple(p)); }

ClassLabel class_of(CaseId c) {
    switch (c) {
        case 1: case 27: return ClassLabel::Aligned;
        case 2: case 26: return ClassLabel::WeakParadox;
        case 3: case 25: return ClassLabel::Paradox;
        case 14: return ClassLabel::Class0;
        case 7: case 9: case 19: case 21: return ClassLabel::Class1;
        case 4: case 10: case 18: case 24: return ClassLabel::Class2;
        case 5: case 11: case 17: case 23: return ClassLabel::Class3;
        case 6: case 12: case 16: case 22: return ClassLabel::Class4;
        case 8: case 20: return ClassLabel::Class5;
        case 13: case 15: return ClassLabel::Class6;
    }
    throw std::out_of_range("case number must be in 1..27");
}

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Aligned: return "Aligned";
        case ClassLabel::WeakParadox: return "Weak paradox";
        case ClassLabel::Paradox: return "Paradox";
        case ClassLabel::Class0: return "Class-0";
        case ClassLabel::Class1: return "Class-1";
        case ClassLabel::Class2: return "Class-2";
        case ClassLabel::Class3: return "Class-3";
        case ClassLabel::Class4: return "Class-4";
        case ClassLabel::Class5: return "Class-5";
        case ClassLabel::Class6: return "Class-6";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(SpVerdict v) {
    switch (v) {
        case SpVerdict::None: return "none";
        case SpVerdict::SP1: return "SP1";
        case SpVerdict::SP2: return "SP2";
    }
    throw std::logic_error("unreachable");
}

SpVerdict sp(const TablePair& p) {
    RelationTriple t = relation_triple(p);
    if (t.on_t1 == Relation::Gt && t.on_t2 == Relation::Gt && t.on_agg != Relation::Gt) {
        return SpVerdict::SP1;
    }
    if (t.on_t1 == Relation::Lt && t.on_t2 == Relation::Lt && t.on_agg != Relation::Lt) {
        return SpVerdict::SP2;
    }
    return SpVerdict::None;
}

DefinitionVerdicts definition_verdicts(const TablePair& p) {
    Quantities q = quantities(p);
    const bool ge1 = q.A1 >= q.C1, ge2 = q.A2 >= q.C2;
    const bool le1 = q.A1 <= q.C1, le2 = q.A2 <= q.C2;
    const bool gt1 = q.A1 > q.C1, gt2 = q.A2 > q.C2;
    const bool lt1 = q.A1 < q.C1, lt2 = q.A2 < q.C2;

    DefinitionVerdicts v;
    v.b72 = ge1 && ge2 && (q.mu < q.nu);
    v.b72_prime = le1 && le2 && (q.mu > q.nu);
    v.exp_b72 = v.b72 || v.b72_prime;
    v.m91 = (ge1 && ge2 && q.mu <= q.nu) || (le1 && le2 && q.mu >= q.nu);
    v.bngbb11 = ge1 && ge2 && (q.mu <= q.nu) && (gt1 || gt2 || q.mu < q.nu);
    v.bngbb11_prime = le1 && le2 && (q.nu <= q.mu) && (lt1 || lt2 || q.nu < q.mu);
    v.exp_bngbb11 = v.bngbb11 || v.bngbb11_prime;
    v.sp = gt1 && gt2 ? !(q.mu > q.nu) : (lt1 && lt2 && !(q.mu < q.nu));
    return v;
}

std::set<CaseId> coverage_set(DefinitionName d) {
    std::set<CaseId> covered;
    for (CaseId c = 1; c <= 27; ++c) {
        DefinitionVerdicts v = definition_verdicts(representative(c));
        bool holds = false;
        switch (d) {
            case DefinitionName::B72: holds = v.b72; break;
            case DefinitionName::B72Prime: holds = v.b72_prime; break;
            case DefinitionName::ExpB72: holds = v.exp_b72; break;
            case DefinitionName::M91: holds = v.m91; break;
            case DefinitionName::BNGBB11: holds = v.bngbb11; break;
            case DefinitionName::BNGBB11Prime: holds = v.bngbb11_prime; break;
            case DefinitionName::ExpBNGBB11: holds = v.exp_bngbb11; break;
            case DefinitionName::SP: holds = v.sp; break;
        }
        if (holds) covered.insert(c);
    }
    return covered;
}

}  // namespace simpson
