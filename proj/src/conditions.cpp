#include "simpson/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpson {

Rational odds_ratio(const Table2x2& t) { return (t.a() * t.d()) / (t.b() * t.c()); }

Relation det_sign(const Table2x2& t) {
    return relation_of(t.a() * t.d(), t.b() * t.c());
}

SpVerdict sp_via_odds(const TablePair& p) {
    const Rational k1 = odds_ratio(p.t1);
    const Rational k2 = odds_ratio(p.t2);
    const Rational ka = odds_ratio(p.aggregate());
    if (k1 > 1 && k2 > 1 && !(ka > 1)) return SpVerdict::SP1;
    if (k1 < 1 && k2 < 1 && !(ka < 1)) return SpVerdict::SP2;
    return SpVerdict::None;
}

NecessaryConditionsReport necessary_conditions(const TablePair& p) {
    Quantities q = quantities(p);
    NecessaryConditionsReport r;
    r.a_rates_differ = q.A1 != q.A2;
    r.c_rates_differ = q.C1 != q.C2;
    r.margins_differ = q.alpha1 != q.gamma1 || q.alpha2 != q.gamma2;
    return r;
}

MittalHomogeneityReport mittal_homogeneous(const TablePair& p) {
    const Table2x2& t1 = p.t1;
    const Table2x2& t2 = p.t2;
    const Rational ab1 = t1.a() / t1.b(), ab2 = t2.a() / t2.b();
    const Rational cd1 = t1.c() / t1.d(), cd2 = t2.c() / t2.d();
    const Rational ac1 = t1.a() / t1.c(), ac2 = t2.a() / t2.c();
    const Rational bd1 = t1.b() / t1.d(), bd2 = t2.b() / t2.d();

    MittalHomogeneityReport r;
    r.which[0] = std::max(ab1, ab2) < std::min(cd1, cd2);
    r.which[1] = std::max(cd1, cd2) < std::min(ab1, ab2);
    r.which[2] = std::max(ac1, ac2) < std::min(bd1, bd2);
    r.which[3] = std::max(bd1, bd2) < std::min(ac1, ac2);
    r.holds = r.which[0] || r.which[1] || r.which[2] || r.which[3];
    return r;
}

bool orh(const TablePair& p) {
    const Rational k1 = odds_ratio(p.t1);
    return k1 == odds_ratio(p.t2) && k1 == odds_ratio(p.aggregate());
}

bool worh(const TablePair& p) {
    const Rational ka = odds_ratio(p.aggregate());
    return odds_ratio(p.t1) == ka || odds_ratio(p.t2) == ka;
}

std::string to_string(Association a) {
    switch (a) {
        case Association::XwithY: return "X~Y";
        case Association::XwithNotY: return "X~!Y";
        case Association::Neither: return "independent";
    }
    throw std::logic_error("unreachable");
}

Association positive_association(const Table2x2& t) {
    switch (det_sign(t)) {
        case Relation::Gt: return Association::XwithY;
        case Relation::Lt: return Association::XwithNotY;
        case Relation::Eq: return Association::Neither;
    }
    throw std::logic_error("unreachable");
}

SpVerdict sp_via_association(const TablePair& p) {
    const Association a1 = positive_association(p.t1);
    const Association a2 = positive_association(p.t2);
    const Association aa = positive_association(p.aggregate());
    if (a1 == Association::XwithY && a2 == Association::XwithY && aa != Association::XwithY) {
        return SpVerdict::SP1;
    }
    if (a1 == Association::XwithNotY && a2 == Association::XwithNotY &&
        aa != Association::XwithNotY) {
        return SpVerdict::SP2;
    }
    return SpVerdict::None;
}

MarginalTables marginal_tables(const TablePair& p) {
    const Table2x2& t1 = p.t1;
    const Table2x2& t2 = p.t2;
    return {
        Table2x2(t1.a() + t1.c(), t1.b() + t1.d(), t2.a() + t2.c(), t2.b() + t2.d()),
        Table2x2(t1.a() + t1.b(), t1.c() + t1.d(), t2.a() + t2.b(), t2.c() + t2.d()),
    };
}

std::string to_string(MtoX a) {
    switch (a) {
        case MtoX::MwithX: return "M~X";
        case MtoX::MwithNotX: return "M~!X";
        case MtoX::Independent: return "independent";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(MtoY a) {
    switch (a) {
        case MtoY::MwithY: return "M~Y";
        case MtoY::MwithNotY: return "M~!Y";
        case MtoY::Independent: return "independent";
    }
    throw std::logic_error("unreachable");
}

AssociationPattern association_pattern(const TablePair& p) {
    MarginalTables m = marginal_tables(p);
    AssociationPattern pat{MtoX::Independent, MtoY::Independent};
    switch (det_sign(m.s2)) {
        case Relation::Gt: pat.x_assoc = MtoX::MwithX; break;
        case Relation::Lt: pat.x_assoc = MtoX::MwithNotX; break;
        case Relation::Eq: break;
    }
    switch (det_sign(m.s1)) {
        case Relation::Gt: pat.y_assoc = MtoY::MwithY; break;
        case Relation::Lt: pat.y_assoc = MtoY::MwithNotY; break;
        case Relation::Eq: break;
    }
    return pat;
}

DichotomyDiagnostic dichotomy_diagnostic(const TablePair& p) {
    DichotomyDiagnostic d;
    d.pattern = association_pattern(p);
    d.hypotheses_hold = det_sign(p.t1) == Relation::Gt && det_sign(p.t2) == Relation::Gt &&
                        sp_via_odds(p) != SpVerdict::None;
    if (d.hypotheses_hold) {
        const bool both_with = d.pattern.x_assoc == MtoX::MwithX && d.pattern.y_assoc == MtoY::MwithY;
        const bool both_against =
            d.pattern.x_assoc == MtoX::MwithNotX && d.pattern.y_assoc == MtoY::MwithNotY;
        d.matches_dichotomy = both_with || both_against;
    }
    return d;
}

Decomposition decompose(const TablePair& p) {
    Quantities q = quantities(p);
    Decomposition d;
    d.w_m_given_x = q.alpha1 / (q.alpha1 + q.alpha2);
    d.w_m_given_notx = q.gamma1 / (q.gamma1 + q.gamma2);
    d.A1 = q.A1;
    d.A2 = q.A2;
    d.C1 = q.C1;
    d.C2 = q.C2;
    d.mu = d.A1 * d.w_m_given_x + d.A2 * (1 - d.w_m_given_x);
    d.nu = d.C1 * d.w_m_given_notx + d.C2 * (1 - d.w_m_given_notx);
    return d;
}

}  // namespace simpson
