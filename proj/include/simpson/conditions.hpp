#ifndef SIMPSON_CONDITIONS_HPP
#define SIMPSON_CONDITIONS_HPP

#include "simpson/classify.hpp"
#include "simpson/table.hpp"

#include <array>
#include <optional>

namespace simpson {

/// Odds (cross-product) ratio (a*d)/(b*c); strictly positive.
Rational odds_ratio(const Table2x2& t);

/// Sign of a*d - b*c against zero. Agrees with comparing odds_ratio to 1.
Relation det_sign(const Table2x2& t);

/// SP decided via the odds-ratio route: kappa(T1), kappa(T2) and
/// kappa(T1+T2) compared against 1. Agrees with sp() on every input.
SpVerdict sp_via_odds(const TablePair& p);

// Necessary conditions for SP. If sp(p) != none then all three hold.
struct NecessaryConditionsReport {
    bool a_rates_differ = false;  // A1 != A2
    bool c_rates_differ = false;  // C1 != C2
    bool margins_differ = false;  // alpha1 != gamma1 or alpha2 != gamma2
};

NecessaryConditionsReport necessary_conditions(const TablePair& p);

// Homogeneity of the sub-populations: one of four strict cross-table
// inequality conditions on the row/column odds. Sufficient for SP not
// to occur.
//
// The fourth condition is max(b1/d1, b2/d2) < min(a1/c1, a2/c2), the
// form symmetric with the third.
struct MittalHomogeneityReport {
    bool holds = false;
    std::array<bool, 4> which{};  // per-condition verdicts
};

MittalHomogeneityReport mittal_homogeneous(const TablePair& p);

// Odds-ratio homogeneity: all three odds ratios equal. The weak form
// requires only one of the sub-population ratios to match the
// aggregate's, and already suffices to preclude SP.
bool orh(const TablePair& p);
bool worh(const TablePair& p);

enum class Association { XwithY, XwithNotY, Neither };

std::string to_string(Association a);

/// XwithY iff kappa(t)>1; XwithNotY iff kappa(t)<1; Neither at kappa(t)=1.
Association positive_association(const Table2x2& t);

/// SP decided via positive association of X and Y (resp. not-Y) in the
/// sub-populations and the aggregate. Agrees with sp() on every input.
SpVerdict sp_via_association(const TablePair& p);

// Alternative aggregations pairing the stratifying variable M against Y
// (s1) and against X (s2).
struct MarginalTables {
    Table2x2 s1;  // rows M / not-M, columns Y / not-Y
    Table2x2 s2;  // rows M / not-M, columns X / not-X
};

MarginalTables marginal_tables(const TablePair& p);

enum class MtoX { MwithX, MwithNotX, Independent };
enum class MtoY { MwithY, MwithNotY, Independent };

std::string to_string(MtoX a);
std::string to_string(MtoY a);

struct AssociationPattern {
    MtoX x_assoc;  // sign of kappa(S2) - 1
    MtoY y_assoc;  // sign of kappa(S1) - 1

    bool operator==(const AssociationPattern&) const = default;
};

AssociationPattern association_pattern(const TablePair& p);

// Diagnostic for the claimed dichotomy "(M~X and M~Y) or (M~notX and
// M~notY)" under the hypotheses kappa(T1)>1, kappa(T2)>1 and SP. The
// observed pattern is reported as-is; the dichotomy is recorded, never
// enforced, because mixed patterns do occur (the Blyth tables are one).
struct DichotomyDiagnostic {
    bool hypotheses_hold = false;
    AssociationPattern pattern{MtoX::Independent, MtoY::Independent};
    // Set only when the hypotheses hold: whether the observed pattern
    // matches one of the two claimed disjuncts.
    std::optional<bool> matches_dichotomy;
};

DichotomyDiagnostic dichotomy_diagnostic(const TablePair& p);

// mu and nu rewritten as mixtures of the sub-population rates, with
// weights Pr[M|X] and Pr[M|notX]. The reconstruction is exact:
//   mu = A1*w_m_given_x + A2*(1 - w_m_given_x)
//   nu = C1*w_m_given_notx + C2*(1 - w_m_given_notx)
struct Decomposition {
    Rational w_m_given_x;     // alpha1 / (alpha1 + alpha2)
    Rational w_m_given_notx;  // gamma1 / (gamma1 + gamma2)
    Rational A1, A2, C1, C2;
    Rational mu, nu;  // reconstructed
};

Decomposition decompose(const TablePair& p);

}  // namespace simpson

#endif
