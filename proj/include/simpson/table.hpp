#ifndef SIMPSON_TABLE_HPP
#define SIMPSON_TABLE_HPP

#include "simpson/rational.hpp"

#include <stdexcept>
#include <string>

namespace simpson {

struct NonPositiveEntry : std::domain_error {
    explicit NonPositiveEntry(char cell_)
        : std::domain_error(std::string("table entry '") + cell_ + "' must be strictly positive"),
          cell(cell_) {}
    char cell;
};

struct NonPositiveScale : std::domain_error {
    NonPositiveScale() : std::domain_error("scale factor must be strictly positive") {}
};

// A 2x2 contingency table
//
//     | a  b |
//     | c  d |
//
// with rows X / not-X and columns Y / not-Y. All four entries are strictly
// positive; zero entries are rejected at construction.
class Table2x2 {
  public:
    Table2x2(Rational a, Rational b, Rational c, Rational d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational row1_total() const { return a_ + b_; }
    Rational row2_total() const { return c_ + d_; }

    bool operator==(const Table2x2&) const = default;

  private:
    Rational a_, b_, c_, d_;
};

/// Throws NonPositiveEntry naming the first offending cell.
Table2x2 from_counts(Rational a, Rational b, Rational c, Rational d);

/// Convenience for integer literals in tests and generators.
Table2x2 from_counts(long a, long b, long c, long d);

/// Entrywise sum (the collapsed table).
Table2x2 aggregate(const Table2x2& t1, const Table2x2& t2);

Table2x2 transpose(const Table2x2& t);
Table2x2 swap_rows(const Table2x2& t);
Table2x2 swap_columns(const Table2x2& t);

/// Multiplies every entry by delta; throws NonPositiveScale for delta <= 0.
Table2x2 scale(const Table2x2& t, const Rational& delta);

struct TablePair {
    Table2x2 t1;
    Table2x2 t2;

    Table2x2 aggregate() const { return simpson::aggregate(t1, t2); }

    bool operator==(const TablePair&) const = default;
};

// The derived quantities of a table pair: row totals, row-wise success
// rates and the aggregate rates. mu always lies in the closed interval
// spanned by A1 and A2, and nu in that spanned by C1 and C2.
struct Quantities {
    Rational alpha1, alpha2;  // row-1 totals of T1, T2
    Rational gamma1, gamma2;  // row-2 totals of T1, T2
    Rational A1, A2;          // a1/alpha1, a2/alpha2
    Rational C1, C2;          // c1/gamma1, c2/gamma2
    Rational mu, nu;          // aggregate rates
};

Quantities quantities(const TablePair& p);

}  // namespace simpson

#endif
