#include "simpson/table.hpp"

namespace simpson {

Table2x2::Table2x2(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ <= 0) throw NonPositiveEntry('a');
    if (b_ <= 0) throw NonPositiveEntry('b');
    if (c_ <= 0) throw NonPositiveEntry('c');
    if (d_ <= 0) throw NonPositiveEntry('d');
}

Table2x2 from_counts(Rational a, Rational b, Rational c, Rational d) {
    return Table2x2(std::move(a), std::move(b), std::move(c), std::move(d));
}

Table2x2 from_counts(long a, long b, long c, long d) {
    return Table2x2(Rational(a), Rational(b), Rational(c), Rational(d));
}

Table2x2 aggregate(const Table2x2& t1, const Table2x2& t2) {
    return Table2x2(t1.a() + t2.a(), t1.b() + t2.b(), t1.c() + t2.c(), t1.d() + t2.d());
}

Table2x2 transpose(const Table2x2& t) { return Table2x2(t.a(), t.c(), t.b(), t.d()); }

Table2x2 swap_rows(const Table2x2& t) { return Table2x2(t.c(), t.d(), t.a(), t.b()); }

Table2x2 swap_columns(const Table2x2& t) { return Table2x2(t.b(), t.a(), t.d(), t.c()); }

Table2x2 scale(const Table2x2& t, const Rational& delta) {
    if (delta <= 0) throw NonPositiveScale();
    return Table2x2(t.a() * delta, t.b() * delta, t.c() * delta, t.d() * delta);
}

Quantities quantities(const TablePair& p) {
    Quantities q;
    q.alpha1 = p.t1.row1_total();
    q.alpha2 = p.t2.row1_total();
    q.gamma1 = p.t1.row2_total();
    q.gamma2 = p.t2.row2_total();
    q.A1 = p.t1.a() / q.alpha1;
    q.A2 = p.t2.a() / q.alpha2;
    q.C1 = p.t1.c() / q.gamma1;
    q.C2 = p.t2.c() / q.gamma2;
    q.mu = (p.t1.a() + p.t2.a()) / (q.alpha1 + q.alpha2);
    q.nu = (p.t1.c() + p.t2.c()) / (q.gamma1 + q.gamma2);
    return q;
}

}  // namespace simpson
