#include "simpson/classify.hpp"
#include "simpson/generate.hpp"

#include <doctest.h>

using namespace simpson;

namespace {

TablePair blyth() { return literature_example("blyth1971").pair; }
TablePair simpson1951() { return literature_example("simpson1951").pair; }
TablePair uniform() { return {from_counts(1, 1, 1, 1), from_counts(1, 1, 1, 1)}; }

}  // namespace

TEST_CASE("relation triples") {
    CHECK(relation_triple(blyth()) == RelationTriple{Relation::Gt, Relation::Gt, Relation::Lt});
    CHECK(relation_triple(simpson1951()) ==
          RelationTriple{Relation::Lt, Relation::Lt, Relation::Eq});
    CHECK(relation_triple(uniform()) == RelationTriple{Relation::Eq, Relation::Eq, Relation::Eq});
}

TEST_CASE("case numbering is a bijection with relation triples") {
    for (CaseId c = 1; c <= 27; ++c) {
        CHECK(case_from_triple(triple_from_case(c)) == c);
    }
    CHECK_THROWS_AS(triple_from_case(0), std::out_of_range);
    CHECK_THROWS_AS(triple_from_case(28), std::out_of_range);
}

TEST_CASE("case_of") {
    CHECK(case_of({from_counts(5, 3, 10, 10), from_counts(1, 19, 1, 20)}) == 3);
    CHECK(case_of(literature_example("lindley_novick1981").pair) == 25);
    CHECK(case_of(uniform()) == 14);
}

TEST_CASE("case to class map") {
    CHECK(class_of(3) == ClassLabel::Paradox);
    CHECK(class_of(14) == ClassLabel::Class0);
    CHECK(class_of(20) == ClassLabel::Class5);

    auto expect = [](std::initializer_list<CaseId> cases, ClassLabel label) {
        for (CaseId c : cases) CHECK(class_of(c) == label);
    };
    expect({1, 27}, ClassLabel::Aligned);
    expect({2, 26}, ClassLabel::WeakParadox);
    expect({3, 25}, ClassLabel::Paradox);
    expect({7, 9, 19, 21}, ClassLabel::Class1);
    expect({4, 10, 18, 24}, ClassLabel::Class2);
    expect({5, 11, 17, 23}, ClassLabel::Class3);
    expect({6, 12, 16, 22}, ClassLabel::Class4);
    expect({8, 20}, ClassLabel::Class5);
    expect({13, 15}, ClassLabel::Class6);
}

TEST_CASE("sp verdicts") {
    CHECK(sp(blyth()) == SpVerdict::SP1);
    CHECK(sp(simpson1951()) == SpVerdict::SP2);  // (Lt,Lt,Eq) satisfies not-(mu<nu)
    CHECK(sp(uniform()) == SpVerdict::None);
}

TEST_CASE("sp holds exactly on cases 2, 3, 25, 26") {
    for (CaseId c = 1; c <= 27; ++c) {
        SpVerdict v = sp(representative(c));
        if (c == 2 || c == 3) {
            CHECK(v == SpVerdict::SP1);
        } else if (c == 25 || c == 26) {
            CHECK(v == SpVerdict::SP2);
        } else {
            CHECK(v == SpVerdict::None);
        }
    }
}

TEST_CASE("definition verdicts on named pairs") {
    SUBCASE("case 15: no preference in the strata, a preference in the whole") {
        DefinitionVerdicts v = definition_verdicts(representative(15));
        CHECK(v.b72);
        CHECK(v.bngbb11);
        CHECK_FALSE(v.sp);
    }
    SUBCASE("uniform pair: only the equality-tolerant definition fires") {
        DefinitionVerdicts v = definition_verdicts(uniform());
        CHECK(v.m91);
        CHECK_FALSE(v.sp);
        CHECK_FALSE(v.b72);
        CHECK_FALSE(v.bngbb11);
    }
    SUBCASE("reversal pair satisfies every definition") {
        DefinitionVerdicts v = definition_verdicts(blyth());
        CHECK(v.b72);
        CHECK(v.exp_b72);
        CHECK(v.m91);
        CHECK(v.bngbb11);
        CHECK(v.exp_bngbb11);
        CHECK(v.sp);
    }
    SUBCASE("expanded forms are the disjunctions") {
        for (CaseId c = 1; c <= 27; ++c) {
            DefinitionVerdicts v = definition_verdicts(representative(c));
            CHECK(v.exp_b72 == (v.b72 || v.b72_prime));
            CHECK(v.exp_bngbb11 == (v.bngbb11 || v.bngbb11_prime));
        }
    }
}

TEST_CASE("coverage sets computed from representatives") {
    CHECK(coverage_set(DefinitionName::B72) == std::set<CaseId>{3, 6, 12, 15});
    CHECK(coverage_set(DefinitionName::BNGBB11) == std::set<CaseId>{2, 3, 5, 6, 11, 12, 15});
    CHECK(coverage_set(DefinitionName::SP) == std::set<CaseId>{2, 3, 25, 26});
    // The quoted range "11 to 17" is inclusive: cases 13 and 14 do satisfy
    // the non-strict M91 form.
    CHECK(coverage_set(DefinitionName::M91) ==
          std::set<CaseId>{2, 3, 5, 6, 11, 12, 13, 14, 15, 16, 17, 22, 23, 25, 26});
}

TEST_CASE("row-swap duality: case i maps to case 28-i and SP1 <-> SP2") {
    for (CaseId c = 1; c <= 27; ++c) {
        TablePair p = representative(c);
        TablePair swapped{swap_rows(p.t1), swap_rows(p.t2)};
        CHECK(case_of(swapped) == 28 - c);
        SpVerdict v = sp(p), w = sp(swapped);
        if (v == SpVerdict::SP1) CHECK(w == SpVerdict::SP2);
        if (v == SpVerdict::SP2) CHECK(w == SpVerdict::SP1);
        if (v == SpVerdict::None) CHECK(w == SpVerdict::None);
    }
}

TEST_CASE("table swap exchanges the two per-table relations and keeps the verdict") {
    // In particular cases 4..6 map to 10..12 and back.
    CHECK(case_of({representative(4).t2, representative(4).t1}) == 10);
    CHECK(case_of({representative(11).t2, representative(11).t1}) == 5);

    for (CaseId c = 1; c <= 27; ++c) {
        TablePair p = representative(c);
        TablePair swapped{p.t2, p.t1};
        RelationTriple t = triple_from_case(c);
        CHECK(case_of(swapped) == case_from_triple({t.on_t2, t.on_t1, t.on_agg}));
        CHECK(sp(swapped) == sp(p));
    }
}

TEST_CASE("transpose and uniform scaling leave the verdict unchanged") {
    const Rational delta(3, 2);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        TablePair p = random_pair(seed, 12);
        TablePair transposed{transpose(p.t1), transpose(p.t2)};
        TablePair scaled{scale(p.t1, delta), scale(p.t2, delta)};
        CHECK(sp(transposed) == sp(p));
        CHECK(sp(scaled) == sp(p));
        CHECK(case_of(scaled) == case_of(p));
    }
}
