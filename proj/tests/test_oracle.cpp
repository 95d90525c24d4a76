#include <set>

#include "doctest.h"
#include "sumsets/oracle.hpp"
#include "sumsets/side.hpp"

using namespace sumsets;

namespace {
QuantityQuery query(Family f, const Group& g, Lambda lam, TermCount t, int m = 0) {
    QuantityQuery q;
    q.family = f;
    q.group = g;
    q.lambda = lam;
    q.terms = t;
    q.m = m;
    return q;
}
bool cites(const std::vector<KnownResult>& rs, const std::string& id) {
    for (auto& r : rs)
        if (r.citation == id) return true;
    return false;
}
SearchOptions quick() {
    SearchOptions o;
    o.budget = 50000000;
    return o;
}
}  // namespace

TEST_CASE("known values") {
    auto r = known_value(query(Family::Rho, Group::cyclic(11), Lambda::N0, TermCount::exact(2), 4));
    REQUIRE(r);
    CHECK(*r->value == 7);
    auto c = known_value(query(Family::Chi, Group::cyclic(15), Lambda::N0, TermCount::exact(3)));
    REQUIRE(c);
    CHECK(*c->value == 7);
    auto t = known_value(query(Family::Tau, Group::cyclic(16), Lambda::RestrictedSigned, TermCount::all_n()));
    REQUIRE(t);
    CHECK(*t->value == 4);
    auto t25 = known_value(query(Family::Tau, Group::cyclic(25), Lambda::Z, TermCount::range1(3)));
    REQUIRE(t25);
    CHECK(*t25->value == 5);
}

TEST_CASE("formulas stay inside their hypotheses") {
    // prime-only formula on composite orders
    for (int n : {10, 12, 15, 21, 25}) {
        auto rs = known_values(query(Family::Rho, Group::cyclic(n), Lambda::Restricted, TermCount::exact(2), 6));
        CHECK_FALSE(cites(rs, "thm:rhohat-prime"));
    }
    auto rs = known_values(query(Family::Rho, Group::cyclic(13), Lambda::Restricted, TermCount::exact(2), 6));
    CHECK(cites(rs, "thm:rhohat-prime"));
    // non-cyclic group and a cyclic-only statement
    auto q = query(Family::Tau, Group::parse("Z2xZ8"), Lambda::Z, TermCount::range1(3));
    CHECK_FALSE(cites(known_values(q), "thm:3free"));
    // an order beyond any entry
    CHECK(known_values(query(Family::Nu, Group::cyclic(97), Lambda::Z, TermCount::exact(5), 9)).empty());
}

TEST_CASE("registry entries agree with each other") {
    for (int n = 1; n <= 30; ++n)
        for (const Group& g : Group::all_of_order(n))
            for (Lambda lam : {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned})
                for (int h = 1; h <= 4; ++h) {
                    for (Family f : {Family::Phi, Family::Sigma, Family::Chi, Family::Tau}) {
                        CHECK_NOTHROW(known_values(query(f, g, lam, TermCount::exact(h))));
                        CHECK_NOTHROW(known_values(query(f, g, lam, TermCount::upto(h))));
                        CHECK_NOTHROW(known_values(query(f, g, lam, TermCount::range1(h))));
                    }
                    for (int m = 1; m <= n; ++m)
                        CHECK_NOTHROW(known_values(query(Family::Rho, g, lam, TermCount::exact(h), m)));
                }
}

TEST_CASE("registry shape") {
    std::set<std::string> ids;
    for (const Theorem& t : theorem_registry()) {
        CHECK(ids.insert(t.id).second);
        CHECK_FALSE(t.statement.empty());
        if (t.desk_checkable) CHECK(bool(t.grid));
    }
    CHECK_THROWS_AS(find_theorem("no-such-id"), Error);
    CHECK_FALSE(find_theorem("thm:tauhat-zp2-large-p").desk_checkable);
}

TEST_CASE("sound on small grids") {
    for (auto id : {"thm:rho=u", "cor:rho-vs-p", "thm:h-crit-numb", "thm:3free", "thm:mu21", "thm:M21",
                    "prop:tau-hat-h=1,2", "thm:chihat-even", "thm:zforp", "prop:phi-01"}) {
        Report r = verify_theorem(id, 12, quick());
        CAPTURE(id);
        CHECK(r.count(PointStatus::Refuted) == 0);
        CHECK(r.count(PointStatus::Confirmed) > 0);
    }
}

TEST_CASE("conjectures on small grids") {
    Grid g;
    g.n = parse_range("1..14");
    for (auto id : {"conj:zconj", "conj:zfconj", "conj:rhohatforh=2", "conj:mu-[0,2]", "conj:chi-pm-cyclic"}) {
        Report r = conjecture_check(id, g, quick());
        CAPTURE(id);
        CHECK(r.count(PointStatus::Refuted) == 0);
        CHECK(r.count(PointStatus::Confirmed) > 0);
    }
    Grid np;
    np.restricted = true;
    np.m = parse_range("4..6");
    Report r = conjecture_check("conj:no-perfect-bases", np, quick());
    CHECK(r.count(PointStatus::Refuted) == 0);
}

TEST_CASE("out-of-scope conjecture points are skipped") {
    Grid g;
    g.n = {6};
    g.m = {4};
    g.s = {1};
    Report r = conjecture_check("conj:rhopm-upto", g, quick());
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].status == PointStatus::Skipped);
}

TEST_CASE("confirmed points carry both values") {
    Report r = verify_theorem("thm:rho=u", 6, quick());
    for (auto& p : r.points) CHECK(p.predicted == p.computed);
}

TEST_CASE("helpers") {
    CHECK(parse_range("1..5") == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(parse_range("2,4,6") == std::vector<int>{2, 4, 6});
    CHECK(parse_range("3") == std::vector<int>{3});
    CHECK_THROWS_AS(parse_range("5..1x"), Error);
    CHECK(order2_count(Group::parse("Z2^3")) == 7);
    CHECK(order2_count(Group::cyclic(9)) == 0);
    CHECK(is_elementary_2(Group::parse("Z2^2")));
    CHECK_FALSE(is_elementary_2(Group::cyclic(4)));
    for (int k = 1; k <= 4; ++k) CHECK(dissociated_family(k).size() > 0);
}
