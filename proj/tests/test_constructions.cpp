#include "brute.hpp"
#include "doctest.h"
#include "sumsets/constructions.hpp"
#include "sumsets/side.hpp"

using namespace sumsets;

namespace {
int restricted_size(const Subset& a, int h) {
    brute::G b{a.group().factors()};
    return int(brute::sums(b, a.indices(), brute::L::R, h, h).size());
}
}  // namespace

TEST_CASE("A_d sizes") {
    Construction c = build_A_d(15, 6, 3, 2);
    CHECK(c.set.size() == 6);
    CHECK(c.verify());
    CHECK(sumset(c.set, {Lambda::N0, TermCount::exact(2)}).size() == u(15, 6, 2).value);
    for (int n = 1; n <= 24; ++n)
        for (int d : divisors(n))
            for (int m = 1; m <= n; ++m)
                for (int h = 1; h <= 4; ++h) {
                    Construction a = build_A_d(n, m, d, h);
                    CAPTURE(a.set.str());
                    CAPTURE(h);
                    CHECK(sumset(a.set, {Lambda::N0, TermCount::exact(h)}).size() ==
                          std::min<long long>({n, f_d(m, h, d), h * m - h + 1}));
                    if (h < m && m <= 9) {
                        // the restricted formula holds for 2h <= m; past that, by palindromy, at m - h
                        int hh = 2 * h <= m ? h : m - h;
                        CHECK(restricted_size(a.set, h) == f_hat(n, m, hh, d));
                        CHECK(a.verify() == (restricted_size(a.set, h) == f_hat(n, m, h, d)));
                    }
                }
}

TEST_CASE("restricted A_d formula past m/2") {
    Construction a = build_A_d(12, 7, 4, 5);
    CHECK(restricted_size(a.set, 5) == 11);
    CHECK(f_hat(12, 7, 5, 4) == 12);
    CHECK_FALSE(a.verify());
    CHECK(build_A_d(9, 5, 3, 4).set.size() == 5);
    CHECK(restricted_size(build_A_d(9, 5, 3, 4).set, 4) == 5);
}

TEST_CASE("B_d listed sets") {
    Construction c = build("Bd", parse_params("n=12,m=7,d=3,k1=2,k2=2,g=1,j0=1"));
    CHECK(c.set.str() == "{0,1,4,5,6,9,10}");
    CHECK(c.verify());
    CHECK(restricted_size(c.set, 2) == 10);
    CHECK_THROWS_AS(build_B_d(12, 7, 3, 1, 1, 1, 0), Error);
}

TEST_CASE("perfect spanning pairs") {
    Construction c = perfect_spanning_pair(3, PerfectVariant::Consecutive);
    CHECK(c.set.group().order() == 25);
    CHECK(c.set.indices() == std::vector<int>{3, 4});
    brute::G z25{{25}};
    CHECK(brute::sums(z25, {3, 4}, brute::L::Z, 0, 3).size() == 25);
    for (int s = 1; s <= 6; ++s)
        for (auto v : {PerfectVariant::Consecutive, PerfectVariant::OneAnd2sPlus1}) CHECK(perfect_spanning_pair(s, v).verify());
    Construction p4 = perfect_spanning_pair(4, PerfectVariant::OneAnd2sPlus1);
    CHECK(p4.set.group().order() == (long long)a_fn(2, 4));
    for (int m = 1; m <= 8; ++m) {
        Construction iv = perfect_spanning_pair(1, PerfectVariant::Interval, m);
        CHECK(iv.verify());
        brute::G b{{2 * m + 1}};
        CHECK(int(brute::sums(b, iv.set.indices(), brute::L::Z, 0, 1).size()) == 2 * m + 1);
    }
}

TEST_CASE("interval weak sum-free") {
    CHECK(interval_weak_sumfree_formula(12, 2, 1) == 5);
    CHECK(interval_weak_sumfree_scan(12, 2, 1).size == 5);
    for (int n = 3; n <= 30; ++n)
        for (int k = 2; k <= 4 && k <= n; ++k)
            for (int l = 1; l < k; ++l) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(l);
                CHECK(interval_weak_sumfree_formula(n, k, l) == interval_weak_sumfree_scan(n, k, l).size);
            }
}

TEST_CASE("named sets") {
    Construction s = named_set("selfridge-even", {{"n", 20}, {"m", 6}});
    CHECK(s.set.size() == 6);
    CHECK(s.verify());
    // zero-sum-free by subset enumeration
    brute::G z20{{20}};
    CHECK_FALSE(brute::sums(z20, s.set.indices(), brute::L::R, 1, 6).count(0));

    Construction b = named_set("bui", {{"r", 3}});
    CHECK(b.set.size() == 8);
    CHECK(b.verify());
    brute::G z33{{3, 3, 3}};
    CHECK_FALSE(brute::sums(z33, b.set.indices(), brute::L::R, 3, 3).count(0));

    Construction k = named_set("kemnitz", {{"k", 3}, {"r", 2}});
    CHECK(k.set.size() == 4);
    CHECK(k.verify());
    CHECK_FALSE(brute::sums(brute::G{{3, 3}}, k.set.indices(), brute::L::R, 3, 3).count(0));

    CHECK_THROWS_AS(named_set("nope", {}), Error);
    CHECK_THROWS_AS(named_set("selfridge-even", {{"n", 7}}), Error);
}

TEST_CASE("every builder holds over a small grid") {
    for (int n = 2; n <= 40; n += 2) CHECK(named_set("selfridge-even", {{"n", n}}).verify());
    for (int n = 6; n <= 40; ++n) CHECK(named_set("selfridge-minus2", {{"n", n}}).verify());
    for (int n = 3; n <= 40; ++n) CHECK(named_set("erdos-griggs", {{"n", n}}).verify());
    for (int n = 4; n <= 40; ++n)
        if (!is_prime(n)) CHECK(named_set("diderrich", {{"n", n}}).verify());
    for (int r = 1; r <= 5; ++r) CHECK(named_set("bui", {{"r", r}}).verify());
    for (int kk = 2; kk <= 5; ++kk)
        for (int r = 1; r <= 3; ++r) CHECK(named_set("kemnitz", {{"k", kk}, {"r", r}}).verify());
    for (int n = 1; n <= 40; ++n)
        for (int t = 1; t <= 4; ++t) CHECK(named_set("interval-1t", {{"n", n}, {"t", t}}).verify());
    for (int n = 1; n <= 39; n += 2)
        for (int h = 1; h <= n; h += 2) CHECK(named_set("collins", {{"n", n}, {"h", h}}).verify());
    for (int n = 1; n <= 40; ++n) CHECK(named_set("three-independent", {{"n", n}}).verify());
}

TEST_CASE("claims can fail") {
    Group g = Group::cyclic(10);
    Claim c{Claim::Kind::ZeroFree, {Lambda::N0, TermCount::exact(2)}, 0, 0, 0, "x"};
    CHECK_FALSE(check_claim(Subset::of(g, {5}), c));
    CHECK(check_claim(Subset::of(g, {1}), c));
    CHECK_THROWS_AS(parse_params("n=abc"), Error);
    CHECK_THROWS_AS(parse_params("=3"), Error);
}
