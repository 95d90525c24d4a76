#include <map>

#include "brute.hpp"
#include "doctest.h"
#include "sumsets/search.hpp"

using namespace sumsets;

namespace {

brute::L bl(Lambda l) {
    switch (l) {
        case Lambda::N0: return brute::L::N0;
        case Lambda::Z: return brute::L::Z;
        case Lambda::Restricted: return brute::L::R;
        default: return brute::L::RS;
    }
}

std::pair<int, int> bounds(TermCount t) {
    switch (t.kind) {
        case TermCount::Kind::Exact: return {t.value, t.value};
        case TermCount::Kind::UpTo: return {0, t.value};
        default: return {1, t.value};
    }
}

std::vector<int> members(unsigned mask, int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
    return s;
}

// S(A) for every subset A of G
struct Table {
    std::vector<std::set<int>> s;
};
Table all_sumsets(const brute::G& g, Lambda lam, int lo, int hi) {
    int n = g.n();
    Table t;
    t.s.resize(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) t.s[mask] = brute::sums(g, members(mask, n), bl(lam), lo, hi);
    return t;
}

std::optional<long long> brute_family(Family f, const brute::G& g, Lambda lam, TermCount terms, int m) {
    const int n = g.n();
    auto [lo, hi] = bounds(terms);
    Table t = all_sumsets(g, lam, lo, hi);
    std::optional<long long> best;
    auto pc = [](unsigned x) { return __builtin_popcount(x); };
    switch (f) {
        case Family::Nu:
        case Family::Rho:
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (pc(mask) != m) continue;
                long long v = (long long)t.s[mask].size();
                if (!best || (f == Family::Nu ? v > *best : v < *best)) best = v;
            }
            return best;
        case Family::Phi:
            for (unsigned mask = 1; mask < (1u << n); ++mask)
                if ((int)t.s[mask].size() == n && (!best || pc(mask) < *best)) best = pc(mask);
            return best;
        case Family::Sigma:
            for (unsigned mask = 0; mask < (1u << n); ++mask)
                if ((long long)t.s[mask].size() == brute::layer(bl(lam), pc(mask), lo, hi) &&
                    (!best || pc(mask) > *best))
                    best = pc(mask);
            return best;
        case Family::Chi:
            for (int k = 1; k <= n; ++k) {
                bool all = true;
                for (unsigned mask = 0; mask < (1u << n) && all; ++mask)
                    if (pc(mask) == k && (int)t.s[mask].size() != n) all = false;
                if (all) return k;
            }
            return std::nullopt;
        case Family::Tau:
            for (unsigned mask = 0; mask < (1u << n); ++mask)
                if (!t.s[mask].count(0) && (!best || pc(mask) > *best)) best = pc(mask);
            return best;
        default: return std::nullopt;
    }
}

std::optional<long long> brute_mu(const brute::G& g, Lambda lam, int k, int l) {
    const int n = g.n();
    std::optional<long long> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto s = members(mask, n);
        auto a = brute::sums(g, s, bl(lam), k, k), b = brute::sums(g, s, bl(lam), l, l);
        bool meet = false;
        for (int x : a) meet = meet || b.count(x);
        if (!meet && (!best || __builtin_popcount(mask) > *best)) best = __builtin_popcount(mask);
    }
    return best;
}

QuantityQuery query(Family f, const Group& g, Lambda lam, TermCount t, int m = 0) {
    QuantityQuery q;
    q.family = f;
    q.group = g;
    q.lambda = lam;
    q.terms = t;
    q.m = m;
    return q;
}

const char* kGroups[] = {"Z5", "Z6", "Z7", "Z8", "Z2^2", "Z2xZ4", "Z2^3"};

}  // namespace

TEST_CASE("published values") {
    SearchOptions o;
    CHECK(*evaluate(query(Family::Nu, Group::cyclic(20), Lambda::N0, TermCount::exact(2), 5), o).value == 14);
    CHECK(*evaluate(query(Family::Nu, Group::cyclic(10), Lambda::Restricted, TermCount::exact(2), 5), o).value == 9);
    CHECK(*evaluate(query(Family::Rho, Group::cyclic(15), Lambda::N0, TermCount::exact(2), 6), o).value == 9);
    CHECK(*evaluate(query(Family::Rho, Group::cyclic(10), Lambda::Restricted, TermCount::exact(3), 6), o).value == 9);
    CHECK(*evaluate(query(Family::Phi, Group::cyclic(10), Lambda::N0, TermCount::exact(2)), o).value == 5);
    CHECK(*evaluate(query(Family::Phi, Group::cyclic(10), Lambda::N0, TermCount::exact(3)), o).value == 4);
    CHECK(*evaluate(query(Family::Phi, Group::cyclic(10), Lambda::Z, TermCount::exact(1)), o).value == 6);
    CHECK(*evaluate(query(Family::Sigma, Group::cyclic(7), Lambda::N0, TermCount::exact(2)), o).value == 3);
    CHECK(*evaluate(query(Family::Sigma, Group::cyclic(6), Lambda::Restricted, TermCount::exact(2)), o).value == 4);
    CHECK(*evaluate(query(Family::Chi, Group::cyclic(15), Lambda::Restricted, TermCount::exact(4)), o).value == 8);
    CHECK(*evaluate(query(Family::Tau, Group::cyclic(25), Lambda::Z, TermCount::range1(3)), o).value == 5);
    CHECK(*evaluate(query(Family::Tau, Group::parse("Z3^2"), Lambda::Restricted, TermCount::exact(3)), o).value == 4);
    QuantityQuery mu = query(Family::Mu, Group::cyclic(11), Lambda::N0, TermCount::exact(2));
    mu.k = 2, mu.l = 1;
    CHECK(*evaluate(mu, o).value == 4);
    mu.group = Group::cyclic(10), mu.lambda = Lambda::Restricted, mu.k = 3, mu.l = 1;
    CHECK(*evaluate(mu, o).value == 4);
    QuantityQuery mu3 = query(Family::Mu, Group::cyclic(11), Lambda::N0, TermCount::upto(3));
    CHECK(*evaluate(mu3, o).value == 1);
    QuantityQuery chi = query(Family::Chi, Group::cyclic(11), Lambda::Restricted, TermCount::all_n());
    chi.exclude_zero = true;
    CHECK(*evaluate(chi, o).value == isqrt(4 * 9));
}

TEST_CASE("trivial values") {
    for (auto name : {"Z6", "Z2xZ4", "Z9"}) {
        Group g = Group::parse(name);
        int n = g.order();
        for (int m = 1; m <= n; ++m) {
            CHECK(*evaluate(query(Family::Nu, g, Lambda::N0, TermCount::exact(1), m)).value == m);
            CHECK(*evaluate(query(Family::Rho, g, Lambda::N0, TermCount::exact(0), m)).value == 1);
        }
        CHECK(*evaluate(query(Family::Phi, g, Lambda::N0, TermCount::upto(1))).value == n - 1);
        CHECK(*evaluate(query(Family::Sigma, g, Lambda::N0, TermCount::exact(1))).value == n);
        CHECK(*evaluate(query(Family::Tau, g, Lambda::N0, TermCount::range1(1))).value == n - 1);
    }
}

TEST_CASE("every family matches subset enumeration on small groups") {
    const std::vector<TermCount> terms = {TermCount::exact(2), TermCount::exact(3), TermCount::upto(2),
                                          TermCount::range1(2)};
    for (auto name : kGroups) {
        Group g = Group::parse(name);
        brute::G b{g.factors()};
        for (Lambda lam : {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned})
            for (TermCount t : terms) {
                for (Family f : {Family::Phi, Family::Sigma, Family::Chi, Family::Tau}) {
                    if (f == Family::Tau && t.kind == TermCount::Kind::UpTo) {
                        CHECK_THROWS_AS(evaluate(query(f, g, lam, t)), Error);
                        continue;
                    }
                    CAPTURE(name);
                    CAPTURE(family_str(f));
                    CAPTURE(lambda_str(lam));
                    CAPTURE(terms_str(t));
                    auto r = evaluate(query(f, g, lam, t));
                    CHECK(r.value == brute_family(f, b, lam, t, 0));
                    if (r.witness) CHECK(verify_witness(query(f, g, lam, t), *r.witness, r.value));
                }
                for (int m = 1; m <= g.order(); m += 2)
                    for (Family f : {Family::Nu, Family::Rho}) {
                        CAPTURE(name);
                        CAPTURE(m);
                        auto r = evaluate(query(f, g, lam, t, m));
                        CHECK(r.value == brute_family(f, b, lam, t, m));
                        REQUIRE(r.witness);
                        CHECK(verify_witness(query(f, g, lam, t, m), *r.witness, r.value));
                    }
            }
        for (Lambda lam : {Lambda::N0, Lambda::Restricted})
            for (auto [k, l] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
                QuantityQuery q = query(Family::Mu, g, lam, TermCount::exact(k));
                q.k = k, q.l = l;
                CAPTURE(name);
                CAPTURE(k);
                CAPTURE(l);
                CHECK(evaluate(q).value == brute_mu(b, lam, k, l));
            }
    }
}

TEST_CASE("extremal sets are complete and in colex order") {
    Group g = Group::cyclic(11);
    QuantityQuery q = query(Family::Mu, g, Lambda::N0, TermCount::exact(2));
    q.k = 2, q.l = 1;
    auto all = enumerate_extremal(q);
    std::set<std::vector<int>> got;
    for (auto& s : all) got.insert(s.indices());
    CHECK(got.size() == all.size());
    CHECK(got.count({4, 5, 6, 7}));
    // independent count of sum-free 4-sets of Z11
    brute::G b{{11}};
    int cnt = 0;
    brute::for_each_subset(11, 4, [&](const std::vector<int>& s) {
        auto a = brute::sums(b, s, brute::L::N0, 2, 2);
        bool ok = true;
        for (int x : s) ok = ok && !a.count(x);
        if (ok) {
            ++cnt;
            CHECK(got.count(s));
        }
    });
    CHECK(int(all.size()) == cnt);
    brute::for_each_subset(11, 5, [&](const std::vector<int>& s) {
        auto a = brute::sums(b, s, brute::L::N0, 2, 2);
        bool ok = true;
        for (int x : s) ok = ok && !a.count(x);
        CHECK_FALSE(ok);
    });
    // colex: compare by largest differing element
    auto colex_less = [](std::vector<int> x, std::vector<int> y) {
        std::reverse(x.begin(), x.end());
        std::reverse(y.begin(), y.end());
        return x < y;
    };
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(colex_less(all[i - 1].indices(), all[i].indices()));
}

TEST_CASE("results do not depend on the thread count") {
    for (auto [f, name, m] : {std::tuple{Family::Rho, "Z18", 7}, {Family::Nu, "Z16", 5}, {Family::Sigma, "Z15", 0}}) {
        QuantityQuery q = query(f, Group::parse(name), Lambda::N0, TermCount::exact(2), m);
        SearchOptions one, many;
        one.threads = 1;
        many.threads = 4;
        auto a = evaluate(q, one), b = evaluate(q, many);
        CHECK(a.value == b.value);
        REQUIRE(a.witness);
        REQUIRE(b.witness);
        CHECK(a.witness->indices() == b.witness->indices());
        CHECK(a.nodes == b.nodes);
    }
}

TEST_CASE("symmetry reduction does not change values") {
    for (int n = 5; n <= 14; ++n)
        for (Lambda lam : {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned}) {
            SearchOptions off;
            off.reduce_symmetry = false;
            QuantityQuery q = query(Family::Rho, Group::cyclic(n), lam, TermCount::exact(2), 4);
            CHECK(evaluate(q).value == evaluate(q, off).value);
            QuantityQuery p = query(Family::Phi, Group::cyclic(n), lam, TermCount::upto(2));
            CHECK(evaluate(p).value == evaluate(p, off).value);
        }
}

TEST_CASE("budget is enforced") {
    SearchOptions o;
    o.budget = 1000;
    CHECK_THROWS_AS(evaluate(query(Family::Phi, Group::cyclic(40), Lambda::N0, TermCount::upto(2)), o), BudgetExceeded);
}

TEST_CASE("witness verification rejects wrong claims") {
    Group g = Group::cyclic(11);
    QuantityQuery q = query(Family::Rho, g, Lambda::N0, TermCount::exact(2), 4);
    CHECK(verify_witness(q, Subset::of(g, {0, 1, 2, 3}), 7));
    CHECK_FALSE(verify_witness(q, Subset::of(g, {0, 1, 2, 3}), 6));
    CHECK_FALSE(verify_witness(q, Subset::of(g, {0, 1, 2}), 5));
    CHECK_FALSE(verify_witness(q, Subset::of(g, {0, 1, 2, 5}), 7));
}
