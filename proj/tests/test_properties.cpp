// Randomized identities. Each case draws a group, a subset and parameters
// from a fixed-seed generator so failures replay exactly.
#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "sumsets/search.hpp"

using namespace sumsets;

namespace {

constexpr int kCases = 1000;

struct Gen {
    std::mt19937_64 rng;
    std::vector<Group> groups;

    Gen(std::uint64_t seed, int max_n) : rng(seed) {
        for (int n = 1; n <= max_n; ++n)
            for (Group g : Group::all_of_order(n)) groups.push_back(g);
    }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    const Group& group() { return groups[uniform(0, int(groups.size()) - 1)]; }
    Subset subset(const Group& g, int max_size) {
        int m = uniform(0, std::min(max_size, g.order()));
        std::vector<int> all(g.order());
        for (int i = 0; i < g.order(); ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(m);
        return Subset::of(g, all);
    }
};

Subset S(const Subset& a, Lambda lam, TermCount t) { return sumset(a, {lam, t}); }

}  // namespace

TEST_CASE("property: shift invariance") {
    Gen gen(0x5eed0001, 30);
    for (int i = 0; i < kCases; ++i) {
        const Group& g = gen.group();
        Subset a = gen.subset(g, 8);
        int x = gen.uniform(0, g.order() - 1), h = gen.uniform(0, 5);
        Subset b = translate(a, g.neg(x));
        CAPTURE(g.name());
        CAPTURE(a.str());
        CAPTURE(x);
        CAPTURE(h);
        for (Lambda lam : {Lambda::N0, Lambda::Restricted}) {
            Subset sa = S(a, lam, TermCount::exact(h)), sb = S(b, lam, TermCount::exact(h));
            REQUIRE(sa.size() == sb.size());
            // the shift is exactly h(-x)
            REQUIRE(translate(sa, g.scale(-(long long)h, x)) == sb);
        }
    }
}

TEST_CASE("property: [0,s]A = s(A u {0})") {
    Gen gen(0x5eed0002, 30);
    for (int i = 0; i < kCases; ++i) {
        const Group& g = gen.group();
        Subset a = gen.subset(g, 7);
        int s = gen.uniform(0, 5);
        Subset a0 = a;
        a0.insert(0);
        CAPTURE(g.name());
        CAPTURE(a.str());
        CAPTURE(s);
        REQUIRE(S(a, Lambda::N0, TermCount::upto(s)) == S(a0, Lambda::N0, TermCount::exact(s)));
        REQUIRE(S(a, Lambda::Z, TermCount::upto(s)) == S(a0, Lambda::Z, TermCount::exact(s)));
    }
}

TEST_CASE("property: h(A u -A) is the union of signed layers") {
    Gen gen(0x5eed0003, 30);
    for (int i = 0; i < kCases; ++i) {
        const Group& g = gen.group();
        Subset a = gen.subset(g, 6);
        int h = gen.uniform(0, 5);
        Subset lhs = S(a | negated(a), Lambda::N0, TermCount::exact(h));
        Subset rhs(g);
        for (int j = h; j >= 0; j -= 2) rhs |= S(a, Lambda::Z, TermCount::exact(j));
        if (a.empty()) rhs = S(a, Lambda::Z, TermCount::exact(h));
        CAPTURE(g.name());
        CAPTURE(a.str());
        CAPTURE(h);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("property: symmetric sets have equal signed and plain sumsets") {
    Gen gen(0x5eed0004, 30);
    for (int i = 0; i < kCases; ++i) {
        const Group& g = gen.group();
        Subset half = gen.subset(g, 4);
        Subset a = half | negated(half);
        int h = gen.uniform(0, 5);
        CAPTURE(g.name());
        CAPTURE(a.str());
        CAPTURE(h);
        REQUIRE(S(a, Lambda::Z, TermCount::exact(h)) == S(a, Lambda::N0, TermCount::exact(h)));
    }
}

TEST_CASE("property: restricted palindromy") {
    Gen gen(0x5eed0005, 30);
    for (int i = 0; i < kCases; ++i) {
        const Group& g = gen.group();
        Subset a = gen.subset(g, 9);
        const int m = a.size();
        int h = gen.uniform(0, m);
        Subset lo = S(a, Lambda::Restricted, TermCount::exact(h));
        Subset hi = S(a, Lambda::Restricted, TermCount::exact(m - h));
        int total = 0;
        for (int x : a.indices()) total = g.add(total, x);
        CAPTURE(g.name());
        CAPTURE(a.str());
        CAPTURE(h);
        REQUIRE(lo.size() == hi.size());
        REQUIRE(translate(negated(lo), total) == hi);
    }
}

TEST_CASE("property: subset sums and norms") {
    Gen gen(0x5eed0006, 40);
    for (int i = 0; i < kCases; ++i) {
        int n = gen.uniform(2, 40);
        Group g = Group::cyclic(n);
        Subset a = gen.subset(g, 8);
        bool dissociated = !S(a, Lambda::RestrictedSigned, TermCount::all_n()).contains(0);
        CAPTURE(a.str());
        REQUIRE((sigma(a).size() == (1 << a.size())) == dissociated);
        if (norm(a) <= n - 2) REQUIRE(sigma(a).size() < n);
    }
}

TEST_CASE("property: witnesses re-verify") {
    Gen gen(0x5eed0007, 10);
    const Family fams[] = {Family::Nu, Family::Phi, Family::Sigma, Family::Rho, Family::Chi, Family::Tau, Family::Mu};
    const Lambda lams[] = {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned};
    SearchOptions opt;
    opt.threads = 1;
    int checked = 0;
    for (int i = 0; i < kCases; ++i) {
        QuantityQuery q;
        q.group = gen.group();
        q.family = fams[gen.uniform(0, 6)];
        q.lambda = lams[gen.uniform(0, 3)];
        int h = gen.uniform(1, 3);
        switch (gen.uniform(0, 2)) {
            case 0: q.terms = TermCount::exact(h); break;
            case 1: q.terms = TermCount::upto(h); break;
            default: q.terms = TermCount::range1(h); break;
        }
        if (q.family == Family::Tau && q.terms.kind == TermCount::Kind::UpTo) q.terms = TermCount::range1(h);
        if (q.family == Family::Nu || q.family == Family::Rho) q.m = gen.uniform(1, q.group.order());
        if (q.family == Family::Mu) {
            q.lambda = gen.uniform(0, 1) ? Lambda::N0 : Lambda::Restricted;
            q.k = gen.uniform(2, 3);
            q.l = gen.uniform(1, q.k - 1);
        }
        SearchResult r = evaluate(q, opt);
        CAPTURE(q.group.name());
        CAPTURE(family_str(q.family));
        CAPTURE(lambda_str(q.lambda));
        CAPTURE(terms_str(q.terms));
        if (!r.witness) continue;
        ++checked;
        REQUIRE(verify_witness(q, *r.witness, r.value));
        // and with the coordinate enumerator for the size-based families
        if (q.family == Family::Nu || q.family == Family::Rho) {
            brute::G b{q.group.factors()};
            int lo = q.terms.kind == TermCount::Kind::Exact ? h : q.terms.kind == TermCount::Kind::UpTo ? 0 : 1;
            brute::L bl = q.lambda == Lambda::N0  ? brute::L::N0
                          : q.lambda == Lambda::Z ? brute::L::Z
                          : q.lambda == Lambda::Restricted ? brute::L::R
                                                           : brute::L::RS;
            REQUIRE((long long)brute::sums(b, r.witness->indices(), bl, lo, h).size() == *r.value);
        }
    }
    CHECK(checked >= kCases / 2);
}
