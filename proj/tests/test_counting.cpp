#include <functional>

#include "brute.hpp"
#include "doctest.h"
#include "sumsets/counting.hpp"

using namespace sumsets;

namespace {
long long ll(i128 v) { return (long long)v; }

long long partitions_by_enumeration(int n, int max_part) {
    if (n == 0) return 1;
    long long c = 0;
    for (int p = std::min(n, max_part); p >= 1; --p) c += partitions_by_enumeration(n - p, p);
    return c;
}

// direct count of coefficient vectors
long long layer_enum(Lambda lam, int m, TermCount t) {
    int lo = 0, hi = 0;
    switch (t.kind) {
        case TermCount::Kind::Exact: lo = hi = t.value; break;
        case TermCount::Kind::UpTo: lo = 0, hi = t.value; break;
        case TermCount::Kind::Range1: lo = 1, hi = t.value; break;
        case TermCount::Kind::AllN0: lo = 0, hi = m; break;
        case TermCount::Kind::AllN: lo = 1, hi = m; break;
    }
    bool restricted = lam == Lambda::Restricted || lam == Lambda::RestrictedSigned;
    bool sign = lam == Lambda::Z || lam == Lambda::RestrictedSigned;
    int cmax = restricted ? 1 : hi;
    long long count = 0;
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == m) {
            count += used >= lo;
            return;
        }
        for (int c = sign ? -cmax : 0; c <= cmax; ++c)
            if (used + std::abs(c) <= hi) rec(i + 1, used + std::abs(c));
    };
    rec(0, 0);
    return count;
}
}  // namespace

TEST_CASE("a and c published values") {
    CHECK(ll(a_fn(2, 3)) == 25);
    CHECK(ll(c_fn(2, 2)) == 8);
    for (int k = 0; k <= 8; ++k) CHECK(ll(c_fn(1, k)) == 2 * k);
    for (int j = 0; j <= 8; ++j) CHECK(ll(a_fn(j, 0)) == 1);
    for (int j = 1; j <= 8; ++j) CHECK(ll(c_fn(j, 0)) == 0);
}

TEST_CASE("a and c agree with their recursions") {
    CHECK(ll(a_fn(7, 7)) == ll(a_recursive(7, 7)));
    for (int j = 0; j <= 12; ++j)
        for (int k = 0; k <= 12; ++k) {
            CHECK(ll(a_fn(j, k)) == ll(a_recursive(j, k)));
            if (j >= 1 && k >= 1) {
                CHECK(ll(c_fn(j, k)) == ll(a_fn(j, k - 1) + a_fn(j - 1, k - 1)));
                CHECK(ll(c_fn(j, k)) == ll(a_fn(j, k) - a_fn(j - 1, k)));
            }
        }
}

TEST_CASE("partitions") {
    CHECK(ll(partition_p(0)) == 1);
    CHECK(ll(partition_p(5)) == 7);
    for (int a = 0; a <= 30; ++a) CHECK(ll(partition_p(a)) == partitions_by_enumeration(a, a));
}

TEST_CASE("layer sizes") {
    CHECK(ll(layer_size({Lambda::Z, 2, TermCount::exact(3)})) == 12);
    CHECK(ll(layer_size({Lambda::Z, 3, TermCount::exact(2)})) == 18);
    CHECK(ll(layer_size({Lambda::N0, 4, TermCount::exact(0)})) == 1);
    CHECK_THROWS_AS(layer_size({Lambda::N0, 2, TermCount::all_n0()}), InfiniteLayer);
    CHECK_THROWS_AS(layer_size({Lambda::Z, 2, TermCount::all_n()}), InfiniteLayer);
}

TEST_CASE("layer sizes agree with enumeration") {
    for (Lambda lam : {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned})
        for (int m = 0; m <= 5; ++m)
            for (int h = 0; h <= 5; ++h) {
                for (TermCount t : {TermCount::exact(h), TermCount::upto(h), TermCount::range1(h)}) {
                    if (t.kind == TermCount::Kind::Range1 && h == 0) continue;
                    CAPTURE(m);
                    CAPTURE(h);
                    CHECK(ll(layer_size({lam, m, t})) == layer_enum(lam, m, t));
                }
            }
    for (Lambda lam : {Lambda::Restricted, Lambda::RestrictedSigned})
        for (int m = 0; m <= 5; ++m) {
            CHECK(ll(layer_size({lam, m, TermCount::all_n0()})) == layer_enum(lam, m, TermCount::all_n0()));
            CHECK(ll(layer_size({lam, m, TermCount::all_n()})) == layer_enum(lam, m, TermCount::all_n()));
        }
}

TEST_CASE("half-space layer") {
    CHECK(ll(layer_halfspace_size(2, 3)) == 5);
    for (int m = 1; m <= 6; ++m) CHECK(ll(layer_halfspace_size(m, 1)) == 1);
    // points of Z^m(h) whose first nonzero coordinate is positive and sits at index 0
    for (int m = 1; m <= 4; ++m)
        for (int h = 1; h <= 4; ++h) {
            long long cnt = 0;
            std::vector<int> c(m);
            std::function<void(int, int)> rec = [&](int i, int used) {
                if (i == m) {
                    cnt += used == h && c[0] > 0;
                    return;
                }
                for (int x = -h; x <= h; ++x)
                    if (used + std::abs(x) <= h) {
                        c[i] = x;
                        rec(i + 1, used + std::abs(x));
                    }
            };
            rec(0, 0);
            CHECK(ll(layer_halfspace_size(m, h)) == cnt);
        }
}

TEST_CASE("binomial row sums") {
    for (int m = 0; m <= 20; ++m) {
        i128 s = 0, s2 = 0;
        for (int h = 0; h <= m; ++h) {
            s += binom(m, h);
            s2 += binom(m, h) * ipow(2, h);
            CHECK(ll(binom(m, h)) == brute::binom(m, h));
        }
        CHECK(s == ipow(2, m));
        CHECK(s2 == ipow(3, m));
    }
}

TEST_CASE("checked arithmetic refuses overflow") {
    i128 big = ipow(2, 120);
    CHECK_THROWS_AS(checked_mul(big, big), OverflowError);
    CHECK_THROWS_AS(binom(400, 200), OverflowError);
}
