#pragma once

#include <map>
#include <string>
#include <vector>

#include "sumsets/sumset.hpp"

namespace sumsets {

// What a construction promises about its set.
struct Claim {
    enum class Kind {
        Size,         // |A| = expected
        SumsetSize,   // |S(A)| = expected
        Spans,        // S(A) = G
        Perfect,      // S(A) = G and the layer size of |A| equals n
        ZeroFree,     // 0 not in S(A)
        Avoids,       // expected not in S(A)
        Disjoint,     // kA and lA disjoint under spec.lambda
        Complete,     // (kA u lA = G) == (expected != 0)
    };
    Kind kind = Kind::Size;
    SumsetSpec spec;
    int k = 0, l = 0;
    long long expected = 0;
    std::string citation;

    std::string str() const;
};

bool check_claim(const Subset& a, const Claim& c);

using Params = std::map<std::string, long long>;

struct Construction {
    std::string kind;
    Params params;
    Subset set;
    std::vector<Claim> claims;

    bool verify() const;
};

// "n=12,m=7,d=3"
Params parse_params(const std::string& text);

// union of the first ceil(m/d)-1 cosets of the order-d subgroup plus k
// points of the next; optional h adds the sumset-size claims
Construction build_A_d(int n, int m, int d, int h = 0);
Construction build_B_d(int n, int m, int d, int k1, int k2, int g, int j0);

enum class PerfectVariant { Consecutive, OneAnd2sPlus1, Interval };
// Interval: s = 1 with {1..m} in Z_{2m+1}; m ignored otherwise
Construction perfect_spanning_pair(int s, PerfectVariant v, int m = 0);

struct IntervalResult {
    long long size = 0;
    Subset witness;
};
long long interval_weak_sumfree_formula(long long n, long long k, long long l);
IntervalResult interval_weak_sumfree_scan(int n, int k, int l);
Construction interval_weak_sumfree(int n, int k, int l);

// kinds: selfridge-even, selfridge-minus2, erdos-griggs, diderrich, bui,
// kemnitz, hallfors1, hallfors2, interval-1t, collins, three-independent
Construction named_set(const std::string& kind, const Params& p);

// also accepts Ad, Bd, perfect, interval-weak-sumfree
Construction build(const std::string& kind, const Params& p);

std::vector<std::string> construction_kinds();

}  // namespace sumsets
