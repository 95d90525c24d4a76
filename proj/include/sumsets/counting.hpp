#pragma once
#include <string>

#include "sumsets/arith.hpp"

namespace sumsets {

enum class Lambda { N0, Z, Restricted, RestrictedSigned };

struct TermCount {
    enum class Kind { Exact, UpTo, Range1, AllN0, AllN };
    Kind kind = Kind::Exact;
    int value = 0;

    static TermCount exact(int h) { return {Kind::Exact, h}; }
    static TermCount upto(int s) { return {Kind::UpTo, s}; }
    static TermCount range1(int t) { return {Kind::Range1, t}; }
    static TermCount all_n0() { return {Kind::AllN0, 0}; }
    static TermCount all_n() { return {Kind::AllN, 0}; }
    bool operator==(const TermCount&) const = default;
};

// "exact:2", "upto:3", "range1:3", "N0", "N"; also "2", "[0,3]", "[1,3]"
TermCount parse_terms(const std::string& text);
std::string terms_str(const TermCount& t);
Lambda parse_lambda(const std::string& text);  // n0|unrestricted, z|signed, restricted, restricted-signed
std::string lambda_str(Lambda l);

struct InfiniteLayer : Error {
    using Error::Error;
};

struct LayerSpec {
    Lambda lambda = Lambda::N0;
    int m = 0;
    TermCount terms;
};

i128 a_fn(long long j, long long k);  // closed form
i128 c_fn(long long j, long long k);
i128 a_recursive(long long j, long long k);
i128 partition_p(long long alpha);
i128 layer_size(const LayerSpec& spec);
i128 layer_halfspace_size(long long m, long long h);

}  // namespace sumsets
