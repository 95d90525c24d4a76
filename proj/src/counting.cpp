#include "sumsets/counting.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace sumsets {

namespace {
// C(j-1, i-1) with C(-1,-1) = 1
i128 binom_shift(long long j, long long i) {
    if (j == 0) return i == 0 ? 1 : 0;
    return binom(j - 1, i - 1);
}
}  // namespace

i128 a_fn(long long j, long long k) {
    if (j < 0 || k < 0) throw Error("a(j,k) needs j,k >= 0");
    i128 s = 0;
    for (long long i = 0; i <= std::min(j, k); ++i)
        s = checked_add(s, checked_mul(checked_mul(binom(j, i), binom(k, i)), ipow(2, int(i))));
    return s;
}

i128 c_fn(long long j, long long k) {
    if (j < 0 || k < 0) throw Error("c(j,k) needs j,k >= 0");
    i128 s = 0;
    for (long long i = 0; i <= k; ++i)
        s = checked_add(s, checked_mul(checked_mul(binom_shift(j, i), binom(k, i)), ipow(2, int(i))));
    return s;
}

i128 a_recursive(long long j, long long k) {
    if (j < 0 || k < 0) throw Error("a(j,k) needs j,k >= 0");
    std::vector<std::vector<i128>> t(j + 1, std::vector<i128>(k + 1, 1));
    for (long long x = 1; x <= j; ++x)
        for (long long y = 1; y <= k; ++y)
            t[x][y] = checked_add(checked_add(t[x - 1][y], t[x - 1][y - 1]), t[x][y - 1]);
    return t[j][k];
}

i128 partition_p(long long alpha) {
    if (alpha < 0) throw Error("partition of negative number");
    std::vector<i128> p(alpha + 1, 0);
    p[0] = 1;
    for (long long part = 1; part <= alpha; ++part)
        for (long long v = part; v <= alpha; ++v) p[v] = checked_add(p[v], p[v - part]);
    return p[alpha];
}

namespace {
i128 exact_layer(Lambda l, long long m, long long h) {
    switch (l) {
        case Lambda::N0: return m == 0 ? (h == 0 ? 1 : 0) : binom(m + h - 1, h);
        case Lambda::Z: return c_fn(h, m);
        case Lambda::Restricted: return binom(m, h);
        case Lambda::RestrictedSigned: return checked_mul(binom(m, h), ipow(2, int(h)));
    }
    return 0;
}
}  // namespace

i128 layer_size(const LayerSpec& spec) {
    const long long m = spec.m;
    const int v = spec.terms.value;
    if (m < 0) throw Error("layer dimension must be >= 0");
    bool restricted = spec.lambda == Lambda::Restricted || spec.lambda == Lambda::RestrictedSigned;
    using K = TermCount::Kind;
    switch (spec.terms.kind) {
        case K::Exact: return exact_layer(spec.lambda, m, v);
        case K::UpTo:
        case K::Range1: {
            if (spec.lambda == Lambda::Z && spec.terms.kind == K::UpTo) return a_fn(m, v);
            i128 s = 0;
            for (long long h = spec.terms.kind == K::UpTo ? 0 : 1; h <= v; ++h)
                s = checked_add(s, exact_layer(spec.lambda, m, h));
            return s;
        }
        case K::AllN0:
        case K::AllN: {
            if (!restricted) throw InfiniteLayer("layer is infinite for unrestricted coefficients with H = N0 or N");
            i128 s = ipow(spec.lambda == Lambda::Restricted ? 2 : 3, int(m));
            return spec.terms.kind == K::AllN ? s - 1 : s;
        }
    }
    return 0;
}

i128 layer_halfspace_size(long long m, long long h) {
    if (m < 1 || h < 1) throw Error("half-space layer needs m,h >= 1");
    return a_fn(m - 1, h - 1);
}

TermCount parse_terms(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += char(std::tolower((unsigned char)c));
    auto num = [&](const std::string& s) {
        if (s.empty() || s.size() > 9) throw Error("malformed term count '" + text + "'");
        for (char c : s)
            if (!std::isdigit((unsigned char)c)) throw Error("malformed term count '" + text + "'");
        return std::stoi(s);
    };
    if (t == "n0" || t == "all0") return TermCount::all_n0();
    if (t == "n" || t == "all") return TermCount::all_n();
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        std::string k = t.substr(0, colon), v = t.substr(colon + 1);
        if (k == "exact") return TermCount::exact(num(v));
        if (k == "upto") return TermCount::upto(num(v));
        if (k == "range1") {
            int x = num(v);
            if (x < 1) throw Error("range1 needs t >= 1");
            return TermCount::range1(x);
        }
        throw Error("unknown term-count kind '" + k + "'");
    }
    if (t.size() > 4 && t[0] == '[' && t.back() == ']' && t[2] == ',') {
        int x = num(t.substr(3, t.size() - 4));
        if (t[1] == '0') return TermCount::upto(x);
        if (t[1] == '1' && x >= 1) return TermCount::range1(x);
    }
    return TermCount::exact(num(t));
}

std::string terms_str(const TermCount& t) {
    switch (t.kind) {
        case TermCount::Kind::Exact: return "exact:" + std::to_string(t.value);
        case TermCount::Kind::UpTo: return "upto:" + std::to_string(t.value);
        case TermCount::Kind::Range1: return "range1:" + std::to_string(t.value);
        case TermCount::Kind::AllN0: return "N0";
        case TermCount::Kind::AllN: return "N";
    }
    return "";
}

Lambda parse_lambda(const std::string& text) {
    static const std::map<std::string, Lambda> names = {
        {"n0", Lambda::N0},           {"unrestricted", Lambda::N0},
        {"z", Lambda::Z},             {"signed", Lambda::Z},
        {"restricted", Lambda::Restricted}, {"01", Lambda::Restricted},
        {"restricted-signed", Lambda::RestrictedSigned}, {"restricted_signed", Lambda::RestrictedSigned},
        {"signed-restricted", Lambda::RestrictedSigned}, {"-101", Lambda::RestrictedSigned}};
    std::string t;
    for (char c : text) t += char(std::tolower((unsigned char)c));
    auto it = names.find(t);
    if (it == names.end()) throw Error("unknown coefficient domain '" + text + "'");
    return it->second;
}

std::string lambda_str(Lambda l) {
    switch (l) {
        case Lambda::N0: return "unrestricted";
        case Lambda::Z: return "signed";
        case Lambda::Restricted: return "restricted";
        case Lambda::RestrictedSigned: return "restricted-signed";
    }
    return "";
}

}  // namespace sumsets
