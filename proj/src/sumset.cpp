#include "sumsets/sumset.hpp"

#include <algorithm>

namespace sumsets {

DynBits shift(const Group& g, const DynBits& b, int by) {
    if (g.is_cyclic()) return b.rotated(by);
    DynBits r(g.order());
    b.for_each([&](int i) { r.set(g.add(i, by)); });
    return r;
}

namespace {

DynBits zero_set(const Group& g) {
    DynBits z(g.order());
    z.set(0);
    return z;
}

DynBits plus_set(const Group& g, const DynBits& s, const std::vector<int>& elems) {
    DynBits r(g.order());
    for (int a : elems) r |= shift(g, s, a);
    return r;
}

}  // namespace

std::vector<DynBits> sumset_levels(const Subset& a, Lambda lambda, int hmax) {
    const Group& g = a.group();
    const int n = g.order();
    if (hmax < 0) throw Error("term count must be >= 0");
    std::vector<int> elems = a.indices();
    std::vector<DynBits> lv(hmax + 1, DynBits(n));
    lv[0] = zero_set(g);
    switch (lambda) {
        case Lambda::N0:
            for (int j = 1; j <= hmax; ++j) lv[j] = plus_set(g, lv[j - 1], elems);
            break;
        case Lambda::Z: {
            // per element x: P_j = L_j | (x + P_{j-1}), N_j = L_j | (-x + N_{j-1})
            for (int x : elems) {
                int nx = g.neg(x);
                std::vector<DynBits> P(lv), N(lv);
                for (int j = 1; j <= hmax; ++j) {
                    P[j] |= shift(g, P[j - 1], x);
                    N[j] |= shift(g, N[j - 1], nx);
                }
                for (int j = 1; j <= hmax; ++j) lv[j] = P[j] | N[j];
            }
            break;
        }
        case Lambda::Restricted:
        case Lambda::RestrictedSigned: {
            bool sg = lambda == Lambda::RestrictedSigned;
            for (int x : elems) {
                int nx = g.neg(x);
                for (int j = hmax; j >= 1; --j) {
                    if (lv[j - 1].none()) continue;
                    lv[j] |= shift(g, lv[j - 1], x);
                    if (sg) lv[j] |= shift(g, lv[j - 1], nx);
                }
            }
            break;
        }
    }
    return lv;
}

Subset sumset(const Subset& a, const SumsetSpec& spec) {
    const Group& g = a.group();
    using K = TermCount::Kind;
    const int v = spec.terms.value;
    bool restricted = spec.lambda == Lambda::Restricted || spec.lambda == Lambda::RestrictedSigned;
    switch (spec.terms.kind) {
        case K::Exact: {
            if (v < 0) throw Error("term count must be >= 0");
            if (restricted && v > a.size()) return Subset(g);
            return Subset(g, sumset_levels(a, spec.lambda, v)[v]);
        }
        case K::UpTo:
        case K::Range1: {
            int hi = restricted ? std::min(v, a.size()) : v;
            auto lv = sumset_levels(a, spec.lambda, std::max(hi, 0));
            DynBits r(g.order());
            for (int j = spec.terms.kind == K::UpTo ? 0 : 1; j <= hi; ++j) r |= lv[j];
            return Subset(g, r);
        }
        case K::AllN0:
        case K::AllN: {
            int lo = spec.terms.kind == K::AllN0 ? 0 : 1;
            if (restricted) {
                auto lv = sumset_levels(a, spec.lambda, a.size());
                DynBits r(g.order());
                for (int j = lo; j <= a.size(); ++j) r |= lv[j];
                return Subset(g, r);
            }
            // union over [lo, s] until it stops growing
            std::vector<int> elems = a.indices();
            std::vector<int> step = elems;
            if (spec.lambda == Lambda::Z)
                for (int x : elems) step.push_back(g.neg(x));
            DynBits level = zero_set(g), acc(g.order());
            if (lo == 0) acc = level;
            for (int j = 1; j <= g.order() + 1; ++j) {
                // signed: unions of levels agree with those of A u -A
                level = plus_set(g, level, step);
                DynBits next = acc | level;
                if (next == acc) break;
                acc = next;
            }
            return Subset(g, acc);
        }
    }
    return Subset(g);
}

Subset sigma_star(const Subset& a) { return sumset(a, {Lambda::Restricted, TermCount::all_n()}); }
Subset sigma(const Subset& a) { return sumset(a, {Lambda::Restricted, TermCount::all_n0()}); }
Subset sigma_pm(const Subset& a) { return sumset(a, {Lambda::RestrictedSigned, TermCount::all_n0()}); }

Subset dilate(long long b, const Subset& a) {
    Subset r(a.group());
    a.bits().for_each([&](int i) { r.insert(a.group().scale(b, i)); });
    return r;
}

long long norm(const Subset& a) {
    const Group& g = a.group();
    if (!g.is_cyclic()) throw Error("norm is defined for cyclic groups only, got " + g.name());
    const int n = g.order();
    long long s = 0;
    a.bits().for_each([&](int i) { s += (2 * i <= n) ? i : n - i; });
    return s;
}

}  // namespace sumsets
