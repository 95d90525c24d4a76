#include "sumsets/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace sumsets {

Family parse_family(const std::string& text) {
    static const std::map<std::string, Family> names = {
        {"nu", Family::Nu},       {"phi", Family::Phi}, {"sigma", Family::Sigma}, {"rho", Family::Rho},
        {"chi", Family::Chi},     {"tau", Family::Tau}, {"mu", Family::Mu}};
    auto it = names.find(text);
    if (it == names.end()) throw Error("unknown quantity family '" + text + "'");
    return it->second;
}

std::string family_str(Family f) {
    switch (f) {
        case Family::Nu: return "nu";
        case Family::Phi: return "phi";
        case Family::Sigma: return "sigma";
        case Family::Rho: return "rho";
        case Family::Chi: return "chi";
        case Family::Tau: return "tau";
        case Family::Mu: return "mu";
    }
    return "";
}

namespace {

template <int W>
struct Bits {
    std::uint64_t w[W];

    void clear() {
        for (auto& x : w) x = 0;
    }
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    bool intersects(const Bits& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool operator==(const Bits& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] != o.w[i]) return false;
        return true;
    }
};

template <int W>
struct Ctx {
    int n;
    bool cyclic;
    std::vector<std::uint16_t> add;  // noncyclic: add[g*n+i] = g+i
    std::vector<int> neg;
    Bits<W> full;

    explicit Ctx(const Group& g) : n(g.order()), cyclic(g.is_cyclic()) {
        full.clear();
        for (int i = 0; i < n; ++i) full.set(i);
        neg.resize(n);
        for (int i = 0; i < n; ++i) neg[i] = g.neg(i);
        if (!cyclic) {
            add.resize(std::size_t(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) add[std::size_t(a) * n + b] = std::uint16_t(g.add(a, b));
        }
    }

    Bits<W> shl(const Bits<W>& b, int k) const {
        Bits<W> r;
        int ws = k >> 6, bs = k & 63;
        for (int i = 0; i < W; ++i) {
            std::uint64_t x = 0;
            if (i - ws >= 0) x = b.w[i - ws] << bs;
            if (bs && i - ws - 1 >= 0) x |= b.w[i - ws - 1] >> (64 - bs);
            r.w[i] = x;
        }
        return r;
    }
    Bits<W> shr(const Bits<W>& b, int k) const {
        Bits<W> r;
        int ws = k >> 6, bs = k & 63;
        for (int i = 0; i < W; ++i) {
            std::uint64_t x = 0;
            if (i + ws < W) x = b.w[i + ws] >> bs;
            if (bs && i + ws + 1 < W) x |= b.w[i + ws + 1] << (64 - bs);
            r.w[i] = x;
        }
        return r;
    }

    Bits<W> shift(const Bits<W>& b, int by) const {
        if (by == 0) return b;
        if (cyclic) {
            if constexpr (W == 1) {
                std::uint64_t x = b.w[0];
                Bits<W> r;
                r.w[0] = ((x << by) | (x >> (n - by))) & full.w[0];
                return r;
            } else {
                Bits<W> r = shl(b, by) | shr(b, n - by);
                for (int i = 0; i < W; ++i) r.w[i] &= full.w[i];
                return r;
            }
        }
        Bits<W> r;
        r.clear();
        const std::uint16_t* row = &add[std::size_t(by) * n];
        for (int wi = 0; wi < W; ++wi) {
            std::uint64_t x = b.w[wi];
            while (x) {
                r.set(row[wi * 64 + __builtin_ctzll(x)]);
                x &= x - 1;
            }
        }
        return r;
    }
};

enum class KMode { N0, Z, R, RS, RAll, RSAll, Gen };

// Sumset state of the current set under incremental insertion.
template <int W>
struct Kernel {
    const Ctx<W>* c;
    KMode mode;
    int L;       // levels 0..L-1 in level modes
    int stride;  // bitsets per depth
    int depth = 0;
    std::vector<Bits<W>> st, P, N;
    std::vector<int> elems;

    Kernel(const Ctx<W>& ctx, KMode m, int levels) : c(&ctx), mode(m), L(levels) {
        stride = (m == KMode::RAll || m == KMode::RSAll) ? 2 : (m == KMode::Gen ? 1 : L);
        st.resize(std::size_t(stride) * (ctx.n + 2));
        P.resize(L);
        N.resize(L);
        reset();
    }

    void reset() {
        depth = 0;
        elems.clear();
        for (int j = 0; j < stride; ++j) st[j].clear();
        if (mode != KMode::RAll && mode != KMode::RSAll) {
            st[0].set(0);
        } else {
            st[0].set(0);  // U holds the empty sum, U* does not
        }
    }

    const Bits<W>* cur() const { return &st[std::size_t(depth) * stride]; }

    void push(int x) {
        const Bits<W>* o = cur();
        Bits<W>* nw = &st[std::size_t(depth + 1) * stride];
        const int nx = c->neg[x];
        switch (mode) {
            case KMode::N0:
                nw[0] = o[0];
                for (int j = 1; j < L; ++j) nw[j] = o[j] | c->shift(nw[j - 1], x);
                break;
            case KMode::Z:
                nw[0] = P[0] = N[0] = o[0];
                for (int j = 1; j < L; ++j) {
                    P[j] = o[j] | c->shift(P[j - 1], x);
                    N[j] = o[j] | c->shift(N[j - 1], nx);
                    nw[j] = P[j] | N[j];
                }
                break;
            case KMode::R:
                nw[0] = o[0];
                for (int j = 1; j < L; ++j) nw[j] = o[j] | c->shift(o[j - 1], x);
                break;
            case KMode::RS:
                nw[0] = o[0];
                for (int j = 1; j < L; ++j) nw[j] = o[j] | c->shift(o[j - 1], x) | c->shift(o[j - 1], nx);
                break;
            case KMode::RAll:
            case KMode::RSAll: {
                Bits<W> t = c->shift(o[0], x);
                if (mode == KMode::RSAll) t |= c->shift(o[0], nx);
                nw[0] = o[0] | t;
                nw[1] = o[1] | t;
                break;
            }
            case KMode::Gen: {
                Bits<W> acc = o[0], y = o[0];
                while (true) {
                    y = c->shift(y, x);
                    if (y == o[0]) break;
                    acc |= y;
                }
                nw[0] = acc;
                break;
            }
        }
        ++depth;
        elems.push_back(x);
    }

    void pop() {
        --depth;
        elems.pop_back();
    }
};

struct Plan {
    std::vector<int> fixed;
    std::vector<int> cands;  // ascending
};

using Unit = std::pair<int, int>;  // candidate positions, -1 when absent

std::vector<Unit> make_units(int N, int r) {
    std::vector<Unit> u;
    if (r <= 0) {
        u.push_back({-1, -1});
    } else if (r == 1) {
        for (int e = 0; e < N; ++e) u.push_back({e, -1});
    } else {
        for (int e1 = r - 1; e1 < N; ++e1)
            for (int e2 = r - 2; e2 < e1; ++e2) u.push_back({e1, e2});
    }
    return u;
}

template <int W>
class Engine {
public:
    Engine(const QuantityQuery& q, const SearchOptions& o) : q_(q), o_(o), ctx_(q.group) {
        setup_kernel();
        threads_ = o.threads > 0 ? o.threads : int(std::max(1u, std::thread::hardware_concurrency()));
    }

    SearchResult run() {
        auto t0 = std::chrono::steady_clock::now();
        SearchResult r;
        switch (q_.family) {
            case Family::Nu:
            case Family::Rho: r = run_fixed_size(); break;
            case Family::Phi: r = run_phi(); break;
            default: r = run_hereditary(); break;
        }
        r.nodes = nodes_.load();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

    std::vector<Subset> enumerate(const SearchResult& best) {
        std::vector<Subset> out;
        if (!best.value) return out;
        long long v = *best.value;
        Plan p = full_plan();
        std::vector<std::vector<std::vector<int>>> per_unit;
        auto collect = [&](const std::vector<Unit>& units) {
            per_unit.assign(units.size(), {});
            return [&](Kernel<W>& K, int unit) {
                per_unit[unit].push_back(K.elems);
                return false;
            };
        };
        switch (q_.family) {
            case Family::Nu:
            case Family::Rho: {
                auto units = make_units(int(p.cands.size()), q_.m);
                auto keep = collect(units);
                scan(p, q_.m, units, always_ok(), [&](Kernel<W>& K, int unit) {
                    return score(K) == v ? keep(K, unit) : false;
                });
                break;
            }
            case Family::Phi: {
                auto units = make_units(int(p.cands.size()), int(v));
                auto keep = collect(units);
                scan(p, int(v), units, always_ok(), [&](Kernel<W>& K, int unit) {
                    return result(K) == ctx_.full ? keep(K, unit) : false;
                });
                break;
            }
            default: {
                int t = int(q_.family == Family::Chi ? v - 1 : v);
                auto units = make_units(int(p.cands.size()), t);
                auto keep = collect(units);
                scan(p, t, units, [&](const Kernel<W>& K) { return ok(K); }, [&](Kernel<W>& K, int unit) {
                    return record_ok(K) ? keep(K, unit) : false;
                });
                break;
            }
        }
        for (auto& list : per_unit)
            for (auto& e : list) out.push_back(to_subset(e));
        return out;
    }

private:
    const QuantityQuery& q_;
    const SearchOptions& o_;
    Ctx<W> ctx_;
    KMode mode_ = KMode::N0;
    int L_ = 1;
    int lo_ = 0, hi_ = 0;  // requested level range
    int threads_ = 1;
    std::atomic<long long> nodes_{0};
    std::atomic<bool> abort_{false};

    void setup_kernel() {
        using K = TermCount::Kind;
        const Lambda lam = q_.lambda;
        if (q_.family == Family::Tau &&
            (q_.terms.kind == K::UpTo || q_.terms.kind == K::AllN0 || (q_.terms.kind == K::Exact && q_.terms.value == 0)))
            throw Error("zero-sum-free search needs a term set without 0, got " + terms_str(q_.terms));
        if (q_.family == Family::Mu) {
            if (lam != Lambda::N0 && lam != Lambda::Restricted)
                throw Error("sum-free search supports unrestricted and restricted coefficients only");
            mode_ = lam == Lambda::N0 ? KMode::N0 : KMode::R;
            int top = q_.k > 0 ? q_.k : q_.terms.value;
            if (q_.k > 0 && !(q_.k > q_.l && q_.l >= 0)) throw Error("sum-free pair needs k > l >= 0");
            if (q_.k == 0 && q_.terms.kind != K::UpTo) throw Error("sum-free search needs a pair {k,l} or upto:s");
            L_ = top + 1;
            return;
        }
        switch (q_.terms.kind) {
            case K::Exact:
            case K::UpTo:
            case K::Range1: {
                static const KMode m[] = {KMode::N0, KMode::Z, KMode::R, KMode::RS};
                mode_ = m[int(lam)];
                L_ = q_.terms.value + 1;
                lo_ = q_.terms.kind == K::Exact ? q_.terms.value : (q_.terms.kind == K::UpTo ? 0 : 1);
                hi_ = q_.terms.value;
                if (q_.terms.value < 0 || L_ > 4096) throw Error("term count out of range");
                break;
            }
            case K::AllN0:
            case K::AllN:
                mode_ = lam == Lambda::Restricted ? KMode::RAll
                        : lam == Lambda::RestrictedSigned ? KMode::RSAll
                                                          : KMode::Gen;
                L_ = 1;
                break;
        }
    }

    Bits<W> result(const Kernel<W>& K) const {
        const Bits<W>* s = K.cur();
        switch (mode_) {
            case KMode::RAll:
            case KMode::RSAll: return q_.terms.kind == TermCount::Kind::AllN0 ? s[0] : s[1];
            case KMode::Gen: {
                if (q_.terms.kind == TermCount::Kind::AllN && K.depth == 0) {
                    Bits<W> e;
                    e.clear();
                    return e;
                }
                return s[0];
            }
            default: {
                Bits<W> r;
                r.clear();
                for (int j = lo_; j <= hi_; ++j) r |= s[j];
                return r;
            }
        }
    }

    long long score(const Kernel<W>& K) const { return result(K).count(); }

    // hereditary predicate of the current set
    bool ok(const Kernel<W>& K) const {
        switch (q_.family) {
            case Family::Sigma: {
                i128 want = layer_size({q_.lambda, K.depth, q_.terms});
                return i128(score(K)) == want;
            }
            case Family::Chi: return !(result(K) == ctx_.full);
            case Family::Tau: return !result(K).test(0);
            case Family::Mu: {
                const Bits<W>* s = K.cur();
                if (q_.k > 0) return !s[q_.k].intersects(s[q_.l]);
                Bits<W> below = s[0];
                for (int j = 1; j < L_; ++j) {
                    if (s[j].intersects(below)) return false;
                    below |= s[j];
                }
                return true;
            }
            default: return true;
        }
    }

    bool record_ok(const Kernel<W>& K) const {
        if (q_.family != Family::Chi || !q_.generating) return true;
        return generated_subgroup(to_subset(K.elems)).size() == ctx_.n;
    }

    static auto always_ok() {
        return [](const Kernel<W>&) { return true; };
    }

    Subset to_subset(const std::vector<int>& e) const { return Subset::of(q_.group, e); }

    std::vector<int> all_cands(bool skip_zero) const {
        std::vector<int> c;
        for (int i = skip_zero ? 1 : 0; i < ctx_.n; ++i) c.push_back(i);
        return c;
    }

    std::vector<int> neg_reps(bool skip_zero) const {
        std::vector<int> c;
        for (int i = skip_zero ? 1 : 0; i < ctx_.n; ++i)
            if (i <= ctx_.neg[i]) c.push_back(i);
        return c;
    }

    Plan full_plan() const {
        Plan p;
        p.cands = all_cands(q_.family == Family::Chi && q_.exclude_zero);
        return p;
    }

    bool translation_invariant_exact() const {
        return q_.terms.kind == TermCount::Kind::Exact &&
               (q_.lambda == Lambda::N0 || q_.lambda == Lambda::Restricted);
    }

    Plan plan_fix0() const {
        Plan p;
        p.fixed = {0};
        p.cands = all_cands(true);
        return p;
    }

    Plan reduced_plan() const {
        if (!o_.reduce_symmetry || ctx_.n == 1) return full_plan();
        const bool signed_dom = q_.lambda == Lambda::Z || q_.lambda == Lambda::RestrictedSigned;
        switch (q_.family) {
            case Family::Nu:
            case Family::Rho:
            case Family::Sigma:
                return translation_invariant_exact() ? plan_fix0() : full_plan();
            case Family::Phi:
                if (q_.terms.kind == TermCount::Kind::UpTo) {
                    Plan p;
                    p.cands = signed_dom ? neg_reps(true) : all_cands(true);
                    return p;
                }
                return translation_invariant_exact() ? plan_fix0() : full_plan();
            case Family::Chi:
                if (q_.generating || q_.exclude_zero) return full_plan();
                return translation_invariant_exact() ? plan_fix0() : full_plan();
            case Family::Tau:
                if (q_.terms.kind == TermCount::Kind::Range1 && q_.terms.value >= 2 && signed_dom) {
                    Plan p;
                    p.cands = neg_reps(true);
                    return p;
                }
                if (translation_invariant_exact() && q_.terms.value % q_.group.exponent() == 0) return plan_fix0();
                return full_plan();
            case Family::Mu:
                if (q_.k > 0 && (q_.k - q_.l) % q_.group.exponent() == 0) return plan_fix0();
                return full_plan();
        }
        return full_plan();
    }

    void add_nodes(long long& local) {
        long long tot = nodes_.fetch_add(local) + local;
        local = 0;
        if (tot > o_.budget) abort_.store(true);
    }

    // Walk r-subsets of p.cands on top of p.fixed in colex order, unit by unit.
    // ok prunes partial sets; leaf returns true to end the unit.
    template <class Ok, class Leaf>
    void scan(const Plan& p, int r, const std::vector<Unit>& units, Ok okf, Leaf leaf,
              std::atomic<int>* cut = nullptr) {
        const int N = int(p.cands.size());
        if (r < 0 || r > N) return;
        std::atomic<int> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto worker = [&]() {
            try {
                Kernel<W> K(ctx_, mode_, L_);
                for (int x : p.fixed) K.push(x);
                if (!okf(K)) return;
                long long local = 0;
                auto stopped = [&](int unit) {
                    return abort_.load(std::memory_order_relaxed) ||
                           (cut && cut->load(std::memory_order_relaxed) < unit);
                };
                while (true) {
                    int unit = next.fetch_add(1);
                    if (unit >= int(units.size())) break;
                    if (stopped(unit)) continue;
                    auto rec = [&](auto& self, int limit, int need) -> bool {
                        for (int e = need - 1; e < limit; ++e) {
                            K.push(p.cands[e]);
                            if (++local >= 4096) {
                                add_nodes(local);
                                if (stopped(unit)) {
                                    K.pop();
                                    return true;
                                }
                            }
                            bool stop = false;
                            if (okf(K)) stop = need == 1 ? leaf(K, unit) : self(self, e, need - 1);
                            K.pop();
                            if (stop) return true;
                        }
                        return false;
                    };
                    auto [e1, e2] = units[unit];
                    int pushed = 0;
                    bool alive = true;
                    for (int e : {e1, e2}) {
                        if (e < 0 || !alive) continue;
                        K.push(p.cands[e]);
                        ++pushed;
                        ++local;
                        alive = okf(K);
                    }
                    if (alive) {
                        int need = r - pushed;
                        if (need == 0)
                            leaf(K, unit);
                        else
                            rec(rec, e2 >= 0 ? e2 : e1, need);
                    }
                    while (pushed--) K.pop();
                }
                add_nodes(local);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                abort_.store(true);
            }
        };
        int T = std::min<int>(threads_, int(units.size()));
        if (T <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < T; ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (err) std::rethrow_exception(err);
        if (abort_.load()) throw BudgetExceeded("node budget of " + std::to_string(o_.budget) + " exceeded");
    }

    void precheck(int N, int r) const {
        if (binom(N, r) > i128(o_.budget))
            throw BudgetExceeded("search space C(" + std::to_string(N) + "," + std::to_string(r) +
                                 ") exceeds the node budget of " + std::to_string(o_.budget));
    }

    struct Best {
        bool has = false;
        long long value = 0;
        std::vector<int> set;
    };

    // optimize score over r-subsets; stops early once bound is reached
    Best optimize(const Plan& p, int r, bool maximize, long long bound) {
        precheck(int(p.cands.size()), r);
        auto units = make_units(int(p.cands.size()), r);
        std::vector<Best> per(units.size());
        std::atomic<int> cut{INT_MAX};
        scan(p, r, units, always_ok(), [&](Kernel<W>& K, int unit) {
            long long s = score(K);
            Best& b = per[unit];
            if (!b.has || (maximize ? s > b.value : s < b.value)) {
                b.has = true;
                b.value = s;
                b.set = K.elems;
            }
            if (s == bound) {
                int c = cut.load();
                while (unit < c && !cut.compare_exchange_weak(c, unit)) {
                }
                return true;
            }
            return false;
        }, &cut);
        Best best;
        for (auto& b : per) {
            if (!b.has) continue;
            if (!best.has || (maximize ? b.value > best.value : b.value < best.value)) best = b;
        }
        return best;
    }

    struct Found {
        bool record = false;  // a qualifying leaf
        bool any = false;     // any leaf passing the hereditary predicate
        std::vector<int> set;
    };

    Found exists(const Plan& p, int r) {
        auto units = make_units(int(p.cands.size()), r);
        std::vector<Found> per(units.size());
        std::atomic<int> cut{INT_MAX};
        scan(p, r, units, [&](const Kernel<W>& K) { return ok(K); }, [&](Kernel<W>& K, int unit) {
            Found& f = per[unit];
            f.any = true;
            if (!record_ok(K)) return false;
            f.record = true;
            f.set = K.elems;
            int c = cut.load();
            while (unit < c && !cut.compare_exchange_weak(c, unit)) {
            }
            return true;
        }, &cut);
        Found out;
        for (auto& f : per) {
            out.any = out.any || f.any;
            if (f.record && !out.record) {
                out.record = true;
                out.set = f.set;
            }
        }
        return out;
    }

    SearchResult run_fixed_size() {
        const int n = ctx_.n, m = q_.m;
        if (m < 1 || m > n) throw Error("subset size m must satisfy 1 <= m <= n");
        Plan p = reduced_plan();
        const bool maximize = q_.family == Family::Nu;
        long long bound;
        if (maximize) {
            bound = n;
            try {
                i128 ls = layer_size({q_.lambda, m, q_.terms});
                if (ls < bound) bound = (long long)ls;
            } catch (const InfiniteLayer&) {
            }
        } else {
            bool grows = (q_.lambda == Lambda::N0 || q_.lambda == Lambda::Z) && q_.terms.kind != TermCount::Kind::AllN &&
                         q_.terms.kind != TermCount::Kind::AllN0 && q_.terms.value >= 1;
            bound = grows ? m : 1;
        }
        Best b = optimize(p, m - int(p.fixed.size()), maximize, bound);
        SearchResult r;
        r.value = b.value;
        r.witness = to_subset(b.set);
        return r;
    }

    SearchResult run_phi() {
        const int n = ctx_.n;
        SearchResult r;
        Plan p = reduced_plan();
        for (int m = 1; m <= n; ++m) {
            try {
                if (layer_size({q_.lambda, m, q_.terms}) < i128(n)) continue;
            } catch (const InfiniteLayer&) {
            }
            int need = m - int(p.fixed.size());
            if (need < 0 || need > int(p.cands.size())) continue;
            Best b = optimize_exists_full(p, need);
            if (b.has) {
                r.value = m;
                r.witness = to_subset(b.set);
                return r;
            }
        }
        return r;
    }

    // colex-least r-subset whose sumset is all of G
    Best optimize_exists_full(const Plan& p, int r) {
        precheck(int(p.cands.size()), r);
        auto units = make_units(int(p.cands.size()), r);
        std::vector<Best> per(units.size());
        std::atomic<int> cut{INT_MAX};
        scan(p, r, units, always_ok(), [&](Kernel<W>& K, int unit) {
            if (!(result(K) == ctx_.full)) return false;
            per[unit] = {true, 1, K.elems};
            int c = cut.load();
            while (unit < c && !cut.compare_exchange_weak(c, unit)) {
            }
            return true;
        }, &cut);
        for (auto& b : per)
            if (b.has) return b;
        return {};
    }

    SearchResult run_hereditary() {
        Plan p = reduced_plan();
        const int total = int(p.fixed.size() + p.cands.size());
        long long best_t = 0;
        std::vector<int> best_set;
        // the fixed part alone
        {
            Kernel<W> K(ctx_, mode_, L_);
            bool alive = true;
            for (int x : p.fixed) {
                K.push(x);
                alive = alive && ok(K);
            }
            if (!alive) p.cands.clear();
            if (alive && !p.fixed.empty() && record_ok(K)) {
                best_t = int(p.fixed.size());
                best_set = p.fixed;
            }
        }
        int start = std::max<int>(1, int(p.fixed.size()) + 1);
        for (int t = start; t <= total; ++t) {
            int r = t - int(p.fixed.size());
            if (r > int(p.cands.size())) break;
            Found f = exists(p, r);
            if (!f.any) break;
            if (f.record) {
                best_t = t;
                best_set = f.set;
            }
        }
        SearchResult res;
        if (q_.family == Family::Chi) {
            int avail = q_.exclude_zero ? ctx_.n - 1 : ctx_.n;
            if (best_t + 1 <= avail) res.value = best_t + 1;
        } else {
            res.value = best_t;
        }
        // chi = 1 has no nonempty set to show
        if (q_.family != Family::Chi || best_t >= 1) res.witness = to_subset(best_set);
        return res;
    }
};

template <class F>
auto dispatch(const Group& g, F&& f) {
    const int n = g.order();
    if (n <= 64) return f(std::integral_constant<int, 1>{});
    if (n <= 128) return f(std::integral_constant<int, 2>{});
    if (n <= 256) return f(std::integral_constant<int, 4>{});
    if (n <= 512) return f(std::integral_constant<int, 8>{});
    if (n <= 1024) return f(std::integral_constant<int, 16>{});
    throw Error("extremal search supports groups of order <= 1024, got " + std::to_string(n));
}

}  // namespace

SearchResult evaluate(const QuantityQuery& q, const SearchOptions& opt) {
    return dispatch(q.group, [&](auto w) {
        Engine<decltype(w)::value> e(q, opt);
        return e.run();
    });
}

std::vector<Subset> enumerate_extremal(const QuantityQuery& q, const SearchOptions& opt) {
    SearchResult best = evaluate(q, opt);
    return dispatch(q.group, [&](auto w) {
        Engine<decltype(w)::value> e(q, opt);
        return e.enumerate(best);
    });
}

bool verify_witness(const QuantityQuery& q, const Subset& w, std::optional<long long> value) {
    if (!(w.group() == q.group)) return false;
    const Group& g = q.group;
    const int n = g.order();
    auto S = [&](const Subset& a) { return sumset(a, {q.lambda, q.terms}); };
    switch (q.family) {
        case Family::Nu:
        case Family::Rho:
            return value && w.size() == q.m && S(w).size() == *value;
        case Family::Phi:
            return value && w.size() == *value && S(w).size() == n;
        case Family::Sigma:
            return value && w.size() == *value && i128(S(w).size()) == layer_size({q.lambda, w.size(), q.terms});
        case Family::Chi: {
            if (!value) return true;
            if (w.size() != *value - 1 || S(w).size() == n) return false;
            if (q.exclude_zero && w.contains(0)) return false;
            if (q.generating && generated_subgroup(w).size() != n) return false;
            return true;
        }
        case Family::Tau:
            return value && w.size() == *value && !S(w).contains(0);
        case Family::Mu: {
            if (!value || w.size() != *value) return false;
            Lambda lam = q.lambda;
            if (q.k > 0) {
                Subset a = sumset(w, {lam, TermCount::exact(q.k)}), b = sumset(w, {lam, TermCount::exact(q.l)});
                return !a.bits().intersects(b.bits());
            }
            std::vector<Subset> lv;
            for (int j = 0; j <= q.terms.value; ++j) lv.push_back(sumset(w, {lam, TermCount::exact(j)}));
            for (int a = 0; a < int(lv.size()); ++a)
                for (int b = 0; b < a; ++b)
                    if (lv[a].bits().intersects(lv[b].bits())) return false;
            return true;
        }
    }
    return false;
}

namespace {
QuantityQuery make(Family f, const Group& g, const SumsetSpec& spec, int m = 0) {
    QuantityQuery q;
    q.family = f;
    q.group = g;
    q.lambda = spec.lambda;
    q.terms = spec.terms;
    q.m = m;
    return q;
}
}  // namespace

SearchResult max_sumset_size(const Group& g, int m, const SumsetSpec& spec, const SearchOptions& opt) {
    return evaluate(make(Family::Nu, g, spec, m), opt);
}
SearchResult min_sumset_size(const Group& g, int m, const SumsetSpec& spec, const SearchOptions& opt) {
    return evaluate(make(Family::Rho, g, spec, m), opt);
}
SearchResult min_spanning_size(const Group& g, const SumsetSpec& spec, const SearchOptions& opt) {
    return evaluate(make(Family::Phi, g, spec), opt);
}
SearchResult max_sidon_size(const Group& g, const SumsetSpec& spec, const SearchOptions& opt) {
    return evaluate(make(Family::Sigma, g, spec), opt);
}
SearchResult critical_number(const Group& g, const SumsetSpec& spec, bool restrict_to_generating, bool exclude_zero,
                             const SearchOptions& opt) {
    QuantityQuery q = make(Family::Chi, g, spec);
    q.generating = restrict_to_generating;
    q.exclude_zero = exclude_zero;
    return evaluate(q, opt);
}
SearchResult max_zero_sum_free(const Group& g, const SumsetSpec& spec, const SearchOptions& opt) {
    return evaluate(make(Family::Tau, g, spec), opt);
}
SearchResult max_sum_free(const Group& g, int k, int l, bool weak, const SearchOptions& opt) {
    QuantityQuery q = make(Family::Mu, g, {weak ? Lambda::Restricted : Lambda::N0, TermCount::exact(k)});
    q.k = k;
    q.l = l;
    return evaluate(q, opt);
}
SearchResult max_sum_free_upto(const Group& g, int s, bool weak, const SearchOptions& opt) {
    return evaluate(make(Family::Mu, g, {weak ? Lambda::Restricted : Lambda::N0, TermCount::upto(s)}), opt);
}

}  // namespace sumsets
