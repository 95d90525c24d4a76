#include "sumsets/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sumsets {

// ---- DynBits

int DynBits::count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
}

bool DynBits::none() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

void DynBits::fill() {
    for (auto& x : w_) x = ~0ull;
    if (n_ & 63) w_.back() = (1ull << (n_ & 63)) - 1;
}

void DynBits::clear() { std::fill(w_.begin(), w_.end(), 0); }

DynBits& DynBits::operator|=(const DynBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

DynBits& DynBits::operator&=(const DynBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bool DynBits::intersects(const DynBits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

DynBits DynBits::rotated(int k) const {
    DynBits r(n_);
    if (n_ == 0) return r;
    k %= n_;
    if (k < 0) k += n_;
    if (k == 0) return *this;
    if (n_ <= 64) {
        std::uint64_t x = w_[0];
        std::uint64_t mask = n_ == 64 ? ~0ull : (1ull << n_) - 1;
        r.w_[0] = ((x << k) | (x >> (n_ - k))) & mask;
        return r;
    }
    for_each([&](int i) {
        int j = i + k;
        if (j >= n_) j -= n_;
        r.set(j);
    });
    return r;
}

std::vector<int> DynBits::indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
}

// ---- Group

Group::Group() : p_(std::make_shared<Impl>()) {}

Group Group::normalize(const std::vector<long long>& factors, long long bound) {
    std::map<long long, std::vector<int>> powers;  // prime -> exponents
    i128 order = 1;
    for (long long f : factors) {
        if (f < 1) throw Error("group factor must be >= 1, got " + std::to_string(f));
        order = checked_mul(order, f);
        if (order > bound)
            throw Error("group order exceeds the configured bound " + std::to_string(bound));
        for (auto [p, e] : factorize(f)) powers[p].push_back(e);
    }
    std::size_t r = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.rbegin(), es.rend());
        r = std::max(r, es.size());
    }
    std::vector<long long> inv(r, 1);
    for (auto& [p, es] : powers)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (int k = 0; k < es[i]; ++k) inv[r - 1 - i] *= p;
    auto impl = std::make_shared<Impl>();
    for (long long x : inv) impl->factors.push_back(int(x));
    impl->n = int(order);
    impl->strides.assign(r, 1);
    for (int i = int(r) - 2; i >= 0; --i) impl->strides[i] = impl->strides[i + 1] * impl->factors[i + 1];
    return Group(impl);
}

Group Group::parse(const std::string& text, long long bound) {
    std::vector<long long> fs;
    std::stringstream ss(text);
    std::string tok;
    auto bad = [&](const std::string& t) { return Error("malformed group token '" + t + "' in '" + text + "'"); };
    if (!text.empty() && (text.back() == 'x' || text.back() == 'X')) throw bad("x");
    while (std::getline(ss, tok, 'x')) {
        if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'z')) throw bad(tok);
        std::string body = tok.substr(1), base = body, exp = "1";
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            base = body.substr(0, caret);
            exp = body.substr(caret + 1);
        }
        auto digits = [](const std::string& s) {
            return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), ::isdigit);
        };
        if (!digits(base) || !digits(exp)) throw bad(tok);
        long long b = std::stoll(base), e = std::stoll(exp);
        if (b < 1) throw bad(tok);
        for (long long i = 0; i < e; ++i) {
            fs.push_back(b);
            if (fs.size() > 64 && b > 1) throw Error("group order exceeds the configured bound");
        }
    }
    if (fs.empty()) throw bad(text);
    return normalize(fs, bound);
}

std::vector<Group> Group::all_of_order(int n) {
    // invariant factor chains n1 | n2 | ... | nr with product n
    std::vector<Group> out;
    std::vector<long long> chain;
    std::function<void(long long, long long)> rec = [&](long long rest, long long prev) {
        if (rest == 1) {
            out.push_back(normalize(chain));
            return;
        }
        for (int d : divisors(int(rest))) {
            if (d < 2 || d % prev) continue;
            // remaining product must be a multiple chain starting at d
            long long q = rest / d;
            bool ok = true;
            // each later factor is a multiple of d, so q must be 1 or divisible by d
            if (q != 1 && q % d) ok = false;
            if (!ok) continue;
            chain.push_back(d);
            rec(q, d);
            chain.pop_back();
        }
    };
    if (n == 1) return {Group()};
    rec(n, 1);
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.factors() < b.factors();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Group::name() const {
    if (factors().empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors().size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(factors()[i]);
    }
    return s;
}

void Group::check(const GroupElement& e) const {
    if (e.coords.size() != factors().size()) throw Error("group mismatch: element arity differs from group rank");
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (e.coords[i] < 0 || e.coords[i] >= factors()[i]) throw Error("group mismatch: coordinate out of range");
}

int Group::index(const GroupElement& e) const {
    check(e);
    int idx = 0;
    for (std::size_t i = 0; i < e.coords.size(); ++i) idx += e.coords[i] * p_->strides[i];
    return idx;
}

GroupElement Group::element(int idx) const {
    if (idx < 0 || idx >= order()) throw Error("element index out of range");
    GroupElement e;
    for (std::size_t i = 0; i < factors().size(); ++i) e.coords.push_back(idx / p_->strides[i] % factors()[i]);
    return e;
}

int Group::add(int a, int b) const {
    if (rank() <= 1) {
        int s = a + b;
        return s >= p_->n ? s - p_->n : s;
    }
    int r = 0;
    for (std::size_t i = 0; i < factors().size(); ++i) {
        int st = p_->strides[i], f = factors()[i];
        int c = (a / st % f + b / st % f) % f;
        r += c * st;
    }
    return r;
}

int Group::neg(int a) const {
    if (rank() <= 1) return a == 0 ? 0 : p_->n - a;
    int r = 0;
    for (std::size_t i = 0; i < factors().size(); ++i) {
        int st = p_->strides[i], f = factors()[i];
        int c = a / st % f;
        r += (c == 0 ? 0 : f - c) * st;
    }
    return r;
}

int Group::scale(long long lambda, int a) const {
    int r = 0;
    for (std::size_t i = 0; i < factors().size(); ++i) {
        int st = p_->strides[i], f = factors()[i];
        long long c = (lambda % f) * (a / st % f) % f;
        if (c < 0) c += f;
        r += int(c) * st;
    }
    return r;
}

int Group::element_order(int a) const {
    long long o = 1;
    for (std::size_t i = 0; i < factors().size(); ++i) {
        int f = factors()[i];
        int c = a / p_->strides[i] % f;
        long long oi = f / gcd(c, f);
        o = o / gcd(o, oi) * oi;
    }
    return int(o);
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
    return element(add(index(a), index(b)));
}
GroupElement Group::negate(const GroupElement& a) const { return element(neg(index(a))); }
GroupElement Group::scale(long long lambda, const GroupElement& a) const {
    return element(scale(lambda, index(a)));
}

// ---- Subset

Subset::Subset(Group g, DynBits b) : g_(std::move(g)), b_(std::move(b)) {
    if (b_.universe() != g_.order()) throw Error("subset universe does not match group order");
}

Subset Subset::of(Group g, const std::vector<int>& idx) {
    Subset s(std::move(g));
    for (int i : idx) s.insert(i);
    return s;
}

Subset Subset::full(Group g) {
    Subset s(std::move(g));
    s.b_.fill();
    return s;
}

void Subset::insert(int i) {
    if (i < 0 || i >= g_.order())
        throw Error("element " + std::to_string(i) + " out of range for " + g_.name());
    b_.set(i);
}

void Subset::erase(int i) {
    if (i >= 0 && i < g_.order()) b_.reset(i);
}

std::string Subset::str() const {
    std::string s = "{";
    bool first = true;
    b_.for_each([&](int i) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i);
    });
    return s + "}";
}

Subset& Subset::operator|=(const Subset& o) {
    if (!(g_ == o.g_)) throw Error("group mismatch in subset union");
    b_ |= o.b_;
    return *this;
}

Subset translate(const Subset& a, int g) {
    const Group& G = a.group();
    if (G.is_cyclic()) return Subset(G, a.bits().rotated(g));
    Subset r(G);
    a.bits().for_each([&](int i) { r.insert(G.add(i, g)); });
    return r;
}

Subset negated(const Subset& a) {
    Subset r(a.group());
    a.bits().for_each([&](int i) { r.insert(a.group().neg(i)); });
    return r;
}

Subset parse_subset(const Group& g, const std::string& text) {
    Subset s(g);
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty() || t == "{}") return s;
    if (t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
    std::size_t i = 0;
    auto num = [&](std::size_t& p) {
        std::size_t q = p;
        if (q < t.size() && t[q] == '-') ++q;
        while (q < t.size() && std::isdigit((unsigned char)t[q])) ++q;
        if (q == p) throw Error("malformed subset token near '" + t.substr(p) + "'");
        long long v = std::stoll(t.substr(p, q - p));
        p = q;
        return v;
    };
    while (i < t.size()) {
        if (t[i] == '(') {
            ++i;
            GroupElement e;
            while (true) {
                long long v = num(i);
                e.coords.push_back(int(v));
                if (i < t.size() && t[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < t.size() && t[i] == ')') {
                    ++i;
                    break;
                }
                throw Error("malformed coordinate tuple in '" + text + "'");
            }
            if (e.coords.size() != g.factors().size()) throw Error("tuple arity does not match " + g.name());
            for (std::size_t k = 0; k < e.coords.size(); ++k) {
                int f = g.factors()[k];
                e.coords[k] = ((e.coords[k] % f) + f) % f;
            }
            s.insert(g.index(e));
        } else {
            long long v = num(i);
            if (g.is_cyclic()) {
                long long n = g.order();
                v = ((v % n) + n) % n;
            }
            if (v < 0 || v >= g.order()) throw Error("element '" + std::to_string(v) + "' out of range for " + g.name());
            s.insert(int(v));
        }
        if (i < t.size()) {
            if (t[i] != ',') throw Error("malformed subset token near '" + t.substr(i) + "'");
            ++i;
        }
    }
    return s;
}

Subset ord_set(const Group& g, int d) {
    Subset s(g);
    if (d < 1) throw Error("order must be >= 1");
    for (int i = 0; i < g.order(); ++i)
        if (g.element_order(i) == d) s.insert(i);
    return s;
}

Subset cyclic_subgroup(int n, int d) {
    if (d < 1 || n % d) throw Error(std::to_string(d) + " does not divide " + std::to_string(n));
    Subset s(Group::cyclic(n));
    for (int j = 0; j < d; ++j) s.insert(j * (n / d));
    return s;
}

Subset generated_subgroup(const Subset& a) {
    const Group& G = a.group();
    Subset h(G);
    h.insert(0);
    std::vector<int> gens = a.indices(), frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = G.add(x, g);
                if (!h.contains(y)) {
                    h.insert(y);
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    return h;
}

long long subgroup_count_rank2(long long n1, long long n2) {
    if (n1 < 1 || n2 < 1 || n2 % n1) throw Error("subgroup count needs n1 | n2");
    long long total = 0;
    for (int d1 : divisors(int(n1)))
        for (int d2 : divisors(int(n2))) total += gcd(d1, d2);
    return total;
}

}  // namespace sumsets
