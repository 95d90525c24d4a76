#include "sumsets/constructions.hpp"

#include <sstream>

#include "sumsets/side.hpp"

namespace sumsets {

namespace {

using K = Claim::Kind;

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

Subset cyclic_set(int n, const std::vector<long long>& xs) {
    Group g = Group::cyclic(n);
    Subset s(g);
    for (long long x : xs) s.insert(int(mod(x, n)));
    return s;
}

Claim size_claim(long long v, std::string cite) { return {K::Size, {}, 0, 0, v, std::move(cite)}; }
Claim sumset_claim(SumsetSpec spec, long long v, std::string cite) {
    return {K::SumsetSize, spec, 0, 0, v, std::move(cite)};
}
Claim zero_free(SumsetSpec spec, std::string cite) { return {K::ZeroFree, spec, 0, 0, 0, std::move(cite)}; }
Claim disjoint(Lambda lam, int k, int l, std::string cite) {
    return {K::Disjoint, {lam, TermCount::exact(k)}, k, l, 0, std::move(cite)};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("construction parameters: " + what);
}

long long need(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw Error("construction parameter '" + key + "' missing");
    return it->second;
}

long long opt(const Params& p, const std::string& key, long long dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

bool is_power_of_two(long long x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

std::string Claim::str() const {
    std::ostringstream os;
    auto sp = [&] { return lambda_str(spec.lambda) + " " + terms_str(spec.terms); };
    switch (kind) {
        case K::Size: os << "|A| = " << expected; break;
        case K::SumsetSize: os << "|S(A)| = " << expected << " [" << sp() << "]"; break;
        case K::Spans: os << "S(A) = G [" << sp() << "]"; break;
        case K::Perfect: os << "perfect spanning [" << sp() << "]"; break;
        case K::ZeroFree: os << "0 not in S(A) [" << sp() << "]"; break;
        case K::Avoids: os << expected << " not in S(A) [" << sp() << "]"; break;
        case K::Disjoint: os << k << "A and " << l << "A disjoint [" << lambda_str(spec.lambda) << "]"; break;
        case K::Complete:
            os << k << "A u " << l << "A " << (expected ? "=" : "!=") << " G [" << lambda_str(spec.lambda) << "]";
            break;
    }
    return os.str();
}

bool check_claim(const Subset& a, const Claim& c) {
    const Group& g = a.group();
    switch (c.kind) {
        case K::Size: return a.size() == c.expected;
        case K::SumsetSize: return sumset(a, c.spec).size() == c.expected;
        case K::Spans: return sumset(a, c.spec).size() == g.order();
        case K::Perfect:
            return sumset(a, c.spec).size() == g.order() &&
                   layer_size({c.spec.lambda, a.size(), c.spec.terms}) == i128(g.order());
        case K::ZeroFree: return !sumset(a, c.spec).contains(0);
        case K::Avoids: return !sumset(a, c.spec).contains(int(c.expected));
        case K::Disjoint:
        case K::Complete: {
            Subset ka = sumset(a, {c.spec.lambda, TermCount::exact(c.k)});
            Subset la = sumset(a, {c.spec.lambda, TermCount::exact(c.l)});
            if (c.kind == K::Disjoint) return !ka.bits().intersects(la.bits());
            return ((ka | la).size() == g.order()) == (c.expected != 0);
        }
    }
    return false;
}

bool Construction::verify() const {
    for (const auto& c : claims)
        if (!check_claim(set, c)) return false;
    return true;
}

Params parse_params(const std::string& text) {
    Params p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw Error("malformed parameter '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            long long v = std::stoll(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            p[key] = v;
        } catch (const std::logic_error&) {
            throw Error("malformed parameter value '" + item + "'");
        }
    }
    return p;
}

Construction build_A_d(int n, int m, int d, int h) {
    require(n >= 1 && d >= 1 && n % d == 0, "d must divide n");
    require(m >= 1 && m <= n, "1 <= m <= n");
    const long long c = ceil_div(m, d) - 1, k = m - c * d, step = n / d;
    std::vector<long long> xs;
    for (long long i = 0; i < c; ++i)
        for (long long j = 0; j < d; ++j) xs.push_back(i + j * step);
    for (long long j = 0; j < k; ++j) xs.push_back(c + j * step);
    Construction out{"Ad", {{"n", n}, {"m", m}, {"d", d}}, cyclic_set(n, xs), {}};
    out.claims.push_back(size_claim(m, "def:Ad"));
    if (h > 0) {
        out.params["h"] = h;
        long long want = std::min<long long>({n, f_d(m, h, d), (long long)h * m - h + 1});
        out.claims.push_back(sumset_claim({Lambda::N0, TermCount::exact(h)}, want, "prop:|hA_d(n,m)|"));
        if (h < m)
            out.claims.push_back(
                sumset_claim({Lambda::Restricted, TermCount::exact(h)}, f_hat(n, m, h, d), "thm:uhattheorem"));
    }
    return out;
}

Construction build_B_d(int n, int m, int d, int k1, int k2, int g, int j0) {
    require(n >= 1 && d >= 1 && n % d == 0, "d must divide n");
    require(k1 >= 1 && k2 >= 1 && k1 < d && k2 < d && k1 + k2 > d, "k1,k2 < d and k1+k2 > d");
    require((m - k1 - k2) % d == 0 && m - k1 - k2 >= 0, "m = k1 + (c-1)d + k2");
    require(j0 >= 0 && j0 <= d - 1, "0 <= j0 <= d-1");
    const long long c = (m - k1 - k2) / d + 1, step = n / d;
    std::vector<long long> xs;
    for (long long j = 0; j < k1; ++j) xs.push_back(j * step);
    for (long long i = 1; i <= c - 1; ++i)
        for (long long j = 0; j < d; ++j) xs.push_back(i * g + j * step);
    for (long long j = 0; j < k2; ++j) xs.push_back(c * g + (j0 + j) * step);
    Construction out{"Bd",
                     {{"n", n}, {"m", m}, {"d", d}, {"k1", k1}, {"k2", k2}, {"g", g}, {"j0", j0}},
                     cyclic_set(n, xs),
                     {}};
    require(out.set.size() == m, "g and j0 give repeated elements, the set is not an m-subset");
    out.claims.push_back(size_claim(m, "def:Bd"));
    const std::string cite = "thm:special-sets-listed";
    // the three listed parameter families
    if (d % 2 == 1 && d > 1 && (m - 1) % d == 0 && !is_power_of_two(m - 1) && n % (2 * m - 2) == 0 &&
        k1 == (d + 1) / 2 && k2 == (d + 1) / 2 && g == n / (2 * m - 2) && j0 == (d - 1) / 2)
        out.claims.push_back(sumset_claim({Lambda::Restricted, TermCount::exact(2)}, 2 * m - 4, cite));
    if (m == 6 && n % 10 == 0 && d == 5 && k1 == 4 && k2 == 2 && g == n / 10 && j0 == 3)
        out.claims.push_back(sumset_claim({Lambda::Restricted, TermCount::exact(3)}, 9, cite));
    for (int h = 1; h <= m - 1; h += 2) {
        long long q = (long long)h * m - (long long)h * h;
        if (q <= 0 || (m + 2) % (h + 2) != 0 || n % q != 0) continue;
        if (d == h + 2 && k1 == h + 1 && k2 == h + 1 && g == n / q && j0 == (h + 3) / 2)
            out.claims.push_back(sumset_claim({Lambda::Restricted, TermCount::exact(h)}, q - 1, cite));
    }
    return out;
}

Construction perfect_spanning_pair(int s, PerfectVariant v, int m) {
    require(s >= 1, "s >= 1");
    Construction out;
    out.kind = "perfect";
    int n = 1;
    std::vector<long long> xs;
    switch (v) {
        case PerfectVariant::Consecutive:
            n = 2 * s * s + 2 * s + 1;
            xs = {s, s + 1};
            out.params = {{"s", s}, {"variant", 0}};
            break;
        case PerfectVariant::OneAnd2sPlus1:
            n = 2 * s * s + 2 * s + 1;
            xs = {1, 2 * s + 1};
            out.params = {{"s", s}, {"variant", 1}};
            break;
        case PerfectVariant::Interval:
            require(s == 1 && m >= 1, "interval variant needs s = 1 and m >= 1");
            n = 2 * m + 1;
            for (int i = 1; i <= m; ++i) xs.push_back(i);
            out.params = {{"s", 1}, {"variant", 2}, {"m", m}};
            break;
    }
    out.set = cyclic_set(n, xs);
    out.claims.push_back(size_claim((long long)xs.size(), "prop:perfex"));
    out.claims.push_back({K::Perfect, {Lambda::Z, TermCount::upto(s)}, 0, 0, 0, "prop:perfex"});
    return out;
}

long long interval_weak_sumfree_formula(long long n, long long k, long long l) {
    require(0 < l && l < k && k <= n, "0 < l < k <= n");
    const long long delta = gcd(n, k - l), J = k * k + l * l - (k + l);
    const long long M = floor_div(n + J - 2, k + l), Kc = k * M - J / 2 + 1, Lc = l * M - J / 2 + 1;
    return Lc <= delta * floor_div(n - Kc, delta) ? M + 1 : M;
}

IntervalResult interval_weak_sumfree_scan(int n, int k, int l) {
    require(0 < l && l < k && k <= n, "0 < l < k <= n");
    Group g = Group::cyclic(n);
    IntervalResult best{0, Subset(g)};
    for (int size = n; size >= 1 && best.size == 0; --size) {
        for (int a = 0; a < n; ++a) {
            std::vector<long long> xs;
            for (int i = 0; i < size; ++i) xs.push_back(a + i);
            Subset s = cyclic_set(n, xs);
            Subset ka = sumset(s, {Lambda::Restricted, TermCount::exact(k)});
            Subset la = sumset(s, {Lambda::Restricted, TermCount::exact(l)});
            if (!ka.bits().intersects(la.bits())) {
                best = {size, s};
                break;
            }
        }
    }
    return best;
}

Construction interval_weak_sumfree(int n, int k, int l) {
    long long want = interval_weak_sumfree_formula(n, k, l);
    IntervalResult r = interval_weak_sumfree_scan(n, k, l);
    Construction out{"interval-weak-sumfree", {{"n", n}, {"k", k}, {"l", l}}, r.witness, {}};
    out.claims.push_back(size_claim(want, "prop:max-size-interval-weak-sumfree"));
    out.claims.push_back(disjoint(Lambda::Restricted, k, l, "prop:max-size-interval-weak-sumfree"));
    return out;
}

namespace {

Construction selfridge_even(const Params& p) {
    const long long n = need(p, "n");
    require(n >= 2 && n % 2 == 0, "n even");
    const long long m = opt(p, "m", isqrt(2 * n - 3));
    require(m >= 1 && m <= n, "1 <= m <= n");
    std::vector<long long> xs;
    if (m % 2 == 1) {
        for (long long i = 1; i <= (m - 1) / 2; ++i) xs.push_back(i);
        for (long long i = 0; i <= (m - 1) / 2; ++i) xs.push_back(n / 2 + i);
    } else {
        for (long long i = 1; i <= m / 2 - 1; ++i) xs.push_back(i);
        for (long long i = 0; i <= m / 2; ++i) xs.push_back(n / 2 + i);
    }
    Construction out{"selfridge-even", {{"n", n}, {"m", m}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(m, "prop:zero-sum-free-simple-n-even"));
    out.claims.push_back(zero_free({Lambda::Restricted, TermCount::all_n()}, "prop:zero-sum-free-simple-n-even"));
    return out;
}

Construction selfridge_minus2(const Params& p) {
    const long long n = need(p, "n");
    require(n >= 6, "n >= 6");
    long long m = opt(p, "m", 0);
    if (m == 0) {
        // largest m with 1+3+4+...+m < n
        m = 1;
        while ((m + 1) * (m + 2) / 2 - 2 < n) ++m;
    }
    require(m >= 2 && m * (m + 1) / 2 - 2 < n, "1+3+...+m < n");
    std::vector<long long> xs = {1, -2};
    for (long long i = 3; i <= m; ++i) xs.push_back(i);
    Construction out{"selfridge-minus2", {{"n", n}, {"m", m}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(m, "prop:zero-sum-free-simple-2"));
    out.claims.push_back(zero_free({Lambda::Restricted, TermCount::all_n()}, "prop:zero-sum-free-simple-2"));
    return out;
}

Construction erdos_griggs(const Params& p) {
    const long long n = need(p, "n");
    require(n >= 3, "n >= 3");
    const long long k = isqrt(4 * (n - 2));  // floor(2 sqrt(n-2))
    std::vector<long long> xs;
    long long want;
    if (k % 2 == 1) {
        for (long long i = 1; i <= (k - 1) / 2; ++i) xs.insert(xs.end(), {i, -i});
        want = (k * k + 3) / 4;
    } else {
        for (long long i = 1; i <= (k - 2) / 2; ++i) xs.insert(xs.end(), {i, -i});
        xs.push_back(k / 2);
        want = (k * k + 4) / 4;
    }
    Construction out{"erdos-griggs", {{"n", n}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(k - 1, "prop:sqrt-lower-for-prime"));
    // k = 2 leaves no +-pair, so 0 is not a sum and the interval is just {1}
    if (k == 2) want = 1;
    out.claims.push_back(sumset_claim({Lambda::Restricted, TermCount::all_n()}, want, "prop:sqrt-lower-for-prime"));
    // one past the top of the interval is never reached, so A does not span
    const long long top = k % 2 ? (k * k - 1) / 8 : (k * k + 2 * k) / 8;
    out.claims.push_back({K::Avoids, {Lambda::Restricted, TermCount::all_n()}, 0, 0, (top + 1) % n, "prop:sqrt-lower-for-prime"});
    return out;
}

Construction diderrich(const Params& p) {
    const long long n = need(p, "n");
    require(n >= 4 && !is_prime(n), "n composite");
    const long long q = smallest_prime_factor(n);
    std::vector<long long> xs;
    for (long long j = 1; j < n / q; ++j) xs.push_back(j * q);         // H \ {0}
    for (long long j = 0; j < q - 2; ++j) xs.push_back(1 + j * q);     // 1 + K
    Construction out{"diderrich", {{"n", n}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(n / q + q - 3, "prop:lower-for-composite"));
    out.claims.push_back({K::Avoids, {Lambda::Restricted, TermCount::all_n()}, 0, 0, q - 1, "prop:lower-for-composite"});
    return out;
}

Construction bui(const Params& p) {
    const long long r = need(p, "r");
    require(r >= 1 && r <= 8, "1 <= r <= 8");
    Group g = Group::parse("Z3^" + std::to_string(r));
    const long long q = r / 3, s = r % 3;
    Subset a(g);
    long long want = 0;
    for (long long i = std::max<long long>(0, q + s - 1); i <= std::min(2 * q + s - 1, r - 1); ++i) {
        want += 2 * (long long)binom(r, i);
        // elements with exactly i zero coordinates, the rest all 1 (or all 2)
        for (int idx = 0; idx < g.order(); ++idx) {
            GroupElement e = g.element(idx);
            int zeros = 0, ones = 0, twos = 0;
            for (int c : e.coords) (c == 0 ? zeros : c == 1 ? ones : twos)++;
            if (zeros == i && (ones == 0 || twos == 0)) a.insert(idx);
        }
    }
    Construction out{"bui", {{"r", r}}, a, {}};
    out.claims.push_back(size_claim(want, "thm:z3r-index-set"));
    out.claims.push_back(zero_free({Lambda::Restricted, TermCount::exact(3)}, "thm:z3r-index-set"));
    return out;
}

Construction kemnitz(const Params& p) {
    const long long k = need(p, "k"), r = need(p, "r");
    require(k >= 2 && r >= 1 && ipow(k, int(r)) <= (1 << 20), "k >= 2, r >= 1, k^r <= 2^20");
    Group g = Group::parse("Z" + std::to_string(k) + "^" + std::to_string(r));
    Subset a(g);
    for (int idx = 0; idx < g.order(); ++idx) {
        GroupElement e = g.element(idx);
        bool ok = true;
        for (long long i = 0; i + 1 < r; ++i) ok = ok && e.coords[i] <= 1;
        if (k % 2 == 1) ok = ok && e.coords[r - 1] != k - 1;
        if (ok) a.insert(idx);
    }
    long long want = (k % 2 == 1 ? k - 1 : k) << (r - 1);
    Construction out{"kemnitz", {{"k", k}, {"r", r}}, a, {}};
    out.claims.push_back(size_claim(want, "prop:kemnitz-bounds"));
    out.claims.push_back(zero_free({Lambda::Restricted, TermCount::exact(int(k))}, "prop:kemnitz-bounds"));
    return out;
}

Construction hallfors1(const Params& p) {
    const long long n = need(p, "n"), k = need(p, "k"), l = need(p, "l");
    require(0 < l && l < k, "0 < l < k");
    const long long q = (k * k - l * l) * (k - 1);
    require(n % q == 0, "(k^2-l^2)(k-1) divides n");
    const long long a = l * n / q, c = n / ((k + l) * (k - 1)), step = n / (k - 1);
    std::vector<long long> xs;
    for (long long i = 0; i <= c; ++i)
        for (long long j = 0; j < k - 1; ++j) xs.push_back(a + i + j * step);
    Construction out{"hallfors1", {{"n", n}, {"k", k}, {"l", l}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(n / (k + l) + k - 1, "prop:interval-cosets-weak-sumfree"));
    out.claims.push_back(disjoint(Lambda::Restricted, int(k), int(l), "prop:interval-cosets-weak-sumfree"));
    if (l <= k - 2)
        out.claims.push_back({K::Complete, {Lambda::Restricted, TermCount::exact(int(k))}, int(k), int(l), 1,
                              "prop:interval-cosets-weak-sumfree"});
    return out;
}

Construction hallfors2(const Params& p) {
    const long long n = need(p, "n"), k = need(p, "k"), l = need(p, "l"), d = need(p, "d");
    require(0 < l && l < k, "0 < l < k");
    require(d >= 2 && d % 2 == 0 && n % d == 0, "d even divisor of n");
    require(n >= d * (d / 2 - 1), "n >= d(d/2-1)");
    require(mod(k - l, d) == d / 2, "remainders of k and l differ by d/2");
    std::vector<long long> xs;
    for (long long j = 0; j < n / d; ++j) xs.push_back(1 + j * d);  // 1 + H
    for (long long j = 0; j <= d / 2 - 2; ++j) xs.push_back(j * d);  // H_d
    Construction out{"hallfors2", {{"n", n}, {"k", k}, {"l", l}, {"d", d}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(n / d + d / 2 - 1, "prop:coset-plus-progression-weak-sumfree"));
    out.claims.push_back(disjoint(Lambda::Restricted, int(k), int(l), "prop:coset-plus-progression-weak-sumfree"));
    bool complete = d / 2 - 1 < l && k < n / d;
    out.claims.push_back({K::Complete, {Lambda::Restricted, TermCount::exact(int(k))}, int(k), int(l), complete,
                          "prop:coset-plus-progression-weak-sumfree"});
    return out;
}

Construction interval_1t(const Params& p) {
    const long long n = need(p, "n"), t = need(p, "t");
    require(n >= 1 && t >= 1, "n, t >= 1");
    std::vector<long long> xs;
    for (long long i = 1; i <= (n - 1) / t; ++i) xs.push_back(i);
    Construction out{"interval-1t", {{"n", n}, {"t", t}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim((n - 1) / t, "thm:tau-1t-cyclic"));
    out.claims.push_back(zero_free({Lambda::N0, TermCount::range1(int(t))}, "thm:tau-1t-cyclic"));
    return out;
}

Construction collins(const Params& p) {
    const long long n = need(p, "n"), h = need(p, "h");
    require(n % 2 == 1 && h % 2 == 1 && h >= 1 && h <= n, "n, h odd and h <= n");
    const long long num = 2 * n + h * h - 3, q = num / (4 * h), r = num % (4 * h);
    const long long c = (n + 1) / 2;
    std::vector<long long> xs;
    for (long long x = c - q; x <= c + q - 1; ++x) xs.push_back(x);
    if (r >= 2 * h) xs.push_back(c + q);
    Construction out{"collins", {{"n", n}, {"h", h}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(num / (2 * h), "prop:tau-hat-pm-odd-lower"));
    out.claims.push_back(zero_free({Lambda::RestrictedSigned, TermCount::exact(int(h))}, "prop:tau-hat-pm-odd-lower"));
    return out;
}

Construction three_independent(const Params& p) {
    const long long n = need(p, "n");
    require(n >= 1, "n >= 1");
    std::vector<long long> xs;
    long long want;
    long long p5 = 0;
    for (auto [q, e] : factorize(n))
        if (q % 6 == 5) {
            p5 = q;
            break;
        }
    if (n % 2 == 0) {
        for (long long i = 0; i < n / 4; ++i) xs.push_back(2 * i + 1);
        want = n / 4;
    } else if (p5) {
        for (long long i1 = 0; i1 < n / p5; ++i1)
            for (long long i2 = 0; i2 <= (p5 - 5) / 6; ++i2) xs.push_back(p5 * i1 + 2 * i2 + 1);
        want = (p5 + 1) * (n / p5) / 6;
    } else {
        for (long long i = 0; i < n / 6; ++i) xs.push_back(2 * i + 1);
        want = n / 6;
    }
    Construction out{"three-independent", {{"n", n}}, cyclic_set(int(n), xs), {}};
    out.claims.push_back(size_claim(want, "thm:3free"));
    out.claims.push_back(zero_free({Lambda::Z, TermCount::range1(3)}, "thm:3free"));
    return out;
}

}  // namespace

Construction named_set(const std::string& kind, const Params& p) {
    if (kind == "selfridge-even") return selfridge_even(p);
    if (kind == "selfridge-minus2") return selfridge_minus2(p);
    if (kind == "erdos-griggs") return erdos_griggs(p);
    if (kind == "diderrich") return diderrich(p);
    if (kind == "bui") return bui(p);
    if (kind == "kemnitz") return kemnitz(p);
    if (kind == "hallfors1") return hallfors1(p);
    if (kind == "hallfors2") return hallfors2(p);
    if (kind == "interval-1t") return interval_1t(p);
    if (kind == "collins") return collins(p);
    if (kind == "three-independent") return three_independent(p);
    throw Error("unknown construction kind '" + kind + "'");
}

Construction build(const std::string& kind, const Params& p) {
    if (kind == "Ad")
        return build_A_d(int(need(p, "n")), int(need(p, "m")), int(need(p, "d")), int(opt(p, "h", 0)));
    if (kind == "Bd")
        return build_B_d(int(need(p, "n")), int(need(p, "m")), int(need(p, "d")), int(need(p, "k1")),
                         int(need(p, "k2")), int(need(p, "g")), int(need(p, "j0")));
    if (kind == "perfect") {
        long long v = opt(p, "variant", 0);
        require(v >= 0 && v <= 2, "variant in 0..2");
        return perfect_spanning_pair(int(need(p, "s")), PerfectVariant(v), int(opt(p, "m", 0)));
    }
    if (kind == "interval-weak-sumfree")
        return interval_weak_sumfree(int(need(p, "n")), int(need(p, "k")), int(need(p, "l")));
    return named_set(kind, p);
}

std::vector<std::string> construction_kinds() {
    return {"Ad",  "Bd",     "perfect",   "interval-weak-sumfree", "selfridge-even", "selfridge-minus2",
            "erdos-griggs", "diderrich", "bui", "kemnitz", "hallfors1", "hallfors2", "interval-1t", "collins",
            "three-independent"};
}

}  // namespace sumsets
