#include "sumsets/side.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <vector>

namespace sumsets {

namespace {
void need(bool ok, const char* what) {
    if (!ok) throw Error(what);
}
int nint(long long n) {
    need(n >= 1 && n <= INT_MAX, "n out of range");
    return int(n);
}
}  // namespace

SideValue v_def(long long n, long long h, long long g) {
    need(n >= 1 && h >= 1 && g >= 1 && g <= h, "v_g(n,h) needs n >= 1 and 1 <= g <= h");
    SideValue best{LLONG_MIN, 0};
    for (int d : divisors(nint(n))) {
        long long val = (floor_div(d - 1 - gcd(d, g), h) + 1) * (n / d);
        if (val > best.value) best = {val, d};
    }
    return best;
}

long long v_fast(long long n, long long h, long long g) {
    need(n >= 1 && h >= 1 && g >= 1 && g <= h, "v_g(n,h) needs n >= 1 and 1 <= g <= h");
    // smallest divisor in each residue class i mod h with gcd(d,g) < i
    std::vector<long long> di(h, 0);
    for (int d : divisors(nint(n))) {
        long long i = d % h;
        if (gcd(d, g) < i && di[i] == 0) di[i] = d;
    }
    // max over i of n/h * (1 + (h-i)/d_i) = n (d_i + h - i) / (h d_i)
    bool any = false;
    long long num = 0, den = 1;
    for (long long i = 0; i < h; ++i) {
        if (!di[i]) continue;
        long long a = n * (di[i] + h - i), b = h * di[i];
        if (!any || (i128)a * den > (i128)num * b) num = a, den = b;
        any = true;
    }
    if (any) return num / den;
    return g != h ? n / h : (n - 1) / h;
}

SideValue v(long long n, long long h, long long g) {
    SideValue r = v_def(n, h, g);
#ifndef NDEBUG
    assert(r.value == v_fast(n, h, g));
#endif
    return r;
}

SideValue v_pm(long long n, long long h) {
    need(n >= 1 && h >= 1, "v_pm(n,h) needs n,h >= 1");
    SideValue best{LLONG_MIN, 0};
    for (int d : divisors(nint(n))) {
        long long val = (2 * floor_div(d - 2, 2 * h) + 1) * (n / d);
        if (val > best.value) best = {val, d};
    }
    return best;
}

long long f_d(long long m, long long h, long long d) { return (h * ceil_div(m, d) - h + 1) * d; }

SideValue u(long long n, long long m, long long h) {
    need(m >= 1 && m <= n && h >= 1, "u(n,m,h) needs 1 <= m <= n and h >= 1");
    SideValue best{LLONG_MAX, 0};
    for (int d : divisors(nint(n))) {
        long long val = f_d(m, h, d);
        if (val < best.value) best = {val, d};
    }
    return best;
}

long long delta_d(long long d, long long m, long long h) {
    need(d >= 1 && m >= 1 && h >= 1, "delta_d needs positive arguments");
    long long k = positive_rem(m, d), r = positive_rem(h, d);
    if (r < k) return (k - r) * r - (d - 1);
    if (k < r && r < d) return (d - r) * (r - k) - (d - 1);
    if (k == d && r == d) return d - 1;
    return 0;
}

long long f_hat(long long n, long long m, long long h, long long d) {
    need(d >= 1 && n % d == 0, "f_hat needs d | n");
    need(h >= 1 && h < m && m <= n, "f_hat needs 1 <= h < m <= n");
    long long k = positive_rem(m, d);
    long long base = h * m - h * h + 1;
    if (h <= std::min(k, d - 1)) return std::min({n, f_d(m, h, d), base});
    return std::min(n, base - delta_d(d, m, h));
}

SideValue u_hat(long long n, long long m, long long h) {
    need(h >= 1 && h < m && m <= n, "uhat(n,m,h) needs 1 <= h < m <= n");
    SideValue best{LLONG_MAX, 0};
    for (int d : divisors(nint(n))) {
        long long val = f_hat(n, m, h, d);
        if (val < best.value) best = {val, d};
    }
    return best;
}

long long u_hat_h2(long long n, long long m) {
    long long uu = u(n, m, 2).value;
    return (n % 2 == 0 && m % 2 == 0) ? std::min(uu, 2 * m - 4) : std::min(uu, 2 * m - 3);
}

long long u_hat_h3(long long n, long long m) {
    long long uu = u(n, m, 3).value;
    long long g = gcd(n, m - 1);
    if (g >= 8) return std::min(uu, 3 * m - 3 - g);
    if (g == 7 || (g <= 5 && n % 3 == 0 && m % 3 == 0)) return std::min(uu, 3 * m - 10);
    if (g == 6) return std::min(uu, 3 * m - 9);
    return std::min(uu, 3 * m - 8);
}

long long h_critical(long long n, long long h) { return v(n, h, 1).value + 1; }

SideValue v_hat(long long n, long long s) {
    need(n >= 1 && s >= 1, "vhat(n,s) needs n,s >= 1");
    SideValue best{0, 0};
    for (int d : divisors(nint(n))) {
        if (d < s + 2) continue;
        long long val = ((d - 2) / s + 1) * (n / d);
        if (val > best.value) best = {val, d};
    }
    return best;
}

SideValue v_hat_pm(long long n, long long s) {
    need(n >= 1 && s >= 1, "vhat_pm(n,s) needs n,s >= 1");
    SideValue best{0, 0};
    for (int d : divisors(nint(n))) {
        if (d < 2 * s + 2) continue;
        long long val = (2 * ((d - 2) / (2 * s)) + 1) * (n / d);
        if (val > best.value) best = {val, d};
    }
    return best;
}

SideValue u_pm_upto(long long n, long long m, long long s) {
    need(m >= 1 && m <= n && s >= 1, "u_pm(n,m,[0,s]) needs 1 <= m <= n and s >= 1");
    auto val2 = [](long long k) { return k == 0 ? 64 : __builtin_ctzll((unsigned long long)k); };
    SideValue best{LLONG_MAX, 0};
    for (int d : divisors(nint(n))) {
        long long val = val2(n) >= val2(d * ceil_div(m, d)) ? f_d(m, s, d) : f_d(m + d, s, d);
        if (val < best.value) best = {val, d};
    }
    return best;
}

}  // namespace sumsets
