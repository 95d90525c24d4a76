#include "sumsets/arith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace sumsets {

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
    return r;
}

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
    return r;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

long long gcd(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

long long positive_rem(long long m, long long d) { return m - d * (ceil_div(m, d) - 1); }

const std::vector<int>& divisors(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<int>>> memo;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = memo[n];
    if (!slot) {
        std::vector<int> lo, hi;
        for (int d = 1; (long long)d * d <= n; ++d)
            if (n % d == 0) {
                lo.push_back(d);
                if (d != n / d) hi.push_back(n / d);
            }
        lo.insert(lo.end(), hi.rbegin(), hi.rend());
        slot = std::make_unique<std::vector<int>>(std::move(lo));
    }
    return *slot;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

namespace {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}
}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s && comp; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

long long smallest_prime_factor(long long n) {
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

long long isqrt(long long n) {
    if (n < 0) throw Error("isqrt of negative value");
    long long r = (long long)__builtin_sqrtl((long double)n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int floor_log2(std::uint64_t n) {
    if (n == 0) throw Error("log2 of zero");
    return 63 - __builtin_clzll(n);
}

i128 binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

i128 ipow(i128 b, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

}  // namespace sumsets
