#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsets {

using i128 = __int128;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OverflowError : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

// checked 128-bit arithmetic
i128 checked_add(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);
std::string to_string(i128 v);

long long gcd(long long a, long long b);
long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);
long long positive_rem(long long m, long long d);  // in [1,d]

const std::vector<int>& divisors(int n);  // ascending, memoized
std::vector<std::pair<long long, int>> factorize(long long n);
bool is_prime(std::uint64_t n);  // deterministic Miller-Rabin
long long smallest_prime_factor(long long n);
long long isqrt(long long n);
int floor_log2(std::uint64_t n);

i128 binom(long long n, long long k);  // 0 outside range; checked
i128 ipow(i128 b, int e);

}  // namespace sumsets
