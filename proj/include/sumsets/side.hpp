#pragma once
#include "sumsets/arith.hpp"

namespace sumsets {

struct SideValue {
    long long value = 0;
    long long witness_divisor = 0;  // 0 when no divisor applies
};

// v_g(n,h)
SideValue v_def(long long n, long long h, long long g);
long long v_fast(long long n, long long h, long long g);  // divisor-class formula
SideValue v(long long n, long long h, long long g);       // fast value, debug builds assert agreement

SideValue v_pm(long long n, long long h);

long long f_d(long long m, long long h, long long d);
SideValue u(long long n, long long m, long long h);

long long delta_d(long long d, long long m, long long h);
long long f_hat(long long n, long long m, long long h, long long d);
SideValue u_hat(long long n, long long m, long long h);
// closed forms for h = 2 and h = 3
long long u_hat_h2(long long n, long long m);
long long u_hat_h3(long long n, long long m);

long long h_critical(long long n, long long h);

SideValue v_hat(long long n, long long s);
SideValue v_hat_pm(long long n, long long s);

// upper bound for the signed [0,s] minimum in Z_n
SideValue u_pm_upto(long long n, long long m, long long s);

}  // namespace sumsets
