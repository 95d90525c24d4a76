#include "sumsets/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sumsets/side.hpp"

namespace sumsets {

int order2_count(const Group& g) {
    int even = 0;
    for (int f : g.factors()) even += f % 2 == 0;
    return (1 << even) - 1;
}

bool is_elementary_2(const Group& g) {
    if (g.order() < 2) return false;
    for (int f : g.factors())
        if (f != 2) return false;
    return true;
}

namespace {

using Kind = TermCount::Kind;

bool prime_cyclic(const Group& g) { return g.is_cyclic() && is_prime(g.order()); }

// all factors equal to one prime p; returns p or 0
long long elementary_prime(const Group& g) {
    if (g.order() < 2) return 0;
    long long p = g.factors().front();
    if (!is_prime(p)) return 0;
    for (int f : g.factors())
        if (f != p) return 0;
    return p;
}

bool match(const QuantityQuery& q, Family f, Lambda l, Kind k) {
    return q.family == f && q.lambda == l && q.terms.kind == k && (f != Family::Mu || q.k == 0);
}

bool plain(const QuantityQuery& q) { return !q.generating && !q.exclude_zero; }

bool mu_pair(const QuantityQuery& q, Lambda l) { return q.family == Family::Mu && q.lambda == l && q.k > 0; }

KnownResult res(std::string id, std::optional<long long> v, std::string why) {
    return {std::move(id), v, std::move(why), true};
}

QuantityQuery mk(Family f, const Group& g, Lambda l, TermCount t, int m = 0) {
    QuantityQuery q;
    q.family = f;
    q.group = g;
    q.lambda = l;
    q.terms = t;
    q.m = m;
    return q;
}

QuantityQuery mk_mu(const Group& g, Lambda l, int k, int lo) {
    QuantityQuery q = mk(Family::Mu, g, l, TermCount::exact(k));
    q.k = k;
    q.l = lo;
    return q;
}

std::vector<Group> groups_upto(int max_n, bool cyclic_only, int min_n = 1) {
    std::vector<Group> out;
    for (int n = min_n; n <= max_n; ++n) {
        if (cyclic_only) {
            out.push_back(Group::cyclic(n));
        } else {
            for (auto& g : Group::all_of_order(n)) out.push_back(g);
        }
    }
    return out;
}

std::vector<Group> primes_upto(int max_n) {
    std::vector<Group> out;
    for (int n = 2; n <= max_n; ++n)
        if (is_prime(n)) out.push_back(Group::cyclic(n));
    return out;
}

long long v1(long long n, long long h) { return v(n, h, 1).value; }

std::vector<Theorem> build_registry() {
    std::vector<Theorem> r;
    auto add = [&](std::string id, std::string st, auto apply, auto grid) {
        r.push_back({std::move(id), std::move(st), true, "", apply, grid});
    };
    auto none_grid = [](int) { return std::vector<QuantityQuery>{}; };

    add("triv:zero-fold", "the 0-fold sumset is {0}, so rho(G,m,0) = nu(G,m,0) = 1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if ((q.family == Family::Rho || q.family == Family::Nu) && q.terms == TermCount::exact(0) &&
                q.m >= 1 && q.m <= q.group.order())
                return res("triv:zero-fold", 1, "h = 0");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 8), true))
                for (int m = 1; m <= g.order(); ++m)
                    out.push_back(mk(Family::Rho, g, Lambda::N0, TermCount::exact(0), m));
            return out;
        });

    add("prop:nu-h1", "nu(G,m,1) = m",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Nu, Lambda::N0, Kind::Exact) && q.terms.value == 1 && q.m >= 1 &&
                q.m <= q.group.order())
                return res("prop:nu-h1", q.m, "h = 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 10), false))
                for (int m = 1; m <= g.order(); ++m)
                    out.push_back(mk(Family::Nu, g, Lambda::N0, TermCount::exact(1), m));
            return out;
        });

    add("thm:rho=u", "rho(G,m,h) = u(n,m,h) for every finite abelian G",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            const int n = q.group.order();
            if (match(q, Family::Rho, Lambda::N0, Kind::Exact) && q.terms.value >= 1 && q.m >= 1 && q.m <= n)
                return res("thm:rho=u", u(n, q.m, q.terms.value).value, "any group, h >= 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false))
                for (int m = 1; m <= g.order(); ++m)
                    for (int h = 1; h <= 6; ++h) out.push_back(mk(Family::Rho, g, Lambda::N0, TermCount::exact(h), m));
            return out;
        });

    add("cor:rho-vs-p", "rho(G,m,h) = min{p, hm-h+1} when m <= p, p the least prime divisor of n",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            const int n = q.group.order();
            if (!match(q, Family::Rho, Lambda::N0, Kind::Exact) || q.terms.value < 1 || n < 2) return std::nullopt;
            long long p = smallest_prime_factor(n), h = q.terms.value;
            if (q.m < 1 || q.m > p) return std::nullopt;
            return res("cor:rho-vs-p", std::min(p, h * q.m - h + 1), "m <= smallest prime divisor " + std::to_string(p));
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 20), false, 2)) {
                int p = int(smallest_prime_factor(g.order()));
                for (int m = 1; m <= p; ++m)
                    for (int h = 1; h <= 5; ++h) out.push_back(mk(Family::Rho, g, Lambda::N0, TermCount::exact(h), m));
            }
            return out;
        });

    add("thm:rhohat-prime", "rho^(Z_p,m,h) = min{p, hm-h^2+1} for 1 <= h <= m <= p",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Rho, Lambda::Restricted, Kind::Exact) || !prime_cyclic(q.group)) return std::nullopt;
            long long p = q.group.order(), h = q.terms.value, m = q.m;
            if (!(1 <= h && h <= m && m <= p)) return std::nullopt;
            return res("thm:rhohat-prime", std::min(p, h * m - h * h + 1), "n prime");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : primes_upto(std::min(max_n, 23)))
                for (int m = 1; m <= g.order(); ++m)
                    for (int h = 1; h <= std::min(m, 6); ++h)
                        out.push_back(mk(Family::Rho, g, Lambda::Restricted, TermCount::exact(h), m));
            return out;
        });

    add("thm:rhopm-cyclic", "rho_pm(Z_n,m,h) = rho(Z_n,m,h)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            const int n = q.group.order();
            if (match(q, Family::Rho, Lambda::Z, Kind::Exact) && q.group.is_cyclic() && q.terms.value >= 1 &&
                q.m >= 1 && q.m <= n)
                return res("thm:rhopm-cyclic", u(n, q.m, q.terms.value).value, "cyclic");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 14), true))
                for (int m = 1; m <= g.order(); ++m)
                    for (int h = 1; h <= 4; ++h) out.push_back(mk(Family::Rho, g, Lambda::Z, TermCount::exact(h), m));
            return out;
        });

    add("prop:rhohat-m=4", "rho^(G,4,2) is 3, 4 or 5 as |Ord(G,2)| is >= 2, 1 or 0",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Rho, Lambda::Restricted, Kind::Exact) || q.terms.value != 2 || q.m != 4 ||
                q.group.order() < 4)
                return std::nullopt;
            int o = order2_count(q.group);
            return res("prop:rhohat-m=4", o >= 2 ? 3 : o == 1 ? 4 : 5, "|Ord(G,2)| = " + std::to_string(o));
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 32), false, 4))
                out.push_back(mk(Family::Rho, g, Lambda::Restricted, TermCount::exact(2), 4));
            return out;
        });

    add("thm:rhohat-m5", "rho^(G,5,2) is 5 if 5 | n, else 6 if 6 | n, else 7",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            const int n = q.group.order();
            if (!match(q, Family::Rho, Lambda::Restricted, Kind::Exact) || q.terms.value != 2 || q.m != 5 || n < 5)
                return std::nullopt;
            return res("thm:rhohat-m5", n % 5 == 0 ? 5 : n % 6 == 0 ? 6 : 7, "m = 5, h = 2");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 32), false, 5))
                out.push_back(mk(Family::Rho, g, Lambda::Restricted, TermCount::exact(2), 5));
            return out;
        });

    add("prop:rho-pm-upto-trivial", "rho_pm(G,m,[0,0]) = 1, rho_pm(G,1,[0,s]) = 1, rho_pm(G,m,[0,1]) = m or m+1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            const long long n = q.group.order();
            if (!match(q, Family::Rho, Lambda::Z, Kind::UpTo) || q.m < 1 || q.m > n) return std::nullopt;
            const std::string id = "prop:rho-pm-upto-trivial";
            if (q.terms.value == 0 || q.m == 1) return res(id, 1, "s = 0 or m = 1");
            if (q.terms.value == 1) return res(id, n % 2 == 1 && q.m % 2 == 0 ? q.m + 1 : q.m, "s = 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false))
                for (int m = 1; m <= g.order(); ++m)
                    for (int s = 0; s <= 2; ++s) out.push_back(mk(Family::Rho, g, Lambda::Z, TermCount::upto(s), m));
            return out;
        });

    add("thm:rhopm-upto-prime", "rho_pm(Z_p,m,[0,s]) = min{p, 2s floor(m/2) + 1} for odd primes p",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Rho, Lambda::Z, Kind::UpTo) || !prime_cyclic(q.group) || q.group.order() == 2)
                return std::nullopt;
            long long p = q.group.order(), s = q.terms.value;
            if (q.m < 1 || q.m > p || s < 0) return std::nullopt;
            return res("thm:rhopm-upto-prime", std::min(p, 2 * s * (q.m / 2) + 1), "odd prime");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : primes_upto(std::min(max_n, 17)))
                if (g.order() > 2)
                    for (int m = 1; m <= g.order(); ++m)
                        for (int s = 1; s <= 3; ++s)
                            out.push_back(mk(Family::Rho, g, Lambda::Z, TermCount::upto(s), m));
            return out;
        });

    add("thm:h-crit-numb", "chi(G,h) = v_1(n,h) + 1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Chi, Lambda::N0, Kind::Exact) && plain(q) && q.terms.value >= 1)
                return res("thm:h-crit-numb", v1(q.group.order(), q.terms.value) + 1, "any group, h >= 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false))
                for (int h = 1; h <= 6; ++h) out.push_back(mk(Family::Chi, g, Lambda::N0, TermCount::exact(h)));
            return out;
        });

    add("prop:restricted-h-critical-easy", "chi^(G,h) for h in {0, 1, n-1, n} and h > n",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::Exact) || !plain(q)) return std::nullopt;
            const long long n = q.group.order(), h = q.terms.value;
            const std::string id = "prop:restricted-h-critical-easy";
            if (h == 0 || h == n) return res(id, n == 1 ? std::optional<long long>(1) : std::nullopt, "h = 0 or h = n");
            if (h == 1 || h == n - 1) return res(id, n, "h = 1 or h = n-1");
            if (h > n) return res(id, std::nullopt, "h > n");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 12), false)) {
                std::set<int> hs = {0, 1, g.order() - 1, g.order(), g.order() + 1};
                for (int h : hs)
                    if (h >= 0) out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(h)));
            }
            return out;
        });

    add("thm:crit-exists", "chi^(G,h) exists for 1 <= h <= n-1 except elementary 2-groups with h in {2, n-2}",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::Exact) || !plain(q)) return std::nullopt;
            const long long n = q.group.order(), h = q.terms.value;
            if (h >= 1 && h <= n - 1 && is_elementary_2(q.group) && (h == 2 || h == n - 2))
                return res("thm:crit-exists", std::nullopt, "elementary abelian 2-group");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (int n = 2; n <= max_n; n *= 2) {
                Group g = Group::normalize(std::vector<long long>(floor_log2(n), 2));
                out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(2)));
                if (n >= 4) out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(n - 2)));
            }
            return out;
        });

    add("prop:2-chrom-G", "chi^(G,2) = (n + |Ord(G,2)| + 3)/2 unless G is an elementary 2-group",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::Exact) || !plain(q) || q.terms.value != 2)
                return std::nullopt;
            const int n = q.group.order();
            if (n < 3 || is_elementary_2(q.group)) return std::nullopt;
            return res("prop:2-chrom-G", (n + order2_count(q.group) + 3) / 2, "n >= 3, not elementary 2-group");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 24), false, 3))
                if (!is_elementary_2(g)) out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(2)));
            return out;
        });

    add("thm:prime-rest-crit", "chi^(Z_p,h) = floor((p-2)/h) + h + 1 for h <= p-1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::Exact) || !plain(q) || !prime_cyclic(q.group))
                return std::nullopt;
            long long p = q.group.order(), h = q.terms.value;
            if (h < 1 || h > p - 1) return std::nullopt;
            return res("thm:prime-rest-crit", (p - 2) / h + h + 1, "n prime");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : primes_upto(std::min(max_n, 23)))
                for (int h = 1; h <= g.order() - 1; ++h)
                    out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(h)));
            return out;
        });

    add("thm:chihat-even", "chi^(G,h) for even n >= 12 and 3 <= h <= n-2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::Exact) || !plain(q)) return std::nullopt;
            const long long n = q.group.order(), h = q.terms.value;
            if (n < 12 || n % 2 != 0 || h < 3 || h > n - 2) return std::nullopt;
            const auto& f = q.group.factors();
            bool special = std::all_of(f.begin(), f.end(), [](int x) { return x == 2; }) ||
                           (f.back() == 4 && std::all_of(f.begin(), f.end() - 1, [](int x) { return x == 2; }));
            const long long o = order2_count(q.group);
            long long val;
            if (special && (h == 3 || h == n / 2 - 2))
                val = n / 2 + 2;
            else if (h <= n / 2 - 2)
                val = n / 2 + 1;
            else if (2 * h <= n + o - 3)
                val = h + 3;
            else
                val = h + 2;
            // a value above n means no size works
            if (val > n) return res("thm:chihat-even", std::nullopt, "even n >= 12; formula exceeds n");
            return res("thm:chihat-even", val, "even n >= 12");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false, 12))
                if (g.order() % 2 == 0)
                    for (int h = 3; h <= g.order() - 2; ++h)
                        out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(h)));
            return out;
        });

    add("prop:chi-hat-big-h", "chi^(G,h) = h + 2 for odd n and (n-1)/2 <= h <= n-2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::Exact) || !plain(q)) return std::nullopt;
            const long long n = q.group.order(), h = q.terms.value;
            if (n % 2 == 0 || h < 1 || 2 * h < n - 1 || h > n - 2) return std::nullopt;
            return res("prop:chi-hat-big-h", h + 2, "odd n");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 21), false, 3))
                if (g.order() % 2 == 1)
                    for (int h = (g.order() - 1) / 2; h <= g.order() - 2; ++h)
                        if (h >= 1) out.push_back(mk(Family::Chi, g, Lambda::Restricted, TermCount::exact(h)));
            return out;
        });

    add("cor:combined-simpler", "chi^(G*,N) for n >= 10",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::AllN) || !q.exclude_zero || q.generating)
                return std::nullopt;
            const long long n = q.group.order();
            if (n < 10) return std::nullopt;
            const long long p = smallest_prime_factor(n), k = isqrt(4 * (n - 2));
            bool first = false;
            if (q.group.is_cyclic()) {
                if (n == p) first = true;
                long long qq = n / p;
                if (n % p == 0 && qq >= p && is_prime(qq) && p >= 3 && qq <= p + isqrt(4 * (p - 2)) + 1) first = true;
            }
            return res("cor:combined-simpler", first ? k : n / p + p - 2, first ? "cyclic, n = p or pq" : "other");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 30), false, 10)) {
                QuantityQuery q = mk(Family::Chi, g, Lambda::Restricted, TermCount::all_n());
                q.exclude_zero = true;
                out.push_back(q);
            }
            return out;
        });

    add("thm:chihat-star-even", "chi^(G*,N) = n/2 for even n >= 4, n/2+1 for Z4, Z6, Z8, Z2^2, Z2xZ4",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::Restricted, Kind::AllN) || !q.exclude_zero || q.generating)
                return std::nullopt;
            const long long n = q.group.order();
            if (n < 4 || n % 2 != 0) return std::nullopt;
            static const std::set<std::vector<int>> ex = {{4}, {6}, {8}, {2, 2}, {2, 4}};
            bool e = ex.count(q.group.factors()) > 0;
            return res("thm:chihat-star-even", e ? n / 2 + 1 : n / 2, "even n >= 4");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 30), false, 4))
                if (g.order() % 2 == 0) {
                    QuantityQuery q = mk(Family::Chi, g, Lambda::Restricted, TermCount::all_n());
                    q.exclude_zero = true;
                    out.push_back(q);
                }
            return out;
        });

    add("thm:chihat-cyclic-upto", "chi^(Z_n,[0,s]) = v^(n,s) + 1, generating sets",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::N0, Kind::UpTo) || !(q.generating && !q.exclude_zero) || !q.group.is_cyclic() ||
                q.terms.value < 1)
                return std::nullopt;
            return res("thm:chihat-cyclic-upto", v_hat(q.group.order(), q.terms.value).value + 1, "cyclic");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), true))
                for (int s = 1; s <= 4; ++s) {
                    auto q = mk(Family::Chi, g, Lambda::N0, TermCount::upto(s));
                    q.generating = true;
                    out.push_back(q);
                }
            return out;
        });

    add("thm:chihat-elem2-upto", "chi^(Z_2^r,[0,s]) = (s+2) 2^(r-s-1) + 1 for r > s >= 2, else 1, generating sets",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::N0, Kind::UpTo) || !(q.generating && !q.exclude_zero) || !is_elementary_2(q.group))
                return std::nullopt;
            const long long s = q.terms.value, r = q.group.rank();
            if (s < 2) return std::nullopt;
            return res("thm:chihat-elem2-upto", r <= s ? 1 : (s + 2) * (1LL << (r - s - 1)) + 1, "elementary 2-group");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (int r = 1; (1 << r) <= std::min(max_n, 16); ++r)
                for (int s = 2; s <= 4; ++s)
                    {
                    auto q = mk(Family::Chi, Group::normalize(std::vector<long long>(r, 2)), Lambda::N0,
                                TermCount::upto(s));
                    q.generating = true;
                    out.push_back(q);
                }
            return out;
        });

    add("thm:chihat-upto-extremes", "chi^(G,[0,s]) over generating sets for s in {1, 2, D-1} and s >= D",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Chi, Lambda::N0, Kind::UpTo) || !q.generating || q.exclude_zero)
                return std::nullopt;
            const long long n = q.group.order(), s = q.terms.value;
            if (n < 2) return std::nullopt;
            long long diam = 0;
            for (int f : q.group.factors()) diam += f - 1;
            const std::string id = "thm:chihat-upto-extremes";
            const std::vector<int> z2 = {2}, z22 = {2, 2};
            if (s >= diam) return res(id, 1, "s >= positive diameter");
            if (q.group.factors() == z2) return std::nullopt;
            if (s == diam - 1) return res(id, q.group.rank() + 2, "s = D-1");
            if (s == 1) return res(id, n, "s = 1");
            if (s == 2 && q.group.factors() != z22) return res(id, n / 2 + 1, "s = 2");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false, 2))
                for (int s = 1; s <= 5; ++s) {
                    auto q = mk(Family::Chi, g, Lambda::N0, TermCount::upto(s));
                    q.generating = true;
                    out.push_back(q);
                }
            return out;
        });

    add("prop:phi-01", "phi(G,[0,1]) = n-1 for n >= 2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Phi, Lambda::N0, Kind::UpTo) && q.terms.value == 1 && q.group.order() >= 2)
                return res("prop:phi-01", q.group.order() - 1, "n >= 2");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 12), false, 2))
                out.push_back(mk(Family::Phi, g, Lambda::N0, TermCount::upto(1)));
            return out;
        });

    add("prop:phi-pm-US-h=1", "phi_pm(G,1) = (n + |Ord(G,2)| + 1)/2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Phi, Lambda::Z, Kind::Exact) && q.terms.value == 1)
                return res("prop:phi-pm-US-h=1", (q.group.order() + order2_count(q.group) + 1) / 2, "h = 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false))
                out.push_back(mk(Family::Phi, g, Lambda::Z, TermCount::exact(1)));
            return out;
        });

    add("prop:sigma-h1", "sigma(G,1) = n",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Sigma, Lambda::N0, Kind::Exact) && q.terms.value == 1)
                return res("prop:sigma-h1", q.group.order(), "h = 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 12), false))
                out.push_back(mk(Family::Sigma, g, Lambda::N0, TermCount::exact(1)));
            return out;
        });

    add("prop:sigma-pm-h=1", "sigma_pm(G,1) = (n - 1 - |Ord(G,2)|)/2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Sigma, Lambda::Z, Kind::Exact) && q.terms.value == 1)
                return res("prop:sigma-pm-h=1", (q.group.order() - 1 - order2_count(q.group)) / 2, "h = 1");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false))
                out.push_back(mk(Family::Sigma, g, Lambda::Z, TermCount::exact(1)));
            return out;
        });

    add("thm:zforp", "tau(Z_p,h) = 0 if p | h, else floor((p-2)/h) + 1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::N0, Kind::Exact) || !prime_cyclic(q.group) || q.terms.value < 1)
                return std::nullopt;
            long long p = q.group.order(), h = q.terms.value;
            return res("thm:zforp", h % p == 0 ? 0 : (p - 2) / h + 1, "n prime");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : primes_upto(std::min(max_n, 31)))
                for (int h = 1; h <= 6; ++h) out.push_back(mk(Family::Tau, g, Lambda::N0, TermCount::exact(h)));
            return out;
        });

    add("thm:tau-elementary", "tau(Z_p^r,h) = 0 if p | h, else v_1(p^r,h)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::N0, Kind::Exact) || q.terms.value < 1) return std::nullopt;
            long long p = elementary_prime(q.group), h = q.terms.value;
            if (!p) return std::nullopt;
            long long r = q.group.rank(), n = q.group.order();
            if (h % p == 0) return res("thm:tau-elementary", 0, "elementary p-group, p | h");
            long long val = p % h == 1 % h ? (n - 1) / h : (long long)ipow(p, int(r - 1)) * (1 + p / h);
            return res("thm:tau-elementary", val, "elementary p-group");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (int n = 2; n <= max_n; ++n) {
                auto f = factorize(n);
                if (f.size() != 1) continue;
                Group g = Group::normalize(std::vector<long long>(f[0].second, f[0].first));
                for (int h = 1; h <= 5; ++h) out.push_back(mk(Family::Tau, g, Lambda::N0, TermCount::exact(h)));
            }
            return out;
        });

    add("prop:tau-1t-small", "tau(G,[1,1]) = n-1 and tau(G,[1,2]) = (n - |Ord(G,2)| - 1)/2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::N0, Kind::Range1)) return std::nullopt;
            const long long n = q.group.order();
            if (q.terms.value == 1) return res("prop:tau-1t-small", n - 1, "t = 1");
            if (q.terms.value == 2) return res("prop:tau-1t-small", (n - order2_count(q.group) - 1) / 2, "t = 2");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 16), false))
                for (int t = 1; t <= 2; ++t) out.push_back(mk(Family::Tau, g, Lambda::N0, TermCount::range1(t)));
            return out;
        });

    add("thm:tau-1t-cyclic", "tau(Z_n,[1,t]) = floor((n-1)/t)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Tau, Lambda::N0, Kind::Range1) && q.group.is_cyclic() && q.terms.value >= 1)
                return res("thm:tau-1t-cyclic", (q.group.order() - 1) / q.terms.value, "cyclic");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 20), true))
                for (int t = 1; t <= 4; ++t) out.push_back(mk(Family::Tau, g, Lambda::N0, TermCount::range1(t)));
            return out;
        });

    add("thm:3free", "tau_pm(Z_n,[1,3]) by the parity and mod 6 prime divisors of n",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::Z, Kind::Range1) || q.terms.value != 3 || !q.group.is_cyclic())
                return std::nullopt;
            const long long n = q.group.order();
            if (n % 2 == 0) return res("thm:3free", n / 4, "n even");
            for (auto [p, e] : factorize(n))
                if (p % 6 == 5) return res("thm:3free", (p + 1) * (n / p) / 6, "prime divisor " + std::to_string(p));
            return res("thm:3free", n / 6, "n odd, no prime divisor = 5 mod 6");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 40), true))
                out.push_back(mk(Family::Tau, g, Lambda::Z, TermCount::range1(3)));
            return out;
        });

    add("thm:tauhat-prime", "tau^(Z_p,h) = floor((p-2)/h) + h for 1 <= h <= p-1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::Restricted, Kind::Exact) || !prime_cyclic(q.group)) return std::nullopt;
            long long p = q.group.order(), h = q.terms.value;
            if (h < 1 || h > p - 1) return std::nullopt;
            return res("thm:tauhat-prime", (p - 2) / h + h, "n prime");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : primes_upto(std::min(max_n, 23)))
                for (int h = 1; h <= std::min(g.order() - 1, 6); ++h)
                    out.push_back(mk(Family::Tau, g, Lambda::Restricted, TermCount::exact(h)));
            return out;
        });

    add("prop:tau-hat-h=1,2", "tau^(G,1) = n-1 and tau^(G,2) = (n + |Ord(G,2)| + 1)/2",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::Restricted, Kind::Exact)) return std::nullopt;
            const long long n = q.group.order();
            if (q.terms.value == 1) return res("prop:tau-hat-h=1,2", n - 1, "h = 1");
            if (q.terms.value == 2) return res("prop:tau-hat-h=1,2", (n + order2_count(q.group) + 1) / 2, "h = 2");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 30), false))
                for (int h = 1; h <= 2; ++h) out.push_back(mk(Family::Tau, g, Lambda::Restricted, TermCount::exact(h)));
            return out;
        });

    {
        Theorem t{"fact:tauhat-z3r", "tau^(Z_3^r,3) = 2, 4, 9, 20 for r = 1..4", true,
                  "r = 4 is out of desk scale for exhaustive search", nullptr, nullptr};
        t.apply = [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::Restricted, Kind::Exact) || q.terms.value != 3) return std::nullopt;
            if (elementary_prime(q.group) != 3 || q.group.rank() > 4) return std::nullopt;
            static const long long vals[] = {0, 2, 4, 9, 20};
            KnownResult k = res("fact:tauhat-z3r", vals[q.group.rank()], "Z_3^r, r <= 4");
            k.desk_checkable = q.group.rank() <= 3;
            return k;
        };
        t.grid = [](int max_n) {
            std::vector<QuantityQuery> out;
            for (int r = 1; r <= 3 && ipow(3, r) <= std::max(max_n, 27); ++r)
                out.push_back(mk(Family::Tau, Group::parse("Z3^" + std::to_string(r)), Lambda::Restricted,
                                 TermCount::exact(3)));
            return out;
        };
        r.push_back(t);
    }

    add("prop:tau-hat-pm-h=n", "tau^_pm(G,n) = n if kappa = 2 mod 4 and n/kappa odd, else n-1",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            const long long n = q.group.order();
            if (!match(q, Family::Tau, Lambda::RestrictedSigned, Kind::Exact) || q.terms.value != n) return std::nullopt;
            const long long kappa = q.group.exponent();
            bool full = kappa % 4 == 2 && (n / kappa) % 2 == 1;
            return res("prop:tau-hat-pm-h=n", full ? n : n - 1, "h = n");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 14), false))
                out.push_back(mk(Family::Tau, g, Lambda::RestrictedSigned, TermCount::exact(g.order())));
            return out;
        });

    add("prop:tau-hat-pm-1t-small", "tau^_pm(Z_n,[1,t]) = t-1 when 2^(t-1) <= n < 2^t",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!match(q, Family::Tau, Lambda::RestrictedSigned, Kind::Range1) || !q.group.is_cyclic())
                return std::nullopt;
            const long long n = q.group.order(), t = q.terms.value;
            if (t < 1 || t > 62 || !((1LL << (t - 1)) <= n && n < (1LL << t))) return std::nullopt;
            return res("prop:tau-hat-pm-1t-small", t - 1, "2^(t-1) <= n < 2^t");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 40), true)) {
                int t = floor_log2(g.order()) + 1;
                out.push_back(mk(Family::Tau, g, Lambda::RestrictedSigned, TermCount::range1(t)));
            }
            return out;
        });

    add("prop:tau-hat-pm-cyclic", "tau^_pm(Z_n,N) = floor(log2 n)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (match(q, Family::Tau, Lambda::RestrictedSigned, Kind::AllN) && q.group.is_cyclic())
                return res("prop:tau-hat-pm-cyclic", floor_log2(q.group.order()), "cyclic");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 64), true))
                out.push_back(mk(Family::Tau, g, Lambda::RestrictedSigned, TermCount::all_n()));
            return out;
        });

    add("thm:mu21", "mu(Z_n,{2,1}) = v_1(n,3)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (mu_pair(q, Lambda::N0) && q.k == 2 && q.l == 1 && q.group.is_cyclic())
                return res("thm:mu21", v1(q.group.order(), 3), "cyclic");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 30), true)) out.push_back(mk_mu(g, Lambda::N0, 2, 1));
            return out;
        });

    add("thm:muforp", "mu(Z_p,{k,l}) = v_{k-l}(p,k+l)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!mu_pair(q, Lambda::N0) || !prime_cyclic(q.group) || !(q.k > q.l && q.l >= 1)) return std::nullopt;
            return res("thm:muforp", v(q.group.order(), q.k + q.l, q.k - q.l).value, "n prime");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : primes_upto(std::min(max_n, 31)))
                for (int k = 2; k <= 4; ++k)
                    for (int l = 1; l < k; ++l) out.push_back(mk_mu(g, Lambda::N0, k, l));
            return out;
        });

    add("thm:mu31", "mu(Z_n,{3,1}) = v_2(n,4)",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (mu_pair(q, Lambda::N0) && q.k == 3 && q.l == 1 && q.group.is_cyclic())
                return res("thm:mu31", v(q.group.order(), 4, 2).value, "cyclic");
            return std::nullopt;
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 30), true)) out.push_back(mk_mu(g, Lambda::N0, 3, 1));
            return out;
        });

    add("thm:M21", "mu^(Z_n,{2,1}) by the smallest prime divisor = 2 mod 3",
        [](const QuantityQuery& q) -> std::optional<KnownResult> {
            if (!(mu_pair(q, Lambda::Restricted) && q.k == 2 && q.l == 1 && q.group.is_cyclic())) return std::nullopt;
            const long long n = q.group.order();
            for (auto [p, e] : factorize(n))
                if (p % 3 == 2) return res("thm:M21", (p + 1) * (n / p) / 3, "prime divisor " + std::to_string(p));
            return res("thm:M21", n / 3 + 1, "no prime divisor = 2 mod 3");
        },
        [](int max_n) {
            std::vector<QuantityQuery> out;
            for (auto& g : groups_upto(std::min(max_n, 30), true)) out.push_back(mk_mu(g, Lambda::Restricted, 2, 1));
            return out;
        });

    r.push_back({"thm:tauhat-zp2-large-p", "tau^(Z_p^2,p) = 2p-2 for primes p >= 47", false,
                 "asserted, unverifiable at desk scale",
                 [](const QuantityQuery& q) -> std::optional<KnownResult> {
                     if (!match(q, Family::Tau, Lambda::Restricted, Kind::Exact)) return std::nullopt;
                     long long p = elementary_prime(q.group);
                     if (p < 47 || q.group.rank() != 2 || q.terms.value != p) return std::nullopt;
                     KnownResult k = res("thm:tauhat-zp2-large-p", 2 * p - 2, "p >= 47");
                     k.desk_checkable = false;
                     return k;
                 },
                 none_grid});
    r.push_back({"note:chihat-upto-source", "a lemma in a cited source on chi^(G,[0,s]) fails for even n", false,
                 "annotation only", [](const QuantityQuery&) -> std::optional<KnownResult> { return std::nullopt; },
                 none_grid});
    r.push_back({"note:chihat-star-source", "a cited source on chi^(G*,N) contains inaccuracies", false,
                 "annotation only", [](const QuantityQuery&) -> std::optional<KnownResult> { return std::nullopt; },
                 none_grid});
    return r;
}

std::string str_value(const std::optional<long long>& v) { return v ? std::to_string(*v) : "none"; }

std::map<std::string, long long> query_params(const QuantityQuery& q) {
    std::map<std::string, long long> p{{"n", q.group.order()}};
    if (q.family == Family::Nu || q.family == Family::Rho) p["m"] = q.m;
    if (q.family == Family::Mu && q.k > 0) {
        p["k"] = q.k;
        p["l"] = q.l;
    } else if (q.terms.kind == Kind::Exact) {
        p["h"] = q.terms.value;
    } else if (q.terms.kind == Kind::UpTo) {
        p["s"] = q.terms.value;
    } else if (q.terms.kind == Kind::Range1) {
        p["t"] = q.terms.value;
    }
    return p;
}

// evaluate and compare; status Skipped on budget
GridPoint compare(const QuantityQuery& q, std::optional<long long> predicted, const SearchOptions& opt) {
    GridPoint pt;
    pt.params = query_params(q);
    pt.group = q.group.name();
    pt.predicted = predicted;
    try {
        SearchResult r = evaluate(q, opt);
        pt.computed = r.value;
        if (r.value == predicted) {
            pt.status = PointStatus::Confirmed;
        } else {
            pt.status = PointStatus::Refuted;
            pt.witness = r.witness;
        }
    } catch (const BudgetExceeded& e) {
        pt.status = PointStatus::Skipped;
        pt.note = e.what();
    }
    return pt;
}

}  // namespace

const std::vector<Theorem>& theorem_registry() {
    static const std::vector<Theorem> reg = build_registry();
    return reg;
}

const Theorem& find_theorem(const std::string& id) {
    for (const auto& t : theorem_registry())
        if (t.id == id) return t;
    throw Error("unknown theorem id '" + id + "'");
}

std::vector<KnownResult> known_values(const QuantityQuery& q) {
    std::vector<KnownResult> out;
    for (const auto& t : theorem_registry()) {
        auto k = t.apply(q);
        if (!k) continue;
        if (!t.desk_checkable) k->desk_checkable = false;
        out.push_back(*k);
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].value != out[0].value)
            throw OracleConflict("registry conflict: " + out[0].citation + " gives " + str_value(out[0].value) +
                                 ", " + out[i].citation + " gives " + str_value(out[i].value));
    return out;
}

std::optional<KnownResult> known_value(const QuantityQuery& q) {
    auto all = known_values(q);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::string status_str(PointStatus s) {
    switch (s) {
        case PointStatus::Confirmed: return "confirmed";
        case PointStatus::Refuted: return "refuted";
        case PointStatus::Skipped: return "skipped";
    }
    return "";
}

int Report::count(PointStatus s) const {
    return int(std::count_if(points.begin(), points.end(), [&](const GridPoint& p) { return p.status == s; }));
}

Report verify_theorem(const std::string& id, int max_n, const SearchOptions& opt) {
    const Theorem& t = find_theorem(id);
    Report rep{id, {}};
    if (!t.desk_checkable || !t.grid) return rep;
    for (const auto& q : t.grid(max_n)) {
        auto k = t.apply(q);
        if (!k || !k->desk_checkable) continue;
        rep.points.push_back(compare(q, k->value, opt));
    }
    return rep;
}

std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    auto num = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::logic_error&) {
            throw Error("malformed range '" + text + "'");
        }
    };
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(num(part));
        } else {
            int a = num(part.substr(0, dots)), b = num(part.substr(dots + 2));
            if (b < a) throw Error("empty range '" + part + "'");
            for (int i = a; i <= b; ++i) out.push_back(i);
        }
    }
    if (out.empty()) throw Error("empty range '" + text + "'");
    return out;
}

long long rhohat_h2_prediction(long long n, long long m) {
    long long uu = u(n, m, 2).value;
    bool low = (n % 2 == 0 && m % 2 == 0) || (n % (2 * m - 2) == 0 && !((m - 1) > 0 && ((m - 1) & (m - 2)) == 0));
    return std::min(uu, low ? 2 * m - 4 : 2 * m - 3);
}

long long rhohat_h3_prediction(long long n, long long m) {
    long long uu = u(n, m, 3).value, d0 = gcd(n, m - 1);
    long long b;
    if (d0 >= 8)
        b = 3 * m - 3 - d0;
    else if (d0 == 7 || (d0 <= 5 && n % 3 == 0 && m % 3 == 0) ||
             (d0 <= 5 && 3 * m - 9 > 0 && n % (3 * m - 9) == 0 && (m - 3) % 5 == 0))
        b = 3 * m - 10;
    else if (d0 == 6 || (m == 6 && n % 10 == 0 && n % 3 != 0))
        b = 3 * m - 9;
    else
        b = 3 * m - 8;
    return std::min(uu, b);
}

long long sigma_upper_prediction(long long n, long long m) {
    long long best = n;
    for (int d : divisors(int(n))) {
        long long c = ceil_div(m - d, 2LL * d);  // ceil((m/d - 1)/2)
        best = std::min(best, (c * m - c * c * d + 1) * d);
    }
    return best;
}

int dissociation_dimension_min(int n, int m) {
    if (n > 20 || m < 1 || m > n) throw Error("dimension search supports 1 <= m <= n <= 20");
    const std::uint32_t full = (1u << n);
    std::vector<std::int8_t> dim(full, 0);
    const int cap = floor_log2(n) + 1;  // larger sets cannot be dissociated
    Group g = Group::cyclic(n);
    for (std::uint32_t s = 1; s < full; ++s) {
        int sz = __builtin_popcount(s);
        int best = 0;
        for (std::uint32_t t = s; t; t &= t - 1) best = std::max<int>(best, dim[s & ~(t & -t)]);
        if (sz <= cap && best == sz - 1) {
            // dissociated iff all 2^sz subset sums are distinct
            std::vector<int> el;
            for (int i = 0; i < n; ++i)
                if (s >> i & 1) el.push_back(i);
            std::vector<char> seen(n, 0);
            bool ok = (1 << sz) <= n;
            for (int mask = 0; ok && mask < (1 << sz); ++mask) {
                int sum = 0;
                for (int i = 0; i < sz; ++i)
                    if (mask >> i & 1) sum = (sum + el[i]) % n;
                if (seen[sum]) ok = false;
                seen[sum] = 1;
            }
            if (ok) best = sz;
        }
        dim[s] = std::int8_t(best);
    }
    int out = 99;
    for (std::uint32_t s = 0; s < full; ++s)
        if (__builtin_popcount(s) == m) out = std::min<int>(out, dim[s]);
    return out;
}

std::vector<std::vector<int>> dissociated_family(int k) {
    if (k < 1 || k > 10) throw Error("family supports 1 <= k <= 10");
    std::vector<std::vector<int>> fam = {{1}};
    for (int j = 1; j < k; ++j) {
        std::vector<std::vector<int>> next;
        const int step = 1 << j;
        for (const auto& a : fam)
            for (int eps = 0; eps < (1 << j); ++eps) {
                std::vector<int> b = {step};
                for (int i = 0; i < j; ++i) b.push_back(a[i] + ((eps >> i) & 1) * step);
                std::sort(b.begin(), b.end());
                next.push_back(b);
            }
        fam = std::move(next);
    }
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
}

const std::vector<Conjecture>& conjecture_registry() {
    static const std::vector<Conjecture> reg = {
        {"conj:zconj", "tau(Z_n,h) = v_h(n,h)"},
        {"conj:zfconj", "tau_pm(Z_n,3) = v_3(n,3)"},
        {"conj:rhohatforh=2", "rho^(Z_n,m,2) equals the h = 2 upper bound"},
        {"conj:rhohatforh=3", "rho^(Z_n,m,3) equals the h = 3 upper bound"},
        {"conj:rhopm-upto", "rho_pm(Z_n,m,[0,s]) = u_pm(n,m,[0,s]) for s, m >= 2"},
        {"conj:chi-pm-cyclic", "chi_pm(Z_n,[0,s]) = v_pm(n,s) + 1"},
        {"conj:mu-[0,2]", "mu(Z_n,[0,2]) = v_2(n,4)"},
        {"conj:no-perfect-bases", "no perfect s-bases of size m for s, m >= 2; restricted form over cyclic groups"},
        {"conj:upper-for-|Sigma|", "rho^(Z_n,m,N0) equals the divisor upper bound"},
        {"conj:zero-sum-free-simple-n-even", "tau^(Z_n,N) = floor(sqrt(2n-3)) for even n"},
        {"conj:tauhat-zk2", "tau^(Z_k^2,k) = 2k-2 for odd k, 2k for even k"},
        {"conj:inverse-tau-hat-pm-2-power", "dissociated k-subsets of Z_{2^k} are exactly the recursive family"},
        {"conj:dim-G-m", "dim(Z_n,m) = floor(log2 m)"},
    };
    return reg;
}

Report conjecture_check(const std::string& id, const Grid& grid, const SearchOptions& opt) {
    bool known = false;
    for (const auto& c : conjecture_registry()) known = known || c.id == id;
    if (!known) throw Error("unknown conjecture id '" + id + "'");
    auto axis = [](const std::vector<int>& v, std::vector<int> dflt) { return v.empty() ? dflt : v; };
    auto range = [](int a, int b) {
        std::vector<int> r;
        for (int i = a; i <= b; ++i) r.push_back(i);
        return r;
    };
    Report rep{id, {}};
    const auto ns = axis(grid.n, range(1, 20));

    if (id == "conj:zconj") {
        for (int n : ns)
            for (int h : axis(grid.h, {3})) {
                if (n < 1 || h < 1) continue;
                long long pred = v(n, h, h).value;
                GridPoint pt = compare(mk(Family::Tau, Group::cyclic(n), Lambda::N0, TermCount::exact(h)), pred, opt);
                pt.forced = pred == v1(n, h);
                rep.points.push_back(pt);
            }
    } else if (id == "conj:zfconj") {
        for (int n : ns) {
            if (n < 1) continue;
            long long pred = v(n, 3, 3).value;
            GridPoint pt = compare(mk(Family::Tau, Group::cyclic(n), Lambda::Z, TermCount::exact(3)), pred, opt);
            pt.forced = pred == v1(n, 3);
            rep.points.push_back(pt);
        }
    } else if (id == "conj:rhohatforh=2" || id == "conj:rhohatforh=3") {
        const int h = id == "conj:rhohatforh=2" ? 2 : 3;
        for (int n : ns)
            for (int m : axis(grid.m, range(h + 1, n))) {
                if (m < h + 1 || m > n) continue;
                long long pred = h == 2 ? rhohat_h2_prediction(n, m) : rhohat_h3_prediction(n, m);
                rep.points.push_back(
                    compare(mk(Family::Rho, Group::cyclic(n), Lambda::Restricted, TermCount::exact(h), m), pred, opt));
            }
    } else if (id == "conj:rhopm-upto") {
        for (int n : ns)
            for (int s : axis(grid.s, {2, 3}))
                for (int m : axis(grid.m, range(2, n))) {
                    if (m < 1 || m > n || s < 1) continue;
                    auto q = mk(Family::Rho, Group::cyclic(n), Lambda::Z, TermCount::upto(s), m);
                    if (s < 2 || m < 2) {
                        // stated for s, m >= 2; s = 1 has its own exact value
                        GridPoint pt;
                        pt.params = query_params(q);
                        pt.group = q.group.name();
                        pt.note = "out of scope: needs s >= 2 and m >= 2";
                        rep.points.push_back(pt);
                        continue;
                    }
                    rep.points.push_back(compare(q, u_pm_upto(n, m, s).value, opt));
                }
    } else if (id == "conj:chi-pm-cyclic") {
        for (int n : ns)
            for (int s : axis(grid.s, {1, 2, 3})) {
                if (n < 2 || s < 1) continue;
                long long vp = v_pm(n, s).value;
                GridPoint pt = compare(mk(Family::Chi, Group::cyclic(n), Lambda::Z, TermCount::upto(s)), vp + 1, opt);
                pt.forced = vp == v1(n, s);
                rep.points.push_back(pt);
            }
    } else if (id == "conj:mu-[0,2]") {
        for (int n : ns) {
            if (n < 1) continue;
            rep.points.push_back(compare(mk(Family::Mu, Group::cyclic(n), Lambda::N0, TermCount::upto(2)),
                                         v(n, 4, 2).value, opt));
        }
    } else if (id == "conj:no-perfect-bases") {
        const Lambda lam = grid.restricted ? Lambda::Restricted : Lambda::N0;
        for (int s : axis(grid.s, {2}))
            for (int m : axis(grid.m, range(2, 6))) {
                if (s < 2 || m < 2) continue;
                i128 n = layer_size({lam, m, TermCount::upto(s)});
                if (n > 4096) continue;
                // the restricted claim is about cyclic groups
                auto groups = grid.restricted ? std::vector<Group>{Group::cyclic(int(n))} : Group::all_of_order(int(n));
                for (auto& g : groups) {
                    GridPoint pt = compare(mk(Family::Phi, g, lam, TermCount::upto(s)), std::nullopt, opt);
                    pt.params = {{"n", (long long)n}, {"m", m}, {"s", s}};
                    if (pt.status != PointStatus::Skipped) {
                        // a spanning m-set is a perfect basis; anything larger is consistent
                        bool perfect = pt.computed && *pt.computed == m;
                        pt.status = perfect ? PointStatus::Refuted : PointStatus::Confirmed;
                        pt.predicted = std::nullopt;
                        if (!perfect) pt.witness.reset();
                        pt.note = perfect ? "perfect basis found" : "no spanning set of size m";
                    }
                    rep.points.push_back(pt);
                }
            }
    } else if (id == "conj:upper-for-|Sigma|") {
        for (int n : ns)
            for (int m : axis(grid.m, range(1, n))) {
                if (m < 1 || m > n) continue;
                rep.points.push_back(compare(mk(Family::Rho, Group::cyclic(n), Lambda::Restricted, TermCount::all_n0(), m),
                                             sigma_upper_prediction(n, m), opt));
            }
    } else if (id == "conj:zero-sum-free-simple-n-even") {
        for (int n : ns) {
            if (n < 2 || n % 2) continue;
            rep.points.push_back(compare(mk(Family::Tau, Group::cyclic(n), Lambda::Restricted, TermCount::all_n()),
                                         isqrt(2LL * n - 3), opt));
        }
    } else if (id == "conj:tauhat-zk2") {
        for (int k : axis(grid.k, {2, 3, 4})) {
            if (k < 2) continue;
            Group g = Group::normalize({k, k});
            rep.points.push_back(
                compare(mk(Family::Tau, g, Lambda::Restricted, TermCount::exact(k)), k % 2 ? 2 * k - 2 : 2 * k, opt));
            rep.points.back().params = {{"k", k}, {"n", (long long)k * k}};
        }
    } else if (id == "conj:inverse-tau-hat-pm-2-power") {
        for (int k : axis(grid.k, {1, 2, 3, 4})) {
            if (k < 1 || k > 6) continue;
            GridPoint pt;
            pt.params = {{"k", k}, {"n", 1LL << k}};
            Group g = Group::cyclic(1 << k);
            pt.group = g.name();
            try {
                auto sets = enumerate_extremal(mk(Family::Tau, g, Lambda::RestrictedSigned, TermCount::all_n()), opt);
                std::set<std::vector<int>> found;
                for (auto& s : sets)
                    if (s.size() == k) found.insert(s.indices());
                auto fam = dissociated_family(k);
                std::set<std::vector<int>> want(fam.begin(), fam.end());
                pt.predicted = (long long)want.size();
                pt.computed = (long long)found.size();
                pt.status = found == want ? PointStatus::Confirmed : PointStatus::Refuted;
                if (found != want) {
                    for (auto& s : found)
                        if (!want.count(s)) {
                            pt.witness = Subset::of(g, s);
                            break;
                        }
                    if (!pt.witness)
                        for (auto& s : want)
                            if (!found.count(s)) {
                                pt.witness = Subset::of(g, s);
                                pt.note = "family member is not dissociated";
                                break;
                            }
                }
            } catch (const BudgetExceeded& e) {
                pt.note = e.what();
            }
            rep.points.push_back(pt);
        }
    } else if (id == "conj:dim-G-m") {
        for (int n : axis(grid.n, range(1, 12)))
            for (int m : axis(grid.m, range(1, n))) {
                if (m < 1 || m > n || n > 20) continue;
                GridPoint pt;
                pt.params = {{"n", n}, {"m", m}};
                pt.group = Group::cyclic(n).name();
                pt.predicted = floor_log2(m);
                pt.computed = dissociation_dimension_min(n, m);
                pt.status = pt.computed == pt.predicted ? PointStatus::Confirmed : PointStatus::Refuted;
                rep.points.push_back(pt);
            }
    }
    return rep;
}

}  // namespace sumsets
