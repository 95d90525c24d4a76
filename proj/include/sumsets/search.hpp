#pragma once
#include <optional>
#include <string>
#include <vector>

#include "sumsets/sumset.hpp"

namespace sumsets {

enum class Family { Nu, Phi, Sigma, Rho, Chi, Tau, Mu };
Family parse_family(const std::string& text);
std::string family_str(Family f);

struct QuantityQuery {
    Family family = Family::Nu;
    Lambda lambda = Lambda::N0;
    TermCount terms = TermCount::exact(2);
    int m = 0;                  // nu, rho
    int k = 0, l = 0;           // mu pair form when k > 0; otherwise terms = upto:s
    bool generating = false;    // chi over generating sets
    bool exclude_zero = false;  // chi over G \ {0}
    Group group;
};

struct SearchOptions {
    int threads = 0;  // 0 = hardware concurrency
    long long budget = 1000000000LL;
    bool reduce_symmetry = true;
};

struct SearchResult {
    std::optional<long long> value;  // empty = "none"
    std::optional<Subset> witness;
    bool exhaustive = true;
    long long nodes = 0;
    double elapsed_ms = 0;
};

SearchResult evaluate(const QuantityQuery& q, const SearchOptions& opt = {});
// every set attaining the extremum, colex order
std::vector<Subset> enumerate_extremal(const QuantityQuery& q, const SearchOptions& opt = {});
// re-check a witness with the plain sumset engine
bool verify_witness(const QuantityQuery& q, const Subset& w, std::optional<long long> value);

SearchResult max_sumset_size(const Group& g, int m, const SumsetSpec& spec, const SearchOptions& opt = {});
SearchResult min_sumset_size(const Group& g, int m, const SumsetSpec& spec, const SearchOptions& opt = {});
SearchResult min_spanning_size(const Group& g, const SumsetSpec& spec, const SearchOptions& opt = {});
SearchResult max_sidon_size(const Group& g, const SumsetSpec& spec, const SearchOptions& opt = {});
SearchResult critical_number(const Group& g, const SumsetSpec& spec, bool restrict_to_generating,
                             bool exclude_zero, const SearchOptions& opt = {});
SearchResult max_zero_sum_free(const Group& g, const SumsetSpec& spec, const SearchOptions& opt = {});
SearchResult max_sum_free(const Group& g, int k, int l, bool weak, const SearchOptions& opt = {});
SearchResult max_sum_free_upto(const Group& g, int s, bool weak, const SearchOptions& opt = {});

}  // namespace sumsets
