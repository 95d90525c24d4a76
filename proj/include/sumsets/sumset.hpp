#pragma once
#include <vector>

#include "sumsets/counting.hpp"
#include "sumsets/group.hpp"

namespace sumsets {

struct SumsetSpec {
    Lambda lambda = Lambda::N0;
    TermCount terms;
};

// B + g as a bitset over G
DynBits shift(const Group& g, const DynBits& b, int by);

// level j = the j-fold sumset of the given type, for j = 0..hmax
std::vector<DynBits> sumset_levels(const Subset& a, Lambda lambda, int hmax);

Subset sumset(const Subset& a, const SumsetSpec& spec);

Subset sigma_star(const Subset& a);  // union of restricted h-fold sums, h >= 1
Subset sigma(const Subset& a);       // sigma_star plus 0
Subset sigma_pm(const Subset& a);    // union of restricted signed h-fold sums, h >= 0

Subset dilate(long long b, const Subset& a);
long long norm(const Subset& a);  // cyclic groups only

}  // namespace sumsets
