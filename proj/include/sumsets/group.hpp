#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sumsets/arith.hpp"

namespace sumsets {

// Bitset over a universe of n positions.
class DynBits {
public:
    DynBits() = default;
    explicit DynBits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int count() const;
    bool none() const;
    bool all() const { return count() == n_; }
    void fill();
    void clear();

    DynBits& operator|=(const DynBits& o);
    DynBits& operator&=(const DynBits& o);
    friend DynBits operator|(DynBits a, const DynBits& b) { return a |= b; }
    friend DynBits operator&(DynBits a, const DynBits& b) { return a &= b; }
    bool intersects(const DynBits& o) const;
    bool operator==(const DynBits& o) const { return n_ == o.n_ && w_ == o.w_; }

    // i -> (i + k) mod n
    DynBits rotated(int k) const;

    std::vector<int> indices() const;
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                f(int(wi * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct GroupElement {
    std::vector<int> coords;
    bool operator==(const GroupElement&) const = default;
};

class Group {
public:
    static constexpr long long kDefaultOrderBound = 1LL << 20;

    Group();  // trivial group
    static Group normalize(const std::vector<long long>& factors,
                           long long bound = kDefaultOrderBound);
    static Group cyclic(int n) { return normalize({n}); }
    // "Z12", "Z3^2", "Z2xZ4", "Z2^2xZ3"
    static Group parse(const std::string& text, long long bound = kDefaultOrderBound);
    // every isomorphism type of order n, ordered by rank then factors
    static std::vector<Group> all_of_order(int n);

    const std::vector<int>& factors() const { return p_->factors; }
    int order() const { return p_->n; }
    int rank() const { return int(p_->factors.size()); }
    int exponent() const { return p_->factors.empty() ? 1 : p_->factors.back(); }
    bool is_cyclic() const { return rank() <= 1; }
    std::string name() const;
    bool operator==(const Group& o) const { return factors() == o.factors(); }

    int index(const GroupElement& e) const;
    GroupElement element(int idx) const;

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int scale(long long lambda, int a) const;
    int element_order(int a) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(long long lambda, const GroupElement& a) const;
    int element_order(const GroupElement& a) const { return element_order(index(a)); }

private:
    struct Impl {
        std::vector<int> factors;
        std::vector<int> strides;
        int n = 1;
    };
    explicit Group(std::shared_ptr<const Impl> p) : p_(std::move(p)) {}
    void check(const GroupElement& e) const;
    std::shared_ptr<const Impl> p_;
};

class Subset {
public:
    Subset() : Subset(Group()) {}
    explicit Subset(Group g) : g_(std::move(g)), b_(g_.order()) {}
    Subset(Group g, DynBits b);
    static Subset of(Group g, const std::vector<int>& idx);
    static Subset full(Group g);

    const Group& group() const { return g_; }
    const DynBits& bits() const { return b_; }
    int size() const { return b_.count(); }
    bool empty() const { return b_.none(); }
    bool contains(int i) const { return b_.test(i); }
    void insert(int i);
    void erase(int i);
    std::vector<int> indices() const { return b_.indices(); }
    std::string str() const;  // "{0,3,6}"

    bool operator==(const Subset& o) const { return g_ == o.g_ && b_ == o.b_; }
    Subset& operator|=(const Subset& o);
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

private:
    Group g_;
    DynBits b_;
};

// A + g
Subset translate(const Subset& a, int g);
// -A
Subset negated(const Subset& a);
// indices parsed from "2,3,5" or coordinate tuples "(1,2),(0,1)"
Subset parse_subset(const Group& g, const std::string& text);

Subset ord_set(const Group& g, int d);
Subset cyclic_subgroup(int n, int d);
Subset generated_subgroup(const Subset& a);
long long subgroup_count_rank2(long long n1, long long n2);

}  // namespace sumsets
