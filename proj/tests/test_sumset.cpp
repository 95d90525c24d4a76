#include "brute.hpp"
#include "doctest.h"
#include "sumsets/sumset.hpp"

using namespace sumsets;

namespace {
brute::L bl(Lambda l) {
    switch (l) {
        case Lambda::N0: return brute::L::N0;
        case Lambda::Z: return brute::L::Z;
        case Lambda::Restricted: return brute::L::R;
        default: return brute::L::RS;
    }
}
std::vector<int> as_vec(const std::set<int>& s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("sumset table in Z13") {
    Group g = Group::cyclic(13);
    Subset a = Subset::of(g, {2, 3});
    CHECK(sumset(a, {Lambda::N0, TermCount::exact(2)}).indices() == std::vector<int>{4, 5, 6});
    CHECK(sumset(a, {Lambda::Z, TermCount::exact(2)}).indices() == std::vector<int>{1, 4, 5, 6, 7, 8, 9, 12});
    CHECK(sumset(a, {Lambda::RestrictedSigned, TermCount::exact(2)}).indices() == std::vector<int>{1, 5, 8, 12});
    CHECK(sumset(a, {Lambda::N0, TermCount::upto(3)}).indices() == std::vector<int>{0, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(sumset(a, {Lambda::Restricted, TermCount::exact(2)}).indices() == std::vector<int>{5});
    for (Lambda l : {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned})
        CHECK(sumset(a, {l, TermCount::exact(0)}).indices() == std::vector<int>{0});
}

TEST_CASE("every sumset type agrees with coefficient enumeration") {
    for (auto name : {"Z7", "Z12", "Z2xZ4", "Z3^2", "Z2^3"}) {
        Group g = Group::parse(name);
        brute::G b{g.factors()};
        for (int m = 0; m <= 4; ++m)
            brute::for_each_subset(g.order(), m, [&](const std::vector<int>& s) {
                Subset a = Subset::of(g, s);
                for (Lambda l : {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned})
                    for (int h = 0; h <= 3; ++h) {
                        CAPTURE(name);
                        CAPTURE(a.str());
                        CAPTURE(h);
                        CHECK(sumset(a, {l, TermCount::exact(h)}).indices() == as_vec(brute::sums(b, s, bl(l), h, h)));
                        CHECK(sumset(a, {l, TermCount::upto(h)}).indices() == as_vec(brute::sums(b, s, bl(l), 0, h)));
                        if (h >= 1)
                            CHECK(sumset(a, {l, TermCount::range1(h)}).indices() ==
                                  as_vec(brute::sums(b, s, bl(l), 1, h)));
                    }
            });
    }
}

TEST_CASE("unbounded term counts") {
    Group g = Group::cyclic(12);
    Subset a = Subset::of(g, {4, 6});
    CHECK(sumset(a, {Lambda::N0, TermCount::all_n0()}).indices() == std::vector<int>{0, 2, 4, 6, 8, 10});
    CHECK(sumset(a, {Lambda::N0, TermCount::all_n()}).indices() == std::vector<int>{0, 2, 4, 6, 8, 10});
    Subset b = Subset::of(g, {3});
    CHECK(sumset(b, {Lambda::Restricted, TermCount::all_n()}).indices() == std::vector<int>{3});
    CHECK(sumset(b, {Lambda::Restricted, TermCount::all_n0()}).indices() == std::vector<int>{0, 3});
    CHECK(sumset(b, {Lambda::RestrictedSigned, TermCount::all_n()}).indices() == std::vector<int>{3, 9});
}

TEST_CASE("restricted subset sums") {
    for (int m = 1; m <= 6; ++m) {
        Group g = Group::cyclic(100);
        std::vector<int> idx;
        for (int i = 1; i <= m; ++i) idx.push_back(i);
        Subset s = sigma_star(Subset::of(g, idx));
        std::vector<int> want;
        for (int i = 1; i <= m * (m + 1) / 2; ++i) want.push_back(i);
        CHECK(s.indices() == want);
    }
    Group g = Group::cyclic(9);
    CHECK(sigma(Subset(g)).indices() == std::vector<int>{0});
    CHECK(sigma_star(Subset(g)).empty());
    Subset a = Subset::of(g, {1, 3});
    CHECK(sigma(a).indices() == std::vector<int>{0, 1, 3, 4});
    CHECK(sigma_pm(a).indices() == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("dilation and norm") {
    Group z27 = Group::cyclic(27);
    Subset a = Subset::of(z27, {5, 6, 7, 8, 9, 19, 20, 21, 22});
    CHECK(dilate(25, a).indices() == std::vector<int>{9, 10, 11, 12, 13, 14, 15, 16, 17});
    Subset h = cyclic_subgroup(15, 5);
    CHECK(dilate(2, h) == h);
    CHECK(norm(Subset::of(Group::cyclic(10), {0, 2, 5, 8})) == 9);
    CHECK(norm(Subset::of(Group::cyclic(10), {0})) == 0);
    for (int m = 1; m <= 6; ++m) {
        std::vector<int> idx;
        for (int i = 1; i <= m; ++i) idx.push_back(i);
        CHECK(norm(Subset::of(Group::cyclic(2 * m + 1), idx)) == m * (m + 1) / 2);
    }
}

TEST_CASE("levels") {
    Group g = Group::cyclic(11);
    Subset a = Subset::of(g, {1, 4});
    auto lv = sumset_levels(a, Lambda::N0, 4);
    REQUIRE(lv.size() == 5);
    for (int j = 0; j <= 4; ++j) CHECK(Subset(g, lv[j]) == sumset(a, {Lambda::N0, TermCount::exact(j)}));
}
