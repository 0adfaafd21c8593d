#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "catermin/extremal.hpp"
#include "catermin/matching.hpp"
#include "test_util.hpp"

using namespace catermin;

TEST_CASE("extremal index words") {
    CHECK(extremal_index_word(1) == std::vector<int>{1});
    CHECK(extremal_index_word(2) == std::vector<int>{1, 2});
    CHECK(extremal_index_word(3) == std::vector<int>{1, 3, 2});
    CHECK(extremal_index_word(4) == std::vector<int>{1, 4, 3, 2});
    CHECK(extremal_index_word(5) == std::vector<int>{1, 5, 3, 4, 2});
    CHECK(extremal_index_word(10) == std::vector<int>{1, 10, 3, 8, 5, 6, 7, 4, 9, 2});
    // Every word is a permutation with the two largest degrees at the ends.
    for (int n = 1; n <= 30; ++n) {
        std::vector<int> w = extremal_index_word(n);
        std::vector<int> s = w;
        std::sort(s.begin(), s.end());
        std::vector<int> iota(n);
        std::iota(iota.begin(), iota.end(), 1);
        CHECK(s == iota);
        CHECK(w.front() == 1);
        if (n >= 2) CHECK(w.back() == 2);
    }
}

TEST_CASE("build_S pins") {
    CHECK(build_S(ReducedDegreeSequence({4, 3, 2})).spine_degrees() ==
          std::vector<int>{4, 2, 3});
    CHECK(build_S(ReducedDegreeSequence({5, 4, 3, 2, 2})).spine_degrees() ==
          std::vector<int>{5, 2, 3, 2, 4});
    CHECK(build_S(ReducedDegreeSequence({5, 5, 5, 4, 4, 4, 4, 3, 3, 3})).spine_degrees() ==
          std::vector<int>{5, 3, 5, 3, 4, 4, 4, 4, 3, 5});
    CHECK(build_S(ReducedDegreeSequence({7})).spine_degrees() == std::vector<int>{7});
    CHECK(build_S(ReducedDegreeSequence({3, 2})).spine_degrees() == std::vector<int>{3, 2});
    CHECK(build_S(ReducedDegreeSequence({4, 4, 2, 2})).spine_degrees() ==
          std::vector<int>{4, 2, 2, 4});
}

TEST_CASE("build_halves reassembles S") {
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) d[i] = 2 + n - 1 - i; // distinct, decreasing
        ReducedDegreeSequence r(d);
        auto [l, rr] = build_halves(r);
        std::vector<int> spine = l.spine_degrees;
        std::vector<int> right = rr.spine_degrees; // root first after reversal
        spine.insert(spine.end(), right.rbegin(), right.rend());
        CHECK(spine == build_S(r).spine_degrees());
        CHECK(l.root_degree_in_branch == l.spine_degrees.back() - 1);
    }
}

TEST_CASE("S spine is a permutation of the input degrees") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) d[i] = 5 - (i % 4 == 3); // mix of 5s and 4s
        std::sort(d.begin(), d.end(), std::greater<int>());
        ReducedDegreeSequence r(d);
        std::multiset<int> a(d.begin(), d.end());
        auto s = build_S(r).spine_degrees();
        std::multiset<int> b(s.begin(), s.end());
        CHECK(a == b);
    }
}

TEST_CASE("is_majorized") {
    DegreeSequence d({4, 3, 2, 1, 1, 1});
    DegreeSequence y({3, 3, 2, 2, 1, 1});
    DegreeSequence z({2, 2, 2, 2, 2, 2});
    CHECK(is_majorized(y, d) == Majorization::strict);
    CHECK(is_majorized(z, d) == Majorization::strict);
    CHECK(is_majorized(z, y) == Majorization::strict);
    CHECK(is_majorized(d, y) == Majorization::none);
    CHECK(is_majorized(d, d) == Majorization::weak);
    CHECK_THROWS_AS(is_majorized(DegreeSequence({2, 1}), d), LengthMismatch);
    // Incomparable pair: neither dominates the other's prefix sums.
    DegreeSequence a({3, 3, 3, 1});
    DegreeSequence b({4, 2, 2, 2});
    CHECK(is_majorized(a, b) == Majorization::none);
    CHECK(is_majorized(b, a) == Majorization::none);
}

TEST_CASE("majorization_step") {
    DegreeSequence d({4, 3, 2, 1, 1, 1});
    DegreeSequence y({3, 3, 2, 2, 1, 1});
    DegreeSequence s = majorization_step(y, d);
    CHECK(s.degrees == std::vector<int>{4, 3, 2, 1, 1, 1});
    CHECK_THROWS_AS(majorization_step(d, d), NotStrict);
    // Unequal sums.
    CHECK_THROWS_AS(majorization_step(DegreeSequence({2, 2}), DegreeSequence({4, 1})),
                    NotStrict);
}

TEST_CASE("majorization_chain") {
    DegreeSequence d({5, 3, 2, 1, 1, 1, 1});
    DegreeSequence y({2, 2, 2, 2, 2, 2, 2});
    auto chain = majorization_chain(y, d);
    long long diff = 0;
    for (int i = 0; i < d.size(); ++i) diff += std::abs(d.degrees[i] - y.degrees[i]);
    CHECK(static_cast<long long>(chain.size()) == diff / 2 + 1);
    CHECK(chain.front() == y);
    CHECK(chain.back() == d);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(is_majorized(chain[i], chain[i + 1]) == Majorization::strict);
        CHECK(chain[i].sum() == chain[i + 1].sum());
    }
    CHECK_THROWS_AS(majorization_chain(d, y), NotComparable);
    CHECK_THROWS_AS(majorization_chain(DegreeSequence({3, 1}), DegreeSequence({3, 2})),
                    NotComparable);
}

TEST_CASE("chain steps only change two positions by one unit") {
    DegreeSequence d({6, 4, 2, 2, 1, 1, 1, 1});
    DegreeSequence y({3, 3, 3, 3, 2, 2, 1, 1});
    auto chain = majorization_chain(y, d);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int ups = 0, downs = 0, other = 0;
        for (int j = 0; j < d.size(); ++j) {
            int delta = chain[i + 1].degrees[j] - chain[i].degrees[j];
            if (delta == 1) ++ups;
            else if (delta == -1) ++downs;
            else if (delta != 0) ++other;
        }
        CHECK(ups == 1);
        CHECK(downs == 1);
        CHECK(other == 0);
    }
}
