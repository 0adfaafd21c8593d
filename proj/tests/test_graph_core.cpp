#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "catermin/graph.hpp"
#include "test_util.hpp"

using namespace catermin;

TEST_CASE("caterpillar_from_spine examples") {
    Caterpillar c = caterpillar_from_spine({4, 2, 3});
    CHECK(c.leaf_count(0) == 3);
    CHECK(c.leaf_count(1) == 0);
    CHECK(c.leaf_count(2) == 2);
    CHECK(c.vertex_count() == 8);

    Caterpillar star = caterpillar_from_spine({5});
    CHECK(star.vertex_count() == 6);
    CHECK(star.leaf_count(0) == 5);

    Caterpillar p4 = caterpillar_from_spine({2, 2});
    CHECK(p4.leaf_count(0) == 1);
    CHECK(p4.leaf_count(1) == 1);
    CHECK(p4.vertex_count() == 4);

    CHECK_THROWS_AS(caterpillar_from_spine({1, 2}), InvalidSpine);
    CHECK_THROWS_AS(caterpillar_from_spine({3, 1, 3}), InvalidSpine);
    CHECK_THROWS_AS(caterpillar_from_spine({}), InvalidSpine);
}

TEST_CASE("caterpillar_to_tree labelling") {
    Tree star = caterpillar_to_tree(caterpillar_from_spine({3}));
    std::set<std::pair<int, int>> es(star.edges().begin(), star.edges().end());
    CHECK(es == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});

    Tree p4 = caterpillar_to_tree(caterpillar_from_spine({2, 2}));
    std::set<std::pair<int, int>> es2(p4.edges().begin(), p4.edges().end());
    CHECK(es2 == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});

    Tree t = caterpillar_to_tree(caterpillar_from_spine({4, 2, 3}));
    CHECK(t.vertex_count() == 8);
    std::multiset<int> degs;
    for (int v = 0; v < 8; ++v) degs.insert(t.degree(v));
    CHECK(degs == std::multiset<int>{4, 3, 2, 1, 1, 1, 1, 1});
}

TEST_CASE("degree_sequence / reduce / expand") {
    Tree p4 = caterpillar_to_tree(caterpillar_from_spine({2, 2}));
    CHECK(degree_sequence(p4).degrees == std::vector<int>{2, 2, 1, 1});

    Tree star = caterpillar_to_tree(caterpillar_from_spine({4}));
    CHECK(degree_sequence(star).degrees == std::vector<int>{4, 1, 1, 1, 1});

    DegreeSequence d({4, 3, 2, 1, 1, 1, 1, 1});
    CHECK(reduce(d).degrees == std::vector<int>{4, 3, 2});
    CHECK_THROWS_AS(reduce(DegreeSequence({1, 1})), EmptyResult);

    CHECK(expand(ReducedDegreeSequence({4, 3, 2})).degrees ==
          std::vector<int>{4, 3, 2, 1, 1, 1, 1, 1});
    CHECK(expand(ReducedDegreeSequence({2, 2})).degrees == std::vector<int>{2, 2, 1, 1});
    CHECK(expand(ReducedDegreeSequence({5})).degrees == std::vector<int>{5, 1, 1, 1, 1, 1});
}

TEST_CASE("reduce/expand round trip") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        int m = 1 + rng() % 6;
        std::vector<int> d(m);
        for (auto& x : d) x = 2 + rng() % 5;
        std::sort(d.begin(), d.end(), std::greater<int>());
        ReducedDegreeSequence r(d);
        CHECK(reduce(expand(r)) == r);
    }
}

TEST_CASE("canonical_form") {
    CHECK(canonical_form(caterpillar_from_spine({4, 2, 3})).spine_degrees() ==
          std::vector<int>{3, 2, 4});
    CHECK(canonical_form(caterpillar_from_spine({3, 2, 4})).spine_degrees() ==
          std::vector<int>{3, 2, 4});
    CHECK(canonical_form(caterpillar_from_spine({3, 2, 3})).spine_degrees() ==
          std::vector<int>{3, 2, 3});
    // Idempotent and reversal-invariant.
    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        int m = 1 + rng() % 5;
        std::vector<int> w(m);
        for (auto& x : w) x = 2 + rng() % 4;
        Caterpillar c = caterpillar_from_spine(w);
        Caterpillar k = canonical_form(c);
        CHECK(canonical_form(k) == k);
        std::vector<int> rev(w.rbegin(), w.rend());
        CHECK(canonical_form(caterpillar_from_spine(rev)) == k);
    }
}

TEST_CASE("degree multiset of spine matches spine degrees") {
    for (const auto& c : testutil::all_caterpillars_up_to(9)) {
        Tree t = caterpillar_to_tree(c);
        std::multiset<int> big;
        for (int v = 0; v < t.vertex_count(); ++v)
            if (t.degree(v) >= 2) big.insert(t.degree(v));
        std::multiset<int> spine;
        for (int b : c.spine_degrees())
            if (b >= 2 || c.spine_length() > 1) spine.insert(b);
        if (c.spine_length() == 1 && c.spine_degrees()[0] == 1) continue; // P2
        CHECK(big == spine);
    }
}

TEST_CASE("split_at_spine_edge") {
    Caterpillar c = caterpillar_from_spine({4, 2, 3});
    auto [l1, r1] = split_at_spine_edge(c, 1);
    CHECK(l1.tree.vertex_count() == 4); // star u1 + 3 leaves
    CHECK(l1.tree.degree(l1.root) == 3);
    CHECK(r1.tree.vertex_count() == 4); // spine (2,3) part minus u1
    auto [l2, r2] = split_at_spine_edge(c, 2);
    CHECK(l2.tree.vertex_count() == 5);
    CHECK(r2.tree.vertex_count() == 3);

    auto [la, ra] = split_at_spine_edge(caterpillar_from_spine({2, 2}), 1);
    CHECK(la.tree.vertex_count() == 2);
    CHECK(ra.tree.vertex_count() == 2);

    CHECK_THROWS_AS(split_at_spine_edge(c, 0), IndexOutOfRange);
    CHECK_THROWS_AS(split_at_spine_edge(c, 3), IndexOutOfRange);

    // Partition: vertex counts add up, edges partition minus the cut edge.
    for (const auto& cc : testutil::all_caterpillars_up_to(9)) {
        if (cc.spine_length() < 2) continue;
        Tree t = caterpillar_to_tree(cc);
        for (int i = 1; i < cc.spine_length(); ++i) {
            auto [l, r] = split_at_spine_edge(cc, i);
            CHECK(l.tree.vertex_count() + r.tree.vertex_count() == t.vertex_count());
            CHECK(l.tree.edges().size() + r.tree.edges().size() + 1 == t.edges().size());
        }
    }
}

TEST_CASE("tree validation") {
    CHECK_THROWS(Tree(3, {{0, 1}}));                 // too few edges
    CHECK_THROWS(Tree(4, {{0, 1}, {2, 3}, {0, 1}})); // disconnected/multi-edge
    CHECK_THROWS(Tree(2, {{0, 0}}));                 // self loop
}
