#pragma once

#include <utility>
#include <vector>

#include "catermin/errors.hpp"

namespace catermin {

// A tree on vertices 0..n-1. Connectivity and acyclicity are checked on
// construction; adjacency lists are built once and kept immutable.
class Tree {
public:
    Tree(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Caterpillar stored by the TOTAL degree of each spine vertex, left to
// right. Leaf counts are derived: ends lose 1 to the spine, interior
// vertices lose 2. A length-1 spine is a star (any entry >= 1).
class Caterpillar {
public:
    const std::vector<int>& spine_degrees() const { return spine_; }
    int spine_length() const { return static_cast<int>(spine_.size()); }
    int leaf_count(int i) const;
    int vertex_count() const;

    friend Caterpillar caterpillar_from_spine(const std::vector<int>& spine);
    friend bool operator==(const Caterpillar&, const Caterpillar&) = default;

private:
    explicit Caterpillar(std::vector<int> spine) : spine_(std::move(spine)) {}
    std::vector<int> spine_;
};

// Non-increasing positive degrees.
struct DegreeSequence {
    std::vector<int> degrees;

    explicit DegreeSequence(std::vector<int> d);
    static DegreeSequence sorted(std::vector<int> d);
    int size() const { return static_cast<int>(degrees.size()); }
    long long sum() const;
    // True iff realizable as the degree sequence of a tree.
    bool realizable_as_tree() const;
    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

// Non-increasing degrees, all >= 2 (the 1's removed).
struct ReducedDegreeSequence {
    std::vector<int> degrees;

    explicit ReducedDegreeSequence(std::vector<int> d);
    static ReducedDegreeSequence sorted(std::vector<int> d);
    int size() const { return static_cast<int>(degrees.size()); }
    friend bool operator==(const ReducedDegreeSequence&, const ReducedDegreeSequence&) = default;
    friend auto operator<=>(const ReducedDegreeSequence& a, const ReducedDegreeSequence& b) {
        return a.degrees <=> b.degrees;
    }
};

// A complete branch: a subtree whose removal leaves the host connected,
// rooted at the vertex adjacent to the rest of the host tree.
struct RootedBranch {
    Tree tree;
    int root;

    RootedBranch(Tree t, int r);
    // Degree of the root inside the branch (the paper's rd(B)).
    int root_degree() const { return tree.degree(root); }
};

Caterpillar caterpillar_from_spine(const std::vector<int>& spine);
Tree caterpillar_to_tree(const Caterpillar& c);
DegreeSequence degree_sequence(const Tree& t);
ReducedDegreeSequence reduce(const DegreeSequence& d);
DegreeSequence expand(const ReducedDegreeSequence& r);
Caterpillar canonical_form(const Caterpillar& c);

// Splits between spine vertices i and i+1 (1-based, 1 <= i < m).
// Returns the left branch rooted at u_i and the right branch rooted at
// u_{i+1}.
std::pair<RootedBranch, RootedBranch> split_at_spine_edge(const Caterpillar& c, int i);

} // namespace catermin
