#include "catermin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace catermin {

Tree::Tree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ <= 0) throw Error("tree needs at least one vertex");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw Error("tree on " + std::to_string(n_) + " vertices needs " +
                    std::to_string(n_ - 1) + " edges, got " +
                    std::to_string(edges_.size()));
    adj_.resize(n_);
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
            throw Error("bad edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    // n-1 edges + connected implies acyclic.
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n_) throw Error("graph is not connected");
}

int Caterpillar::leaf_count(int i) const {
    int m = spine_length();
    int spine_neighbours = (m == 1) ? 0 : ((i == 0 || i == m - 1) ? 1 : 2);
    return spine_[i] - spine_neighbours;
}

int Caterpillar::vertex_count() const {
    int m = spine_length();
    int total = std::accumulate(spine_.begin(), spine_.end(), 0);
    return m + total - 2 * (m - 1);
}

Caterpillar caterpillar_from_spine(const std::vector<int>& spine) {
    if (spine.empty()) throw InvalidSpine("empty spine");
    int m = static_cast<int>(spine.size());
    if (m == 1) {
        if (spine[0] < 1) throw InvalidSpine("single spine vertex needs degree >= 1");
        return Caterpillar(spine);
    }
    // Ends need a pendant leaf on top of their single spine neighbour,
    // interior vertices have two spine neighbours: every entry >= 2.
    for (int i = 0; i < m; ++i) {
        if (spine[i] < 2)
            throw InvalidSpine("spine entry " + std::to_string(spine[i]) +
                               " at position " + std::to_string(i + 1) +
                               " is too small");
    }
    return Caterpillar(spine);
}

Tree caterpillar_to_tree(const Caterpillar& c) {
    int m = c.spine_length();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    int next = m;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < c.leaf_count(i); ++k) edges.emplace_back(i, next++);
    return Tree(next, std::move(edges));
}

DegreeSequence::DegreeSequence(std::vector<int> d) : degrees(std::move(d)) {
    if (degrees.empty()) throw Error("empty degree sequence");
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
        if (degrees[i] < degrees[i + 1]) throw Error("degree sequence must be non-increasing");
    for (int x : degrees)
        if (x < 1) throw Error("degrees must be positive");
}

DegreeSequence DegreeSequence::sorted(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    return DegreeSequence(std::move(d));
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

bool DegreeSequence::realizable_as_tree() const {
    return sum() == 2LL * (size() - 1);
}

ReducedDegreeSequence::ReducedDegreeSequence(std::vector<int> d) : degrees(std::move(d)) {
    if (degrees.empty()) throw EmptySequence("empty reduced degree sequence");
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
        if (degrees[i] < degrees[i + 1]) throw Error("reduced sequence must be non-increasing");
    for (int x : degrees)
        if (x < 2) throw Error("reduced degrees must be >= 2");
}

ReducedDegreeSequence ReducedDegreeSequence::sorted(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    return ReducedDegreeSequence(std::move(d));
}

RootedBranch::RootedBranch(Tree t, int r) : tree(std::move(t)), root(r) {
    if (root < 0 || root >= tree.vertex_count())
        throw IndexOutOfRange("branch root out of range");
}

DegreeSequence degree_sequence(const Tree& t) {
    std::vector<int> d(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) d[v] = t.degree(v);
    return DegreeSequence::sorted(std::move(d));
}

ReducedDegreeSequence reduce(const DegreeSequence& d) {
    std::vector<int> out;
    for (int x : d.degrees)
        if (x >= 2) out.push_back(x);
    if (out.empty())
        throw EmptyResult("all degrees are 1: no caterpillar spine");
    return ReducedDegreeSequence(std::move(out));
}

DegreeSequence expand(const ReducedDegreeSequence& r) {
    int m = r.size();
    long long total = std::accumulate(r.degrees.begin(), r.degrees.end(), 0LL);
    long long leaves = total - 2 * (m - 1);
    std::vector<int> out = r.degrees;
    out.insert(out.end(), static_cast<std::size_t>(leaves), 1);
    return DegreeSequence(std::move(out));
}

Caterpillar canonical_form(const Caterpillar& c) {
    std::vector<int> fwd = c.spine_degrees();
    std::vector<int> rev(fwd.rbegin(), fwd.rend());
    return caterpillar_from_spine(std::min(fwd, rev));
}

namespace {

// Builds the tree for a spine segment [lo, hi] of c, where the vertex at
// `cut` end lost its spine neighbour across the cut.
RootedBranch build_branch(const Caterpillar& c, int lo, int hi, bool root_at_hi) {
    int m = c.spine_length();
    int len = hi - lo + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
    int next = len;
    for (int i = 0; i < len; ++i) {
        int pos = lo + i;
        // Leaf count relative to the original caterpillar: spine
        // neighbours inside the original tree, not the segment.
        int spine_neighbours = (m == 1) ? 0 : ((pos == 0 || pos == m - 1) ? 1 : 2);
        int leaves = c.spine_degrees()[pos] - spine_neighbours;
        for (int k = 0; k < leaves; ++k) edges.emplace_back(i, next++);
    }
    return RootedBranch(Tree(next, std::move(edges)), root_at_hi ? len - 1 : 0);
}

} // namespace

std::pair<RootedBranch, RootedBranch> split_at_spine_edge(const Caterpillar& c, int i) {
    int m = c.spine_length();
    if (i < 1 || i >= m) throw IndexOutOfRange("spine edge index out of range");
    return {build_branch(c, 0, i - 1, true), build_branch(c, i, m - 1, false)};
}

} // namespace catermin
