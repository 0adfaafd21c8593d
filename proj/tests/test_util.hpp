#pragma once

#include <functional>
#include <random>
#include <vector>

#include "catermin/graph.hpp"

namespace catermin::testutil {

// Random labelled tree from a Prufer sequence.
inline Tree random_tree(int n, std::mt19937& rng) {
    if (n == 1) return Tree(1, {});
    if (n == 2) return Tree(2, {{0, 1}});
    std::uniform_int_distribution<int> dist(0, n - 1);
    std::vector<int> prufer(n - 2);
    for (auto& p : prufer) p = dist(rng);
    std::vector<int> deg(n, 1);
    for (int p : prufer) ++deg[p];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(n, 0);
    for (int p : prufer) {
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1 && !used[v]) {
                edges.emplace_back(v, p);
                used[v] = 1;
                --deg[p];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Tree(n, std::move(edges));
}

// All spine words (entries >= 2, plus single-vertex stars >= 1) whose
// caterpillar has at most max_vertices vertices.
inline std::vector<Caterpillar> all_caterpillars_up_to(int max_vertices) {
    std::vector<Caterpillar> out;
    for (int d = 1; d + 1 <= max_vertices; ++d)
        out.push_back(caterpillar_from_spine({d}));
    std::vector<int> word;
    // n = m + sum(b) - 2(m-1); grow words depth-first.
    auto vertices = [](const std::vector<int>& w) {
        int s = 0;
        for (int b : w) s += b;
        return static_cast<int>(w.size()) + s - 2 * (static_cast<int>(w.size()) - 1);
    };
    std::function<void()> go = [&]() {
        if (word.size() >= 2) {
            std::vector<int> rev(word.rbegin(), word.rend());
            if (word <= rev) out.push_back(caterpillar_from_spine(word));
        }
        for (int b = 2;; ++b) {
            word.push_back(b);
            if (vertices(word) > max_vertices) {
                word.pop_back();
                break;
            }
            go();
            word.pop_back();
        }
    };
    go();
    return out;
}

} // namespace catermin::testutil
