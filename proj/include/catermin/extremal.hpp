#pragma once

#include <utility>
#include <vector>

#include "catermin/graph.hpp"

namespace catermin {

// One half of the extremal caterpillar: spine degrees listed outermost
// vertex first, root last. The root carries one less than its final
// degree (the joining edge supplies the missing one).
struct HalfBranch {
    std::vector<int> spine_degrees;
    int root_degree_in_branch = 0;

    bool empty() const { return spine_degrees.empty(); }
    friend bool operator==(const HalfBranch&, const HalfBranch&) = default;
};

// 1-based positions of d_1..d_n along the spine of S(D), left to right.
// Left half takes odd indices ascending interleaved with n, n-2, ...;
// right half takes even indices ascending interleaved with n-1, n-3, ...
// and is read root-first. This single rule reproduces the n = 2, 3, 4
// special cases and all four n = 4l+i displays.
std::vector<int> extremal_index_word(int n);

std::pair<HalfBranch, HalfBranch> build_halves(const ReducedDegreeSequence& r);
Caterpillar build_S(const ReducedDegreeSequence& r);

enum class Majorization { none, weak, strict };

// Whether every prefix sum of y is <= the corresponding prefix sum of d.
Majorization is_majorized(const DegreeSequence& y, const DegreeSequence& d);

// One unit transfer: y_l + 1 and y_m - 1 at the first and last positions
// where y and d differ.
DegreeSequence majorization_step(const DegreeSequence& y, const DegreeSequence& d);

// Chain y = Y_0 < Y_1 < ... < Y_J = d; J = (1/2) sum |d_i - y_i|.
std::vector<DegreeSequence> majorization_chain(const DegreeSequence& y,
                                               const DegreeSequence& d);

} // namespace catermin
