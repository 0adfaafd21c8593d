#include "catermin/extremal.hpp"

#include <algorithm>
#include <numeric>

namespace catermin {

std::vector<int> extremal_index_word(int n) {
    int k = (n + 1) / 2;
    // Left half: 1, n, 3, n-2, ... (k entries, outermost first).
    std::vector<int> left;
    int lo = 1, hi = n;
    for (int t = 0; t < k; ++t) {
        if (t % 2 == 0) {
            left.push_back(lo);
            lo += 2;
        } else {
            left.push_back(hi);
            hi -= 2;
        }
    }
    // Right half: 2, n-1, 4, n-3, ... (n-k entries, outermost first).
    std::vector<int> right;
    lo = 2;
    hi = n - 1;
    for (int t = 0; t < n - k; ++t) {
        if (t % 2 == 0) {
            right.push_back(lo);
            lo += 2;
        } else {
            right.push_back(hi);
            hi -= 2;
        }
    }
    std::vector<int> word = left;
    word.insert(word.end(), right.rbegin(), right.rend());
    return word;
}

std::pair<HalfBranch, HalfBranch> build_halves(const ReducedDegreeSequence& r) {
    int n = r.size();
    int k = (n + 1) / 2;
    std::vector<int> word = extremal_index_word(n);
    HalfBranch left, right;
    for (int t = 0; t < k; ++t) left.spine_degrees.push_back(r.degrees[word[t] - 1]);
    for (int t = n - 1; t >= k; --t) right.spine_degrees.push_back(r.degrees[word[t] - 1]);
    left.root_degree_in_branch = left.spine_degrees.back() - 1;
    if (!right.spine_degrees.empty())
        right.root_degree_in_branch = right.spine_degrees.back() - 1;
    return {left, right};
}

Caterpillar build_S(const ReducedDegreeSequence& r) {
    std::vector<int> sorted = r.degrees; // already non-increasing
    std::vector<int> word = extremal_index_word(r.size());
    std::vector<int> spine;
    spine.reserve(word.size());
    for (int idx : word) spine.push_back(sorted[idx - 1]);
    return caterpillar_from_spine(spine);
}

Majorization is_majorized(const DegreeSequence& y, const DegreeSequence& d) {
    if (y.size() != d.size())
        throw LengthMismatch("majorization needs equal-length sequences");
    long long sy = 0, sd = 0;
    bool differs = false;
    for (int i = 0; i < y.size(); ++i) {
        sy += y.degrees[i];
        sd += d.degrees[i];
        if (sy > sd) return Majorization::none;
        if (y.degrees[i] != d.degrees[i]) differs = true;
    }
    return differs ? Majorization::strict : Majorization::weak;
}

DegreeSequence majorization_step(const DegreeSequence& y, const DegreeSequence& d) {
    if (is_majorized(y, d) != Majorization::strict || y.sum() != d.sum())
        throw NotStrict("need y strictly majorized by d with equal sums");
    int l = -1, m = -1;
    for (int i = 0; i < y.size(); ++i)
        if (y.degrees[i] != d.degrees[i]) {
            if (l < 0) l = i;
            m = i;
        }
    std::vector<int> out = y.degrees;
    out[l] += 1;
    out[m] -= 1;
    return DegreeSequence(std::move(out));
}

std::vector<DegreeSequence> majorization_chain(const DegreeSequence& y,
                                               const DegreeSequence& d) {
    if (y.size() != d.size() || y.sum() != d.sum())
        throw NotComparable("chain needs equal lengths and equal sums");
    if (is_majorized(y, d) == Majorization::none)
        throw NotComparable("y is not majorized by d");
    std::vector<DegreeSequence> chain{y};
    while (chain.back() != d) chain.push_back(majorization_step(chain.back(), d));
    return chain;
}

} // namespace catermin
