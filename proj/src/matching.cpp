#include "catermin/matching.hpp"

#include <algorithm>
#include <cstdint>

namespace catermin {

namespace {

using Coeffs = std::vector<BigInt>;

void trim(Coeffs& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// a += b * x^shift * scale
void add_scaled(Coeffs& a, const Coeffs& b, std::size_t shift, const BigInt& scale) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i] * scale;
}

// Forest state: adjacency of the host tree plus alive flags. Vertices
// are removed and restored as the recursion backtracks.
struct Forest {
    const Tree& tree;
    std::vector<char> alive;

    explicit Forest(const Tree& t) : tree(t), alive(t.vertex_count(), 1) {}

    int alive_degree(int v) const {
        int d = 0;
        for (int w : tree.neighbours(v)) d += alive[w];
        return d;
    }
};

void collect_component(const Forest& f, int start, std::vector<char>& seen,
                       std::vector<int>& out) {
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int w : f.tree.neighbours(v))
            if (f.alive[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
}

Coeffs match_component(Forest& f, const std::vector<int>& comp);

// Product rule over the components reachable from `roots`.
Coeffs match_forest(Forest& f, const std::vector<int>& roots) {
    Coeffs acc{BigInt(1)};
    std::vector<char> seen(f.tree.vertex_count(), 0);
    for (int r : roots) {
        if (!f.alive[r] || seen[r]) continue;
        std::vector<int> comp;
        collect_component(f, r, seen, comp);
        acc = mul(acc, match_component(f, comp));
    }
    return acc;
}

// Edge recurrence on one tree component, always cutting a pendant edge:
// M(G) = M(G - v) + x M(G - {u, v}) with v a leaf of the component.
Coeffs match_component(Forest& f, const std::vector<int>& comp) {
    if (comp.size() == 1) return {BigInt(1)};
    int v = -1, u = -1;
    for (int cand : comp)
        if (f.alive_degree(cand) == 1) {
            v = cand;
            for (int w : f.tree.neighbours(cand))
                if (f.alive[w]) u = w;
            break;
        }
    // A finite tree always has a pendant vertex.
    f.alive[v] = 0;
    std::vector<int> rest;
    rest.reserve(comp.size() - 1);
    for (int c : comp)
        if (c != v) rest.push_back(c);
    Coeffs without_v = match_component(f, rest);
    f.alive[u] = 0;
    std::vector<int> rest2;
    rest2.reserve(rest.size() - 1);
    for (int c : rest)
        if (c != u) rest2.push_back(c);
    Coeffs without_uv = match_forest(f, rest2);
    f.alive[u] = 1;
    f.alive[v] = 1;
    add_scaled(without_v, without_uv, 1, BigInt(1));
    trim(without_v);
    return without_v;
}

Coeffs match_tree(const Tree& t) {
    Forest f(t);
    std::vector<int> all(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) all[v] = v;
    return match_forest(f, all);
}

Coeffs match_tree_minus(const Tree& t, std::vector<int> removed) {
    Forest f(t);
    for (int v : removed) f.alive[v] = 0;
    std::vector<int> all;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (f.alive[v]) all.push_back(v);
    return match_forest(f, all);
}

Coeffs match_vertex_rec(Forest& f, const std::vector<int>& roots) {
    int v = -1;
    for (int r : roots)
        if (f.alive[r]) {
            v = r;
            break;
        }
    if (v < 0) return {BigInt(1)};
    std::vector<int> rest;
    for (int r : roots)
        if (f.alive[r] && r != v) rest.push_back(r);
    f.alive[v] = 0;
    Coeffs acc = match_vertex_rec(f, rest);
    for (int w : f.tree.neighbours(v)) {
        if (!f.alive[w]) continue;
        f.alive[w] = 0;
        std::vector<int> rest2;
        for (int r : rest)
            if (r != w) rest2.push_back(r);
        add_scaled(acc, match_vertex_rec(f, rest2), 1, BigInt(1));
        f.alive[w] = 1;
    }
    f.alive[v] = 1;
    trim(acc);
    return acc;
}

} // namespace

MatchingPolynomial::MatchingPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("matching polynomial needs at least one coefficient");
    trim(c_);
    if (c_[0] != 1) throw Error("m(G,0) must be 1");
    for (const BigInt& x : c_)
        if (x < 0) throw Error("matching numbers are nonnegative");
}

const BigInt& MatchingPolynomial::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k > degree()) return zero;
    return c_[k];
}

Rational MatchingPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += Rational(*it);
    }
    return acc;
}

BigInt MatchingPolynomial::eval_at_one() const {
    BigInt acc(0);
    for (const BigInt& c : c_) acc += c;
    return acc;
}

MatchingPolynomial matching_poly(const Tree& t) {
    return MatchingPolynomial(match_tree(t));
}

MatchingPolynomial matching_poly(const Caterpillar& c) {
    // Spine DP, left to right. `free_p` counts matchings of the prefix
    // with the current spine vertex uncovered, `cov_p` with it covered.
    int m = c.spine_length();
    Coeffs free_p{BigInt(1)};
    Coeffs cov_p;
    {
        int l0 = c.leaf_count(0);
        cov_p = Coeffs{BigInt(0), BigInt(l0)};
        trim(cov_p);
    }
    for (int i = 1; i < m; ++i) {
        Coeffs any = free_p;
        add_scaled(any, cov_p, 0, BigInt(1));
        trim(any);
        // u_i unmatched: its leaves stay unmatched too.
        Coeffs nf = any;
        // u_i matched to one of its leaves, or across the spine edge to
        // an uncovered u_{i-1}.
        Coeffs nc{BigInt(0)};
        add_scaled(nc, any, 1, BigInt(c.leaf_count(i)));
        add_scaled(nc, free_p, 1, BigInt(1));
        trim(nc);
        free_p = std::move(nf);
        cov_p = std::move(nc);
    }
    add_scaled(free_p, cov_p, 0, BigInt(1));
    trim(free_p);
    return MatchingPolynomial(std::move(free_p));
}

MatchingPolynomial matching_poly_vertex_rec(const Tree& t) {
    Forest f(t);
    std::vector<int> all(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) all[v] = v;
    return MatchingPolynomial(match_vertex_rec(f, all));
}

MatchingPolynomial matching_poly_bruteforce(const Tree& t) {
    int m = static_cast<int>(t.edges().size());
    if (m > 25) throw TooLarge("brute-force oracle limited to 25 edges");
    // conflict[i]: edges sharing an endpoint with edge i.
    std::vector<std::uint32_t> conflict(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto [a, b] = t.edges()[i];
            auto [c, d] = t.edges()[j];
            if (a == c || a == d || b == c || b == d)
                conflict[i] |= (1u << j);
        }
    std::vector<BigInt> counts(m / 2 + 2, BigInt(0));
    int maxk = 0;
    for (std::uint64_t s = 0; s < (1ull << m); ++s) {
        std::uint32_t set = static_cast<std::uint32_t>(s);
        bool ok = true;
        for (std::uint32_t rem = set; rem; rem &= rem - 1) {
            int i = __builtin_ctz(rem);
            if (conflict[i] & set) {
                ok = false;
                break;
            }
        }
        if (ok) {
            int k = __builtin_popcount(set);
            counts[k] += 1;
            maxk = std::max(maxk, k);
        }
    }
    counts.resize(maxk + 1);
    return MatchingPolynomial(std::move(counts));
}

BigInt hosoya(const Tree& t) { return matching_poly(t).eval_at_one(); }
BigInt hosoya(const Caterpillar& c) { return matching_poly(c).eval_at_one(); }

MatchingPolynomial m0_poly(const RootedBranch& b) {
    return MatchingPolynomial(match_tree_minus(b.tree, {b.root}));
}

Rational tau(const RootedBranch& b, const Rational& x) {
    Rational m0 = m0_poly(b).eval(x);
    Rational m = matching_poly(b.tree).eval(x);
    Rational r = m0 / m;
    r.canonicalize();
    return r;
}

namespace {

Rational tau_rec(const Tree& t, int v, int parent, const Rational& x) {
    Rational sum(0);
    for (int w : t.neighbours(v))
        if (w != parent) sum += tau_rec(t, w, v, x);
    Rational r = Rational(1) / (Rational(1) + x * sum);
    r.canonicalize();
    return r;
}

} // namespace

Rational tau_recursive(const RootedBranch& b, const Rational& x) {
    return tau_rec(b.tree, b.root, -1, x);
}

MatchingPolynomial decomposed_matching_poly(const Caterpillar& c, int i, int j) {
    int m = c.spine_length();
    if (i < 1 || j > m || i >= j)
        throw InvalidDecomposition("need 1 <= i < j <= spine length");
    if (i < 2 || j > m - 1)
        throw InvalidDecomposition("decomposition needs non-empty outer branches");

    RootedBranch left = split_at_spine_edge(c, i - 1).first;
    RootedBranch right = split_at_spine_edge(c, j).second;

    // Middle segment H: spine positions i..j, pendant leaves kept on
    // interior vertices only. v is index 0, w is index hlen-1.
    int hlen = j - i + 1;
    std::vector<std::pair<int, int>> hedges;
    for (int k = 0; k + 1 < hlen; ++k) hedges.emplace_back(k, k + 1);
    int next = hlen;
    for (int k = 1; k + 1 < hlen; ++k) {
        int leaves = c.spine_degrees()[i - 1 + k] - 2;
        for (int l = 0; l < leaves; ++l) hedges.emplace_back(k, next++);
    }
    Tree h(next, std::move(hedges));
    int v = 0, w = hlen - 1;

    BigInt d(c.spine_degrees()[i - 1] - 2);
    BigInt dp(c.spine_degrees()[j - 1] - 2);

    Coeffs mb = matching_poly(left.tree).coefficients();
    Coeffs m0b = m0_poly(left).coefficients();
    Coeffs mbp = matching_poly(right.tree).coefficients();
    Coeffs m0bp = m0_poly(right).coefficients();
    Coeffs mh = matching_poly(h).coefficients();
    Coeffs mh_v = match_tree_minus(h, {v});
    Coeffs mh_w = match_tree_minus(h, {w});
    Coeffs mh_vw = match_tree_minus(h, {v, w});

    // tau terms cleared of denominators: M(B) tau(B) = M0(B).
    Coeffs mbxmbp = mul(mb, mbp);
    Coeffs out{BigInt(0)};
    add_scaled(out, mul(mbxmbp, mh), 0, BigInt(1));
    add_scaled(out, mul(mbxmbp, mh_vw), 2, d * dp);
    add_scaled(out, mul(mul(m0b, m0bp), mh_vw), 2, BigInt(1));
    add_scaled(out, mul(mbxmbp, mh_w), 1, dp);
    add_scaled(out, mul(mul(mb, m0bp), mh_w), 1, BigInt(1));
    add_scaled(out, mul(mbxmbp, mh_v), 1, d);
    add_scaled(out, mul(mul(m0b, mbp), mh_v), 1, BigInt(1));
    add_scaled(out, mul(mul(mb, m0bp), mh_vw), 2, d);
    add_scaled(out, mul(mul(m0b, mbp), mh_vw), 2, dp);
    trim(out);
    return MatchingPolynomial(std::move(out));
}

} // namespace catermin
