#pragma once

#include <vector>

#include "catermin/graph.hpp"
#include "catermin/rational.hpp"

namespace catermin {

// M(G,x) = sum_k m(G,k) x^k with exact nonnegative integer coefficients,
// lowest degree first. coeff(0) == 1 for every graph.
class MatchingPolynomial {
public:
    explicit MatchingPolynomial(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int k) const;
    const std::vector<BigInt>& coefficients() const { return c_; }

    Rational eval(const Rational& x) const;
    BigInt eval_at_one() const;

    friend bool operator==(const MatchingPolynomial&, const MatchingPolynomial&) = default;

private:
    std::vector<BigInt> c_;
};

// Edge recurrence M(G) = M(G-uv) + x M(G-{u,v}) with the component
// product rule; accepts the forests that arise during recursion.
MatchingPolynomial matching_poly(const Tree& t);
// O(m) spine dynamic program; identical output to the tree engine.
MatchingPolynomial matching_poly(const Caterpillar& c);
// Vertex recurrence M(G) = M(G-v) + x sum_w M(G-{v,w}); cross-check only.
MatchingPolynomial matching_poly_vertex_rec(const Tree& t);
// Ground-truth oracle: enumerates all edge subsets. Throws TooLarge
// beyond 25 edges.
MatchingPolynomial matching_poly_bruteforce(const Tree& t);

BigInt hosoya(const Tree& t);
BigInt hosoya(const Caterpillar& c);

// Matchings of B avoiding the root: the matching polynomial of B - r(B).
MatchingPolynomial m0_poly(const RootedBranch& b);

// tau(B,x) = M0(B,x)/M(B,x), exact; lies in (0,1] for x > 0.
Rational tau(const RootedBranch& b, const Rational& x);
// The reciprocal recursion over root subtrees, kept as a cross-check.
Rational tau_recursive(const RootedBranch& b, const Rational& x);

// Assembles M(c) from the two outer branches at spine positions i < j,
// their tau numerators, the pendant-leaf counts at u_i, u_j and the four
// middle-segment polynomials. Requires 2 <= i < j <= m-1 so that B, B'
// and H are all non-empty.
MatchingPolynomial decomposed_matching_poly(const Caterpillar& c, int i, int j);

} // namespace catermin
