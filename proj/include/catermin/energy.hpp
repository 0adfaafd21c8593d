#pragma once

#include <string>
#include <vector>

#include "catermin/graph.hpp"
#include "catermin/matching.hpp"

namespace catermin {

enum class EnergyMethod { roots, coulson, eigen };

std::string to_string(EnergyMethod m);

struct EnergyValue {
    double value = 0.0;
    EnergyMethod method = EnergyMethod::roots;
    double error_bound = 0.0;
};

// Signed coefficients of the forest characteristic polynomial
// phi(lambda) = sum_k (-1)^k m(G,k) lambda^{n-2k}; index k holds the
// coefficient of lambda^k.
std::vector<BigInt> char_poly_from_matching(const MatchingPolynomial& p, int n);

// Certified root-based energy: isolates the positive roots s_i of
// sum_k (-1)^k m_k s^{p-k} by exact rational bisection (Sturm isolation)
// and returns 2 * sum sqrt(s_i).
EnergyValue energy_from_roots(const Tree& t);
EnergyValue energy_from_roots(const MatchingPolynomial& p, double tolerance = 1e-12);

// Coulson integral after x = tan(theta); composite Simpson with
// Richardson step-halving for the error estimate.
EnergyValue energy_coulson(const Tree& t, int steps = 4096);
EnergyValue energy_coulson(const MatchingPolynomial& p, int steps = 4096);

// Dense symmetric eigendecomposition of the adjacency matrix.
EnergyValue energy_eigen(const Tree& t);

// Dispatcher: root-based result; with verify=true also runs the other
// two methods and demands pairwise agreement within 1e-8.
EnergyValue energy(const Tree& t, bool verify = false);

} // namespace catermin
