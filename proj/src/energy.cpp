#include "catermin/energy.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace catermin {

std::string to_string(EnergyMethod m) {
    switch (m) {
        case EnergyMethod::roots: return "roots";
        case EnergyMethod::coulson: return "coulson";
        case EnergyMethod::eigen: return "eigen";
    }
    return "?";
}

std::vector<BigInt> char_poly_from_matching(const MatchingPolynomial& p, int n) {
    if (2 * p.degree() > n)
        throw DegreeMismatch("matching degree exceeds floor(n/2)");
    std::vector<BigInt> out(n + 1, BigInt(0));
    BigInt sign(1);
    for (int k = 0; k <= p.degree(); ++k) {
        out[n - 2 * k] = sign * p.coeff(k);
        sign = -sign;
    }
    return out;
}

namespace {

using RPoly = std::vector<Rational>; // ascending
using IPoly = std::vector<BigInt>;   // ascending

void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly derivative(const RPoly& p) {
    RPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
    return out;
}

// Remainder of a by b (b non-zero), over the rationals.
RPoly rem(RPoly a, const RPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        rtrim(a);
    }
    return a;
}

RPoly quotient(RPoly a, const RPoly& b) {
    RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        rtrim(a);
    }
    return q;
}

RPoly make_monic(RPoly p) {
    rtrim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

RPoly poly_gcd(RPoly a, RPoly b) {
    rtrim(a);
    rtrim(b);
    while (!b.empty()) {
        RPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Yun's algorithm: p = prod f_i^i with each f_i squarefree.
std::vector<std::pair<RPoly, int>> squarefree_factors(RPoly p) {
    std::vector<std::pair<RPoly, int>> out;
    p = make_monic(std::move(p));
    if (p.size() <= 1) return out;
    RPoly dp = derivative(p);
    RPoly a = poly_gcd(p, dp);
    RPoly b = quotient(p, a);
    RPoly c = quotient(dp, a);
    RPoly d = c;
    {
        RPoly db = derivative(b);
        d.resize(std::max(d.size(), db.size()), Rational(0));
        for (std::size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
        rtrim(d);
    }
    int i = 1;
    while (b.size() > 1) {
        RPoly f = poly_gcd(b, d);
        if (f.size() > 1) out.emplace_back(f, i);
        b = quotient(b, f);
        RPoly cc = quotient(d, f);
        RPoly db = derivative(b);
        d = cc;
        d.resize(std::max(d.size(), db.size()), Rational(0));
        for (std::size_t j = 0; j < db.size(); ++j) d[j] -= db[j];
        rtrim(d);
        ++i;
    }
    return out;
}

IPoly to_integer(const RPoly& p) {
    BigInt l(1);
    for (const auto& c : p) l = lcm(l, c.get_den());
    IPoly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        Rational v = c * Rational(l);
        out.push_back(v.get_num());
    }
    return out;
}

void make_primitive(IPoly& p) {
    BigInt g(0);
    for (const auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
}

// Sign of p at num/den, den > 0.
int eval_sign(const IPoly& p, const BigInt& num, const BigInt& den) {
    BigInt acc(0);
    BigInt dpow(1);
    // Horner from the top: acc = acc*num + c_i*den^(deg-i)
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * num + (*it) * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

int eval_sign(const IPoly& p, const Rational& x) {
    return eval_sign(p, x.get_num(), x.get_den());
}

std::vector<IPoly> sturm_chain(const IPoly& f) {
    std::vector<IPoly> chain;
    chain.push_back(f);
    IPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * BigInt(static_cast<long>(i)));
    chain.push_back(d);
    while (chain.back().size() > 1) {
        // -rem over the rationals, rescaled to a primitive integer poly.
        RPoly a, b;
        for (const auto& c : chain[chain.size() - 2]) a.push_back(Rational(c));
        for (const auto& c : chain.back()) b.push_back(Rational(c));
        RPoly r = rem(std::move(a), b);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        IPoly ir = to_integer(r);
        make_primitive(ir);
        chain.push_back(std::move(ir));
    }
    return chain;
}

int sign_variations(const std::vector<IPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = eval_sign(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

struct RootInterval {
    Rational lo, hi; // either lo == hi (exact root) or sign change across
    int multiplicity;
};

void isolate(const std::vector<IPoly>& chain, const IPoly& f, const Rational& a,
             const Rational& b, int count, int mult, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b, mult});
        return;
    }
    Rational mid = (a + b) / 2;
    mid.canonicalize();
    if (eval_sign(f, mid) == 0) {
        out.push_back({mid, mid, mult});
        // Shrink away from the exact root before recursing; widen the
        // shrink until no other root hides in the excluded band.
        Rational eps = (b - a) / 1024;
        while (true) {
            Rational lo2 = mid - eps, hi2 = mid + eps;
            lo2.canonicalize();
            hi2.canonicalize();
            int left = sign_variations(chain, a) - sign_variations(chain, lo2);
            int right = sign_variations(chain, hi2) - sign_variations(chain, b);
            if (left + right + 1 == count) {
                isolate(chain, f, a, lo2, left, mult, out);
                isolate(chain, f, hi2, b, right, mult, out);
                return;
            }
            eps /= 1024;
            eps.canonicalize();
        }
    }
    int left = sign_variations(chain, a) - sign_variations(chain, mid);
    isolate(chain, f, a, mid, left, mult, out);
    isolate(chain, f, mid, b, count - left, mult, out);
}

} // namespace

EnergyValue energy_from_roots(const MatchingPolynomial& p, double tolerance) {
    int pd = p.degree();
    if (pd == 0) return {0.0, EnergyMethod::roots, 0.0};

    // Q(s) = sum_k (-1)^k m_k s^{p-k}; roots are the squared nonzero
    // eigenvalues, all real and positive.
    RPoly q(pd + 1, Rational(0));
    BigInt sign(1);
    for (int k = 0; k <= pd; ++k) {
        q[pd - k] = Rational(sign * p.coeff(k));
        sign = -sign;
    }

    auto factors = squarefree_factors(q);
    double value = 0.0;
    double err = 0.0;
    for (auto& [frac, mult] : factors) {
        IPoly f = to_integer(frac);
        make_primitive(f);
        int deg = static_cast<int>(f.size()) - 1;
        // Cauchy bound.
        BigInt maxc(0);
        for (const auto& c : f) maxc = std::max(maxc, BigInt(abs(c)));
        Rational bound = Rational(1) + Rational(maxc) / Rational(BigInt(abs(f.back())));
        bound.canonicalize();

        auto chain = sturm_chain(f);
        std::vector<RootInterval> roots;
        int total = sign_variations(chain, Rational(0)) - sign_variations(chain, bound);
        isolate(chain, f, Rational(0), bound, total, mult, roots);
        if (total != deg)
            throw CrossCheckFailed("root count does not match factor degree");

        double per_root_budget = tolerance / std::max(1, pd);
        for (auto& ri : roots) {
            if (ri.lo == ri.hi) {
                value += 2.0 * mult * std::sqrt(ri.lo.get_d());
                continue;
            }
            int slo = eval_sign(f, ri.lo);
            int shi = eval_sign(f, ri.hi);
            // Certified bracket: refine by sign bisection.
            while (true) {
                double w = 2.0 * mult *
                           (std::sqrt(ri.hi.get_d()) - std::sqrt(std::max(0.0, ri.lo.get_d())));
                if (w <= per_root_budget) break;
                Rational mid = (ri.lo + ri.hi) / 2;
                mid.canonicalize();
                int sm = eval_sign(f, mid);
                if (sm == 0) {
                    ri.lo = ri.hi = mid;
                    break;
                }
                if (sm == slo)
                    ri.lo = mid;
                else {
                    ri.hi = mid;
                    shi = sm;
                }
            }
            (void)shi;
            double slo_d = std::sqrt(std::max(0.0, ri.lo.get_d()));
            double shi_d = std::sqrt(ri.hi.get_d());
            value += mult * (slo_d + shi_d);
            err += 2.0 * mult * (shi_d - slo_d);
        }
    }
    err += 16 * std::numeric_limits<double>::epsilon() * (1.0 + value);
    return {value, EnergyMethod::roots, err};
}

EnergyValue energy_from_roots(const Tree& t) {
    return energy_from_roots(matching_poly(t));
}

namespace {

double log_bigint(const BigInt& z) {
    long exp = 0;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * M_LN2;
}

} // namespace

EnergyValue energy_coulson(const MatchingPolynomial& p, int steps) {
    int pd = p.degree();
    if (pd == 0) return {0.0, EnergyMethod::coulson, 0.0};

    std::vector<double> logm(pd + 1);
    for (int k = 0; k <= pd; ++k) logm[k] = log_bigint(p.coeff(k));
    double m1 = p.coeff(1).get_d();

    // After x = tan(theta) and pulling out the (1+x^2)^p growth:
    //   En = 2p + (2/pi) * int_0^{pi/2} ln(P(theta)) / sin^2(theta),
    // with P = sum_k m_k sin^{2k} cos^{2(p-k)}, smooth on the closed
    // interval: P(0) = 1 and P(pi/2) = m_p.
    auto g = [&](double theta) -> double {
        if (theta <= 0.0) return m1 - pd;
        if (theta >= M_PI_2) return logm[pd];
        double ls = std::log(std::sin(theta));
        double lc = std::log(std::cos(theta));
        double best = -std::numeric_limits<double>::infinity();
        std::vector<double> terms(pd + 1);
        for (int k = 0; k <= pd; ++k) {
            terms[k] = logm[k] + 2.0 * k * ls + 2.0 * (pd - k) * lc;
            best = std::max(best, terms[k]);
        }
        double sum = 0.0;
        for (double t : terms) sum += std::exp(t - best);
        double lnP = best + std::log(sum);
        double s = std::sin(theta);
        return lnP / (s * s);
    };

    auto simpson = [&](int n) -> double {
        double h = M_PI_2 / n;
        double acc = g(0.0) + g(M_PI_2);
        for (int i = 1; i < n; ++i) acc += g(i * h) * (i % 2 ? 4.0 : 2.0);
        return acc * h / 3.0;
    };

    int n = std::max(16, steps);
    if (n % 2) ++n;
    double prev = simpson(n);
    for (int round = 0; round < 12; ++round) {
        n *= 2;
        double cur = simpson(n);
        double diff = std::abs(cur - prev);
        if (diff < 1e-11) {
            double integral = cur;
            return {2.0 * pd + integral * 2.0 / M_PI,
                    EnergyMethod::coulson, diff / 15.0 + 1e-11};
        }
        prev = cur;
    }
    throw NonConvergent("Coulson quadrature did not converge");
}

EnergyValue energy_coulson(const Tree& t, int steps) {
    return energy_coulson(matching_poly(t), steps);
}

EnergyValue energy_eigen(const Tree& t) {
    int n = t.vertex_count();
    if (n > 2000) throw TooLarge("eigen method limited to 2000 vertices");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : t.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    double value = 0.0, lmax = 0.0;
    for (int i = 0; i < n; ++i) {
        value += std::abs(solver.eigenvalues()[i]);
        lmax = std::max(lmax, std::abs(solver.eigenvalues()[i]));
    }
    // Backward-stable symmetric eigensolver: per-eigenvalue error is
    // O(n eps ||A||_2); generous constant.
    double eb = 20.0 * n * n * std::numeric_limits<double>::epsilon() * std::max(1.0, lmax);
    return {value, EnergyMethod::eigen, eb};
}

EnergyValue energy(const Tree& t, bool verify) {
    EnergyValue roots = energy_from_roots(t);
    if (verify) {
        EnergyValue cou = energy_coulson(t);
        EnergyValue eig = energy_eigen(t);
        if (std::abs(roots.value - cou.value) > 1e-8 ||
            std::abs(roots.value - eig.value) > 1e-8)
            throw CrossCheckFailed("energy methods disagree beyond 1e-8");
    }
    return roots;
}

} // namespace catermin
