#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catermin/energy.hpp"
#include "catermin/extremal.hpp"
#include "catermin/graph.hpp"
#include "catermin/matching.hpp"
#include "catermin/rational.hpp"

namespace catermin {

struct VerificationReport {
    std::string claim_id;
    nlohmann::json parameters;
    long long universe_size = 0;
    long long elapsed_ms = 0;
    std::vector<nlohmann::json> counterexamples;
    // Pairs whose energy gap is below the certified separation; neither
    // pass nor fail.
    long long inconclusive = 0;
    nlohmann::json witness;
    std::vector<std::string> notes;

    bool success() const { return counterexamples.empty(); }
    nlohmann::json to_json() const;
    std::string to_csv_row() const;
};

// All caterpillars whose spine is a multiset permutation of r,
// deduplicated by spine reversal. Visitation is in sorted spine-word
// order, so output is deterministic.
void for_each_caterpillar(const ReducedDegreeSequence& r,
                          const std::function<void(const Caterpillar&)>& fn);
std::vector<Caterpillar> enumerate_caterpillars(const ReducedDegreeSequence& r);
// |C_D| without enumerating: (P + Q) / 2 where P is the multinomial
// count and Q the number of palindromic spine words.
BigInt count_caterpillars(const ReducedDegreeSequence& r);

// All non-increasing tuples with entries in [2, max_entry], lengths
// 1..max_len, ordered by length then lexicographically.
std::vector<ReducedDegreeSequence> enumerate_reduced_sequences(int max_len, int max_entry);

enum class Objective { hosoya, energy, m_at_x };

struct BruteMinResult {
    Caterpillar minimizer;
    BigInt hosoya_value;
    double energy_value = 0.0;
    Rational m_value;
};

// Exhaustive scan; ties broken by canonical spine word. Throws TooLarge
// past the universe guard (10^7 by default).
BruteMinResult brute_min(const ReducedDegreeSequence& r, Objective objective,
                         const Rational& x = Rational(1));

extern const long long kUniverseGuard;
extern const long long kPairGuard;
// CATERMIN_GUARD_OVERRIDE=1 lifts the guards.
bool guard_override();

VerificationReport verify_min_theorem(const ReducedDegreeSequence& r,
                                      const std::vector<Rational>& xs);
VerificationReport verify_majorization_theorem(int n, int max_degree);
VerificationReport verify_corollary_diameter(int n, int m);
VerificationReport verify_corollary_maxdeg(int n, int d);

// All tree degree sequences on n vertices with entries <= max_degree
// and a non-empty reduced part, non-increasing, lexicographic order.
std::vector<DegreeSequence> enumerate_tree_degree_sequences(int n, int max_degree);

// Closed form: spine length s >= 2 gives diameter s + 1; a star has
// diameter 2; P2 (as spine (1)) has diameter 1.
int caterpillar_diameter(const Caterpillar& c);
int tree_diameter_bfs(const Tree& t);

// Runs fn(i) for i in [0, count) over `jobs` threads and merges results
// in index order.
std::vector<VerificationReport> run_reports_parallel(
    long long count, const std::function<VerificationReport(long long)>& fn, int jobs);

} // namespace catermin
