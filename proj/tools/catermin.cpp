// Command-line front end. Exit codes: 0 ok, 1 counterexample found,
// 2 parse error or size guard, 3 sequence not realizable, 4 inconclusive
// numerics.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catermin/energy.hpp"
#include "catermin/extremal.hpp"
#include "catermin/io.hpp"
#include "catermin/matching.hpp"
#include "catermin/verify.hpp"

using namespace catermin;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kParseOrGuard = 2;
constexpr int kNotRealizable = 3;
constexpr int kInconclusive = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(out_path);
        if (!os) throw Error("cannot open output file: " + out_path);
        os << text;
        if (!text.empty() && text.back() != '\n') os << '\n';
    }
}

// Either a caterpillar spine or a tree from an edge-list file.
Tree input_tree(const std::string& spine, const std::string& edges) {
    if (!spine.empty() && !edges.empty())
        throw ParseError("give either --spine or --edges, not both");
    if (!spine.empty())
        return caterpillar_to_tree(caterpillar_from_spine(parse_int_list(spine)));
    if (!edges.empty()) return read_edge_file(edges);
    throw ParseError("an input is required: --spine or --edges");
}

ReducedDegreeSequence input_reduced(const std::string& reduced, const std::string& full) {
    if (!reduced.empty() && !full.empty())
        throw ParseError("give either --reduced or --full, not both");
    if (!reduced.empty())
        return ReducedDegreeSequence::sorted(parse_int_list(reduced));
    if (!full.empty()) {
        DegreeSequence d = DegreeSequence::sorted(parse_int_list(full));
        if (!d.realizable_as_tree())
            throw NotRealizable("degree sum must equal 2(n-1)");
        return reduce(d); // EmptyResult when all entries are 1
    }
    throw ParseError("a sequence is required: --reduced or --full");
}

// Number of non-increasing tuples with entries in [2, max_entry] and
// length up to max_len: C(max_len + k, k) - 1 with k = max_entry - 1.
BigInt sequence_universe(int max_len, int max_entry) {
    int k = max_entry - 1;
    BigInt c(1);
    for (int i = 1; i <= k; ++i) {
        c *= max_len + i;
        c /= i;
    }
    return c - 1;
}

std::string reports_to_text(const std::vector<VerificationReport>& reps,
                            const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        os << "claim_id,parameters,universe_size,counterexamples,inconclusive,result\n";
        for (const auto& r : reps) os << r.to_csv_row() << "\n";
        return os.str();
    }
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(r.to_json());
    return arr.dump(2);
}

int reports_exit_code(const std::vector<VerificationReport>& reps) {
    bool inconclusive = false;
    for (const auto& r : reps) {
        if (!r.success()) return kCounterexample;
        if (r.inconclusive > 0) inconclusive = true;
    }
    return inconclusive ? kInconclusive : kOk;
}

int run(int argc, char** argv) {
    CLI::App app{"caterpillar matching polynomials, Hosoya index and graph energy"};
    app.require_subcommand(1);

    std::string spine, edges, reduced, full, xs_text, out_path, format = "json";
    int jobs = 1;
    long long seed = 0; // reserved for randomized suites; accepted everywhere
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "seed for randomized suites (reserved)");
    };

    auto* mpoly = app.add_subcommand("mpoly", "matching polynomial coefficients");
    mpoly->add_option("--spine", spine, "comma-separated spine degrees");
    mpoly->add_option("--edges", edges, "edge-list file, one 'u v' per line");
    add_common(mpoly);

    auto* hos = app.add_subcommand("hosoya", "Hosoya index Z = M(G,1)");
    hos->add_option("--spine", spine, "comma-separated spine degrees");
    hos->add_option("--edges", edges, "edge-list file");
    add_common(hos);

    std::string method = "roots";
    auto* en = app.add_subcommand("energy", "graph energy");
    en->add_option("--spine", spine, "comma-separated spine degrees");
    en->add_option("--edges", edges, "edge-list file");
    en->add_option("--method", method, "roots | coulson | eigen | all")
        ->check(CLI::IsMember({"roots", "coulson", "eigen", "all"}));
    add_common(en);

    auto* ext = app.add_subcommand("extremal", "the minimizing caterpillar S(D)");
    ext->add_option("--reduced", reduced, "reduced degree sequence (entries >= 2)");
    ext->add_option("--full", full, "full degree sequence (reduced automatically)");
    add_common(ext);

    int max_len = 0, max_entry = 0;
    auto* enu = app.add_subcommand("enumerate",
                                   "caterpillars of a class, or reduced sequences");
    enu->add_option("--reduced", reduced, "list all caterpillars with this sequence");
    enu->add_option("--max-len", max_len, "list reduced sequences up to this length");
    enu->add_option("--max-entry", max_entry, "largest entry for --max-len");
    add_common(enu);

    std::string claim;
    int vn = 0, vm = 0, vd = 0, vmaxdeg = 0;
    auto* ver = app.add_subcommand("verify", "verification sweeps; writes reports");
    ver->add_option("claim", claim, "min | majorization | diameter | maxdeg")
        ->required()
        ->check(CLI::IsMember({"min", "majorization", "diameter", "maxdeg"}));
    ver->add_option("--reduced", reduced, "single sequence for claim 'min'");
    ver->add_option("--max-len", max_len, "sweep bound for claim 'min'");
    ver->add_option("--max-entry", max_entry, "sweep bound for claim 'min'");
    ver->add_option("--x", xs_text, "rational sample points, e.g. 1/4,1,4");
    ver->add_option("--n", vn, "vertex count");
    ver->add_option("--m", vm, "diameter (claim 'diameter')");
    ver->add_option("--d", vd, "max degree (claim 'maxdeg')");
    ver->add_option("--max-degree", vmaxdeg, "max degree (claim 'majorization')");
    add_common(ver);

    std::string x_max_text = "2";
    int points = 9;
    auto* plot = app.add_subcommand("plotdata", "CSV of M(H,x) curves over a class");
    plot->add_option("--reduced", reduced, "reduced degree sequence")->required();
    plot->add_option("--x-max", x_max_text, "largest sample point (rational)");
    plot->add_option("--points", points, "number of samples")->check(CLI::PositiveNumber);
    add_common(plot);

    std::string from_text, to_text;
    auto* chain = app.add_subcommand("chain", "majorization chain between sequences");
    chain->add_option("--from", from_text, "majorized degree sequence Y")->required();
    chain->add_option("--to", to_text, "majorizing degree sequence D")->required();
    add_common(chain);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseOrGuard;
    }

    if (mpoly->parsed()) {
        MatchingPolynomial p = matching_poly(input_tree(spine, edges));
        if (format == "csv") {
            std::ostringstream os;
            os << "k,m_k\n";
            for (int k = 0; k <= p.degree(); ++k)
                os << k << "," << to_string(p.coeff(k)) << "\n";
            emit(os.str(), out_path);
        } else {
            emit(poly_to_json(p).dump(), out_path);
        }
        return kOk;
    }

    if (hos->parsed()) {
        BigInt z = hosoya(input_tree(spine, edges));
        emit(format == "csv" ? to_string(z) : json{{"hosoya", to_string(z)}}.dump(),
             out_path);
        return kOk;
    }

    if (en->parsed()) {
        Tree t = input_tree(spine, edges);
        std::vector<EnergyValue> vals;
        if (method == "roots" || method == "all") vals.push_back(energy_from_roots(t));
        if (method == "coulson" || method == "all") vals.push_back(energy_coulson(t));
        if (method == "eigen" || method == "all") vals.push_back(energy_eigen(t));
        if (method == "all") {
            for (const auto& a : vals)
                for (const auto& b : vals)
                    if (std::abs(a.value - b.value) > 1e-8)
                        throw CrossCheckFailed("energy methods disagree beyond 1e-8");
        }
        if (format == "csv") {
            std::ostringstream os;
            os.precision(17);
            os << "method,value,error_bound\n";
            for (const auto& v : vals)
                os << to_string(v.method) << "," << v.value << "," << v.error_bound
                   << "\n";
            emit(os.str(), out_path);
        } else {
            json arr = json::array();
            for (const auto& v : vals) arr.push_back(energy_to_json(v));
            emit((vals.size() == 1 ? arr[0] : arr).dump(), out_path);
        }
        return kOk;
    }

    if (ext->parsed()) {
        ReducedDegreeSequence r = input_reduced(reduced, full);
        Caterpillar s = build_S(r);
        MatchingPolynomial p = matching_poly(s);
        EnergyValue e = energy_from_roots(p);
        if (format == "csv") {
            std::ostringstream os;
            os.precision(17);
            os << "spine,hosoya,energy\n"
               << '"' << format_int_list(s.spine_degrees()) << '"' << ","
               << to_string(p.eval_at_one()) << "," << e.value << "\n";
            emit(os.str(), out_path);
        } else {
            emit(json{{"spine", s.spine_degrees()},
                      {"hosoya", to_string(p.eval_at_one())},
                      {"energy", energy_to_json(e)}}
                     .dump(),
                 out_path);
        }
        return kOk;
    }

    if (enu->parsed()) {
        if (!reduced.empty()) {
            ReducedDegreeSequence r =
                ReducedDegreeSequence::sorted(parse_int_list(reduced));
            BigInt universe = count_caterpillars(r);
            if (!guard_override() && universe > BigInt(10'000'000L))
                throw TooLarge("class exceeds the enumeration guard");
            std::ostringstream os;
            json arr = json::array();
            for_each_caterpillar(r, [&](const Caterpillar& c) {
                if (format == "csv")
                    os << format_int_list(c.spine_degrees()) << "\n";
                else
                    arr.push_back(c.spine_degrees());
            });
            emit(format == "csv" ? os.str() : arr.dump(), out_path);
            return kOk;
        }
        if (max_len < 1 || max_entry < 2)
            throw ParseError("need --reduced, or --max-len with --max-entry");
        if (!guard_override() &&
            sequence_universe(max_len, max_entry) > BigInt(static_cast<long>(kPairGuard)))
            throw TooLarge("sequence sweep exceeds the guard");
        std::ostringstream os;
        json arr = json::array();
        for (const auto& r : enumerate_reduced_sequences(max_len, max_entry)) {
            if (format == "csv")
                os << format_int_list(r.degrees) << "\n";
            else
                arr.push_back(r.degrees);
        }
        emit(format == "csv" ? os.str() : arr.dump(), out_path);
        return kOk;
    }

    if (ver->parsed()) {
        std::vector<Rational> xs;
        if (!xs_text.empty())
            xs = parse_rational_list(xs_text);
        else
            xs = {Rational(1, 4), Rational(1), Rational(4)};
        for (const auto& x : xs)
            if (x <= 0) throw ParseError("x samples must be positive");

        std::vector<VerificationReport> reps;
        if (claim == "min") {
            if (!reduced.empty()) {
                reps.push_back(verify_min_theorem(
                    ReducedDegreeSequence::sorted(parse_int_list(reduced)), xs));
            } else {
                if (max_len < 1 || max_entry < 2)
                    throw ParseError("claim 'min' needs --reduced or sweep bounds");
                if (!guard_override() &&
                    sequence_universe(max_len, max_entry) > BigInt(static_cast<long>(kPairGuard)))
                    throw TooLarge("sequence sweep exceeds the guard");
                auto seqs = enumerate_reduced_sequences(max_len, max_entry);
                reps = run_reports_parallel(
                    static_cast<long long>(seqs.size()),
                    [&](long long i) { return verify_min_theorem(seqs[i], xs); }, jobs);
            }
        } else if (claim == "majorization") {
            if (vn < 2 || vmaxdeg < 2)
                throw ParseError("claim 'majorization' needs --n and --max-degree");
            reps.push_back(verify_majorization_theorem(vn, vmaxdeg));
        } else if (claim == "diameter") {
            if (vn < 2 || vm < 1)
                throw ParseError("claim 'diameter' needs --n and --m");
            reps.push_back(verify_corollary_diameter(vn, vm));
        } else { // maxdeg
            if (vn < 2 || vd < 2) throw ParseError("claim 'maxdeg' needs --n and --d");
            reps.push_back(verify_corollary_maxdeg(vn, vd));
        }
        emit(reports_to_text(reps, format), out_path);
        return reports_exit_code(reps);
    }

    if (plot->parsed()) {
        ReducedDegreeSequence r = ReducedDegreeSequence::sorted(parse_int_list(reduced));
        BigInt universe = count_caterpillars(r);
        if (!guard_override() && universe > BigInt(10'000'000L))
            throw TooLarge("class exceeds the enumeration guard");
        Rational x_max = parse_rational(x_max_text);
        if (x_max <= 0) throw ParseError("--x-max must be positive");
        std::ostringstream os;
        os << "spine,x,M\n";
        for_each_caterpillar(r, [&](const Caterpillar& c) {
            MatchingPolynomial p = matching_poly(c);
            for (int i = 1; i <= points; ++i) {
                Rational x = x_max * Rational(i, points);
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", p.eval(x).get_d());
                os << '"' << format_int_list(c.spine_degrees()) << '"' << ","
                   << to_string(x) << "," << buf << "\n";
            }
        });
        emit(os.str(), out_path);
        return kOk;
    }

    if (chain->parsed()) {
        DegreeSequence y = DegreeSequence::sorted(parse_int_list(from_text));
        DegreeSequence d = DegreeSequence::sorted(parse_int_list(to_text));
        if (!y.realizable_as_tree() || !d.realizable_as_tree())
            throw NotRealizable("both sequences must be tree degree sequences");
        auto steps = majorization_chain(y, d);
        if (format == "csv") {
            std::ostringstream os;
            for (const auto& s : steps) os << format_int_list(s.degrees) << "\n";
            emit(os.str(), out_path);
        } else {
            json arr = json::array();
            for (const auto& s : steps) arr.push_back(s.degrees);
            emit(arr.dump(), out_path);
        }
        return kOk;
    }

    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NotRealizable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotRealizable;
    } catch (const EmptyResult& e) {
        std::cerr << "error: not realizable as a caterpillar with internal vertices: "
                  << e.what() << "\n";
        return kNotRealizable;
    } catch (const NonConvergent& e) {
        std::cerr << "error: inconclusive numerics: " << e.what() << "\n";
        return kInconclusive;
    } catch (const CrossCheckFailed& e) {
        std::cerr << "error: inconclusive numerics: " << e.what() << "\n";
        return kInconclusive;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseOrGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseOrGuard;
    }
}
