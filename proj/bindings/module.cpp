// Python bindings for the main operations. Big integers cross the
// boundary as Python ints (via decimal strings), rationals as
// fractions.Fraction, reports as plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catermin/energy.hpp"
#include "catermin/extremal.hpp"
#include "catermin/io.hpp"
#include "catermin/matching.hpp"
#include "catermin/verify.hpp"

namespace py = pybind11;
using namespace catermin;

namespace {

py::object to_py_int(const BigInt& z) {
    return py::module_::import("builtins").attr("int")(to_string(z));
}

py::object to_py_fraction(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

Rational rational_from_py(const py::object& x) {
    if (py::isinstance<py::int_>(x)) return parse_rational(py::str(x).cast<std::string>());
    // Fraction or "p/q" string; floats are rejected by parse_rational.
    return parse_rational(py::str(x).cast<std::string>());
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Caterpillar from_spine(const std::vector<int>& spine) {
    return caterpillar_from_spine(spine);
}

Tree tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Tree(n, edges);
}

py::list poly_coeffs(const MatchingPolynomial& p) {
    py::list out;
    for (int k = 0; k <= p.degree(); ++k) out.append(to_py_int(p.coeff(k)));
    return out;
}

py::dict energy_dict(const EnergyValue& e) {
    py::dict d;
    d["value"] = e.value;
    d["method"] = to_string(e.method);
    d["error_bound"] = e.error_bound;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "caterpillar matching polynomials, Hosoya index and graph energy";

    py::register_exception<Error>(m, "CaterminError", PyExc_ValueError);

    m.def("matching_poly",
          [](const std::vector<int>& spine) {
              return poly_coeffs(matching_poly(from_spine(spine)));
          },
          py::arg("spine"),
          "Coefficients m(G,k) of the matching polynomial, lowest degree first.");

    m.def("matching_poly_tree",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return poly_coeffs(matching_poly(tree_from_edges(n, edges)));
          },
          py::arg("n"), py::arg("edges"));

    m.def("hosoya",
          [](const std::vector<int>& spine) {
              return to_py_int(hosoya(from_spine(spine)));
          },
          py::arg("spine"), "Hosoya index Z = M(G,1).");

    m.def("eval_matching_poly",
          [](const std::vector<int>& spine, const py::object& x) {
              return to_py_fraction(
                  matching_poly(from_spine(spine)).eval(rational_from_py(x)));
          },
          py::arg("spine"), py::arg("x"),
          "Exact M(G,x) at a rational x (int, Fraction or 'p/q' string).");

    m.def("energy",
          [](const std::vector<int>& spine, const std::string& method) {
              Tree t = caterpillar_to_tree(from_spine(spine));
              if (method == "roots") return energy_dict(energy_from_roots(t));
              if (method == "coulson") return energy_dict(energy_coulson(t));
              if (method == "eigen") return energy_dict(energy_eigen(t));
              if (method == "verified") return energy_dict(energy(t, true));
              throw Error("unknown method: " + method);
          },
          py::arg("spine"), py::arg("method") = "roots",
          "Graph energy by 'roots', 'coulson', 'eigen' or 'verified'.");

    m.def("build_S",
          [](const std::vector<int>& reduced) {
              return build_S(ReducedDegreeSequence::sorted(reduced)).spine_degrees();
          },
          py::arg("reduced"),
          "Spine of the minimizing caterpillar S(D) for a reduced degree sequence.");

    m.def("canonical_spine",
          [](const std::vector<int>& spine) {
              return canonical_form(from_spine(spine)).spine_degrees();
          },
          py::arg("spine"));

    m.def("enumerate_caterpillars",
          [](const std::vector<int>& reduced) {
              py::list out;
              for_each_caterpillar(ReducedDegreeSequence::sorted(reduced),
                                   [&](const Caterpillar& c) {
                                       out.append(c.spine_degrees());
                                   });
              return out;
          },
          py::arg("reduced"), "All spines with this reduced sequence, up to reversal.");

    m.def("count_caterpillars",
          [](const std::vector<int>& reduced) {
              return to_py_int(
                  count_caterpillars(ReducedDegreeSequence::sorted(reduced)));
          },
          py::arg("reduced"));

    m.def("brute_min",
          [](const std::vector<int>& reduced, const std::string& objective,
             const py::object& x) {
              Objective obj;
              if (objective == "hosoya") obj = Objective::hosoya;
              else if (objective == "energy") obj = Objective::energy;
              else if (objective == "m_at_x") obj = Objective::m_at_x;
              else throw Error("unknown objective: " + objective);
              BruteMinResult r = brute_min(ReducedDegreeSequence::sorted(reduced), obj,
                                           rational_from_py(x));
              py::dict d;
              d["spine"] = r.minimizer.spine_degrees();
              d["hosoya"] = to_py_int(r.hosoya_value);
              d["energy"] = r.energy_value;
              d["m_value"] = to_py_fraction(r.m_value);
              return d;
          },
          py::arg("reduced"), py::arg("objective") = "hosoya", py::arg("x") = py::int_(1));

    m.def("majorization_chain",
          [](const std::vector<int>& from, const std::vector<int>& to) {
              py::list out;
              for (const auto& s : majorization_chain(DegreeSequence::sorted(from),
                                                      DegreeSequence::sorted(to)))
                  out.append(s.degrees);
              return out;
          },
          py::arg("from_seq"), py::arg("to_seq"));

    m.def("caterpillar_diameter",
          [](const std::vector<int>& spine) {
              return caterpillar_diameter(from_spine(spine));
          },
          py::arg("spine"));

    m.def("verify_min_theorem",
          [](const std::vector<int>& reduced, const std::vector<py::object>& xs) {
              std::vector<Rational> rs;
              for (const auto& x : xs) rs.push_back(rational_from_py(x));
              if (rs.empty()) rs = {Rational(1, 4), Rational(1), Rational(4)};
              return json_to_py(
                  verify_min_theorem(ReducedDegreeSequence::sorted(reduced), rs)
                      .to_json());
          },
          py::arg("reduced"),
          py::arg("xs") = std::vector<py::object>());

    m.def("verify_majorization_theorem",
          [](int n, int max_degree) {
              return json_to_py(verify_majorization_theorem(n, max_degree).to_json());
          },
          py::arg("n"), py::arg("max_degree"));

    m.def("verify_corollary_diameter",
          [](int n, int mm) {
              return json_to_py(verify_corollary_diameter(n, mm).to_json());
          },
          py::arg("n"), py::arg("m"));

    m.def("verify_corollary_maxdeg",
          [](int n, int d) {
              return json_to_py(verify_corollary_maxdeg(n, d).to_json());
          },
          py::arg("n"), py::arg("d"));
}
