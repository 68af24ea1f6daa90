// Python bindings. Matrices are lists of rows (ints, strings like "1/2" or
// Fractions) or a preset name; rationals come back as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "potentia/brylinski.hpp"
#include "potentia/checks.hpp"
#include "potentia/cli.hpp"
#include "potentia/poisson.hpp"
#include "potentia/potentialcy.hpp"

namespace py = pybind11;
using namespace potentia;

namespace {

QuadMatrix to_matrix(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return preset_matrix(obj.cast<std::string>());
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : obj) {
    rows.emplace_back();
    for (const auto& v : row) rows.back().push_back(parse_rat(py::str(v).cast<std::string>()));
  }
  return QuadMatrix(std::move(rows));
}

Rat to_rat(const py::object& v) { return parse_rat(py::str(v).cast<std::string>()); }

py::object fraction(const Rat& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(r));
}

py::dict table(const HomologyTable& t) {
  py::dict out;
  for (const auto& [key, dim] : t.dims) out[py::make_tuple(key.first, key.second)] = dim;
  return out;
}

py::list checks(const std::vector<CheckResult>& cs) {
  py::list out;
  for (const auto& c : cs) out.append(py::dict(py::arg("name") = c.name, py::arg("pass") = c.pass, py::arg("detail") = c.detail));
  return out;
}

PoissonPotential poisson(const std::string& phi) { return PoissonPotential(parse_cpoly(phi)); }

}  // namespace

PYBIND11_MODULE(potentia, m) {
  m.doc() = "Cubic potential algebras B(M), Hochschild homology and the Poisson side";
  py::register_exception<Error>(m, "PotentiaError", PyExc_ValueError);

  m.def("hilbert", [](const py::object& M, std::size_t D) { return hilbert_coeffs(build_B(to_matrix(M)).pres, D); },
        py::arg("matrix"), py::arg("max_degree") = 8, "dim B_d for d <= max_degree");
  m.def("relation_dim", [](const py::object& M) { return build_B(to_matrix(M)).relation_dim; }, py::arg("matrix"));
  m.def("relation_dim_formula", [](const py::object& M) { return relation_dim_formula(to_matrix(M)); }, py::arg("matrix"));
  m.def("classify", [](const py::object& M) {
    Type2Tag t = classify2(to_matrix(M));
    py::dict out;
    out["type"] = t.name();
    out["invariant"] = fraction(t.s);
    out["q"] = t.q ? fraction(*t.q) : py::none();
    return out;
  }, py::arg("matrix"));
  m.def("isomorphic", [](const py::object& a, const py::object& b) { return isomorphic_B(to_matrix(a), to_matrix(b)); });
  m.def("relations", [](const py::object& M) {
    std::vector<std::string> out;
    for (const auto& r : build_B(to_matrix(M)).pres.relations) out.push_back(render(r));
    return out;
  }, py::arg("matrix"));
  m.def("normal_form", [](const py::object& M, const std::string& text) {
    auto pa = build_B(to_matrix(M));
    if (!pa.rewriting) throw Error("no confluent rewriting system for this matrix");
    return render(pa.rewriting->normal_form(parse_ncpoly(pa.gens, text)));
  }, py::arg("matrix"), py::arg("poly"));
  m.def("euler_check", [](const py::object& M) { return euler_for(to_matrix(M)).pass; }, py::arg("matrix"));
  m.def("hessian_check", [](const py::object& M) { return hessian_for(to_matrix(M)).pass; }, py::arg("matrix"));
  m.def("center_test", [](const py::object& a, const py::object& b, std::size_t D) { return center_test(to_rat(a), to_rat(b), D); },
        py::arg("a"), py::arg("b"), py::arg("max_degree") = 7);

  m.def("hochschild", [](const py::object& M, std::size_t D) { return table(KoszulComplex(build_B(to_matrix(M)), D).homology()); },
        py::arg("matrix"), py::arg("max_degree") = 8, "{(p, d): dim HH_p(B)_d}");
  m.def("poisson_homology", [](const std::string& phi, std::size_t D) { return table(hp_table(poisson(phi), D)); },
        py::arg("phi") = "-x^2 z", py::arg("max_degree") = 8);
  m.def("koszul_phi", [](const std::string& phi, std::size_t D) { return table(hphi_table(poisson(phi), D)); },
        py::arg("phi") = "-x^2 z", py::arg("max_degree") = 8);
  m.def("bracket", [](const std::string& phi, const std::string& F, const std::string& G) {
    return render(bracket(poisson(phi), parse_cpoly(F), parse_cpoly(G)));
  }, py::arg("phi"), py::arg("f"), py::arg("g"));

  m.def("lifts", [](std::size_t D) {
    JordanBridge br(D);
    py::list out;
    for (const auto& l : lift_suite(br, D, true))
      out.append(py::dict(py::arg("label") = l.record.label, py::arg("p") = l.record.p, py::arg("degree") = l.record.degree,
                          py::arg("verified") = l.formula_ok, py::arg("extension") = l.extension));
    return out;
  }, py::arg("max_degree") = 8);
  m.def("degeneration", [](std::size_t D) { return checks(degeneration_check(JordanBridge(D), D).checks); },
        py::arg("max_degree") = 8);
  m.def("gr_identities", [](std::size_t D) { return checks(gr_compare(JordanBridge(D + 3), D)); }, py::arg("max_degree") = 8);
  m.def("quantum_compare", [](const py::object& q, std::size_t D) { return checks(quantum_compare(to_rat(q), D).checks); },
        py::arg("q"), py::arg("max_degree") = 8);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line frontend; returns (exit code, stdout, stderr).");
}
