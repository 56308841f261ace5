// Python bindings for the main operations: exterior algebra over a coframe,
// structure differentials, the involutivity test on parsed system
// descriptions, and the isometric-embedding certification pipeline.
// Reports cross the boundary as plain dicts (decoded from the same JSON the
// CLI emits); exact rationals travel as "num/den" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "json.hpp"

#include "eds/bcjs.hpp"
#include "eds/cartan_lemma.hpp"
#include "eds/document.hpp"

namespace py = pybind11;
using namespace eds;
using json = nlohmann::ordered_json;

namespace {

py::dict to_pydict(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump()).cast<py::dict>();
}

Vector vector_from_strings(const SpacePtr& space, const std::vector<std::string>& comps) {
  std::vector<Rational> c;
  c.reserve(comps.size());
  for (const auto& s : comps) c.push_back(parse_rational(s));
  return Vector(space, std::move(c));
}

json character_json(const CharacterReport& r) {
  json j;
  j["c"] = r.c;
  j["polar_dims"] = r.polar_dims;
  if (r.tableau_c) j["tableau_c"] = *r.tableau_c;
  j["sum_c"] = r.sum_c;
  j["tangent_codim"] = r.tangent_codim;
  j["verdict"] = verdict_str(r.verdict);
  return j;
}

json dims_json(const DimsReport& d) {
  json j;
  j["dim_Fm"] = d.dim_Fm;
  j["dim_H"] = d.dim_H;
  j["dim_Km"] = d.dim_Km;
  j["dim_Z"] = d.dim_Z;
  j["sum_c_closed_form"] = d.sum_c_closed_form;
  j["grassmannian_codim"] = d.grassmannian_codim;
  return j;
}

/// Python-side handle for the immutable shared coframe.
struct PySpace {
  SpacePtr ptr;
};

SecondFundamentalForm h_from_entries(int m, int N, const std::vector<std::tuple<int, int, int, std::string>>& entries) {
  SecondFundamentalForm h(m, N);
  for (const auto& [a, i, j, value] : entries) h.set(a, i, j, parse_rational(value));
  return h;
}

RiemannTensor riemann_from_entries(int m, const std::vector<std::tuple<int, int, int, int, std::string>>& entries) {
  RiemannTensor r(m);
  for (const auto& [i, j, k, l, value] : entries) r.set_symmetric(i, j, k, l, parse_rational(value));
  if (!validate(r)) throw error("components violate the curvature tensor symmetries");
  return r;
}

}  // namespace

PYBIND11_MODULE(edsw, m) {
  m.doc() = "exact-arithmetic workbench for exterior differential systems at a point";

  py::register_exception<error>(m, "EdsError");

  py::class_<PySpace>(m, "Space")
      .def_static("standard", [](int n) { return PySpace{Space::standard(n)}; }, py::arg("n"))
      .def_static(
          "make",
          [](std::vector<std::string> coframe, std::vector<std::string> aux) {
            return PySpace{Space::make(std::move(coframe), std::move(aux))};
          },
          py::arg("coframe_names"), py::arg("auxiliary_names") = std::vector<std::string>{})
      .def_property_readonly("dim", [](const PySpace& s) { return s.ptr->dim(); })
      .def_property_readonly("coframe_names", [](const PySpace& s) { return s.ptr->coframe_names(); })
      .def("__repr__", [](const PySpace& s) {
        std::ostringstream out;
        out << "Space(dim=" << s.ptr->dim();
        if (s.ptr->auxiliary_count()) out << ", aux=" << s.ptr->auxiliary_count();
        out << ")";
        return out.str();
      });

  py::class_<Form>(m, "Form")
      .def_static(
          "parse", [](const PySpace& space, const std::string& text) { return parse_form_literal(space.ptr, text); },
          py::arg("space"), py::arg("text"))
      .def_property_readonly("degree", &Form::degree)
      .def_property_readonly("is_zero", &Form::is_zero)
      .def("wedge", &Form::wedge)
      .def("scale", [](const Form& f, const std::string& c) { return parse_rational(c) * f; })
      .def("evaluate",
           [](const Form& f, const std::vector<std::vector<std::string>>& vectors) {
             std::vector<Vector> vs;
             vs.reserve(vectors.size());
             for (const auto& comps : vectors) vs.push_back(vector_from_strings(f.space(), comps));
             return rational_str(f.evaluate(vs));
           })
      .def("__add__", [](const Form& a, const Form& b) { return a + b; })
      .def("__sub__", [](const Form& a, const Form& b) { return a - b; })
      .def("__xor__", &Form::wedge)
      .def("__neg__", [](const Form& a) { return -a; })
      .def("__eq__", [](const Form& a, const Form& b) { return a == b; })
      .def("__str__", &Form::str)
      .def("__repr__", [](const Form& f) { return "Form(" + f.str() + ")"; });

  m.def(
      "check",
      [](const std::string& text) {
        const EdsDocument doc = parse_document(text);
        if (!doc.flag || doc.flag->empty()) throw error("document has no flag vectors");
        const GeneratorSet closed = close(GeneratorSet(doc.generators, doc.sd));
        const Flag flag(doc.space, *doc.flag);
        return to_pydict(character_json(cartan_verdict(flag, closed, doc.split)));
      },
      py::arg("document"),
      "Close the described system and run the involutivity test on its flag.");

  m.def(
      "polar",
      [](const std::string& text, int level) {
        const EdsDocument doc = parse_document(text);
        if (!doc.flag || doc.flag->empty()) throw error("document has no flag vectors");
        const GeneratorSet closed = close(GeneratorSet(doc.generators, doc.sd));
        const Flag flag(doc.space, *doc.flag);
        const int k = level < 0 ? flag.length() : level;
        const auto h = polar_space(flag.element(k), closed);
        json j;
        j["element_dim"] = k;
        j["polar_dim"] = h.size();
        j["extension_rank"] = static_cast<int>(h.size()) - (k + 1);
        json rows = json::array();
        for (const Vector& v : h) rows.push_back(v.str());
        j["polar_basis"] = rows;
        return to_pydict(j);
      },
      py::arg("document"), py::arg("level") = -1,
      "Polar space of the flag element described by the document.");

  m.def(
      "dims", [](int m_, int N) { return to_pydict(dims_json(dims_report(m_, N))); }, py::arg("m"), py::arg("N"),
      "Dimension bookkeeping of the embedding construction.");

  m.def(
      "bcjs",
      [](int m_, int N, std::uint64_t seed) {
        const SecondFundamentalForm h = random_h_in_H(m_, N, seed);
        const BcjsSystem sys = bcjs_build(m_, N, gauss_map(h), h);
        const CertifyResult res = bcjs_certify(sys);
        json j;
        j["m"] = m_;
        j["N"] = N;
        j["seed"] = seed;
        j["dims"] = dims_json(res.dims);
        j["report"] = character_json(res.chars);
        return to_pydict(j);
      },
      py::arg("m"), py::arg("N"), py::arg("seed") = 1,
      "Sample h in H, set R = gauss(h), build the embedding system and certify it.");

  m.def(
      "bcjs_for_curvature",
      [](int m_, int N, const std::vector<std::tuple<int, int, int, int, std::string>>& r_entries,
         std::uint64_t seed, double tol) {
        const RiemannTensor target = riemann_from_entries(m_, r_entries);
        const SecondFundamentalForm h = preimage_newton(target, random_h_in_H(m_, N, seed), 200, tol);
        const BcjsSystem sys = bcjs_build(m_, N, gauss_map(h), h);
        const CertifyResult res = bcjs_certify(sys);
        json j;
        j["m"] = m_;
        j["N"] = N;
        j["h"] = serialize_h(h);
        j["dims"] = dims_json(res.dims);
        j["report"] = character_json(res.chars);
        return to_pydict(j);
      },
      py::arg("m"), py::arg("N"), py::arg("r_entries"), py::arg("seed") = 1, py::arg("tol") = 1e-9,
      "Newton-solve the gauss equation for the given curvature components, then certify.");

  m.def(
      "gauss_rank",
      [](int m_, int N, const std::vector<std::tuple<int, int, int, std::string>>& entries) {
        return gauss_jacobian_rank(h_from_entries(m_, N, entries));
      },
      py::arg("m"), py::arg("N"), py::arg("h_entries"),
      "Exact rank of the gauss-map differential at the given h.");

  m.def(
      "in_H",
      [](int m_, int N, const std::vector<std::tuple<int, int, int, std::string>>& entries) {
        return in_H(h_from_entries(m_, N, entries));
      },
      py::arg("m"), py::arg("N"), py::arg("h_entries"));

  m.def("dim_Km", &dim_Km, py::arg("m"));
  m.def("dim_Km_by_rank", &dim_Km_by_rank, py::arg("m"));

  m.def(
      "cartan_lemma",
      [](const std::string& text) {
        const CartanLemmaDocument doc = parse_cartan_lemma_document(text);
        const RationalMatrix h = cartan_lemma_solve(doc.theta, doc.omega);
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < h.rows(); ++i) {
          std::vector<std::string> row;
          for (int c = 0; c < h.cols(); ++c) row.push_back(rational_str(h.at(i, c)));
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("document"), "Solve theta_i = h_ij omega_j for the unique symmetric h.");

  m.def(
      "conformal",
      [](int m_, int n) {
        const ConformalReport r = conformal_threshold(m_, n);
        json j;
        j["m"] = r.m;
        j["n"] = r.n;
        j["bound"] = r.bound;
        j["satisfied"] = r.satisfied;
        j["deficit"] = r.deficit;
        j["one_form_count"] = r.one_form_count;
        return to_pydict(j);
      },
      py::arg("m"), py::arg("n"), "Conformal embedding dimension threshold.");

#ifdef EDSW_VERSION
  m.attr("__version__") = EDSW_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
