// Python bindings for the twisted-index engine. Exact rationals cross the
// boundary as strings ("p/q"); bundles as lists of integer root vectors.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "witgen/json_io.hpp"
#include "witgen/models.hpp"
#include "witgen/runner.hpp"

namespace py = pybind11;
using namespace witgen;

namespace {

using Roots = std::vector<std::vector<long>>;

std::vector<std::string> series_strings(const RatSeries& s) {
  std::vector<std::string> out;
  for (int k = 0; k <= s.order(); ++k) out.push_back(rational_to_string(s[k]));
  return out;
}

py::dict genus_dict(const GenusResult& r) {
  py::dict d;
  d["manifold"] = r.manifold_id;
  d["bundle"] = r.bundle;
  d["q_order"] = r.q_order;
  d["path"] = to_string(r.path);
  d["coefficients"] = series_strings(r.series);
  d["vanishes"] = r.vanishes();
  d["integral"] = r.integral();
  return d;
}

py::dict report_dict(const ConditionReport& r, const ManifoldModel& M) {
  py::dict d;
  d["w2_match"] = r.w2_match;
  d["p1_match"] = r.p1_match;
  d["x_spin"] = r.x_spin;
  d["string"] = r.is_string();
  d["theorem_applicable"] = to_string(r.theorem_applicable);
  py::dict w;
  w["w2_manifold"] = M.format_class(r.w2_m);
  w["w2_bundle"] = M.format_class(r.w2_v);
  w["p1_manifold"] = M.format_class(r.p1_m);
  w["p1_bundle"] = M.format_class(r.p1_v);
  d["witnesses"] = w;
  d["notes"] = r.notes;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact twisted Spin^c indices and Witten genera of generalized "
            "complete intersections";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<spinc_error>(m, "SpinCError", PyExc_ValueError);
  py::register_exception<series_error>(m, "SeriesError", PyExc_ValueError);
  py::register_exception<model_error>(m, "ModelError", PyExc_ValueError);
  py::register_exception<search_error>(m, "SearchError", PyExc_RuntimeError);

  py::class_<ManifoldModel>(m, "ManifoldModel")
      .def_property_readonly("name", &ManifoldModel::name)
      .def_property_readonly("generators", &ManifoldModel::generators)
      .def_property_readonly("complex_dimension", &ManifoldModel::complex_dimension)
      .def_property_readonly("generator_count", &ManifoldModel::generator_count)
      .def_property_readonly("tangent_roots", &ManifoldModel::tangent_roots)
      .def("to_json", [](const ManifoldModel& M) { return canonical_dump(model_to_json(M)); })
      .def("__repr__", [](const ManifoldModel& M) {
        return "<ManifoldModel '" + M.name() + "', dim_C = " +
               std::to_string(M.complex_dimension()) + ">";
      });

  m.def("load_manifold", &load_model, py::arg("path"),
        "Load a manifold description file.");
  m.def(
      "manifold_from_json",
      [](const std::string& text) { return model_from_json(Json::parse(text)); },
      py::arg("text"));
  m.def("projective_space", &projective_space, py::arg("n"));
  m.def("product_of_projective_spaces", &product_of_projective_spaces, py::arg("dims"));
  m.def("point", &point_model);

  m.def(
      "witten_of_gci",
      [](const ManifoldModel& M, const Roots& bundle, int q_order) {
        return genus_dict(witten_of_gci(M, LineBundleSum{bundle}, q_order));
      },
      py::arg("manifold"), py::arg("bundle"), py::arg("q_order") = 5,
      "Witten genus of the generalized complete intersection cut out by the "
      "bundle, evaluated in the ambient manifold through the Euler class.");

  m.def(
      "phi_c",
      [](const ManifoldModel& M, const Roots& bundle, const Roots& w_bundle,
         const std::optional<std::vector<long>>& c1c, int q_order) {
        const LineBundleSum V{bundle};
        const IntClass cls = c1c ? c1(Roots{*c1c}, M) : c1(bundle, M);
        return genus_dict(phi_c(M, V, RootBundle{w_bundle, 0}, cls, q_order));
      },
      py::arg("manifold"), py::arg("bundle") = Roots{}, py::arg("w_bundle") = Roots{},
      py::arg("c1c") = std::nullopt, py::arg("q_order") = 5,
      "Twisted index phi^c(M;V,W); c1c defaults to c1(V).");

  m.def(
      "witten",
      [](const ManifoldModel& M, int q_order) { return genus_dict(witten(M, q_order)); },
      py::arg("manifold"), py::arg("q_order") = 5);

  m.def(
      "elliptic",
      [](const ManifoldModel& M, int q_order) { return genus_dict(elliptic(M, q_order)); },
      py::arg("manifold"), py::arg("q_order") = 5);

  m.def(
      "check_string_gci",
      [](const ManifoldModel& M, const Roots& bundle) {
        return report_dict(check_string_gci(M, LineBundleSum{bundle}), M);
      },
      py::arg("manifold"), py::arg("bundle"));

  m.def(
      "fano_c1_check",
      [](int n, const std::vector<long>& degrees) {
        const FanoCheck f = fano_c1_check(n, degrees);
        py::dict d;
        d["c1_coefficient"] = f.c1_coefficient;
        d["fano"] = f.fano;
        d["exceptional"] = f.exceptional;
        return d;
      },
      py::arg("n"), py::arg("degrees"));

  m.def(
      "search_string",
      [](const ManifoldModel& M, int max_degree, int max_bundles) {
        std::vector<Roots> out;
        for (const LineBundleSum& V : search_string(M, max_degree, max_bundles))
          out.push_back(V.roots);
        return out;
      },
      py::arg("manifold"), py::arg("max_degree") = 2, py::arg("max_bundles") = 2);

  m.def(
      "eisenstein",
      [](int weight, int q_order) { return series_strings(eisenstein(weight, q_order)); },
      py::arg("weight"), py::arg("q_order") = 5);

  m.def(
      "modular_fit",
      [](const std::vector<std::string>& series, int weight) -> py::object {
        if (series.empty()) throw parse_error("empty series");
        RatSeries s(static_cast<int>(series.size()) - 1);
        for (size_t i = 0; i < series.size(); ++i)
          s[static_cast<int>(i)] = rational_from_string(series[i]);
        const ModularFit f = modular_fit(s, weight);
        if (!f.modular) return py::none();
        py::dict d;
        for (const auto& [ab, c] : f.coefficients) {
          const std::string key =
              "E4^" + std::to_string(ab.first) + "*E6^" + std::to_string(ab.second);
          d[py::str(key)] = rational_to_string(c);
        }
        return d;
      },
      py::arg("series"), py::arg("weight"),
      "Decompose a q-series of rational strings in the E4^a E6^b basis; "
      "None when no exact decomposition exists.");

  m.def(
      "corpus_verify",
      [](const std::string& dir, int jobs) {
        const CorpusSummary s = corpus_verify(dir, jobs);
        py::list entries;
        for (const auto& e : s.entries) {
          py::dict d;
          d["name"] = e.name;
          d["pass"] = e.pass;
          d["detail"] = e.detail;
          entries.append(d);
        }
        py::dict out;
        out["entries"] = entries;
        out["all_pass"] = s.all_pass;
        return out;
      },
      py::arg("dir"), py::arg("jobs") = 1);

#ifdef VERSION_INFO
#define WITGEN_STR(x) #x
#define WITGEN_XSTR(x) WITGEN_STR(x)
  m.attr("__version__") = WITGEN_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "0.1.0";
#endif
}
