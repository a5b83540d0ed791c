#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normone/report.hpp"

namespace py = pybind11;
using namespace normone;

namespace {

std::vector<ArcProduct> arcs_for(const FieldDescriptor& F, const std::string& arc) {
  return arc.empty() ? std::vector<ArcProduct>{ArcProduct::full(F.N)} : parse_arc_spec(arc, F.N);
}

py::dict point_dict(const NormOnePoint& p, int degree) {
  py::dict d;
  std::vector<long> gamma(p.alpha.gamma.begin(), p.alpha.gamma.begin() + degree);
  std::vector<long> beta(p.beta.begin(), p.beta.begin() + degree);
  d["gamma"] = gamma;
  d["m"] = p.alpha.m;
  d["beta"] = beta;
  d["height_pow2N"] = p.height_pow2N.get_str();
  d["height"] = p.height;
  d["args"] = p.args;
  d["D_mask"] = p.D_mask;
  d["torsion"] = p.torsion;
  return d;
}

}  // namespace

PYBIND11_MODULE(_normone, m) {
  m.doc() = "Counts of norm-one elements of bounded height in CM fields";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

  py::class_<FieldDescriptor, std::shared_ptr<FieldDescriptor>>(m, "Field")
      .def_readonly("name", &FieldDescriptor::name)
      .def_readonly("N", &FieldDescriptor::N)
      .def_property_readonly("degree", [](const FieldDescriptor& F) { return 2 * F.N; })
      .def_property_readonly("torsion_order", [](const FieldDescriptor& F) { return F.torsion.size(); })
      .def_property_readonly("ramified_primes",
                             [](const FieldDescriptor& F) {
                               std::vector<u64> r;
                               for (const auto& x : F.ramified) r.push_back(x.rational_prime);
                               return r;
                             })
      .def_property_readonly("info", [](const FieldDescriptor& F) { return field_json(F).dump(); })
      .def("__repr__", [](const FieldDescriptor& F) { return "<Field " + F.name + ">"; });

  m.def("load_field", &load_descriptor, py::arg("name_or_path"));
  m.def("builtin_fields", &builtin_field_names);

  m.def(
      "count_sk",
      [](const FieldDescriptor& F, const std::string& H, const std::string& arc, int threads) {
        py::gil_scoped_release release;
        return count_SK(F, arcs_for(F, arc), parse_height(H), threads).count;
      },
      py::arg("field"), py::arg("H"), py::arg("arc") = "", py::arg("threads") = 0);

  m.def(
      "enumerate_sk",
      [](const FieldDescriptor& F, const std::string& H, const std::string& arc, int threads) {
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_SK(F, arcs_for(F, arc), parse_height(H), threads);
        }
        if (r.anomalies) throw std::logic_error("oracle self-checks failed: " + r.anomaly_notes.front());
        py::list out;
        for (const auto& p : r.points) out.append(point_dict(p, F.K->degree()));
        return out;
      },
      py::arg("field"), py::arg("H"), py::arg("arc") = "", py::arg("threads") = 0);

  m.def(
      "count_report",
      [](const FieldDescriptor& F, const std::string& H, const std::string& arc, bool oracle, int threads) {
        py::gil_scoped_release release;
        return run_count(F, arcs_for(F, arc), parse_height(H), oracle, false, threads).json().dump();
      },
      py::arg("field"), py::arg("H"), py::arg("arc") = "", py::arg("oracle") = false, py::arg("threads") = 0);

  m.def("constants", [](const FieldDescriptor& F) { return constants_json(F).dump(); }, py::arg("field"));

  m.def(
      "discrepancy",
      [](const FieldDescriptor& F, const std::string& H) {
        py::gil_scoped_release release;
        auto r = enumerate_SK(F, {ArcProduct::full(F.N)}, parse_height(H));
        Discrepancy d = discrepancy(F, r.points);
        return std::make_pair(d.value, d.exact);
      },
      py::arg("field"), py::arg("H"));

  m.def(
      "histogram_csv",
      [](const FieldDescriptor& F, const std::string& H, int bins) {
        py::gil_scoped_release release;
        auto r = enumerate_SK(F, {ArcProduct::full(F.N)}, parse_height(H));
        return histogram_csv(histogram(r.points, bins));
      },
      py::arg("field"), py::arg("H"), py::arg("bins"));

  m.def(
      "count_s2",
      [](const std::string& arc, const std::string& H) {
        auto I = parse_arc_spec(arc, 1);
        if (I.size() != 1) throw ConfigError("s2 takes a single arc");
        return count_S2(I[0].arcs[0], parse_height(H)).count;
      },
      py::arg("arc"), py::arg("H"));
}
