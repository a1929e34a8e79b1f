#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liegeo/analysis.hpp"
#include "liegeo/assembly.hpp"
#include "liegeo/construct.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/fingerprint.hpp"
#include "liegeo/parallel.hpp"
#include "liegeo/report_io.hpp"
#include "liegeo/tables.hpp"

namespace py = pybind11;
using namespace liegeo;

namespace {

FullAnalysis analyze_impl(const Geometry& g, int sample, std::size_t threads) {
  set_thread_count(threads);
  AnalyzeOptions opts;
  opts.residual_sample = sample;
  return run_analysis(g, opts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite incidence geometry engine: polar and parapolar spaces, "
            "lacunarity spectra, residuals and sheet assembly";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<VerificationError>(m, "VerificationError");
  py::register_exception<SizeExceeded>(m, "SizeExceededError");

  py::class_<Geometry>(m, "Geometry")
      .def_property_readonly("points", &Geometry::points)
      .def_property_readonly("line_count", &Geometry::line_count)
      .def("lines", [](const Geometry& g) { return g.lines(); })
      .def("labels", &Geometry::labels)
      .def("degree", &Geometry::degree)
      .def("adjacent", &Geometry::adjacent)
      .def("connected", &Geometry::connected)
      .def("__eq__", [](const Geometry& a, const Geometry& b) { return a == b; })
      .def("__repr__", [](const Geometry& g) {
        return "<Geometry " + std::to_string(g.points()) + " points, " +
               std::to_string(g.line_count()) + " lines>";
      });

  m.def("build", &build_construction, py::arg("spec"),
        "Build a geometry from a construction string such as 'A:4:2:2' or "
        "'prod:(line:3)x(polar:sp:6:2)'.");
  m.def("read_plg", &read_plg_file, py::arg("path"));
  m.def("write_plg", &write_plg_file, py::arg("geometry"), py::arg("path"));
  m.def("plg_text", &write_plg, py::arg("geometry"));

  m.def(
      "analyze_json",
      [](const Geometry& g, int sample_residuals, std::size_t threads) {
        return analysis_to_json(analyze_impl(g, sample_residuals, threads));
      },
      py::arg("geometry"), py::arg("sample_residuals") = -1, py::arg("threads") = 0,
      "Full parapolar analysis as a json string; see liegeo.analyze for the "
      "dict form.");

  m.def(
      "fingerprint",
      [](const Geometry& g) { return fingerprint(g).to_string(); },
      py::arg("geometry"));

  m.def(
      "residual",
      [](const Geometry& g, uint32_t point) {
        FullAnalysis a = analyze_impl(g, 0, 0);
        return point_residual(g, point, a.report.symps).geom;
      },
      py::arg("geometry"), py::arg("point"));

  m.def("iso", &exact_iso_small, py::arg("first"), py::arg("second"),
        py::arg("max_vertices") = 5000,
        "Exact isomorphism of the point-line incidence graphs.");

  m.def(
      "unbutton",
      [](const Geometry& g) {
        FullAnalysis a = analyze_impl(g, 0, 0);
        Unbuttoning ub = unbutton(g, a.report.symps);
        std::vector<std::pair<uint32_t, uint32_t>> glue;
        std::vector<Geometry> sheets = ub.assembly.sheets;
        py::list classes;
        for (const auto& cls : ub.assembly.classes) {
          if (cls.size() < 2) continue;
          py::list members;
          for (const SheetPoint& sp : cls)
            members.append(py::make_tuple(sp.sheet, sp.point));
          classes.append(members);
        }
        return py::make_tuple(sheets, classes);
      },
      py::arg("geometry"),
      "Split into locally connected sheets; returns (sheets, glue_classes).");

  m.def(
      "button",
      [](const std::vector<Geometry>& sheets,
         const std::vector<std::vector<std::pair<uint32_t, uint32_t>>>& glue) {
        std::vector<std::vector<SheetPoint>> classes;
        for (const auto& cls : glue) {
          std::vector<SheetPoint> members;
          for (auto [s, p] : cls) members.push_back({s, p});
          classes.push_back(std::move(members));
        }
        SheetAssembly a = make_assembly(sheets, classes);
        return button(a);
      },
      py::arg("sheets"), py::arg("glue"),
      "Glue sheets along the given classes; raises VerificationError when "
      "conditions C1 or C2 fail.");

  m.def("verify_tables",
        [](const std::string& data, const std::string& filter, bool stretch) {
          TableOutcome o = verify_tables(
              data.empty() ? default_expectations_path() : data, filter, stretch);
          return py::make_tuple(o.passed, o.failed, o.skipped, o.log);
        },
        py::arg("data") = "", py::arg("filter") = "", py::arg("stretch") = false);
}
