#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liegeo/analysis.hpp"
#include "liegeo/assembly.hpp"
#include "liegeo/construct.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/parallel.hpp"
#include "liegeo/report_io.hpp"
#include "liegeo/tables.hpp"

using namespace liegeo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + out_path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite incidence geometry engine: polar and parapolar spaces, "
               "lacunarity spectra, residuals and sheet assembly"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker pool size (0 = hardware)");
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // build
  auto* c_build = app.add_subcommand("build", "construct a geometry and write a plg file");
  std::string build_spec, build_out;
  c_build->add_option("spec", build_spec, "construction string")->required();
  c_build->add_option("out,--out", build_out, "output path");

  // analyze
  auto* c_analyze = app.add_subcommand("analyze", "run the parapolar analysis");
  std::string an_arg, an_out;
  int an_sample = -1;
  c_analyze->add_option("geometry", an_arg, "construction string or plg path")->required();
  c_analyze->add_option("--out", an_out, "write the report here instead of stdout");
  c_analyze->add_option("--sample-residuals", an_sample,
                        "residual sample size (-1 auto, 0 none)");

  // residual
  auto* c_res = app.add_subcommand("residual", "point-residual geometry");
  std::string res_arg, res_out;
  int res_point = 0;
  c_res->add_option("geometry", res_arg)->required();
  c_res->add_option("--point", res_point, "base point")->required();
  c_res->add_option("--out", res_out, "write the residual as plg");

  // fingerprint
  auto* c_fp = app.add_subcommand("fingerprint", "invariant fingerprint");
  std::string fp_arg;
  c_fp->add_option("geometry", fp_arg)->required();

  // iso
  auto* c_iso = app.add_subcommand("iso", "exact incidence-graph isomorphism test");
  std::string iso_a, iso_b;
  std::size_t iso_max = 5000;
  c_iso->add_option("first", iso_a)->required();
  c_iso->add_option("second", iso_b)->required();
  c_iso->add_option("--max-exact-iso", iso_max, "vertex cap for the exact test");

  // unbutton
  auto* c_unb = app.add_subcommand("unbutton", "split into locally connected sheets");
  std::string unb_arg, unb_prefix;
  c_unb->add_option("geometry", unb_arg)->required();
  c_unb->add_option("--out-prefix", unb_prefix, "write sheets to <prefix><i>.plg");

  // button
  auto* c_btn = app.add_subcommand("button", "glue sheets along an asm file");
  std::string btn_arg, btn_out;
  c_btn->add_option("assembly", btn_arg, "asm v1 path")->required();
  c_btn->add_option("--out", btn_out, "write the glued geometry as plg");

  // verify-tables
  auto* c_vt = app.add_subcommand("verify-tables", "check the classification tables");
  std::string vt_filter, vt_data;
  bool vt_stretch = false;
  c_vt->add_option("--filter", vt_filter, "only rows whose id contains this string");
  c_vt->add_option("--data", vt_data, "expectation data file");
  c_vt->add_flag("--stretch", vt_stretch, "include stretch fixtures");

  CLI11_PARSE(app, argc, argv);
  set_thread_count(threads);

  try {
    if (*c_build) {
      Geometry g = build_construction(build_spec);
      if (build_out.empty()) throw InputError("build needs an output path");
      write_plg_file(g, build_out);
      std::cout << build_out << ": " << g.points() << " points, " << g.line_count()
                << " lines\n";
      return kExitOk;
    }

    if (*c_analyze) {
      Geometry g = load_geometry(an_arg);
      AnalyzeOptions opts;
      opts.residual_sample = an_sample;
      FullAnalysis a = run_analysis(g, opts);
      emit(format == "json" ? analysis_to_json(a) : analysis_to_text(a), an_out);
      return kExitOk;
    }

    if (*c_res) {
      Geometry g = load_geometry(res_arg);
      FullAnalysis a = run_analysis(g, AnalyzeOptions{0, false});
      Residual r = point_residual(g, static_cast<uint32_t>(res_point), a.report.symps);
      if (!res_out.empty()) write_plg_file(r.geom, res_out);
      std::cout << "residual at " << res_point << ": " << r.geom.points() << " points, "
                << r.geom.line_count() << " lines, "
                << fingerprint(r.geom).to_string() << "\n";
      return kExitOk;
    }

    if (*c_fp) {
      Geometry g = load_geometry(fp_arg);
      std::cout << fingerprint(g).to_string() << "\n";
      return kExitOk;
    }

    if (*c_iso) {
      Geometry a = load_geometry(iso_a);
      Geometry b = load_geometry(iso_b);
      bool iso = exact_iso_small(a, b, iso_max);
      std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
      return kExitOk;
    }

    if (*c_unb) {
      Geometry g = load_geometry(unb_arg);
      FullAnalysis a = run_analysis(g, AnalyzeOptions{0, false});
      Unbuttoning ub = unbutton(g, a.report.symps);
      std::cout << ub.assembly.sheets.size() << " sheet(s)\n";
      for (std::size_t i = 0; i < ub.assembly.sheets.size(); ++i) {
        const Geometry& s = ub.assembly.sheets[i];
        std::cout << "  sheet " << i << ": " << s.points() << " points, "
                  << s.line_count() << " lines\n";
        if (!unb_prefix.empty()) write_plg_file(s, unb_prefix + std::to_string(i) + ".plg");
      }
      std::size_t glue = 0;
      for (const auto& c : ub.assembly.classes)
        if (c.size() > 1) ++glue;
      std::cout << glue << " nontrivial glue class(es)\n";
      return kExitOk;
    }

    if (*c_btn) {
      SheetAssembly a = read_asm_file(btn_arg);
      std::cout << "C1: " << (a.c1_ok ? "ok" : ("violated: " + a.c1_witness)) << "\n";
      std::cout << "C2: " << (a.c2_ok ? "ok" : ("violated: " + a.c2_witness)) << "\n";
      if (!a.c1_ok || !a.c2_ok) return kExitVerification;
      Geometry g = button(a);
      std::cout << "glued: " << g.points() << " points, " << g.line_count() << " lines\n";
      if (!btn_out.empty()) write_plg_file(g, btn_out);
      return kExitOk;
    }

    if (*c_vt) {
      TableOutcome o = verify_tables(vt_data.empty() ? default_expectations_path() : vt_data,
                                     vt_filter, vt_stretch);
      std::cout << o.log;
      return o.ok() ? kExitOk : kExitVerification;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
