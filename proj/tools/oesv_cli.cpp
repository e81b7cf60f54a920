#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "oesv/config.hpp"
#include "oesv/driver.hpp"
#include "oesv/errors.hpp"
#include "oesv/io.hpp"
#include "oesv/parallel.hpp"
#include "oesv/verification.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kValidation = 3,
  kUnknownBenchmark = 4,
  kUnknownScheme = 5,
  kNonPhysical = 6,
  kNoProgress = 7,
  kIo = 8,
  kVerifyFailed = 9,
};

int code_for(const std::string& category) {
  if (category == "ParseError") return kParse;
  if (category == "ValidationError" || category == "InvalidMesh" ||
      category == "ExactnessViolation" || category == "NonDistinctRoots" || category == "NotSPD")
    return kValidation;
  if (category == "UnknownBenchmark") return kUnknownBenchmark;
  if (category == "UnknownScheme") return kUnknownScheme;
  if (category == "NonPhysicalState") return kNonPhysical;
  if (category == "NoProgress") return kNoProgress;
  if (category == "IoError") return kIo;
  return kOther;
}

void apply_thread_env() {
  if (const char* s = std::getenv("OESV_NUM_THREADS")) {
    const int n = std::atoi(s);
    if (n > 0) oesv::set_num_threads(n);
  }
}

void print_outcome(const oesv::RunOutcome& o) {
  std::cout.precision(6);
  std::cout << o.benchmark << " [" << o.equation << ", " << o.mesh_label << "]: ";
  if (!o.ok) {
    std::cout << o.error_category << ": " << o.error_message;
    if (o.error_category == "NonPhysicalState") {
      std::cout << " (cell " << o.fail_cell << ", stage " << o.fail_stage << ", t = " << o.fail_time
                << ")";
    }
    std::cout << '\n';
    return;
  }
  std::cout << o.steps << " steps to t = " << o.t << " in " << o.wall_seconds << " s\n";
  if (o.has_exact) {
    const auto& e = o.errors[o.watch_component];
    std::cout << "  error (component " << o.watch_component << "): L1 " << e.l1 << "  L2 " << e.l2
              << "  Linf " << e.linf << '\n';
  }
  std::cout << "  range of component " << o.watch_component << ": [" << o.watch_range[0] << ", "
            << o.watch_range[1] << "]";
  if (o.has_bounds) {
    std::cout << "  undershoot " << o.overshoot.undershoot << "  overshoot "
              << o.overshoot.overshoot;
  }
  std::cout << '\n';
  if (!std::isnan(o.min_density)) {
    std::cout << "  min density " << o.min_density << "  min pressure " << o.min_pressure << '\n';
  }
  if (!o.history.empty()) {
    std::cout << "  average residue: peak " << o.residue_peak << "  final " << o.residue_final;
    if (!std::isnan(o.residue_landing)) std::cout << "  landing step " << o.residue_landing;
    std::cout << '\n';
  }
  for (const auto& f : o.files) std::cout << "  wrote " << f << '\n';
}

int finish(const oesv::RunOutcome& o) {
  print_outcome(o);
  if (!o.ok) return code_for(o.error_category);
  return o.physical ? kOk : kNonPhysical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillation-eliminating spectral volume solver for 1D/2D conservation laws"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run the problem described by a config file");
  run->add_option("config", config_path, "Config file")->required();

  std::string name, out_dir = "output", scheme, multi_index;
  bool paper_scale = false, no_filter = false;
  int k = -1, nx = 0, ny = 0, levels = 3;
  double t_final = 0.0, cfl = 0.0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("name", name, "Benchmark name (see `oesv list`)")->required();
    sub->add_flag("--paper-scale", paper_scale, "Use the reference mesh instead of the desk mesh");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--k", k, "Polynomial degree");
    sub->add_option("--nx", nx, "Cells in x");
    sub->add_option("--ny", ny, "Cells in y");
    sub->add_option("--t-final", t_final, "Final time");
    sub->add_option("--cfl", cfl, "CFL number");
    sub->add_option("--scheme", scheme, "RK scheme (SSPRK2, SSPRK3, RK4)");
    sub->add_option("--multi-index", multi_index,
                    "Derivative order used by the 2D filter (total, max)");
    sub->add_flag("--no-filter", no_filter, "Disable the OE filter (plain RKSV)");
  };
  auto* bench = app.add_subcommand("bench", "Run a registry benchmark");
  add_common(bench);
  auto* conv = app.add_subcommand("convergence", "Mesh-refinement study of a smooth benchmark");
  add_common(conv);
  conv->add_option("--levels", levels, "Number of meshes")->check(CLI::PositiveNumber);

  std::uint64_t seed = 1;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--json", json_path, "Write the machine-readable report here");

  auto* list = app.add_subcommand("list", "List registry benchmarks");

  CLI11_PARSE(app, argc, argv);
  apply_thread_env();

  try {
    if (*list) {
      for (const auto& n : oesv::benchmark_names()) {
        std::cout << n << "  " << oesv::benchmark(n).description << '\n';
      }
      return kOk;
    }
    if (*verify) {
      const auto reports = oesv::run_verify_suite(seed);
      std::cout << oesv::reports_text(reports);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw oesv::IoError("cannot open '" + json_path + "' for writing");
        out << oesv::reports_json(reports) << '\n';
      }
      std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
      return ok ? kOk : kVerifyFailed;
    }
    if (*run) {
      const oesv::RunConfig cfg = oesv::load_config(config_path);
      return finish(oesv::execute(cfg));
    }

    // bench / convergence: build the config text so overrides are validated
    // by the same parser as config files.
    std::ostringstream text;
    text.precision(17);
    text << "[run]\nbenchmark = " << name << "\npaper_scale = " << (paper_scale ? "on" : "off")
         << '\n';
    if (k >= 0) text << "k = " << k << '\n';
    if (nx > 0) text << "nx = " << nx << '\n';
    if (ny > 0) text << "ny = " << ny << '\n';
    if (t_final > 0.0) text << "t_final = " << t_final << '\n';
    if (cfl > 0.0) text << "cfl = " << cfl << '\n';
    if (!scheme.empty()) text << "scheme = " << scheme << '\n';
    if (!multi_index.empty()) text << "multi_index = " << multi_index << '\n';
    if (no_filter) text << "filter = off\n";
    text << "[output]\ndir = " << out_dir << "\nprefix = " << name << '\n';
    const oesv::RunConfig cfg = oesv::parse_config(text.str());

    if (*bench) return finish(oesv::execute(cfg));

    std::vector<oesv::RunOutcome> outcomes;
    const auto table = oesv::convergence_study(cfg, levels, &outcomes);
    std::cout << table.to_text();
    oesv::ensure_directory(out_dir);
    const std::string path = out_dir + "/" + name + "_convergence.csv";
    table.write_csv(path);
    std::cout << "wrote " << path << '\n';
    return kOk;
  } catch (const oesv::Error& e) {
    std::cerr << e.category() << ": " << e.what() << '\n';
    return code_for(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
}
