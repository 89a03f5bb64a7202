#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hwforms/driver.hpp"
#include "hwforms/errors.hpp"
#include "hwforms/mesh_io.hpp"

namespace {

using KeyValues = std::map<std::string, std::string>;

struct CommonOptions {
  std::string config_path;
  KeyValues overrides;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config_path, "key=value configuration file");
  const std::vector<std::pair<std::string, std::string>> keys = {
      {"case", "cook | block | plate | file"},
      {"refine", "refinement level"},
      {"mu", "shear modulus"},
      {"kappa", "bulk modulus"},
      {"load", "traction (cook/block) or total extension (plate)"},
      {"steps", "number of load steps"},
      {"tol", "relative Newton tolerance"},
      {"max-iters", "Newton iterations per load step"},
      {"halvings", "line-search halvings"},
      {"threads", "assembly threads"},
      {"quad", "quadrature degree"},
      {"out", "output directory"},
      {"mesh", "m2d mesh (case=file)"},
      {"bc", "boundary-condition file (case=file)"},
      {"pattern", "cell triangulation: crossed | diagonal"},
      {"probe-x", "probe point x"},
      {"probe-y", "probe point y"},
  };
  for (const auto& [flag, help] : keys) {
    std::string key = flag;
    for (char& c : key)
      if (c == '-') c = '_';
    app->add_option_function<std::string>("--" + flag, [&o, key](const std::string& v) { o.overrides[key] = v; },
                                           help);
  }
}

hwforms::BenchmarkConfig make_config(const CommonOptions& o) {
  KeyValues kv;
  if (!o.config_path.empty()) kv = hwforms::read_key_values(o.config_path);
  for (const auto& [k, v] : o.overrides) kv[k] = v;
  const auto it = kv.find("case");
  auto cfg = hwforms::BenchmarkConfig::defaults(hwforms::parse_case(it == kv.end() ? "cook" : it->second));
  hwforms::apply_key_values(cfg, kv);
  cfg.validate();
  return cfg;
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> levels;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw hwforms::ConfigError("empty level range " + text);
    for (int l = lo; l <= hi; ++l) levels.push_back(l);
    return levels;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    levels.push_back(std::stoi(text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return levels;
}

void print_metrics(const hwforms::RunMetrics& m) {
  std::printf("refine %d: dofs %d, probe u = (%.12g, %.12g), int|theta|^2 = %.12g, int|P| = %.12g, J in [%.6g, %.6g], "
              "newton %d\n",
              m.refine, m.dofs, m.probe_displacement.x(), m.probe_displacement.y(), m.theta_integral,
              m.piola_integral, m.min_jacobian, m.max_jacobian, m.newton_iterations);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed Hu-Washizu finite elements for 2D nonlinear elasticity"};
  app.require_subcommand(1);

  CommonOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "run one benchmark");
  add_common(solve_cmd, solve_opts);

  CommonOptions conv_opts;
  std::string levels_text = "0..3";
  auto* conv_cmd = app.add_subcommand("convergence", "run a refinement study");
  add_common(conv_cmd, conv_opts);
  conv_cmd->add_option("--levels", levels_text, "levels as lo..hi or a comma list");

  CommonOptions mesh_opts;
  std::string mesh_out;
  auto* mesh_cmd = app.add_subcommand("mesh", "write a benchmark mesh in m2d format");
  add_common(mesh_cmd, mesh_opts);
  mesh_cmd->add_option("-o,--output", mesh_out, "output .m2d path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      const auto cfg = make_config(solve_opts);
      const auto outcome = hwforms::run_benchmark(cfg);
      print_metrics(outcome.metrics);
    } else if (conv_cmd->parsed()) {
      const auto cfg = make_config(conv_opts);
      const auto study = hwforms::convergence_study(cfg, parse_levels(levels_text));
      for (const auto& m : study.runs) print_metrics(m);
      for (const auto& q : study.quantities)
        std::printf("%s reference %.12g (%s)\n", q.name.c_str(), q.reference.reference,
                    q.reference.richardson ? "richardson" : "finest");
    } else if (mesh_cmd->parsed()) {
      const auto cfg = make_config(mesh_opts);
      hwforms::write_m2d(mesh_out, hwforms::benchmark_mesh(cfg));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
