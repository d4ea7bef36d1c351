// logamoeba: command-line front end. Every subcommand reads JSON, runs one
// pipeline, writes its result JSON (plus SVGs) and report.json to --output.
//
// exit status: 0 ok, 2 the mathematics refuses the input, 1 anything else

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logamoeba/amoeba.hpp"
#include "logamoeba/critlocus.hpp"
#include "logamoeba/error.hpp"
#include "logamoeba/lyashko.hpp"
#include "logamoeba/nodal.hpp"
#include "logamoeba/scan.hpp"
#include "logamoeba/serialize.hpp"

namespace fs = std::filesystem;
using namespace logamoeba;

namespace {

constexpr const char* kVersion = "0.3.0";

struct Job {
  std::string command;
  std::string input;
  std::string output = ".";
  std::vector<std::string> tol_overrides;
  std::uint64_t seed = 1;
  int steps = 720;
  std::string grid;
  std::string window = "-4:4:-4:4";

  // command-specific
  int d = 2;
  int n = 0;
  double epsilon = 0.1;
  double M = 10.0;
  double sign_margin = 1e-5;
  double smoothing = 0.0;
  bool scan_b0 = false;
  int contour = 0;

  Tolerances tol;
  json options = json::object();
  std::vector<std::string> outputs;
  std::vector<Diagnostic> diagnostics;
};

std::vector<double> split_numbers(const std::string& s, char sep) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "not a number: \"" + part + "\"");
    }
  }
  return out;
}

void apply_tolerances(Job& job) {
  for (const auto& kv : job.tol_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "--tol expects name=value, got " + kv);
    const auto v = split_numbers(kv.substr(eq + 1), ',');
    if (v.size() != 1) throw Error(ErrorCode::InvalidInput, "--tol expects a single value: " + kv);
    job.tol.set(kv.substr(0, eq), v[0]);
  }
}

Window parse_window(const std::string& s) {
  const auto v = split_numbers(s, ':');
  if (v.size() != 4) throw Error(ErrorCode::InvalidInput, "--window expects x0:x1:y0:y1");
  Window w{v[0], v[1], v[2], v[3]};
  if (!w.valid()) throw Error(ErrorCode::InvalidInput, "--window is empty");
  return w;
}

// "re0:re1:n" or "re0:re1:n,im0:im1:m"
ParameterGrid parse_grid(const std::string& s) {
  ParameterGrid g;
  if (s.empty()) return g;
  const auto comma = s.find(',');
  auto axis = [](const std::string& part, double& lo, double& hi, int& count) {
    const auto v = split_numbers(part, ':');
    if (v.size() != 3 || v[2] < 1 || v[2] != static_cast<int>(v[2]))
      throw Error(ErrorCode::InvalidInput, "--grid axis expects lo:hi:count, got " + part);
    lo = v[0];
    hi = v[1];
    count = static_cast<int>(v[2]);
  };
  axis(s.substr(0, comma), g.re0, g.re1, g.re_count);
  if (comma != std::string::npos) axis(s.substr(comma + 1), g.im0, g.im1, g.im_count);
  return g;
}

// "columns:angles"
std::pair<int, int> parse_amoeba_grid(const std::string& s) {
  if (s.empty()) return {120, 64};
  const auto v = split_numbers(s, ':');
  if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw Error(ErrorCode::InvalidInput, "--grid expects columns:angles");
  return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

json diagnostics_json(const std::vector<Diagnostic>& ds) {
  json arr = json::array();
  for (const auto& d : ds) arr.push_back(to_json(d));
  return arr;
}

void put(Job& job, const std::string& name, const json& j) {
  write_json_file((fs::path(job.output) / name).string(), j);
  job.outputs.push_back(name);
}

void put_svg(Job& job, const std::string& name, const std::string& svg) {
  const std::string path = (fs::path(job.output) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << svg)) throw Error(ErrorCode::IoError, "cannot write " + path);
  job.outputs.push_back(name);
}

BivariateLaurent read_polynomial(const Job& job) {
  if (job.input.empty()) throw Error(ErrorCode::InvalidInput, "--input is required");
  return polynomial_from_json(read_json_file(job.input));
}

void run_ll(Job& job) {
  const BivariateLaurent f = read_polynomial(job);
  const CriticalPointSet crit = critical_points(f, job.tol);
  const DivisorCP1 D = push_forward(crit, job.tol.projective);
  job.diagnostics.insert(job.diagnostics.end(), crit.warnings.begin(), crit.warnings.end());
  put(job, "ll.json", {{"divisor", to_json(D)}, {"binary_form", to_json(binary_form(D))},
                       {"critical_points", to_json(crit)}});
}

void run_discriminant(Job& job) {
  const DiscriminantTest t = is_discriminantal(read_polynomial(job), job.tol);
  job.diagnostics.insert(job.diagnostics.end(), t.warnings.begin(), t.warnings.end());
  put(job, "discriminant.json",
      {{"discriminantal", t.discriminantal}, {"margin", t.margin}, {"divisor", to_json(t.divisor)}});
}

void run_b0(Job& job) {
  MonodromyOptions opts;
  opts.steps = job.steps;
  const MonodromyResult r = monodromy_b0(read_polynomial(job), opts, job.tol);
  put(job, "b0.json", to_json(r));
}

void run_scan(Job& job) {
  if (job.input.empty()) throw Error(ErrorCode::InvalidInput, "--input is required");
  const FamilyTemplate t = template_from_json(read_json_file(job.input));
  ScanOptions opts;
  opts.compute_b0 = job.scan_b0;
  opts.monodromy.steps = job.steps;
  const ScanResult r = scan_family(t, parse_grid(job.grid), opts, job.tol);
  put(job, "scan.json", to_json(r));
  put_svg(job, "scan.svg", scan_svg(r));
}

void run_nodal_ll(Job& job) {
  if (job.input.empty()) throw Error(ErrorCode::InvalidInput, "--input is required");
  const json in = read_json_file(job.input);
  NodalCurve curve;
  bool lines_only = false;
  if (in.is_array()) {
    curve = nodal_curve_from_lines(arrangement_from_json(in), job.tol);
    lines_only = true;
  } else {
    curve = nodal_curve_from_components(components_from_json(in), job.tol);
  }
  const DivisorCP1 D = extended_ll(curve, job.tol);
  json out = {{"divisor", to_json(D)}, {"binary_form", to_json(binary_form(D))}, {"curve", to_json(curve)}};
  // every line contributes one circle to S
  if (lines_only && curve.n_zero() == 0)
    out["predicted_b0"] = predicted_b0(curve, static_cast<int>(curve.components.size()));
  put(job, "nodal_ll.json", out);
}

void run_construct_lines(Job& job) {
  const FamilyParams params{job.epsilon, job.M, job.sign_margin};
  const std::vector<LineSpec> lines = construct_arrangement(job.d, job.n, params, job.seed);
  const NodalCurve curve = nodal_curve_from_lines(lines, job.tol);
  json out = {{"d", job.d},
              {"n", job.n},
              {"lines", to_json(lines)},
              {"n_minus", curve.n_minus()},
              {"n_plus", curve.n_plus()},
              {"predicted_b0", predicted_b0(curve, job.d)}};
  put(job, "arrangement.json", to_json(lines));
  if (job.d >= 2) {
    const double eps = job.smoothing > 0 ? job.smoothing : default_smoothing(lines);
    out["smoothing"] = eps;
    put(job, "smoothed.json", to_json(smooth_arrangement(lines, eps)));
  }
  put(job, "construct.json", out);
}

void run_amoeba(Job& job) {
  const BivariateLaurent f = read_polynomial(job);
  const Window w = parse_window(job.window);
  const auto [columns, angles] = parse_amoeba_grid(job.grid);
  AmoebaImage img = render_amoeba(f, w, columns, angles, 1e-8, job.tol);
  if (job.contour > 0) img = overlay(img, render_contour(f, job.contour, w, 1e-8, job.tol));
  job.diagnostics.insert(job.diagnostics.end(), img.skipped.begin(), img.skipped.end());
  put(job, "amoeba.json", to_json(img));
  put_svg(job, "amoeba.svg", to_svg(img));
}

json report(const Job& job, const std::string& status, int code, const std::optional<Diagnostic>& failure) {
  json input = nullptr;
  if (!job.input.empty()) {
    try {
      input = read_json_file(job.input);
    } catch (const Error&) {
      input = nullptr;
    }
  }
  json tol = json::object();
  for (const auto& [k, v] : job.tol.named()) tol[k] = v;
  json out = {{"command", job.command},
              {"version", kVersion},
              {"input_path", job.input},
              {"input", input},
              {"seed", job.seed},
              {"tolerances", tol},
              {"options", job.options},
              {"status", status},
              {"exit_code", code},
              {"outputs", job.outputs},
              {"diagnostics", diagnostics_json(job.diagnostics)}};
  if (failure) out["error"] = to_json(*failure);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic Gauss maps, Lyashko-Looijenga divisors and critical loci of amoebas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Job job;
  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", job.input, "input JSON file");
    if (needs_input) in->required();
    sub->add_option("--output", job.output, "output directory")->capture_default_str();
    sub->add_option("--tol", job.tol_overrides, "tolerance override name=value (repeatable)");
    sub->add_option("--seed", job.seed, "seed for randomized draws")->capture_default_str();
  };

  auto* ll = app.add_subcommand("ll", "branching divisor LL(f) of a polynomial");
  common(ll, true);
  auto* disc = app.add_subcommand("discriminant", "is S(f) singular? with the distance of LL(f) to RP1");
  common(disc, true);
  auto* b0 = app.add_subcommand("b0", "components of S(f) by monodromy along RP1");
  common(b0, true);
  b0->add_option("--steps", job.steps, "steps over a half turn")->capture_default_str()->check(CLI::PositiveNumber);
  auto* scan = app.add_subcommand("scan", "discriminant scan of base + alpha * slope over a parameter grid");
  common(scan, true);
  scan->add_option("--grid", job.grid, "re0:re1:n[,im0:im1:m]")->required();
  scan->add_flag("--b0", job.scan_b0, "also count components at smooth cells");
  scan->add_option("--steps", job.steps, "monodromy steps for --b0")->capture_default_str()->check(CLI::PositiveNumber);
  auto* nodal = app.add_subcommand("nodal-ll", "extended LL of a nodal curve (line arrangement or components)");
  common(nodal, true);
  auto* construct = app.add_subcommand("construct-lines", "line arrangement with a prescribed number of negative nodes");
  common(construct, false);
  construct->add_option("--d", job.d, "number of lines")->required()->check(CLI::PositiveNumber);
  construct->add_option("--n", job.n, "number of nodes of sign -1")->required()->check(CLI::NonNegativeNumber);
  construct->add_option("--epsilon", job.epsilon, "family angle bound")->capture_default_str();
  construct->add_option("--M", job.M, "family radius scale")->capture_default_str();
  construct->add_option("--sign-margin", job.sign_margin, "minimum chordal distance of node values to RP1")
      ->capture_default_str();
  construct->add_option("--smoothing", job.smoothing, "smoothing coefficient (default: from node spacing)");
  auto* amoeba = app.add_subcommand("amoeba", "sampled amoeba (and contour) as SVG");
  common(amoeba, true);
  amoeba->add_option("--window", job.window, "x0:x1:y0:y1 in log coordinates")->capture_default_str();
  amoeba->add_option("--grid", job.grid, "columns:angles (default 120:64)");
  amoeba->add_option("--contour", job.contour, "real directions for the contour (0: none)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  job.command = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0 || opt->get_name() == "--input" ||
        opt->get_name() == "--output" || opt->get_name() == "--tol" || opt->get_name() == "--seed")
      continue;
    const auto r = opt->results();
    job.options[opt->get_name()] = r.size() == 1 ? json(r[0]) : json(r);
  }

  int code = 0;
  std::string status = "ok";
  std::optional<Diagnostic> failure;
  try {
    fs::create_directories(job.output);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "logamoeba: cannot create " << job.output << ": " << e.what() << '\n';
    return 1;
  }
  try {
    apply_tolerances(job);
    if (job.command == "ll") run_ll(job);
    else if (job.command == "discriminant") run_discriminant(job);
    else if (job.command == "b0") run_b0(job);
    else if (job.command == "scan") run_scan(job);
    else if (job.command == "nodal-ll") run_nodal_ll(job);
    else if (job.command == "construct-lines") run_construct_lines(job);
    else if (job.command == "amoeba") run_amoeba(job);
  } catch (const Error& e) {
    code = is_mathematical_refusal(e.code()) ? 2 : 1;
    status = code == 2 ? "refused" : "error";
    failure = Diagnostic{e.code(), e.detail()};
    std::cerr << "logamoeba " << job.command << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    code = 1;
    status = "error";
    failure = Diagnostic{ErrorCode::InvalidInput, e.what()};
    std::cerr << "logamoeba " << job.command << ": " << e.what() << '\n';
  }

  try {
    write_json_file((fs::path(job.output) / "report.json").string(), report(job, status, code, failure));
  } catch (const Error& e) {
    std::cerr << "logamoeba: " << e.what() << '\n';
    return 1;
  }
  return code;
}
