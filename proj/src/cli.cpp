#include "hamrecon/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hamrecon/io.hpp"
#include "hamrecon/krawtchouk.hpp"

namespace hamrecon::cli {
namespace {

using io::Json;

struct JobConfig {
  int q = 3;
  int n = 4;
  int h = 0;
  int d = -1;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  std::string mode = "ball";
  std::string input;
  std::string output;
  std::vector<int> q_grid;
  std::vector<int> n_grid;
  std::vector<int> face;
  std::string anchor;
  std::string character;
  bool oracle_eta = false;
  bool timing = false;
  bool h_given = false;
};

void validate_hd(const JobConfig& c) {
  SchemeParams{c.q, c.n}.validate();
  if (c.h < 0 || c.h > c.n) throw ParameterError("need 0 <= h <= n");
  if (c.d > c.h) throw ParameterError("need d <= h");
  if (!(c.tolerance > 0)) throw ParameterError("tolerance must be positive");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

int run_check(const JobConfig& c, std::ostream& out) {
  if (c.d < 0) throw ParameterError("check needs --d");
  validate_hd(c);
  const ConditionReport report = check_conditions(c.q, c.n, c.h, c.d);
  out << io::to_json(report).dump() << '\n';
  return report.pass() ? kSuccess : kConditionFails;
}

int run_sweep(const JobConfig& c, std::ostream& out) {
  std::vector<int> qs = c.q_grid.empty() ? std::vector<int>{c.q} : c.q_grid;
  std::vector<int> ns = c.n_grid.empty() ? std::vector<int>{c.n} : c.n_grid;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  struct Cell {
    int q, n, h, d;
    std::string row;
  };
  std::vector<Cell> cells;
  for (int q : qs) {
    for (int n : ns) {
      SchemeParams{q, n}.validate();
      for (int h = 0; h <= n; ++h) {
        for (int d = 0; d <= h; ++d) cells.push_back({q, n, h, d, {}});
      }
    }
  }
  const auto count = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    Cell& cell = cells[static_cast<std::size_t>(i)];
    const ConditionReport r = check_conditions(cell.q, cell.n, cell.h, cell.d);
    std::string status = r.pass() ? "pass" : (!r.origin_ok ? "fail-origin" : "fail-layer");
    std::string k, l;
    if (!r.failures.empty()) {
      k = std::to_string(r.failures.front().k);
      l = std::to_string(r.failures.front().l);
    }
    cell.row = std::to_string(cell.q) + "," + std::to_string(cell.n) + "," + std::to_string(cell.h) + "," +
               std::to_string(cell.d) + "," + status + "," + k + "," + l + "," + to_string(r.origin_value) + "\n";
  }
  std::string text = "q,n,h,d,status,k,l,origin_value\n";
  for (const Cell& cell : cells) text += cell.row;
  emit(c.output, text, out);
  return kSuccess;
}

int run_generate(const JobConfig& c, std::ostream& out) {
  const SchemeParams params{c.q, c.n};
  params.validate();
  VertexFunction f;
  if (!c.character.empty()) {
    f = character(params, Word::parse(c.character, params));
  } else {
    validate_hd(c);
    f = random_eigenfunction(params, c.h, c.seed);
  }
  Json doc;
  if (c.d >= 0) {
    if (c.d > c.n) throw ParameterError("need d <= n");
    doc = io::to_json(SphereData::restrict_to(f, c.d), f.eigenindex());
  } else {
    doc = io::to_json(f);
  }
  emit(c.output, doc.dump(1) + "\n", out);
  return kSuccess;
}

int run_reconstruct(const JobConfig& c, std::ostream& out) {
  if (c.input.empty()) throw ParameterError("reconstruct needs --input");
  if (!(c.tolerance > 0)) throw ParameterError("tolerance must be positive");
  const Json doc = io::read_json_file(c.input);
  std::optional<int> h = c.h_given ? std::optional<int>(c.h) : io::eigenindex_from_json(doc);
  if (!h) throw ParameterError("eigenvalue index unknown: set \"eigenindex\" in the input or pass --h");
  std::optional<int> d = c.d >= 0 ? std::optional<int>(c.d) : std::nullopt;
  if (!d && c.mode == "full" && !doc.contains("d")) d = *h;
  const SphereData sphere = io::sphere_from_json(doc, d);
  if (*h < 0 || *h > sphere.params().n) throw ParameterError("need 0 <= h <= n");
  ReconOptions options;
  options.tolerance = c.tolerance;
  options.eta = c.oracle_eta ? EtaMethod::transfer : EtaMethod::closed_form;
  Json result;
  if (c.mode == "ball") {
    result = io::to_json(reconstruct_ball(sphere, *h, options), *h);
  } else {
    if (sphere.radius() != *h) throw ParameterError("full mode needs the sphere of radius h");
    result = io::to_json(reconstruct_full(sphere, *h, options));
  }
  emit(c.output, result.dump(1) + "\n", out);
  return kSuccess;
}

int run_verify(const JobConfig& c, std::ostream& out) {
  JobConfig cfg = c;
  if (cfg.mode == "full") {
    if (cfg.d >= 0 && cfg.d != cfg.h) throw ParameterError("full mode uses d = h");
    cfg.d = cfg.h;
  } else if (cfg.d < 0) {
    cfg.d = cfg.h;
  }
  validate_hd(cfg);
  const SchemeParams params{cfg.q, cfg.n};
  const auto start = std::chrono::steady_clock::now();
  const VertexFunction f = random_eigenfunction(params, cfg.h, cfg.seed);
  const SphereData sphere = SphereData::restrict_to(f, cfg.d);
  ReconOptions options;
  options.tolerance = cfg.tolerance;
  options.eta = cfg.oracle_eta ? EtaMethod::transfer : EtaMethod::closed_form;
  VertexFunction recovered;
  int domain = cfg.n;
  if (cfg.mode == "full") {
    recovered = reconstruct_full(sphere, cfg.h, options);
  } else {
    recovered = reconstruct_ball(sphere, cfg.h, options).to_function();
    domain = cfg.d;
  }
  const auto stop = std::chrono::steady_clock::now();
  const Cube cube(params);
  double max_abs = 0.0, peak = 0.0;
  std::size_t compared = 0;
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if (cube.weight(r) > domain) continue;
    max_abs = std::max(max_abs, std::abs(recovered[r] - f[r]));
    peak = std::max(peak, std::abs(f[r]));
    ++compared;
  }
  const double max_rel = peak > 0 ? max_abs / peak : max_abs;
  Json report{{"mode", cfg.mode}, {"q", cfg.q},       {"n", cfg.n},           {"h", cfg.h},
              {"d", cfg.d},       {"seed", cfg.seed}, {"compared", compared}, {"max_abs_error", max_abs},
              {"max_rel_error", max_rel}, {"tolerance", cfg.tolerance}, {"pass", max_rel <= cfg.tolerance}};
  if (cfg.timing) report["wall_time_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  out << report.dump() << '\n';
  return max_rel <= cfg.tolerance ? kSuccess : kFailure;
}

int run_krawtchouk_dump(const JobConfig& c, std::ostream& out) {
  if (c.q < 2 || c.n < 0) throw ParameterError("krawtchouk-dump needs q >= 2 and N >= 0");
  const KrawtchoukTable table(c.q, c.n);
  std::ostringstream text;
  text << "i";
  for (int t = 0; t <= c.n; ++t) text << ',' << t;
  text << '\n';
  for (int i = 0; i <= c.n; ++i) {
    text << i;
    for (int t = 0; t <= c.n; ++t) text << ',' << to_string(table.at(i, t));
    text << '\n';
  }
  emit(c.output, text.str(), out);
  return kSuccess;
}

int run_local_dist(const JobConfig& c, std::ostream& out) {
  if (c.input.empty()) throw ParameterError("local-dist needs --input");
  const VertexFunction f = io::function_from_json(io::read_json_file(c.input));
  const SchemeParams& params = f.params();
  const Word anchor = c.anchor.empty() ? Word::zero(params.n) : Word::parse(c.anchor, params);
  const LocalDistribution dist = local_distribution(f, IndexSet(params.n, c.face), anchor);
  out << io::to_json(dist).dump() << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstruction of q-ary hypercube eigenfunctions from sphere values", "hamrecon"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  JobConfig c;

  auto add_shape = [&c](CLI::App* sub, bool with_hd) {
    sub->add_option("--q", c.q, "alphabet size (q >= 3)")->required();
    sub->add_option("--n", c.n, "dimension")->required();
    if (with_hd) {
      sub->add_option("--h", c.h, "eigenvalue index")->required();
      sub->add_option("--d", c.d, "sphere radius");
    }
  };

  auto* check = app.add_subcommand("check", "evaluate the reconstruction conditions exactly");
  add_shape(check, true);

  auto* sweep = app.add_subcommand("sweep", "condition table over a (q, n) grid as CSV");
  sweep->add_option("--q", c.q_grid, "alphabet sizes")->delimiter(',')->required();
  sweep->add_option("--n", c.n_grid, "dimensions")->delimiter(',')->required();
  sweep->add_option("--output", c.output, "CSV path (default stdout)");

  auto* generate = app.add_subcommand("generate", "seeded random eigenfunction (or character) as JSON");
  generate->add_option("--q", c.q)->required();
  generate->add_option("--n", c.n)->required();
  generate->add_option("--h", c.h, "eigenvalue index");
  generate->add_option("--d", c.d, "restrict to the sphere of this radius");
  generate->add_option("--seed", c.seed);
  generate->add_option("--character", c.character, "emit chi_beta for this word instead");
  generate->add_option("--output", c.output, "JSON path (default stdout)");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover the ball or the whole function from sphere data");
  reconstruct->add_option("--mode", c.mode)->check(CLI::IsMember({"ball", "full"}));
  reconstruct->add_option("--input", c.input, "sphere JSON")->required();
  reconstruct->add_option("--output", c.output, "result JSON (default stdout)");
  reconstruct->add_option("--tolerance", c.tolerance);
  auto* h_opt = reconstruct->add_option("--h", c.h, "eigenvalue index (default: input eigenindex)");
  reconstruct->add_option("--d", c.d, "sphere radius (default: input d)");
  reconstruct->add_flag("--oracle-eta", c.oracle_eta, "face sums through the coefficient transfer");

  auto* verify = app.add_subcommand("verify", "mask a seeded eigenfunction to a sphere and recover it");
  add_shape(verify, true);
  verify->add_option("--mode", c.mode)->check(CLI::IsMember({"ball", "full"}));
  verify->add_option("--seed", c.seed);
  verify->add_option("--tolerance", c.tolerance);
  verify->add_flag("--oracle-eta", c.oracle_eta);
  verify->add_flag("--timing", c.timing, "include wall time (makes the report nondeterministic)");

  auto* dump = app.add_subcommand("krawtchouk-dump", "P^{(q)}_i(t; N) as CSV, rows i, columns t");
  dump->add_option("--q", c.q)->required();
  dump->add_option("--N,--n", c.n)->required();
  dump->add_option("--output", c.output);

  auto* local = app.add_subcommand("local-dist", "local distribution of a function in a face, as JSON");
  local->add_option("--input", c.input)->required();
  local->add_option("--face", c.face, "free positions, 1-based")->delimiter(',');
  local->add_option("--anchor", c.anchor, "anchor word (default all zeros)");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("hamrecon");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }
  c.h_given = h_opt->count() > 0;

  try {
    if (check->parsed()) return run_check(c, out);
    if (sweep->parsed()) return run_sweep(c, out);
    if (generate->parsed()) return run_generate(c, out);
    if (reconstruct->parsed()) return run_reconstruct(c, out);
    if (verify->parsed()) return run_verify(c, out);
    if (dump->parsed()) return run_krawtchouk_dump(c, out);
    if (local->parsed()) return run_local_dist(c, out);
  } catch (const ConditionFailureError& e) {
    err << io::to_json(e.report()).dump() << '\n';
    return kConditionFails;
  } catch (const InconsistentDataError& e) {
    err << Json{{"error", "inconsistent"}, {"message", e.what()}, {"residual", e.residual()}}.dump() << '\n';
    return kInconsistent;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace hamrecon::cli
