// Command-line surface for the library. Four subcommands:
//   count        exact class counts by three independent routes
//   solve        numerical enumeration + reconstruction + verification
//   verify-sweep batch identity check over a grid of specs (CSV output)
//   tables       Catalan / generating-function reference tables
// Exit codes: 0 = all routes agree and everything verifies, 1 = disagreement
// or verification failure, 2 = solver coverage shortfall only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wronski/bethe.hpp"
#include "wronski/combinatorics.hpp"
#include "wronski/problem.hpp"
#include "wronski/report.hpp"
#include "wronski/rng.hpp"
#include "wronski/schubert.hpp"
#include "wronski/sl2.hpp"

namespace {

using wronski::BigInt;
using wronski::Complex;
using wronski::ProblemSpec;
using wronski::SolverConfig;
using wronski::SplitMix64;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitCoverage = 2;

struct GlobalFlags {
  std::string json_path;
  std::uint64_t seed = 1;
  std::string config_path;
  bool no_timings = false;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_)
        .count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

std::vector<int> parse_multiplicities(const std::string& text) {
  std::vector<int> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    m.push_back(std::stoi(item));
  if (m.empty())
    throw std::invalid_argument("--m: expected at least one multiplicity");
  return m;
}

std::vector<Complex> parse_points(const std::string& text) {
  std::vector<Complex> z;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    const auto comma = group.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--z: each point must be re,im");
    z.emplace_back(std::stod(group.substr(0, comma)),
                   std::stod(group.substr(comma + 1)));
  }
  if (z.empty()) throw std::invalid_argument("--z: expected at least one point");
  return z;
}

std::string multiplicities_text(const std::vector<int>& m, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(m[i]);
  }
  return out;
}

std::string point_text(const Complex& c) {
  std::ostringstream out;
  out << "(" << c.real() << "," << c.imag() << ")";
  return out.str();
}

void write_json_report(const GlobalFlags& g,
                       const wronski::report::RunReport& report) {
  if (g.json_path.empty()) return;
  const std::string text = report.to_json().dump(2) + "\n";
  if (g.json_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.json_path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + g.json_path + " for writing");
  out << text;
}

void print_spec_line(const ProblemSpec& spec) {
  std::cout << "spec: d = " << spec.d << ", m = ("
            << multiplicities_text(spec.m) << "), M = "
            << spec.total_multiplicity() << ", k = " << spec.plane_order()
            << ", m_inf = " << spec.infinity_multiplicity() << "\n";
}

// Self-contained explanations for the two exactly-known boundary situations;
// both leave the routes in perfect agreement, hence exit code 0.
void print_boundary_remark(const ProblemSpec& spec) {
  if (!spec.admissible()) {
    std::cout << "note: no classes of this type exist. Each critical "
                 "multiplicity of a degree-" << spec.d
              << " map is at most " << spec.d - 1
              << " and the total over the sphere is exactly "
              << 2 * spec.d - 2
              << "; this specification falls outside those bounds, so every "
                 "route reports 0.\n";
  } else if (spec.plane_order() == 0) {
    std::cout << "note: boundary case M = d - 1. Infinity absorbs the "
                 "complementary multiplicity "
              << spec.infinity_multiplicity()
              << " and the unique class is the primitive of the "
                 "configuration polynomial; every route reports 1.\n";
  }
}

int cmd_count(const ProblemSpec& spec, const std::string& methods_text,
              const GlobalFlags& g) {
  bool want_formula = false, want_schubert = false, want_rep = false;
  {
    std::stringstream ss(methods_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "all")
        want_formula = want_schubert = want_rep = true;
      else if (item == "formula")
        want_formula = true;
      else if (item == "schubert")
        want_schubert = true;
      else if (item == "rep")
        want_rep = true;
      else
        throw std::invalid_argument("--methods: unknown route '" + item +
                                    "' (use all, formula, schubert, rep)");
    }
  }
  if (!(want_formula || want_schubert || want_rep))
    throw std::invalid_argument("--methods: no route selected");

  wronski::report::RunReport report(spec);
  report.seed = g.seed;
  report.include_timings = !g.no_timings;
  if (want_formula) {
    Stopwatch sw;
    const BigInt v = wronski::comb::count_classes(spec);
    report.timings_ms.emplace_back("formula", sw.ms());
    report.add_count("formula", v);
  }
  if (want_schubert) {
    Stopwatch sw;
    const BigInt v = wronski::schubert::intersection_number(spec);
    report.timings_ms.emplace_back("schubert", sw.ms());
    report.add_count("schubert", v);
  }
  if (want_rep) {
    Stopwatch sw;
    const BigInt v = wronski::comb::singular_route_count(spec);
    report.timings_ms.emplace_back("rep", sw.ms());
    report.add_count("rep", v);
  }

  print_spec_line(spec);
  for (const auto& [route, value] : report.counts)
    std::cout << std::left << std::setw(10) << route << value.str() << "\n";
  std::cout << "agreement: " << (report.agreement ? "yes" : "NO") << "\n";
  print_boundary_remark(spec);
  write_json_report(g, report);
  return report.agreement ? kExitOk : kExitDisagree;
}

int cmd_solve(const ProblemSpec& spec, const std::string& z_text,
              const SolverConfig& cfg, const GlobalFlags& g) {
  std::vector<Complex> z;
  if (!z_text.empty()) {
    z = parse_points(z_text);
    if (static_cast<int>(z.size()) != spec.n())
      throw std::invalid_argument(
          "--z: expected " + std::to_string(spec.n()) + " points, got " +
          std::to_string(z.size()));
  } else {
    // A stream index no solver start can reach keeps the configuration
    // draw decorrelated from the start draws under the same seed.
    SplitMix64 rng = SplitMix64::stream(
        cfg.seed, std::numeric_limits<std::uint64_t>::max());
    z = wronski::sample_generic_config(spec.n(), rng);
  }

  wronski::report::RunReport report(spec);
  report.seed = cfg.seed;
  report.solving = true;
  report.z_used = z;
  report.config = cfg;
  report.include_timings = !g.no_timings;

  Stopwatch sw;
  const wronski::PipelineResult res = wronski::run_pipeline(spec, z, cfg);
  report.timings_ms.emplace_back("pipeline", sw.ms());
  report.add_count("formula", res.count_formula);
  report.add_count("schubert", res.count_schubert);
  report.add_count("rep", res.count_rep);
  report.add_count("orbits", res.count_orbits);
  report.classes = res.classes;

  print_spec_line(spec);
  std::cout << "z:";
  for (const Complex& c : z) std::cout << " " << point_text(c);
  std::cout << "\n";
  for (const auto& [route, value] : report.counts)
    std::cout << std::left << std::setw(10) << route << value.str() << "\n";
  print_boundary_remark(spec);
  int index = 0;
  for (const wronski::ClassRecord& record : res.classes) {
    std::cout << "class " << ++index << ": points";
    if (record.orbit.points.empty()) std::cout << " (none)";
    for (const Complex& c : record.orbit.points)
      std::cout << " " << point_text(c);
    std::cout << " | wronskian residual " << std::scientific
              << std::setprecision(2) << record.report.wronskian_residual
              << " | margin " << record.report.coprimality_margin
              << std::defaultfloat << " | "
              << (record.report.passed() ? "PASS" : "FAIL") << "\n";
  }

  const bool overcount = res.count_orbits > res.count_formula;
  const bool shortfall = res.count_orbits < res.count_formula;
  report.coverage_warning = shortfall;
  if (shortfall)
    std::cerr << "warning: solver coverage shortfall — found "
              << res.count_orbits.str() << " of " << res.count_formula.str()
              << " classes; raise --max-starts or --window\n";
  write_json_report(g, report);

  if (!res.routes_agree || !res.all_verified || overcount)
    return kExitDisagree;
  if (shortfall) return kExitCoverage;
  return kExitOk;
}

int cmd_verify_sweep(int max_d, int max_n, int max_m, int with_bethe,
                     const std::string& csv_path, const GlobalFlags& g) {
  if (max_d < 1 || max_n < 1 || max_m < 1)
    throw std::invalid_argument("verify-sweep: bounds must be >= 1");
  std::ostringstream csv;
  csv << "d,m,formula,schubert,rep,agree,orbits,max_residual\n";
  std::vector<std::string> disagreements;
  long long rows = 0;

  struct Candidate {
    ProblemSpec spec;
    long long count;
  };
  std::vector<Candidate> candidates;  // bounded-count instances for --with-bethe

  for (int d = 1; d <= max_d; ++d) {
    for (int n = 1; n <= max_n; ++n) {
      std::vector<int> m(static_cast<std::size_t>(n), 1);
      for (;;) {
        const ProblemSpec spec(d, m);
        if (spec.admissible()) {
          const BigInt a = wronski::comb::count_classes(spec);
          const BigInt b = wronski::schubert::intersection_number(spec);
          const BigInt c = wronski::comb::singular_route_count(spec);
          const bool agree = a == b && b == c;
          csv << d << "," << multiplicities_text(m, '+') << "," << a.str()
              << "," << b.str() << "," << c.str() << ","
              << (agree ? "true" : "false") << ",,\n";
          ++rows;
          if (!agree)
            disagreements.push_back("d=" + std::to_string(d) + " m=(" +
                                    multiplicities_text(m) + "): " + a.str() +
                                    " / " + b.str() + " / " + c.str());
          if (agree && a >= 1 && a <= 20)
            candidates.push_back({spec, a.convert_to<long long>()});
        }
        // Odometer over {1..max_m}^n.
        int pos = n - 1;
        while (pos >= 0 && m[static_cast<std::size_t>(pos)] == max_m) {
          m[static_cast<std::size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++m[static_cast<std::size_t>(pos)];
      }
    }
  }

  bool bethe_shortfall = false;
  bool bethe_failure = false;
  if (with_bethe > 0 && !candidates.empty()) {
    SplitMix64 pick(g.seed);
    for (int i = 0; i < with_bethe; ++i) {
      const Candidate& cand =
          candidates[pick.below(candidates.size())];
      SplitMix64 zrng = SplitMix64::stream(
          g.seed,
          std::numeric_limits<std::uint64_t>::max() - 1 -
              static_cast<std::uint64_t>(i));
      const std::vector<Complex> z =
          wronski::sample_generic_config(cand.spec.n(), zrng);
      SolverConfig cfg;
      cfg.seed = g.seed;
      // Spot checks run the solver at a deeper saturation window than the
      // interactive default: a missed orbit here is a false alarm, and the
      // sweep only solves a handful of instances.
      cfg.saturation_window = 2000;
      const wronski::PipelineResult res =
          wronski::run_pipeline(cand.spec, z, cfg);
      double max_residual = 0;
      bool verified = res.all_verified;
      for (const wronski::ClassRecord& record : res.classes)
        max_residual =
            std::max({max_residual, record.report.wronskian_residual,
                      record.report.fuchsian_residual});
      csv << cand.spec.d << "," << multiplicities_text(cand.spec.m, '+')
          << "," << res.count_formula.str() << ","
          << res.count_schubert.str() << "," << res.count_rep.str() << ","
          << (res.routes_agree ? "true" : "false") << ","
          << res.count_orbits.str() << "," << std::scientific
          << std::setprecision(3) << max_residual << "\n";
      csv << std::defaultfloat;
      ++rows;
      if (res.count_orbits > res.count_formula || !verified ||
          !res.routes_agree)
        bethe_failure = true;
      else if (res.count_orbits < res.count_formula)
        bethe_shortfall = true;
    }
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path, std::ios::binary);
    if (!file)
      throw std::runtime_error("cannot open " + csv_path + " for writing");
    out = &file;
  }
  *out << csv.str();
  std::ostream& log = csv_path.empty() ? std::cerr : std::cout;
  log << "checked " << rows << " rows; "
      << (disagreements.empty() ? "all routes agree" : "DISAGREEMENTS FOUND")
      << "\n";
  for (const std::string& line : disagreements) log << "  " << line << "\n";

  if (!disagreements.empty() || bethe_failure) return kExitDisagree;
  if (bethe_shortfall) return kExitCoverage;
  return kExitOk;
}

int cmd_tables(const std::string& kind, int order) {
  if (order < 1 || order > 64)
    throw std::invalid_argument("--order must be between 1 and 64");
  bool ok = true;
  if (kind == "catalan") {
    // Closed form vs the convolution recurrence C_d = sum C_i C_{d-i}.
    std::vector<BigInt> rec(static_cast<std::size_t>(order) + 1);
    rec[1] = 1;
    for (int d = 2; d <= order; ++d) {
      BigInt s = 0;
      for (int i = 1; i < d; ++i)
        s += rec[static_cast<std::size_t>(i)] *
             rec[static_cast<std::size_t>(d - i)];
      rec[static_cast<std::size_t>(d)] = s;
    }
    std::cout << std::left << std::setw(4) << "d" << std::setw(24)
              << "closed_form" << "recurrence\n";
    for (int d = 1; d <= order; ++d) {
      const BigInt closed = wronski::comb::catalan(d);
      ok = ok && closed == rec[static_cast<std::size_t>(d)];
      std::cout << std::left << std::setw(4) << d << std::setw(24)
                << closed.str() << rec[static_cast<std::size_t>(d)].str()
                << "\n";
    }
  } else if (kind == "genfun") {
    const std::vector<BigInt> coeffs =
        wronski::comb::genfun_coefficients(order);
    std::cout << std::left << std::setw(4) << "k" << std::setw(24)
              << "coefficient" << "tensor_oracle\n";
    for (int j = 1; j <= order; ++j) {
      const auto decomposition =
          wronski::sl2::tensor_decompose(std::vector<int>(
              static_cast<std::size_t>(j), 1));
      const auto it = decomposition.find(0);
      const BigInt oracle = it == decomposition.end() ? BigInt(0) : it->second;
      ok = ok && coeffs[static_cast<std::size_t>(j - 1)] == oracle;
      std::cout << std::left << std::setw(4) << j << std::setw(24)
                << coeffs[static_cast<std::size_t>(j - 1)].str()
                << oracle.str() << "\n";
    }
  } else {
    throw std::invalid_argument("tables: kind must be catalan or genfun");
  }
  std::cout << "agreement: " << (ok ? "yes" : "NO") << "\n";
  return ok ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Counts classes of rational maps with prescribed critical points by "
      "independent routes and reconstructs them numerically"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--json", g.json_path,
                 "write the JSON report to this path ('-' for stdout)");
  CLI::Option* seed_opt = app.add_option(
      "--seed", g.seed, "seed for sampled configurations and solver starts");
  app.add_option("--config", g.config_path,
                 "JSON file with solver settings");
  app.add_flag("--no-timings", g.no_timings,
               "omit timings from the JSON report (byte-reproducible)");

  CLI::App* count = app.add_subcommand("count",
                                       "count classes by the exact routes");
  count->fallthrough();
  int count_d = 0;
  std::string count_m, count_methods = "all";
  count->add_option("--d", count_d, "degree of the maps")->required();
  count->add_option("--m", count_m,
                    "finite critical multiplicities, comma-separated")
      ->required();
  count->add_option("--methods", count_methods,
                    "all or comma-separated subset of formula,schubert,rep");

  CLI::App* solve = app.add_subcommand(
      "solve", "enumerate, reconstruct, and verify the classes numerically");
  solve->fallthrough();
  int solve_d = 0;
  std::string solve_m, solve_z;
  solve->add_option("--d", solve_d, "degree of the maps")->required();
  solve->add_option("--m", solve_m,
                    "finite critical multiplicities, comma-separated")
      ->required();
  solve->add_option("--z", solve_z,
                    "critical points as re,im;re,im;... (sampled from the "
                    "seed when omitted)");
  SolverConfig flag_cfg;
  CLI::Option* opt_starts =
      solve->add_option("--max-starts", flag_cfg.max_starts,
                        "solver start budget (0 = auto)");
  CLI::Option* opt_window =
      solve->add_option("--window", flag_cfg.saturation_window,
                        "stop after this many starts with no new orbit");
  CLI::Option* opt_newton = solve->add_option(
      "--eps-newton", flag_cfg.eps_newton, "gradient norm at convergence");
  CLI::Option* opt_verify = solve->add_option(
      "--eps-verify", flag_cfg.eps_verify, "verification residual tolerance");
  CLI::Option* opt_dedupe = solve->add_option(
      "--delta-dedupe", flag_cfg.delta_dedupe, "orbit matching tolerance");
  CLI::Option* opt_sep = solve->add_option(
      "--delta-sep", flag_cfg.delta_sep, "required pole separation");

  CLI::App* sweep = app.add_subcommand(
      "verify-sweep", "check the route identity over a grid of specs");
  sweep->fallthrough();
  int sweep_d = 7, sweep_n = 5, sweep_m = 4, sweep_bethe = 0;
  std::string sweep_csv;
  sweep->add_option("--max-d", sweep_d, "largest degree (default 7)");
  sweep->add_option("--max-n", sweep_n,
                    "largest number of critical points (default 5)");
  sweep->add_option("--max-m", sweep_m,
                    "largest single multiplicity (default 4)");
  sweep->add_option("--with-bethe", sweep_bethe,
                    "also solve this many randomly chosen instances "
                    "end-to-end (drawn among specs with at most 20 classes)");
  sweep->add_option("--csv", sweep_csv, "write the CSV here (default stdout)");

  CLI::App* tables =
      app.add_subcommand("tables", "reference tables with oracle columns");
  tables->fallthrough();
  std::string tables_kind;
  int tables_order = 8;
  tables->add_option("kind", tables_kind, "catalan or genfun")->required();
  tables->add_option("--order", tables_order, "table length (<= 64)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count)
      return cmd_count(ProblemSpec(count_d, parse_multiplicities(count_m)),
                       count_methods, g);
    if (*solve) {
      SolverConfig cfg;
      if (!g.config_path.empty()) {
        std::ifstream in(g.config_path);
        if (!in)
          throw std::runtime_error("cannot open config " + g.config_path);
        cfg = wronski::report::solver_config_from_json(
            ordered_json::parse(in));
      }
      if (seed_opt->count() > 0 || g.config_path.empty()) cfg.seed = g.seed;
      if (opt_starts->count() > 0) cfg.max_starts = flag_cfg.max_starts;
      if (opt_window->count() > 0)
        cfg.saturation_window = flag_cfg.saturation_window;
      if (opt_newton->count() > 0) cfg.eps_newton = flag_cfg.eps_newton;
      if (opt_verify->count() > 0) cfg.eps_verify = flag_cfg.eps_verify;
      if (opt_dedupe->count() > 0) cfg.delta_dedupe = flag_cfg.delta_dedupe;
      if (opt_sep->count() > 0) cfg.delta_sep = flag_cfg.delta_sep;
      return cmd_solve(ProblemSpec(solve_d, parse_multiplicities(solve_m)),
                       solve_z, cfg, g);
    }
    if (*sweep)
      return cmd_verify_sweep(sweep_d, sweep_n, sweep_m, sweep_bethe,
                              sweep_csv, g);
    if (*tables) return cmd_tables(tables_kind, tables_order);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagree;
  }
  return kExitOk;
}
