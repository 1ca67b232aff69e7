#pragma once
// Machine-readable run reports. One JSON document per run, with a fixed key
// order and clamped non-finite values, so identical flags + seed reproduce
// byte-identical files (timings are the only nondeterministic section and
// can be omitted).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wronski/bethe.hpp"
#include "wronski/numeric.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/problem.hpp"

namespace wronski::report {

using ordered_json = nlohmann::ordered_json;

// JSON has no Inf/NaN; infinite margins and conditions are clamped to a
// sentinel magnitude instead of poisoning the document.
double clamp_finite(double x);

ordered_json complex_json(const Complex& c);                      // [re, im]
ordered_json points_json(const std::vector<Complex>& v);
ordered_json polynomial_json(const Polynomial<Complex>& p);       // {"coeffs"}
ordered_json polynomial_json(const Polynomial<Rational>& p);      // "num/den"
ordered_json spec_json(const ProblemSpec& spec);

// Round-trip for solver settings; keys are exactly the struct fields.
// Missing keys keep their defaults, so partial config files are valid.
ordered_json solver_config_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const ordered_json& j);

ordered_json orbit_json(const CriticalOrbit& orbit);
ordered_json class_json(const ReconstructedClass& rc);
ordered_json verification_json(const VerificationReport& rep);
ordered_json class_record_json(const ClassRecord& record);

// Everything one invocation produced. Counts are recorded in insertion
// order as decimal strings (they overflow 64 bits already at modest d).
struct RunReport {
  ProblemSpec spec;
  std::vector<std::pair<std::string, BigInt>> counts;
  bool agreement = true;
  std::uint64_t seed = 0;
  bool solving = false;             // whether z/config/classes apply
  std::vector<Complex> z_used;
  SolverConfig config;
  std::vector<ClassRecord> classes;
  bool coverage_warning = false;    // solver found fewer orbits than the count
  bool include_timings = true;
  std::vector<std::pair<std::string, double>> timings_ms;

  explicit RunReport(ProblemSpec s) : spec(std::move(s)) {}

  // Agreement is maintained as the defining invariant: true iff all counts
  // recorded so far are equal.
  void add_count(const std::string& route, const BigInt& value);

  ordered_json to_json() const;
};

}  // namespace wronski::report
