#include "wronski/report.hpp"

#include <cmath>

namespace wronski::report {

double clamp_finite(double x) {
  if (std::isnan(x)) return 0.0;
  if (std::isinf(x)) return x > 0 ? 1e308 : -1e308;
  return x;
}

ordered_json complex_json(const Complex& c) {
  return ordered_json::array({clamp_finite(c.real()), clamp_finite(c.imag())});
}

ordered_json points_json(const std::vector<Complex>& v) {
  ordered_json arr = ordered_json::array();
  for (const Complex& c : v) arr.push_back(complex_json(c));
  return arr;
}

ordered_json polynomial_json(const Polynomial<Complex>& p) {
  ordered_json coeffs = ordered_json::array();
  for (const Complex& c : p.coefficients()) coeffs.push_back(complex_json(c));
  return ordered_json{{"coeffs", std::move(coeffs)}};
}

ordered_json polynomial_json(const Polynomial<Rational>& p) {
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : p.coefficients()) coeffs.push_back(c.str());
  return ordered_json{{"coeffs", std::move(coeffs)}};
}

ordered_json spec_json(const ProblemSpec& spec) {
  return ordered_json{{"d", spec.d}, {"m", spec.m}};
}

ordered_json solver_config_json(const SolverConfig& cfg) {
  return ordered_json{{"seed", cfg.seed},
                      {"max_starts", cfg.max_starts},
                      {"saturation_window", cfg.saturation_window},
                      {"eps_newton", cfg.eps_newton},
                      {"eps_verify", cfg.eps_verify},
                      {"delta_dedupe", cfg.delta_dedupe},
                      {"delta_sep", cfg.delta_sep}};
}

SolverConfig solver_config_from_json(const ordered_json& j) {
  SolverConfig cfg;
  cfg.seed = j.value("seed", cfg.seed);
  cfg.max_starts = j.value("max_starts", cfg.max_starts);
  cfg.saturation_window = j.value("saturation_window", cfg.saturation_window);
  cfg.eps_newton = j.value("eps_newton", cfg.eps_newton);
  cfg.eps_verify = j.value("eps_verify", cfg.eps_verify);
  cfg.delta_dedupe = j.value("delta_dedupe", cfg.delta_dedupe);
  cfg.delta_sep = j.value("delta_sep", cfg.delta_sep);
  return cfg;
}

ordered_json orbit_json(const CriticalOrbit& orbit) {
  return ordered_json{{"points", points_json(orbit.points)},
                      {"residual", clamp_finite(orbit.residual)},
                      {"hessian_condition",
                       clamp_finite(orbit.hessian_condition)}};
}

ordered_json class_json(const ReconstructedClass& rc) {
  return ordered_json{
      {"g", polynomial_json(rc.g)},
      {"f", polynomial_json(rc.f)},
      {"wronskian_residual", clamp_finite(rc.wronskian_residual)},
      {"coprimality_margin", clamp_finite(rc.coprimality_margin)}};
}

ordered_json verification_json(const VerificationReport& rep) {
  return ordered_json{
      {"wronskian_residual", clamp_finite(rep.wronskian_residual)},
      {"wronskian_ok", rep.wronskian_ok},
      {"coprimality_margin", clamp_finite(rep.coprimality_margin)},
      {"coprime_ok", rep.coprime_ok},
      {"degree", rep.degree},
      {"order", rep.order},
      {"type_ok", rep.type_ok},
      {"fuchsian_residual", clamp_finite(rep.fuchsian_residual)},
      {"fuchsian_ok", rep.fuchsian_ok},
      {"all_polynomial", rep.all_polynomial},
      {"gradient_norm", clamp_finite(rep.gradient_norm)},
      {"gradient_ok", rep.gradient_ok},
      {"passed", rep.passed()}};
}

ordered_json class_record_json(const ClassRecord& record) {
  return ordered_json{{"orbit", orbit_json(record.orbit)},
                      {"class", class_json(record.cls)},
                      {"verification", verification_json(record.report)}};
}

void RunReport::add_count(const std::string& route, const BigInt& value) {
  counts.emplace_back(route, value);
  agreement = true;
  for (const auto& [name, count] : counts)
    agreement = agreement && count == counts.front().second;
}

ordered_json RunReport::to_json() const {
  ordered_json j;
  j["spec"] = spec_json(spec);
  ordered_json counts_obj = ordered_json::object();
  for (const auto& [route, value] : counts) counts_obj[route] = value.str();
  j["counts"] = std::move(counts_obj);
  j["agreement"] = agreement;
  j["seed"] = seed;
  if (solving) {
    j["z"] = points_json(z_used);
    j["config"] = solver_config_json(config);
    j["coverage_warning"] = coverage_warning;
    ordered_json cls = ordered_json::array();
    for (const ClassRecord& record : classes)
      cls.push_back(class_record_json(record));
    j["classes"] = std::move(cls);
  }
  if (include_timings) {
    ordered_json timings = ordered_json::object();
    for (const auto& [route, ms] : timings_ms) timings[route] = ms;
    j["timings_ms"] = std::move(timings);
  }
  return j;
}

}  // namespace wronski::report
