#include "wronski/bethe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "wronski/combinatorics.hpp"
#include "wronski/rng.hpp"
#include "wronski/schubert.hpp"

namespace wronski {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inf_norm(const std::vector<Complex>& v) {
  double mx = 0;
  for (const Complex& c : v) mx = std::max(mx, std::abs(c));
  return mx;
}

double squared_norm(const std::vector<Complex>& v) {
  double s = 0;
  for (const Complex& c : v) s += std::norm(c);
  return s;
}

void require_domain(const std::vector<Complex>& t,
                    const std::vector<Complex>& z, double delta_sep,
                    const char* who) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (std::abs(t[i] - t[j]) <= delta_sep)
        throw std::domain_error(std::string(who) + ": t[" + std::to_string(i) +
                                "] and t[" + std::to_string(j) +
                                "] are closer than the separation margin");
    for (std::size_t l = 0; l < z.size(); ++l)
      if (std::abs(t[i] - z[l]) <= delta_sep)
        throw std::domain_error(std::string(who) + ": t[" + std::to_string(i) +
                                "] collides with z[" + std::to_string(l) +
                                "]");
  }
}

// Gaussian elimination with partial pivoting; overwrites b with the solution.
// Returns false on a singular pivot.
bool solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex>& b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int p = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[p][col])) p = r;
    if (!(std::abs(a[p][col]) > 0.0)) return false;
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const Complex factor = a[r][col] / a[col][col];
      if (factor == Complex(0)) continue;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    Complex s = b[col];
    for (int c = col + 1; c < n; ++c) s -= a[col][c] * b[c];
    b[col] = s / a[col][col];
  }
  return true;
}

double matrix_inf_norm(const std::vector<std::vector<Complex>>& a) {
  double mx = 0;
  for (const auto& row : a) {
    double s = 0;
    for (const Complex& c : row) s += std::abs(c);
    mx = std::max(mx, s);
  }
  return mx;
}

// Infinity-norm condition number; +infinity when the matrix is singular.
double condition_inf(const std::vector<std::vector<Complex>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1.0;
  std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n));
  for (int col = 0; col < n; ++col) {
    std::vector<Complex> e(n, Complex(0));
    e[col] = 1;
    if (!solve_linear(a, e)) return kInf;
    for (int r = 0; r < n; ++r) inv[r][col] = e[r];
  }
  return matrix_inf_norm(a) * matrix_inf_norm(inv);
}

// Strict ordering on canonical point lists (same rounded key as
// canonical_points, raw values breaking ties).
bool points_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto key = [](const Complex& c) {
    return std::pair<double, double>(std::nearbyint(c.real() * 1e10),
                                     std::nearbyint(c.imag() * 1e10));
  };
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const auto ka = key(a[i]);
    const auto kb = key(b[i]);
    if (ka != kb) return ka < kb;
    const auto ra = std::pair<double, double>(a[i].real(), a[i].imag());
    const auto rb = std::pair<double, double>(b[i].real(), b[i].imag());
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

}  // namespace

int MasterProblem::total_multiplicity() const {
  int M = 0;
  for (int mj : m) M += mj;
  return M;
}

MasterProblem MasterProblem::from_spec(const ProblemSpec& spec,
                                       std::vector<Complex> z) {
  if (!spec.admissible())
    throw std::invalid_argument(
        "MasterProblem: inadmissible spec (no classes exist)");
  const int k = spec.plane_order();
  if (k < 1)
    throw std::invalid_argument(
        "MasterProblem: k = 0 has no critical system (the class is the "
        "primitive of W; see the pipeline driver)");
  if (z.size() != spec.m.size())
    throw std::invalid_argument("MasterProblem: expected " +
                                std::to_string(spec.m.size()) +
                                " prescribed points, got " +
                                std::to_string(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j])
        throw std::invalid_argument(
            "MasterProblem: prescribed points must be pairwise distinct");
  MasterProblem prob;
  prob.z = std::move(z);
  prob.m = spec.m;
  prob.k = k;
  return prob;
}

double domain_margin(const std::vector<Complex>& t,
                     const std::vector<Complex>& z) {
  double margin = kInf;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j)
      margin = std::min(margin, std::abs(t[i] - t[j]));
    for (const Complex& zl : z) margin = std::min(margin, std::abs(t[i] - zl));
  }
  return margin;
}

std::vector<Complex> master_log_gradient(const std::vector<Complex>& t,
                                         const MasterProblem& prob,
                                         double delta_sep) {
  if (static_cast<int>(t.size()) != prob.k)
    throw std::invalid_argument("master_log_gradient: expected " +
                                std::to_string(prob.k) + " points, got " +
                                std::to_string(t.size()));
  require_domain(t, prob.z, delta_sep, "master_log_gradient");
  std::vector<Complex> g(t.size(), Complex(0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    Complex acc = 0;
    for (std::size_t l = 0; l < prob.z.size(); ++l)
      acc -= static_cast<double>(prob.m[l]) / (t[i] - prob.z[l]);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) acc += 2.0 / (t[i] - t[j]);
    g[i] = acc;
  }
  return g;
}

std::vector<std::vector<Complex>> master_log_hessian(
    const std::vector<Complex>& t, const MasterProblem& prob,
    double delta_sep) {
  if (static_cast<int>(t.size()) != prob.k)
    throw std::invalid_argument("master_log_hessian: expected " +
                                std::to_string(prob.k) + " points, got " +
                                std::to_string(t.size()));
  require_domain(t, prob.z, delta_sep, "master_log_hessian");
  const std::size_t k = t.size();
  std::vector<std::vector<Complex>> h(k, std::vector<Complex>(k, Complex(0)));
  for (std::size_t i = 0; i < k; ++i) {
    Complex diag = 0;
    for (std::size_t l = 0; l < prob.z.size(); ++l) {
      const Complex dz = t[i] - prob.z[l];
      diag += static_cast<double>(prob.m[l]) / (dz * dz);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const Complex dt = t[i] - t[j];
      const Complex coupling = 2.0 / (dt * dt);
      diag -= coupling;
      h[i][j] = coupling;
    }
    h[i][i] = diag;
  }
  return h;
}

std::vector<Complex> canonical_points(std::vector<Complex> points) {
  auto key = [](const Complex& c) {
    return std::pair<double, double>(std::nearbyint(c.real() * 1e10),
                                     std::nearbyint(c.imag() * 1e10));
  };
  std::sort(points.begin(), points.end(),
            [&](const Complex& a, const Complex& b) {
              const auto ka = key(a);
              const auto kb = key(b);
              if (ka != kb) return ka < kb;
              return std::pair<double, double>(a.real(), a.imag()) <
                     std::pair<double, double>(b.real(), b.imag());
            });
  return points;
}

double matching_distance(const std::vector<Complex>& a,
                         const std::vector<Complex>& b) {
  if (a.size() != b.size()) return kInf;
  const int k = static_cast<int>(a.size());
  if (k == 0) return 0.0;
  std::vector<std::vector<double>> dist(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) dist[i][j] = std::abs(a[i] - b[j]);
  // Identity pairing bounds the bottleneck from above (both lists arrive in
  // canonical order); the branch-and-bound search only improves on it.
  double best = 0;
  for (int i = 0; i < k; ++i) best = std::max(best, dist[i][i]);
  std::vector<char> used(k, 0);
  std::function<void(int, double)> assign = [&](int i, double cur) {
    if (cur >= best) return;
    if (i == k) {
      best = cur;
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j] || dist[i][j] >= best) continue;
      used[j] = 1;
      assign(i + 1, std::max(cur, dist[i][j]));
      used[j] = 0;
    }
  };
  assign(0, 0.0);
  return best;
}

namespace {

struct StartOutcome {
  bool converged = false;
  std::vector<Complex> points;
  double residual = 0;
  double condition = 0;
};

// Initial guesses rotate through four modes by start index: a wide disc, a
// hull-sized disc, per-coordinate perturbations of prescribed points, and
// midpoints of pairs of prescribed points. Critical points balance the
// attraction of the z's against mutual repulsion, so gaps between the z's
// are where orbits live; when the points can be matched disjointly (2k <= n)
// a random matching is drawn, which reaches every "one point per gap"
// configuration with usable probability.
std::optional<std::vector<Complex>> generate_start(const MasterProblem& prob,
                                                   const SolverConfig& cfg,
                                                   SplitMix64& rng,
                                                   std::uint64_t index) {
  const int k = prob.k;
  const std::size_t n = prob.z.size();
  Complex centroid = 0;
  for (const Complex& zj : prob.z) centroid += zj;
  centroid /= static_cast<double>(n);
  double spread = 0;
  for (const Complex& zj : prob.z)
    spread = std::max(spread, std::abs(zj - centroid));
  spread = std::max(spread, 0.5);

  // Nearest-neighbor distance per prescribed point: the local length scale.
  std::vector<double> nn(n, 2.0 * spread);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const double dist = std::abs(prob.z[a] - prob.z[b]);
      nn[a] = std::min(nn[a], dist);
      nn[b] = std::min(nn[b], dist);
    }

  const int mode = static_cast<int>(index % 4);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Complex> t(static_cast<std::size_t>(k));
    if (mode == 3 && n >= 2 && 2 * static_cast<std::size_t>(k) <= n) {
      // Disjoint matching: k pairs of distinct prescribed points.
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      for (std::size_t i = 0; i + 1 < 2 * static_cast<std::size_t>(k); ++i)
        std::swap(order[i], order[i + rng.below(n - i)]);
      for (int i = 0; i < k; ++i) {
        const Complex za = prob.z[order[2 * static_cast<std::size_t>(i)]];
        const Complex zb = prob.z[order[2 * static_cast<std::size_t>(i) + 1]];
        t[static_cast<std::size_t>(i)] =
            0.5 * (za + zb) +
            rng.in_disc({0.0, 0.0}, 0.2 * std::abs(za - zb));
      }
    } else if (mode == 3 && n >= 2) {
      // Too many points for a matching: independent pairs per coordinate,
      // jittered at the pair's own scale so tight gaps stay reachable.
      for (int i = 0; i < k; ++i) {
        const std::uint64_t a = rng.below(n);
        std::uint64_t b = rng.below(n - 1);
        if (b >= a) ++b;
        t[static_cast<std::size_t>(i)] =
            0.5 * (prob.z[a] + prob.z[b]) +
            rng.in_disc({0.0, 0.0}, 0.2 * std::abs(prob.z[a] - prob.z[b]));
      }
    } else if (mode == 2 && n >= 2) {
      // Each coordinate near a prescribed point, at its local scale; the
      // points are chosen distinct when there are enough of them, which
      // covers "one critical point per gap" geometries much faster.
      if (static_cast<std::size_t>(k) <= n) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
          std::swap(order[i], order[i + rng.below(n - i)]);
        for (int i = 0; i < k; ++i) {
          const std::size_t j = order[static_cast<std::size_t>(i)];
          t[static_cast<std::size_t>(i)] =
              prob.z[j] + rng.in_disc({0.0, 0.0}, 0.6 * nn[j]);
        }
      } else {
        for (int i = 0; i < k; ++i) {
          const std::uint64_t j = rng.below(n);
          t[static_cast<std::size_t>(i)] =
              prob.z[j] + rng.in_disc({0.0, 0.0}, 0.6 * nn[j]);
        }
      }
    } else if (mode == 1) {
      for (int i = 0; i < k; ++i)
        t[static_cast<std::size_t>(i)] = rng.in_disc(centroid, spread);
    } else {
      for (int i = 0; i < k; ++i)
        t[static_cast<std::size_t>(i)] = rng.in_disc(centroid, 2.0 * spread);
    }
    if (domain_margin(t, prob.z) > cfg.delta_sep) return t;
  }
  return std::nullopt;
}

// The gradient decays like c/|t| (c >= 2 for admissible specs) as points
// escape to infinity, so a bare norm threshold of 1e-10 is also met by
// runaway configurations at radius ~1e10 where no critical point exists.
// Genuine orbits stay near the prescribed configuration; anything beyond
// this generous radius is such an escape artifact.
bool contained(const std::vector<Complex>& t, const MasterProblem& prob) {
  Complex centroid = 0;
  for (const Complex& zj : prob.z) centroid += zj;
  centroid /= static_cast<double>(prob.z.size());
  double spread = 0;
  for (const Complex& zj : prob.z)
    spread = std::max(spread, std::abs(zj - centroid));
  spread = std::max(spread, 0.5);
  for (const Complex& ti : t)
    if (std::abs(ti - centroid) > 16.0 * spread) return false;
  return true;
}

// One complete damped-Newton run from the start with the given index. Pure
// function of (prob, cfg, index), so concurrent execution cannot change its
// result.
StartOutcome run_start(const MasterProblem& prob, const SolverConfig& cfg,
                       std::uint64_t index) {
  StartOutcome out;
  SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
  auto start = generate_start(prob, cfg, rng, index);
  if (!start) return out;
  std::vector<Complex> t = std::move(*start);

  std::vector<Complex> g = master_log_gradient(t, prob, cfg.delta_sep);
  for (int iter = 0; iter < 100; ++iter) {
    if (inf_norm(g) < cfg.eps_newton) break;
    std::vector<Complex> step = g;
    for (Complex& s : step) s = -s;
    if (!solve_linear(master_log_hessian(t, prob, cfg.delta_sep), step))
      return out;  // singular Hessian along the way: abandon this start
    const double g2 = squared_norm(g);
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      std::vector<Complex> trial = t;
      for (std::size_t i = 0; i < trial.size(); ++i)
        trial[i] += lambda * step[i];
      if (!(domain_margin(trial, prob.z) > cfg.delta_sep)) continue;
      std::vector<Complex> gt =
          master_log_gradient(trial, prob, cfg.delta_sep);
      if (squared_norm(gt) <= (1.0 - 1e-4 * lambda) * g2) {
        t = std::move(trial);
        g = std::move(gt);
        accepted = true;
        break;
      }
    }
    if (!accepted) return out;  // no productive damped step: stuck
    if (!contained(t, prob)) return out;  // escaping toward infinity
  }
  if (!(inf_norm(g) < cfg.eps_newton) || !contained(t, prob)) return out;

  // A few undamped steps sharpen the point well below the dedupe scale.
  for (int polish = 0; polish < 3; ++polish) {
    std::vector<Complex> step = g;
    for (Complex& s : step) s = -s;
    if (!solve_linear(master_log_hessian(t, prob, cfg.delta_sep), step)) break;
    std::vector<Complex> trial = t;
    for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += step[i];
    if (!(domain_margin(trial, prob.z) > cfg.delta_sep)) break;
    std::vector<Complex> gt = master_log_gradient(trial, prob, cfg.delta_sep);
    if (inf_norm(gt) > inf_norm(g)) break;
    t = std::move(trial);
    g = std::move(gt);
  }

  if (!contained(t, prob)) return out;

  // The stored record is a function of the canonical representative alone.
  out.points = canonical_points(t);
  out.residual =
      inf_norm(master_log_gradient(out.points, prob, cfg.delta_sep));
  out.condition =
      condition_inf(master_log_hessian(out.points, prob, cfg.delta_sep));
  out.converged = out.residual < cfg.eps_newton;
  return out;
}

int resolve_threads() {
  if (const char* env = std::getenv("WRONSKI_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(std::min(hc, 8u)) : 1;
}

}  // namespace

std::vector<CriticalOrbit> solve_orbits(const MasterProblem& prob,
                                        const SolverConfig& cfg) {
  long long expected = 1;
  {
    const BigInt count = comb::count_classes(prob.spec());
    expected = count > 1000 ? 1000 : count.convert_to<long long>();
    expected = std::max(expected, 1LL);
  }
  const long long max_starts =
      cfg.max_starts > 0 ? cfg.max_starts : 2000LL * expected;
  const long long window = std::max(1, cfg.saturation_window);
  const int threads = resolve_threads();
  const long long batch = 8LL * std::max(threads, 1);

  std::vector<CriticalOrbit> orbits;
  long long since_new = 0;
  bool stop = false;
  for (long long lo = 0; lo < max_starts && !stop; lo += batch) {
    const long long hi = std::min(lo + batch, max_starts);
    std::vector<StartOutcome> outcomes(static_cast<std::size_t>(hi - lo));
    auto compute = [&](long long idx) {
      try {
        outcomes[static_cast<std::size_t>(idx - lo)] =
            run_start(prob, cfg, static_cast<std::uint64_t>(idx));
      } catch (...) {
        // A start that escapes its own guards counts as failed.
        outcomes[static_cast<std::size_t>(idx - lo)] = StartOutcome{};
      }
    };
    if (threads <= 1) {
      for (long long idx = lo; idx < hi; ++idx) compute(idx);
    } else {
      std::atomic<long long> cursor{lo};
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&]() {
          for (;;) {
            const long long idx = cursor.fetch_add(1);
            if (idx >= hi) return;
            compute(idx);
          }
        });
      for (std::thread& th : pool) th.join();
    }
    // Merge strictly in start order: the orbit list and the stopping
    // decision depend only on per-start outcomes, never on scheduling.
    for (long long idx = lo; idx < hi && !stop; ++idx) {
      const StartOutcome& oc = outcomes[static_cast<std::size_t>(idx - lo)];
      bool fresh = false;
      if (oc.converged) {
        bool duplicate = false;
        for (const CriticalOrbit& orbit : orbits)
          if (matching_distance(oc.points, orbit.points) < cfg.delta_dedupe) {
            duplicate = true;
            break;
          }
        if (!duplicate) {
          orbits.push_back(CriticalOrbit{oc.points, oc.residual, oc.condition});
          fresh = true;
        }
      }
      since_new = fresh ? 0 : since_new + 1;
      if (since_new >= window) stop = true;
    }
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const CriticalOrbit& a, const CriticalOrbit& b) {
              return points_less(a.points, b.points);
            });
  return orbits;
}

std::vector<CriticalOrbit> critical_orbits_k1(const MasterProblem& prob) {
  if (prob.k != 1)
    throw std::invalid_argument("critical_orbits_k1: requires k = 1, got k = " +
                                std::to_string(prob.k));
  const Polynomial<Complex> W = wronskian_of_configuration(prob.z, prob.m);
  const Polynomial<Complex> Wp = W.derivative();
  double zscale = 0;
  for (const Complex& zj : prob.z) zscale = std::max(zscale, std::abs(zj));
  // Roots of W' at prescribed points of multiplicity >= 2 come back as
  // clusters of size ~1e-4 around them; genuine critical points sit far
  // outside this radius for admissibly separated configurations.
  const double exclusion = 1e-3 * (1.0 + zscale);

  auto grad1 = [&](Complex x) {
    Complex acc = 0;
    for (std::size_t l = 0; l < prob.z.size(); ++l)
      acc -= static_cast<double>(prob.m[l]) / (x - prob.z[l]);
    return acc;
  };
  auto grad1_deriv = [&](Complex x) {
    Complex acc = 0;
    for (std::size_t l = 0; l < prob.z.size(); ++l) {
      const Complex dz = x - prob.z[l];
      acc += static_cast<double>(prob.m[l]) / (dz * dz);
    }
    return acc;
  };

  std::vector<CriticalOrbit> orbits;
  for (Complex r : polynomial_roots(Wp)) {
    double dist = kInf;
    for (const Complex& zj : prob.z) dist = std::min(dist, std::abs(r - zj));
    if (dist < exclusion) continue;  // W vanishes there: not a critical point
    // Re-polish on the gradient itself; polishing only W' can leave the
    // gradient at ~1e-7 when W is small near the root.
    for (int step = 0; step < 8; ++step) {
      const Complex dv = grad1_deriv(r);
      if (std::abs(dv) == 0.0) break;
      const Complex delta = grad1(r) / dv;
      if (!(std::abs(delta) < 1.0)) break;
      r -= delta;
      if (std::abs(delta) < 1e-16 * (1.0 + zscale)) break;
    }
    bool duplicate = false;
    for (const CriticalOrbit& orbit : orbits)
      if (matching_distance({r}, orbit.points) < 1e-6) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    CriticalOrbit orbit;
    orbit.points = {r};
    orbit.residual = std::abs(grad1(r));
    // A 1x1 Hessian has condition 1 whenever it is nonzero.
    orbit.hessian_condition = std::abs(grad1_deriv(r)) > 0 ? 1.0 : kInf;
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const CriticalOrbit& a, const CriticalOrbit& b) {
              return points_less(a.points, b.points);
            });
  return orbits;
}

ReconstructedClass reconstruct_class(const CriticalOrbit& orbit,
                                     const MasterProblem& prob,
                                     double residue_tol, double eps_verify) {
  const int k = prob.k;
  if (static_cast<int>(orbit.points.size()) != k)
    throw std::invalid_argument("reconstruct_class: orbit has " +
                                std::to_string(orbit.points.size()) +
                                " points, expected k = " + std::to_string(k));
  const std::vector<Complex>& t = orbit.points;
  const Polynomial<Complex> W = wronskian_of_configuration(prob.z, prob.m);
  const Polynomial<Complex> dW = W.derivative();
  const Polynomial<Complex> f = monic_from_roots(t);
  const Polynomial<Complex> df = f.derivative();
  const Polynomial<Complex> ddf = df.derivative();

  // Partial fractions of W / f^2 at the simple roots t_i of f:
  //   b_i = W(t_i) / f'(t_i)^2,
  //   a_i = (W'(t_i) - W(t_i) f''(t_i)/f'(t_i)) / f'(t_i)^2.
  // The simple residues a_i are proportional to the gradient components, so
  // their vanishing is exactly criticality — and exactly what makes the
  // antiderivative below free of logarithms.
  std::vector<Complex> b(static_cast<std::size_t>(k));
  double max_residue = 0;
  for (int i = 0; i < k; ++i) {
    const Complex ti = t[static_cast<std::size_t>(i)];
    const Complex fp = df(ti);
    if (!(std::abs(fp) > 0))
      throw NotCriticalError("reconstruct_class: repeated orbit point");
    const Complex wv = W(ti);
    b[static_cast<std::size_t>(i)] = wv / (fp * fp);
    const Complex a = (dW(ti) - wv * ddf(ti) / fp) / (fp * fp);
    max_residue = std::max(max_residue, std::abs(a));
  }
  if (!(max_residue < residue_tol))
    throw NotCriticalError(
        "reconstruct_class: simple residues reach " +
        std::to_string(max_residue) +
        "; the points are not a critical orbit at this tolerance");

  // g/f has derivative W/f^2, so g = (integral of the polynomial part) * f
  // minus the integrated double poles.
  const Polynomial<Complex> P = divmod(W, f * f).first.antiderivative();
  Polynomial<Complex> g = P * f;
  for (int i = 0; i < k; ++i) {
    const Complex ti = t[static_cast<std::size_t>(i)];
    const Polynomial<Complex> linear(std::vector<Complex>{-ti, Complex(1)});
    g = g - b[static_cast<std::size_t>(i)] * divmod(f, linear).first;
  }

  ReconstructedClass rc;
  rc.f = f;
  rc.g = g;
  if (g.degree() != prob.degree())
    throw ReconstructionError(
        "reconstruct_class: g has degree " + std::to_string(g.degree()) +
        ", expected " + std::to_string(prob.degree()));
  const Polynomial<Complex> Wgf = wronskian(g, f);
  if (Wgf.is_zero() || Wgf.degree() != W.degree())
    throw ReconstructionError(
        "reconstruct_class: Wronskian of the reconstructed basis has the "
        "wrong degree");
  rc.wronskian_residual = (Wgf.monic() - W).max_abs_coeff() /
                          std::max(1.0, W.max_abs_coeff());
  double margin = kInf;
  const double gscale = std::max(1.0, g.max_abs_coeff());
  for (int i = 0; i < k; ++i)
    margin = std::min(
        margin, std::abs(g(t[static_cast<std::size_t>(i)])) / gscale);
  rc.coprimality_margin = margin;
  if (!(rc.wronskian_residual < eps_verify))
    throw ReconstructionError("reconstruct_class: Wronskian residual " +
                              std::to_string(rc.wronskian_residual) +
                              " exceeds tolerance");
  return rc;
}

namespace {

// Shared verification core; prob is null on the k = 0 boundary, where there
// is no gradient to back-substitute.
VerificationReport verify_impl(const ReconstructedClass& rc,
                               const std::vector<Complex>& z,
                               const std::vector<int>& m, int d, int k,
                               double tol, const MasterProblem* prob) {
  VerificationReport rep;
  const Polynomial<Complex> W = wronskian_of_configuration(z, m);
  const int M = W.degree();

  const Polynomial<Complex> Wgf = wronskian(rc.g, rc.f);
  rep.wronskian_residual = (!Wgf.is_zero() && Wgf.degree() == M)
                               ? (Wgf.monic() - W).max_abs_coeff() /
                                     std::max(1.0, W.max_abs_coeff())
                               : kInf;
  rep.wronskian_ok = rep.wronskian_residual < tol;

  rep.degree = rc.g.degree();
  rep.order = rc.f.degree();
  rep.type_ok =
      rep.degree == d && rep.order == k && rep.degree + rep.order == M + 1;

  PolyPlane plane{rc.g, rc.f};
  rep.coprimality_margin = coprimality_margin(plane);
  // An actually shared root drives the margin to root-finding noise
  // (~1e-13 or below); a genuinely coprime basis whose members merely have
  // nearby roots (critical point pinched between close prescribed points)
  // stays orders of magnitude above that.  10^-9 splits the two regimes.
  rep.coprime_ok = rep.coprimality_margin > 1e-9;

  rep.fuchsian_residual = kInf;
  try {
    const FuchsianEquation eq = fuchsian_from_plane(plane, z, m, tol);
    rep.fuchsian_residual = std::max(equation_residual(eq, plane.g),
                                     equation_residual(eq, plane.f));
    rep.fuchsian_ok = rep.fuchsian_residual < tol;
    try {
      rep.all_polynomial = all_solutions_polynomial_check(eq, plane, tol);
    } catch (const std::invalid_argument&) {
      rep.all_polynomial = false;  // f has a multiple root
    }
  } catch (const NotASolutionError&) {
    rep.fuchsian_ok = false;
    rep.all_polynomial = false;
  }

  if (k >= 1 && prob != nullptr) {
    try {
      const std::vector<Complex> roots = polynomial_roots(rc.f);
      rep.gradient_norm = inf_norm(master_log_gradient(roots, *prob, 1e-9));
      rep.gradient_ok = rep.gradient_norm < tol;
    } catch (const std::exception&) {
      rep.gradient_norm = kInf;
      rep.gradient_ok = false;
    }
  } else {
    rep.gradient_norm = 0;
    rep.gradient_ok = true;
  }
  return rep;
}

}  // namespace

VerificationReport verify_class(const ReconstructedClass& rc,
                                const MasterProblem& prob, double tol) {
  return verify_impl(rc, prob.z, prob.m, prob.degree(), prob.k, tol, &prob);
}

PipelineResult run_pipeline(const ProblemSpec& spec,
                            const std::vector<Complex>& z,
                            const SolverConfig& cfg) {
  PipelineResult res;
  res.count_formula = comb::count_classes(spec);
  res.count_schubert = schubert::intersection_number(spec);
  res.count_rep = comb::singular_route_count(spec);
  res.routes_agree = res.count_formula == res.count_schubert &&
                     res.count_schubert == res.count_rep;

  if (!spec.admissible()) {
    // Nothing to solve: no maps exist (count 0 on every route).
    res.count_orbits = 0;
    res.orbits_match = res.count_formula == 0;
    res.all_verified = true;
    return res;
  }

  if (spec.plane_order() == 0) {
    // Boundary M = d - 1: the unique class contains the primitive of W.
    const Polynomial<Complex> W = wronskian_of_configuration(z, spec.m);
    ReconstructedClass rc;
    rc.f = Polynomial<Complex>::constant(Complex(1));
    rc.g = W.antiderivative();
    const Polynomial<Complex> Wgf = wronskian(rc.g, rc.f);
    rc.wronskian_residual = (Wgf.monic() - W).max_abs_coeff() /
                            std::max(1.0, W.max_abs_coeff());
    rc.coprimality_margin = coprimality_margin(PolyPlane{rc.g, rc.f});
    ClassRecord record;
    record.orbit = CriticalOrbit{{}, 0.0, 1.0};
    record.cls = rc;
    record.report =
        verify_impl(rc, z, spec.m, spec.d, 0, cfg.eps_verify, nullptr);
    res.all_verified = record.report.passed();
    res.classes.push_back(std::move(record));
    res.count_orbits = 1;
    res.orbits_match = res.count_formula == 1;
    return res;
  }

  const MasterProblem prob = MasterProblem::from_spec(spec, z);
  const std::vector<CriticalOrbit> orbits = solve_orbits(prob, cfg);
  res.count_orbits = static_cast<long long>(orbits.size());
  res.orbits_match = res.count_formula == res.count_orbits;
  res.all_verified = true;
  for (const CriticalOrbit& orbit : orbits) {
    ClassRecord record;
    record.orbit = orbit;
    record.cls = reconstruct_class(orbit, prob, cfg.eps_verify, cfg.eps_verify);
    record.report = verify_class(record.cls, prob, cfg.eps_verify);
    res.all_verified = res.all_verified && record.report.passed();
    res.classes.push_back(std::move(record));
  }
  return res;
}

}  // namespace wronski
