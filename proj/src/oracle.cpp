//------------------------------------------------------------------------------
//
//   Copyright 2026 The esq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "esq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace esq::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The oracle switches to the l'Hospital limit a little earlier than the
// library (1e-5 instead of 1e-6); combined with long-double accumulation
// this keeps the 1/(a-lambda) amplification of rounding noise below 1e-12.
constexpr double kOracleDiagEps = 1e-5;

// ---------------------------------------------------------------------------
// Deterministic per-trial random numbers. Each trial seeds its own
// mt19937_64 from splitmix64(seed, trial), so results do not depend on how
// trials are partitioned across threads.

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct TrialRng {
  std::mt19937_64 eng;
  TrialRng(std::uint64_t seed, std::uint64_t idx)
      : eng(splitmix64(splitmix64(seed) + idx)) {}
  double uniform() {  // in [0, 1)
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // Dirichlet(1,...,1): normalized exponentials
  std::vector<double> simplex(int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double s = 0.0;
    for (double& x : v) {
      x = -std::log1p(-uniform());
      s += x;
    }
    for (double& x : v) x /= s;
    return v;
  }
};

// ---------------------------------------------------------------------------
// Naive long-double evaluation of the (a,lambda) measures. Shares nothing
// with esq::kernels / esq::measures: plain power sums, no log-domain tricks.

long double naive_power_sum(const std::vector<double>& v, long double q) {
  long double s = 0.0L;
  for (double x : v)
    if (x > 0.0) s += std::pow(static_cast<long double>(x), q);
  return s;
}

std::vector<long double> naive_escort(const std::vector<double>& v,
                                      long double order) {
  std::vector<long double> e(v.size(), 0.0L);
  long double s = 0.0L;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) e[i] = std::pow(static_cast<long double>(v[i]), order);
    s += e[i];
  }
  for (long double& x : e) x /= s;
  return e;
}

long double naive_escort_kl(const std::vector<double>& f,
                            const std::vector<double>& g, long double order) {
  const auto fe = naive_escort(f, order);
  const auto ge = naive_escort(g, order);
  long double s = 0.0L;
  for (std::size_t i = 0; i < fe.size(); ++i) {
    if (fe[i] == 0.0L) continue;
    if (ge[i] == 0.0L) return kInf;
    s += fe[i] * std::log(fe[i] / ge[i]);
  }
  return s;
}

long double naive_cross_sum(const std::vector<double>& f,
                            const std::vector<double>& g, long double ea,
                            long double eb) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0.0) continue;
    if (g[i] == 0.0) {
      if (eb < 0.0L) return kInf;
      if (eb > 0.0L) continue;
      s += std::pow(static_cast<long double>(f[i]), ea);
      continue;
    }
    s += std::pow(static_cast<long double>(f[i]), ea) *
         std::pow(static_cast<long double>(g[i]), eb);
  }
  return s;
}

double naive_al_renyi(const std::vector<double>& f,
                      const std::vector<double>& g, double a, double l) {
  if (std::abs(a - l) <= kOracleDiagEps)
    return static_cast<double>(naive_escort_kl(f, g, l));
  const long double i = naive_cross_sum(f, g, a, l - a);
  if (i == kInf) return kInf;
  const long double mf = naive_power_sum(f, l);
  const long double mg = naive_power_sum(g, l);
  return static_cast<double>(
      (l * std::log(i) - a * std::log(mf) - (l - a) * std::log(mg)) / (a - l));
}

double naive_al_tsallis(const std::vector<double>& f,
                        const std::vector<double>& g, double a, double l) {
  if (std::abs(a - l) <= kOracleDiagEps)
    return static_cast<double>(naive_escort_kl(f, g, l));
  const long double i = naive_cross_sum(f, g, a, l - a);
  if (i == kInf) return kInf;
  const long double mf = naive_power_sum(f, l);
  const long double mg = naive_power_sum(g, l);
  const long double ratio = std::pow(i, static_cast<long double>(l)) *
                            std::pow(mf, static_cast<long double>(-a)) *
                            std::pow(mg, static_cast<long double>(a - l));
  return static_cast<double>((ratio - 1.0L) / (a - l));
}

double naive_al_entropy(const std::vector<double>& f, double a, double l) {
  if (std::abs(a - l) <= kOracleDiagEps) {
    const auto e = naive_escort(f, l);
    long double s = 0.0L;
    for (long double x : e)
      if (x > 0.0L) s -= x * std::log(x);
    return static_cast<double>(s);
  }
  const long double ma = naive_power_sum(f, a);
  const long double ml = naive_power_sum(f, l);
  return static_cast<double>((l * std::log(ma) - a * std::log(ml)) / (l - a));
}

}  // namespace

// ---------------------------------------------------------------------------

SweepReport nonnegativity_sweep(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.support_min < 2 || cfg.support_max < cfg.support_min)
    throw std::invalid_argument("bad support size range");

  struct Trial {
    double dr = 0.0, dt = 0.0, a = 0.0, l = 0.0, maxdiff = 0.0;
    int size = 0;
    bool injected = false;
  };
  std::vector<Trial> out(static_cast<std::size_t>(cfg.trials));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (cfg.parallel)
#endif
  for (long t = 0; t < cfg.trials; ++t) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
    Trial r;
    r.size = rng.uniform_int(cfg.support_min, cfg.support_max);
    const std::vector<double> f = rng.simplex(r.size);
    r.injected = cfg.inject_every > 0 && t % cfg.inject_every == 0;
    const std::vector<double> g = r.injected ? f : rng.simplex(r.size);
    r.a = rng.uniform(cfg.a_min, cfg.a_max);
    r.l = rng.uniform(cfg.lambda_min, cfg.lambda_max);
    for (std::size_t i = 0; i < f.size(); ++i)
      r.maxdiff = std::max(r.maxdiff, std::abs(f[i] - g[i]));
    r.dr = naive_al_renyi(f, g, r.a, r.l);
    r.dt = naive_al_tsallis(f, g, r.a, r.l);
    out[static_cast<std::size_t>(t)] = r;
  }

  SweepReport rep;
  rep.config = cfg;
  rep.min_renyi = kInf;
  rep.min_tsallis = kInf;
  rep.min_separated = kInf;
  for (long t = 0; t < cfg.trials; ++t) {
    const Trial& r = out[static_cast<std::size_t>(t)];
    ++rep.evaluated;
    if (r.dr < -1e-12 || r.dt < -1e-12) ++rep.violations;
    if (r.injected) {
      ++rep.injected;
      rep.max_injected_abs = std::max(
          rep.max_injected_abs, std::max(std::abs(r.dr), std::abs(r.dt)));
      continue;
    }
    if (r.dr < rep.min_renyi) {
      rep.min_renyi = r.dr;
      rep.argmin_trial = t;
      rep.argmin_a = r.a;
      rep.argmin_lambda = r.l;
      rep.argmin_size = r.size;
    }
    rep.min_tsallis = std::min(rep.min_tsallis, r.dt);
    if (r.maxdiff >= 0.1)
      rep.min_separated = std::min(rep.min_separated, std::min(r.dr, r.dt));
  }
  rep.pass = rep.violations == 0 && rep.max_injected_abs <= 1e-12;
  return rep;
}

// ---------------------------------------------------------------------------

MaxentForm discrete_maxent_form(std::vector<double> points, double a,
                                double lambda, double p, double beta) {
  if (points.empty()) throw std::invalid_argument("empty support");
  if (beta < 0.0) throw std::invalid_argument("negative beta");
  MaxentForm g;
  g.points = std::move(points);
  g.a = a;
  g.lambda = lambda;
  g.p = p;
  g.beta = beta;
  g.probs.assign(g.points.size(), 0.0);
  const long double d = static_cast<long double>(lambda) - a;
  long double z = 0.0L;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const long double xp =
        std::pow(std::abs(static_cast<long double>(g.points[i])),
                 static_cast<long double>(p));
    long double w;
    if (std::abs(d) <= 1e-8L) {
      w = std::exp(-static_cast<long double>(beta) * xp);
    } else {
      const long double t = 1.0L - d * beta * xp;
      w = t > 0.0L ? std::exp(std::log(t) / d) : 0.0L;
    }
    g.probs[i] = static_cast<double>(w);
    z += w;
  }
  if (!(z > 0.0L)) throw std::domain_error("degenerate maxent form");
  g.z = static_cast<double>(z);
  for (double& v : g.probs) v = static_cast<double>(v / z);
  return g;
}

namespace {

double maxent_form_moment(const MaxentForm& g) {
  long double num = 0.0L, den = 0.0L;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (g.probs[i] <= 0.0) continue;
    const long double wa = std::pow(static_cast<long double>(g.probs[i]),
                                    static_cast<long double>(g.a));
    num += std::pow(std::abs(static_cast<long double>(g.points[i])),
                    static_cast<long double>(g.p)) *
           wa;
    den += wa;
  }
  return static_cast<double>(num / den);
}

}  // namespace

MaxentForm discrete_maxent_form_for_moment(std::vector<double> points,
                                           double a, double lambda, double p,
                                           double m) {
  if (!(m > 0.0)) throw std::invalid_argument("nonpositive moment target");
  auto moment_at = [&](double beta) {
    return maxent_form_moment(discrete_maxent_form(points, a, lambda, p, beta));
  };
  const double m0 = moment_at(0.0);
  if (m > m0 * (1.0 + 1e-12))
    throw std::domain_error(
        "root-find failure: moment above the beta >= 0 range");
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (moment_at(hi) > m && guard++ < 80) hi *= 2.0;
  if (guard >= 80) throw std::domain_error("root-find failure: no bracket");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (moment_at(mid) > m ? lo : hi) = mid;
  }
  return discrete_maxent_form(std::move(points), a, lambda, p,
                              0.5 * (lo + hi));
}

// ---------------------------------------------------------------------------

DominanceReport maxent_dominance(double a, double lambda, double p, double m,
                                 const std::array<double, 3>& support,
                                 const DominanceConfig& cfg) {
  if (!(cfg.grid_step >= 1e-4 && cfg.grid_step <= 1e-2))
    throw std::invalid_argument("grid step outside [1e-4, 1e-2]");
  if (support[0] == support[1] || support[0] == support[2] ||
      support[1] == support[2])
    throw std::invalid_argument("duplicate points");

  DominanceReport rep;
  rep.a = a;
  rep.lambda = lambda;
  rep.p = p;
  rep.m = m;
  rep.support = support;
  rep.tol = cfg.tol_factor * cfg.grid_step;

  const MaxentForm g = discrete_maxent_form_for_moment(
      {support.begin(), support.end()}, a, lambda, p, m);
  rep.beta = g.beta;
  std::copy(g.probs.begin(), g.probs.end(), rep.maxent_probs.begin());
  rep.maxent_entropy = naive_al_entropy(g.probs, a, lambda);

  const long n = std::lround(1.0 / cfg.grid_step);
  const double band = cfg.grid_step;
  long double xp[3];
  for (int k = 0; k < 3; ++k)
    xp[k] = std::pow(std::abs(static_cast<long double>(support[k])),
                     static_cast<long double>(p));

  struct Row {
    double best = -kInf;
    long best_j = -1;
    long feasible = 0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n) + 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (cfg.parallel)
#endif
  for (long i = 0; i <= n; ++i) {
    Row row;
    const double f0 = static_cast<double>(i) / static_cast<double>(n);
    for (long j = 0; j <= n - i; ++j) {
      const double f1 = static_cast<double>(j) / static_cast<double>(n);
      const double f2 = static_cast<double>(n - i - j) / static_cast<double>(n);
      const std::vector<double> f{f0, f1, f2};
      long double num = 0.0L, den = 0.0L;
      for (int k = 0; k < 3; ++k) {
        if (f[static_cast<std::size_t>(k)] <= 0.0) continue;
        const long double fa =
            std::pow(static_cast<long double>(f[static_cast<std::size_t>(k)]),
                     static_cast<long double>(a));
        num += xp[k] * fa;
        den += fa;
      }
      const double mf = static_cast<double>(num / den);
      if (std::abs(mf - m) > band) continue;
      ++row.feasible;
      const double h = naive_al_entropy(f, a, lambda);
      if (h - rep.maxent_entropy > row.best) {
        row.best = h - rep.maxent_entropy;
        row.best_j = j;
      }
    }
    rows[static_cast<std::size_t>(i)] = row;
  }

  rep.max_margin = -kInf;
  long best_i = -1, best_j = -1;
  for (long i = 0; i <= n; ++i) {
    const Row& row = rows[static_cast<std::size_t>(i)];
    rep.feasible += row.feasible;
    if (row.best_j >= 0 && row.best > rep.max_margin) {
      rep.max_margin = row.best;
      best_i = i;
      best_j = row.best_j;
    }
  }
  if (rep.feasible == 0)
    throw std::domain_error("constraint infeasible at this resolution");
  rep.argmax_probs = {static_cast<double>(best_i) / static_cast<double>(n),
                      static_cast<double>(best_j) / static_cast<double>(n),
                      static_cast<double>(n - best_i - best_j) /
                          static_cast<double>(n)};
  rep.pass = rep.max_margin <= rep.tol;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// lhs - rhs equals sum w ((t)_+ - t) f^a  >= 0 up to rounding, with t the
// affine factor 1 - (lambda-a) beta |x|^p; both sides share every power sum.
ProofChainReport proof_chain_impl(const std::vector<double>& fvals,
                                  const std::vector<double>& xs,
                                  const std::vector<double>& ws, double a,
                                  double lambda, double p, double beta,
                                  double inv_z) {
  // treat the diagonal as exactly lambda = a, where the relation is an
  // identity term by term
  long double d = static_cast<long double>(lambda) - a;
  if (std::abs(d) <= 1e-8L) d = 0.0L;
  long double lhs = 0.0L, ma = 0.0L, mom = 0.0L;
  bool escaped = false;
  const long double ad = std::pow(static_cast<long double>(inv_z), d);
  for (std::size_t i = 0; i < fvals.size(); ++i) {
    if (fvals[i] <= 0.0) continue;
    const long double w = ws.empty() ? 1.0L : static_cast<long double>(ws[i]);
    const long double fa = std::pow(static_cast<long double>(fvals[i]),
                                    static_cast<long double>(a));
    const long double xp = std::pow(std::abs(static_cast<long double>(xs[i])),
                                    static_cast<long double>(p));
    ma += w * fa;
    mom += w * xp * fa;
    long double gd;  // G(x)^(lambda-a)
    if (d == 0.0L) {
      gd = 1.0L;
    } else {
      const long double t = 1.0L - d * beta * xp;
      if (t <= 0.0L) {
        escaped = true;
        gd = 0.0L;  // d > 0 here: G vanishes, so does its power
      } else {
        gd = ad * t;
      }
    }
    lhs += w * fa * gd;
  }
  const long double rhs = ad * (ma - d * beta * mom);

  ProofChainReport rep;
  rep.lhs = static_cast<double>(lhs);
  rep.rhs = static_cast<double>(rhs);
  rep.slack = static_cast<double>(lhs - rhs);
  rep.equality_gap = static_cast<double>(
      std::abs(lhs - rhs) / std::max(1.0L, std::abs(lhs)));
  rep.equality_expected = !escaped;
  rep.inequality_ok = rep.slack >= -1e-10;
  rep.equality_ok = !rep.equality_expected || rep.equality_gap <= 1e-10;
  return rep;
}

}  // namespace

ProofChainReport proof_chain_check(const DiscreteDist& f, const MaxentForm& g) {
  if (f.points != g.points)
    throw std::invalid_argument("incompatible supports");
  return proof_chain_impl(f.probs, f.points, {}, g.a, g.lambda, g.p, g.beta,
                          1.0 / g.z);
}

ProofChainReport proof_chain_check(const GriddedDensity& f,
                                   const GenGaussian& g) {
  return proof_chain_impl(f.values, f.grid(), trapezoid_weights(f),
                          g.params.a, g.params.lambda, g.p, g.beta, 1.0 / g.z);
}

ProofChainSweepReport proof_chain_sweep(double a, double lambda, double p,
                                        double beta,
                                        std::vector<double> points,
                                        long trials, std::uint64_t seed) {
  ProofChainSweepReport rep;
  rep.a = a;
  rep.lambda = lambda;
  rep.p = p;
  rep.beta = beta;
  rep.trials = trials;
  rep.min_slack = kInf;
  const MaxentForm g = discrete_maxent_form(points, a, lambda, p, beta);
  const DiscreteDist as_dist{g.points, g.probs};
  rep.equality_gap_at_g = proof_chain_check(as_dist, g).equality_gap;
  for (long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    const DiscreteDist f{g.points,
                         rng.simplex(static_cast<int>(g.points.size()))};
    const ProofChainReport r = proof_chain_check(f, g);
    rep.min_slack = std::min(rep.min_slack, r.slack);
    if (!r.inequality_ok) ++rep.inequality_failures;
  }
  rep.pass = rep.inequality_failures == 0 && rep.equality_gap_at_g <= 1e-10;
  return rep;
}

}  // namespace esq::oracle
