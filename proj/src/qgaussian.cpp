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

#include "esq/qgaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace esq {

namespace {

constexpr double kDiagEps = 1e-8;  // exponential-branch switch width

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0)
    throw std::invalid_argument(std::string("nonpositive ") + what);
}

double log_beta_fn(double x, double y) {
  if (x <= 0.0 || y <= 0.0)
    throw std::domain_error("invalid parameter region");
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

// Z finite requires lambda > a - p; the a-moment additionally requires
// lambda > a/(p+1). Both are vacuous for lambda >= a.
void check_region(double a, double lambda, double p) {
  require_positive(a, "parameter a");
  require_positive(lambda, "parameter lambda");
  require_positive(p, "moment order p");
  if (lambda <= a - p) throw std::domain_error("partition function diverges");
  if (lambda < a && lambda * (p + 1.0) <= a)
    throw std::domain_error("a-moment diverges");
}

}  // namespace

double partition_function(double a, double lambda, double p, double beta) {
  require_positive(a, "parameter a");
  require_positive(lambda, "parameter lambda");
  require_positive(p, "moment order p");
  require_positive(beta, "beta");
  const double d = lambda - a;
  const double log_pref = std::log(2.0 / p) - std::log(beta) / p;
  if (std::abs(d) <= kDiagEps)
    return std::exp(log_pref + std::lgamma(1.0 / p));
  if (d > 0.0)
    return std::exp(log_pref - std::log(d) / p +
                    log_beta_fn(1.0 / p, 1.0 / d + 1.0));
  // a > lambda: needs lambda > a - p, i.e. a positive second Beta argument
  const double y = 1.0 / (a - lambda) - 1.0 / p;
  if (y <= 0.0) throw std::domain_error("partition function diverges");
  return std::exp(log_pref - std::log(-d) / p + log_beta_fn(1.0 / p, y));
}

double closed_form_moment(double a, double lambda, double p, double beta) {
  require_positive(beta, "beta");
  check_region(a, lambda, p);
  const double d = lambda - a;
  if (std::abs(d) <= kDiagEps) return 1.0 / (beta * p * a);
  // beta p (lambda-a)(a/(lambda-a) + 1/p + 1) = beta p (a + (lambda-a)(1/p+1))
  const double denom = beta * p * (a + d * (1.0 / p + 1.0));
  if (denom <= 0.0) throw std::domain_error("a-moment diverges");
  return 1.0 / denom;
}

GenGaussian make_gen_gaussian(double a, double lambda, double p, double beta) {
  check_region(a, lambda, p);
  require_positive(beta, "beta");
  GenGaussian g;
  g.params = ParamPair{a, lambda};
  g.p = p;
  g.beta = beta;
  g.z = partition_function(a, lambda, p, beta);
  const double d = lambda - a;
  if (d > kDiagEps) {
    g.support.compact = true;
    g.support.halfwidth = std::exp(-(std::log(d) + std::log(beta)) / p);
  }
  // closed_form_moment throws if the a-moment does not exist
  (void)closed_form_moment(a, lambda, p, beta);
  return g;
}

double density(const GenGaussian& g, double x) {
  const double d = g.params.lambda - g.params.a;
  const double bxp = g.beta * std::pow(std::abs(x), g.p);
  if (std::abs(d) <= kDiagEps) return std::exp(-bxp) / g.z;
  const double t = 1.0 - d * bxp;
  if (t <= 0.0) return 0.0;
  return std::pow(t, 1.0 / d) / g.z;
}

GenGaussian solve_beta(double a, double lambda, double p, double m) {
  if (!std::isfinite(m) || m <= 0.0)
    throw std::invalid_argument("nonpositive moment target");
  // m = C / beta with C independent of beta
  const double c = closed_form_moment(a, lambda, p, 1.0);
  return make_gen_gaussian(a, lambda, p, c / m);
}

namespace {

// The gridded form has to capture two integrals: the density itself (for
// normalization) and the a-moment integrand |x|^p G^a (what gen_moment
// integrates against the order-a escort). Truncation radii come from
// closed-form bounds on those two tails.

// Power-tail branch (a > lambda): with nu = 1/(a-lambda) and c =
// (a-lambda) beta, the density is bounded by A c^-nu |x|^(-p nu), so both
// tail integrals invert in closed form. The needed exponents are positive
// exactly on the validity region.
double power_tail_radius(const GenGaussian& g, double bound) {
  const double a = g.params.a, lambda = g.params.lambda, p = g.p;
  const double nu = 1.0 / (a - lambda);
  const double log_c = std::log((a - lambda) * g.beta);
  const double log_bound = std::log(bound);
  // density tail: 2 A c^-nu L^(1-p nu) / (p nu - 1) <= bound
  const double e0 = p * nu - 1.0;
  // moment tail: 2 A^a c^(-a nu) L^(p+1-p a nu) / (p a nu - p - 1) <= bound
  const double ep = p * a * nu - p - 1.0;
  if (e0 <= 0.0) throw std::domain_error("partition function diverges");
  if (ep <= 0.0) throw std::domain_error("a-moment diverges");
  const double l0 = std::exp((std::log(2.0) - std::log(g.z) - nu * log_c -
                              std::log(e0) - log_bound) /
                             e0);
  const double lp = std::exp((std::log(2.0) - a * std::log(g.z) -
                              a * nu * log_c - std::log(ep) - log_bound) /
                             ep);
  const double core = std::exp(-log_c / p);
  return std::max({l0, lp, 2.0 * core});
}

// Smallest u with c u^(s-1) e^-u <= bound (and u >= 2 max(s,1), where the
// incomplete-Gamma bound Gamma(s,u) <= 2 u^(s-1) e^-u is in force). The
// left side is decreasing there, so plain bisection on the log form works.
double solve_gamma_tail(double log_c, double s, double log_bound) {
  auto excess = [&](double u) {
    return log_c + (s - 1.0) * std::log(u) - u - log_bound;
  };
  double lo = std::max(2.0 * s, 2.0);
  if (excess(lo) <= 0.0) return lo;
  double hi = 2.0 * lo;
  while (excess(hi) > 0.0 && hi < 1e9) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

// Exponential branch (lambda = a). With u = beta L^p the density tail is
// (2 A / (p beta^(1/p))) Gamma(1/p, u); the moment tail uses a beta and
// Gamma(1 + 1/p). Both go through the same Gamma-tail bound.
double exponential_tail_radius(const GenGaussian& g, double bound) {
  const double a = g.params.a, p = g.p, beta = g.beta;
  const double log_a_beta = std::log(a * beta);
  const double log_bound = std::log(bound);
  const double log_c0 = std::log(4.0) - std::log(g.z) - std::log(p) -
                        std::log(beta) / p;
  const double u0 = solve_gamma_tail(log_c0, 1.0 / p, log_bound);
  const double l0 = std::exp((std::log(u0) - std::log(beta)) / p);
  const double log_cp = std::log(4.0) - a * std::log(g.z) - std::log(p) -
                        (1.0 + 1.0 / p) * log_a_beta;
  const double up = solve_gamma_tail(log_cp, 1.0 + 1.0 / p, log_bound);
  const double lp = std::exp((std::log(up) - log_a_beta) / p);
  return std::max(l0, lp);
}

}  // namespace

GriddedDensity to_gridded(const GenGaussian& g, int n,
                          double tail_mass_bound) {
  if (n < 3) throw std::invalid_argument("grid too small");
  double radius;
  if (g.support.compact) {
    radius = g.support.halfwidth;
  } else {
    if (!(tail_mass_bound > 0.0) || tail_mass_bound > 1e-6)
      throw std::invalid_argument("tail mass bound outside (0, 1e-6]");
    const double d = g.params.lambda - g.params.a;
    radius = std::abs(d) <= kDiagEps
                 ? exponential_tail_radius(g, tail_mass_bound)
                 : power_tail_radius(g, tail_mass_bound);
  }
  GriddedDensity out;
  out.lo = -radius;
  out.hi = radius;
  out.values.resize(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i) out.values[i] = density(g, out.x(i));
  if (g.support.compact) {
    // the density vanishes at +-s; rounding in s^p must not leave a speck
    out.values.front() = 0.0;
    out.values.back() = 0.0;
  }
  return normalize(std::move(out));
}

GenGaussian classical_solution(ConstraintKind kind, double q, double p,
                               double m) {
  require_positive(q, "index q");
  if (kind == ConstraintKind::StandardConstraint)
    return solve_beta(1.0, q, p, m);
  return solve_beta(q, 1.0, p, m);
}

}  // namespace esq
