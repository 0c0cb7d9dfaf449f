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

#include "esq/twolevel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace esq {

namespace {

constexpr double kDiagEps = 1e-8;

double logistic(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

double logit(double v) { return std::log(v) - std::log1p(-v); }

// The closed forms divide by (a - lambda)-like factors, which amplifies
// rounding noise near the diagonal; extended precision keeps the advertised
// 1e-14 accuracy there. log(x^r + y^r) is shifted so neither power
// underflows.
long double log_pow_sum2(long double x, long double y, long double r) {
  const long double lx = r * std::log(x), ly = r * std::log(y);
  const long double hi = std::max(lx, ly), lo = std::min(lx, ly);
  return hi + std::log1p(std::exp(lo - hi));
}

void require_unit_interval(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0 || v >= 1.0)
    throw std::domain_error(std::string(what) + " outside (0,1)");
}

}  // namespace

double p_from_beta(const ParamPair& pp, double beta) {
  validate(pp);
  if (!std::isfinite(beta) || 1.0 + beta <= 0.0)
    throw std::domain_error("outside parameter domain");
  const double d = pp.lambda - pp.a;
  if (std::abs(d) <= kDiagEps) return logistic(-beta);  // Boltzmann two-level
  return logistic(std::log1p(beta) / d);
}

double m_from_p(const ParamPair& pp, double p_exc) {
  validate(pp);
  require_unit_interval(p_exc, "probability");
  return logistic(pp.a * logit(p_exc));
}

double p_from_m(const ParamPair& pp, double m) {
  validate(pp);
  require_unit_interval(m, "energy");
  return logistic(logit(m) / pp.a);
}

double entropy_of_m(const ParamPair& pp, double m) {
  validate(pp);
  require_unit_interval(m, "energy");
  if (std::abs(pp.a - pp.lambda) <= kDiagEps)  // Fermi-Dirac limit
    return -m * std::log(m) - (1.0 - m) * std::log1p(-m);
  const long double a = pp.a, l = pp.lambda, ml = m;
  const long double r = l / a;
  return static_cast<double>(a / (a - l) *
                             log_pow_sum2(ml, 1.0L - ml, r));
}

double entropy_of_state(const ParamPair& pp, double p_exc) {
  validate(pp);
  require_unit_interval(p_exc, "probability");
  if (std::abs(pp.a - pp.lambda) <= kDiagEps) {
    // Shannon entropy of the order-a escort of (p, 1-p)
    const double e = logistic(pp.a * logit(p_exc));
    return -e * std::log(e) - (1.0 - e) * std::log1p(-e);
  }
  const long double a = pp.a, l = pp.lambda, p = p_exc;
  const long double la = log_pow_sum2(p, 1.0L - p, a);
  const long double ll = log_pow_sum2(p, 1.0L - p, l);
  return static_cast<double>((l * la - a * ll) / (l - a));
}

double inverse_temperature(const ParamPair& pp, double m) {
  validate(pp);
  require_unit_interval(m, "energy");
  if (std::abs(pp.a - pp.lambda) <= kDiagEps)
    return std::log1p(-m) - std::log(m);
  const long double a = pp.a, l = pp.lambda, ml = m;
  const long double r = l / a;
  const long double num =
      std::pow(ml, r - 1.0L) - std::pow(1.0L - ml, r - 1.0L);
  const long double den = std::pow(ml, r) + std::pow(1.0L - ml, r);
  return static_cast<double>(l / (a - l) * num / den);
}

double heat_capacity(const ParamPair& pp, double m) {
  validate(pp);
  require_unit_interval(m, "energy");
  const double h = 1e-5;
  if (m <= h || m >= 1.0 - h)
    throw std::domain_error("energy outside (0,1)");
  const double d2 =
      (inverse_temperature(pp, m + h) - inverse_temperature(pp, m - h)) /
      (2.0 * h);
  const double d1 = inverse_temperature(pp, m);
  return -d1 * d1 / d2;
}

TwoLevelState two_level_from_p(const ParamPair& pp, double p_exc) {
  return TwoLevelState{pp, p_exc, m_from_p(pp, p_exc)};
}

TwoLevelState two_level_from_m(const ParamPair& pp, double m) {
  return TwoLevelState{pp, p_from_m(pp, m), m};
}

TwoLevelState two_level_from_beta(const ParamPair& pp, double beta) {
  return two_level_from_p(pp, p_from_beta(pp, beta));
}

}  // namespace esq
