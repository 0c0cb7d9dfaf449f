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

#include "esq/measures.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "esq/escort.hpp"
#include "esq/kernels.hpp"

namespace esq {

namespace {

constexpr double kDiagonalEps = 1e-6;  // l'Hospital switch width

void require_order(double q) {
  if (!std::isfinite(q) || q <= 0.0)
    throw std::invalid_argument("nonpositive order q");
}

void check_compatible(const DiscreteDist& f, const DiscreteDist& g) {
  if (f.points != g.points)
    throw std::invalid_argument("incompatible supports");
}

void check_compatible(const GriddedDensity& f, const GriddedDensity& g) {
  if (f.lo != g.lo || f.hi != g.hi || f.n() != g.n())
    throw std::invalid_argument("incompatible supports");
}

std::span<const double> vals(const DiscreteDist& f) { return f.probs; }
std::span<const double> vals(const GriddedDensity& f) { return f.values; }

std::vector<double> weights(const DiscreteDist&) { return {}; }
std::vector<double> weights(const GriddedDensity& f) {
  return trapezoid_weights(f);
}

void require_finite_m(double log_m) {
  if (std::isnan(log_m) || log_m == std::numeric_limits<double>::infinity())
    throw std::domain_error("M_q diverges");
}

template <class Dist>
double renyi_entropy_impl(const Dist& f, double q) {
  require_order(q);
  const auto w = weights(f);
  if (std::abs(q - 1.0) <= kDiagonalEps)
    return kernels::neg_xlogx_sum(vals(f), w);
  const double log_m = kernels::log_power_sum(vals(f), q, w);
  require_finite_m(log_m);
  return log_m / (1.0 - q);
}

template <class Dist>
double tsallis_entropy_impl(const Dist& f, double q) {
  require_order(q);
  const auto w = weights(f);
  if (std::abs(q - 1.0) <= kDiagonalEps)
    return kernels::neg_xlogx_sum(vals(f), w);
  const double log_m = kernels::log_power_sum(vals(f), q, w);
  require_finite_m(log_m);
  return std::expm1(log_m) / (1.0 - q);
}

template <class Dist>
double renyi_divergence_impl(const Dist& f, const Dist& g, double q) {
  require_order(q);
  check_compatible(f, g);
  const auto w = weights(f);
  if (std::abs(q - 1.0) <= kDiagonalEps)
    return kernels::kl_sum(vals(f), vals(g), w);
  const double log_i =
      kernels::log_cross_power_sum(vals(f), q, vals(g), 1.0 - q, w);
  return log_i / (q - 1.0);
}

template <class Dist>
double tsallis_divergence_impl(const Dist& f, const Dist& g, double q) {
  require_order(q);
  check_compatible(f, g);
  const auto w = weights(f);
  if (std::abs(q - 1.0) <= kDiagonalEps)
    return kernels::kl_sum(vals(f), vals(g), w);
  const double log_i =
      kernels::log_cross_power_sum(vals(f), q, vals(g), 1.0 - q, w);
  return std::expm1(log_i) / (q - 1.0);
}

template <class Dist>
double al_renyi_entropy_impl(const Dist& f, const ParamPair& pp) {
  validate(pp);
  const auto w = weights(f);
  if (std::abs(pp.a - pp.lambda) <= kDiagonalEps)
    return shannon_entropy(escort(f, pp.lambda));
  const double log_ma = kernels::log_power_sum(vals(f), pp.a, w);
  const double log_ml = kernels::log_power_sum(vals(f), pp.lambda, w);
  require_finite_m(log_ma);
  require_finite_m(log_ml);
  return (pp.lambda * log_ma - pp.a * log_ml) / (pp.lambda - pp.a);
}

template <class Dist>
double al_tsallis_entropy_impl(const Dist& f, const ParamPair& pp) {
  validate(pp);
  const auto w = weights(f);
  if (std::abs(pp.a - pp.lambda) <= kDiagonalEps)
    return shannon_entropy(escort(f, pp.lambda));
  const double log_ma = kernels::log_power_sum(vals(f), pp.a, w);
  const double log_ml = kernels::log_power_sum(vals(f), pp.lambda, w);
  require_finite_m(log_ma);
  require_finite_m(log_ml);
  return std::expm1(pp.lambda * log_ma - pp.a * log_ml) / (pp.lambda - pp.a);
}

template <class Dist>
double al_renyi_divergence_impl(const Dist& f, const Dist& g,
                                const ParamPair& pp) {
  validate(pp);
  check_compatible(f, g);
  const Dist fe = escort(f, pp.lambda);
  const Dist ge = escort(g, pp.lambda);
  if (std::abs(pp.a - pp.lambda) <= kDiagonalEps)
    return kl_divergence(fe, ge);
  return renyi_divergence(fe, ge, pp.q());
}

template <class Dist>
double al_renyi_divergence_developed_impl(const Dist& f, const Dist& g,
                                          const ParamPair& pp) {
  validate(pp);
  check_compatible(f, g);
  if (std::abs(pp.a - pp.lambda) <= kDiagonalEps)
    return kl_divergence(escort(f, pp.lambda), escort(g, pp.lambda));
  const auto w = weights(f);
  const double a = pp.a, l = pp.lambda;
  const double log_i = kernels::log_cross_power_sum(vals(f), a, vals(g), l - a, w);
  const double log_mf = kernels::log_power_sum(vals(f), l, w);
  const double log_mg = kernels::log_power_sum(vals(g), l, w);
  require_finite_m(log_mf);
  require_finite_m(log_mg);
  return (l * log_i - a * log_mf - (l - a) * log_mg) / (a - l);
}

template <class Dist>
double al_tsallis_divergence_impl(const Dist& f, const Dist& g,
                                  const ParamPair& pp) {
  validate(pp);
  check_compatible(f, g);
  if (std::abs(pp.a - pp.lambda) <= kDiagonalEps)
    return kl_divergence(escort(f, pp.lambda), escort(g, pp.lambda));
  const auto w = weights(f);
  const double a = pp.a, l = pp.lambda;
  const double log_i = kernels::log_cross_power_sum(vals(f), a, vals(g), l - a, w);
  const double log_mf = kernels::log_power_sum(vals(f), l, w);
  const double log_mg = kernels::log_power_sum(vals(g), l, w);
  require_finite_m(log_mf);
  require_finite_m(log_mg);
  return std::expm1(l * log_i - a * log_mf - (l - a) * log_mg) / (a - l);
}

}  // namespace

double shannon_entropy(const DiscreteDist& f) {
  return kernels::neg_xlogx_sum(f.probs);
}

double shannon_entropy(const GriddedDensity& f) {
  return kernels::neg_xlogx_sum(f.values, trapezoid_weights(f));
}

double kl_divergence(const DiscreteDist& f, const DiscreteDist& g) {
  check_compatible(f, g);
  return kernels::kl_sum(f.probs, g.probs);
}

double kl_divergence(const GriddedDensity& f, const GriddedDensity& g) {
  check_compatible(f, g);
  return kernels::kl_sum(f.values, g.values, trapezoid_weights(f));
}

double renyi_entropy(const DiscreteDist& f, double q) {
  return renyi_entropy_impl(f, q);
}
double renyi_entropy(const GriddedDensity& f, double q) {
  return renyi_entropy_impl(f, q);
}

double tsallis_entropy(const DiscreteDist& f, double q) {
  return tsallis_entropy_impl(f, q);
}
double tsallis_entropy(const GriddedDensity& f, double q) {
  return tsallis_entropy_impl(f, q);
}

double renyi_divergence(const DiscreteDist& f, const DiscreteDist& g,
                        double q) {
  return renyi_divergence_impl(f, g, q);
}
double renyi_divergence(const GriddedDensity& f, const GriddedDensity& g,
                        double q) {
  return renyi_divergence_impl(f, g, q);
}

double tsallis_divergence(const DiscreteDist& f, const DiscreteDist& g,
                          double q) {
  return tsallis_divergence_impl(f, g, q);
}
double tsallis_divergence(const GriddedDensity& f, const GriddedDensity& g,
                          double q) {
  return tsallis_divergence_impl(f, g, q);
}

double al_renyi_entropy(const DiscreteDist& f, const ParamPair& pp) {
  return al_renyi_entropy_impl(f, pp);
}
double al_renyi_entropy(const GriddedDensity& f, const ParamPair& pp) {
  return al_renyi_entropy_impl(f, pp);
}

double al_tsallis_entropy(const DiscreteDist& f, const ParamPair& pp) {
  return al_tsallis_entropy_impl(f, pp);
}
double al_tsallis_entropy(const GriddedDensity& f, const ParamPair& pp) {
  return al_tsallis_entropy_impl(f, pp);
}

double al_renyi_divergence(const DiscreteDist& f, const DiscreteDist& g,
                           const ParamPair& pp) {
  return al_renyi_divergence_impl(f, g, pp);
}
double al_renyi_divergence(const GriddedDensity& f, const GriddedDensity& g,
                           const ParamPair& pp) {
  return al_renyi_divergence_impl(f, g, pp);
}

double al_renyi_divergence_developed(const DiscreteDist& f,
                                     const DiscreteDist& g,
                                     const ParamPair& pp) {
  return al_renyi_divergence_developed_impl(f, g, pp);
}
double al_renyi_divergence_developed(const GriddedDensity& f,
                                     const GriddedDensity& g,
                                     const ParamPair& pp) {
  return al_renyi_divergence_developed_impl(f, g, pp);
}

double al_tsallis_divergence(const DiscreteDist& f, const DiscreteDist& g,
                             const ParamPair& pp) {
  return al_tsallis_divergence_impl(f, g, pp);
}
double al_tsallis_divergence(const GriddedDensity& f, const GriddedDensity& g,
                             const ParamPair& pp) {
  return al_tsallis_divergence_impl(f, g, pp);
}

namespace {

template <class Dist>
double al_measure_impl(const MeasureKind& kind, const Dist& f, const Dist* g,
                       const ParamPair& pp) {
  if (kind.flavor == Flavor::Entropy)
    return kind.family == Family::Renyi ? al_renyi_entropy(f, pp)
                                        : al_tsallis_entropy(f, pp);
  if (!g) throw std::invalid_argument("divergence needs a second argument");
  return kind.family == Family::Renyi ? al_renyi_divergence(f, *g, pp)
                                      : al_tsallis_divergence(f, *g, pp);
}

}  // namespace

double al_measure(const MeasureKind& kind, const DiscreteDist& f,
                  const DiscreteDist* g, const ParamPair& pp) {
  return al_measure_impl(kind, f, g, pp);
}
double al_measure(const MeasureKind& kind, const GriddedDensity& f,
                  const GriddedDensity* g, const ParamPair& pp) {
  return al_measure_impl(kind, f, g, pp);
}

}  // namespace esq
