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

#include "esq/escort.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "esq/kernels.hpp"

namespace esq {

namespace {

void require_positive_order(double q, const char* name) {
  if (!std::isfinite(q) || q <= 0.0)
    throw std::invalid_argument(std::string("nonpositive order ") + name);
}

// f^a / M_a computed through exponent shifts, so extreme orders neither
// overflow nor flush the whole vector to zero. Zeros stay exact zeros.
std::vector<double> escort_values(std::span<const double> v, double a,
                                  std::span<const double> w) {
  const double log_ma = kernels::log_power_sum(v, a, w);
  if (!std::isfinite(log_ma)) throw std::domain_error("escort undefined");
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0.0) out[i] = std::exp(a * std::log(v[i]) - log_ma);
  return out;
}

}  // namespace

double info_generating(const DiscreteDist& f, double q) {
  require_positive_order(q, "q");
  const double m = kernels::power_sum(f.probs, q);
  if (!std::isfinite(m) || m <= 0.0)
    throw std::domain_error("M_q diverges");
  return m;
}

double info_generating(const GriddedDensity& f, double q) {
  require_positive_order(q, "q");
  const auto w = trapezoid_weights(f);
  const double m = kernels::power_sum(f.values, q, w);
  if (!std::isfinite(m) || m <= 0.0)
    throw std::domain_error("M_q diverges on grid");
  return m;
}

DiscreteDist escort(const DiscreteDist& f, double a) {
  require_positive_order(a, "a");
  if (a == 1.0) return f;  // escort of order 1 is the distribution itself
  DiscreteDist out{f.points, escort_values(f.probs, a, {})};
  return normalize(std::move(out));
}

GriddedDensity escort(const GriddedDensity& f, double a) {
  require_positive_order(a, "a");
  if (a == 1.0) return f;
  const auto w = trapezoid_weights(f);
  GriddedDensity out{f.lo, f.hi, escort_values(f.values, a, w)};
  return normalize(std::move(out));
}

double gen_moment(const DiscreteDist& f, double p, double a) {
  require_positive_order(p, "p");
  const DiscreteDist e = escort(f, a);
  const double m = kernels::abs_power_moment_sum(e.points, p, e.probs);
  if (!std::isfinite(m)) throw std::domain_error("moment diverges");
  return m;
}

double gen_moment(const GriddedDensity& f, double p, double a) {
  require_positive_order(p, "p");
  const GriddedDensity e = escort(f, a);
  const auto xs = e.grid();
  const auto w = trapezoid_weights(e);
  const double m = kernels::abs_power_moment_sum(xs, p, e.values, w);
  if (!std::isfinite(m)) throw std::domain_error("moment diverges");
  return m;
}

}  // namespace esq
