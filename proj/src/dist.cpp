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

#include "esq/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "esq/kernels.hpp"

namespace esq {

std::vector<double> GriddedDensity::grid() const {
  std::vector<double> xs(values.size());
  for (int i = 0; i < n(); ++i) xs[i] = x(i);
  return xs;
}

void validate(const DiscreteDist& d) {
  if (d.probs.empty()) throw std::invalid_argument("empty distribution");
  if (d.points.size() != d.probs.size())
    throw std::invalid_argument("size mismatch between points and probs");
  for (double p : d.probs) {
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite mass");
    if (p < 0.0) throw std::invalid_argument("negative mass");
  }
  for (double x : d.points)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite point");
  std::vector<double> sorted = d.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate points");
  if (std::abs(total_mass(d) - 1.0) > 1e-12)
    throw std::invalid_argument("not normalized");
}

void validate(const GriddedDensity& d) {
  if (d.n() < 3) throw std::invalid_argument("grid too small");
  if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || !(d.lo < d.hi))
    throw std::invalid_argument("invalid grid bounds");
  for (double v : d.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite mass");
    if (v < 0.0) throw std::invalid_argument("negative mass");
  }
  if (std::abs(total_mass(d) - 1.0) > 1e-8)
    throw std::invalid_argument("not normalized");
}

void validate(const ParamPair& pp) {
  if (!std::isfinite(pp.a) || pp.a <= 0.0)
    throw std::invalid_argument("nonpositive parameter a");
  if (!std::isfinite(pp.lambda) || pp.lambda <= 0.0)
    throw std::invalid_argument("nonpositive parameter lambda");
}

double quadrature(const GriddedDensity& d, std::span<const double> integrand) {
  if (static_cast<int>(integrand.size()) != d.n())
    throw std::invalid_argument("integrand length does not match grid");
  for (double v : integrand)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite integrand");
  const double s =
      kernels::sum(integrand) - 0.5 * (integrand.front() + integrand.back());
  // (hi-lo) * mean-of-interior keeps constants exact.
  return (d.hi - d.lo) * (s / (d.n() - 1));
}

std::vector<double> trapezoid_weights(const GriddedDensity& d) {
  const double h = d.step();
  std::vector<double> w(d.values.size(), h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

double total_mass(const DiscreteDist& d) { return kernels::sum(d.probs); }

double total_mass(const GriddedDensity& d) { return quadrature(d, d.values); }

namespace {

// Divide out the mass until the vector is a fixed point of the rescaling;
// this is what makes normalize exactly idempotent.
template <class MassFn>
void rescale_to_unit_mass(std::vector<double>& v, MassFn mass) {
  double m = mass();
  if (!std::isfinite(m) || m <= 0.0)
    throw std::domain_error("degenerate density");
  for (int iter = 0; iter < 32 && m != 1.0; ++iter) {
    bool changed = false;
    for (double& x : v) {
      const double scaled = x / m;
      changed |= (scaled != x);
      x = scaled;
    }
    if (!changed) break;
    m = mass();
  }
}

}  // namespace

DiscreteDist normalize(DiscreteDist d) {
  rescale_to_unit_mass(d.probs, [&d] { return total_mass(d); });
  return d;
}

GriddedDensity normalize(GriddedDensity d) {
  rescale_to_unit_mass(d.values, [&d] { return total_mass(d); });
  return d;
}

}  // namespace esq
