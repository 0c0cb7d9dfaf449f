#pragma once
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

#include <span>
#include <vector>

namespace esq {

/// Finite probability vector over distinct real observable points
/// (counting measure).
struct DiscreteDist {
  std::vector<double> points;
  std::vector<double> probs;
};

/// Density sampled on a uniform grid over [lo, hi] (Lebesgue measure,
/// trapezoid quadrature). Zero values are stored as exact zeros; they mark
/// genuine support holes and drive the support logic of the divergences.
struct GriddedDensity {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> values;

  int n() const { return static_cast<int>(values.size()); }
  double step() const { return (hi - lo) / (n() - 1); }
  double x(int i) const {
    return lo + (hi - lo) * static_cast<double>(i) / (n() - 1);
  }
  std::vector<double> grid() const;
};

/// Entropic parameter pair (a, lambda), both strictly positive.
/// The derived classical index is q = a / lambda.
struct ParamPair {
  double a = 1.0;
  double lambda = 1.0;
  double q() const { return a / lambda; }
};

// Throw std::invalid_argument naming the violated invariant.
void validate(const DiscreteDist& d);
void validate(const GriddedDensity& d);
void validate(const ParamPair& pp);

/// Composite trapezoid rule applied to an integrand sampled on d's grid.
/// Exact for constant and linear integrands.
double quadrature(const GriddedDensity& d, std::span<const double> integrand);

/// Node weights of the trapezoid rule: h inside, h/2 at the two ends.
std::vector<double> trapezoid_weights(const GriddedDensity& d);

double total_mass(const DiscreteDist& d);
double total_mass(const GriddedDensity& d);

// Rescale to unit mass. Iterates the division to a floating-point fixed
// point, so normalize(normalize(d)) == normalize(d) bit for bit.
DiscreteDist normalize(DiscreteDist d);
GriddedDensity normalize(GriddedDensity d);

}  // namespace esq
