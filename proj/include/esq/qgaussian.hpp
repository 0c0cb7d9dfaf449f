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

#include "esq/dist.hpp"

// The generalized Gaussian family maximizing the (a,lambda)-entropy under a
// generalized a-moment constraint:
//
//   G_beta(x) = (1/Z) (1 - (lambda-a) beta |x|^p)_+^(1/(lambda-a))   lambda != a
//   G_beta(x) = (1/Z) exp(-beta |x|^p)                               lambda  = a
//
// For lambda > a the density lives on the compact interval |x| <= s with
// s = ((lambda-a) beta)^(-1/p); for lambda <= a it covers the whole line and
// decays like a power law. The shape depends on (a, lambda) only through
// lambda - a. Validity of the parameter set is checked in one place:
//   Z finite:        lambda > a - p,
//   a-moment finite: lambda > a / (p + 1)  (automatic when lambda >= a).
// Beta/Gamma factors are evaluated through log-Gamma differences; the
// exponential branch is taken within 1e-8 of the diagonal.
namespace esq {

struct Support {
  bool compact = false;
  double halfwidth = 0.0;  // meaningful when compact
};

struct GenGaussian {
  ParamPair params;
  double p = 2.0;
  double beta = 1.0;
  double z = 1.0;
  Support support;
};

/// Closed-form partition function Z(beta).
double partition_function(double a, double lambda, double p, double beta);

/// Closed-form generalized a-moment of order p of G_beta. Proportional to
/// 1/beta with a beta-independent constant.
double closed_form_moment(double a, double lambda, double p, double beta);

/// Build a validated family member for a given beta.
GenGaussian make_gen_gaussian(double a, double lambda, double p, double beta);

/// Normalized density value at x; exactly 0 outside a compact support.
double density(const GenGaussian& g, double x);

/// Invert the moment map: return the family member whose a-moment is m.
/// The closed form is m = C/beta, so the inversion is exact.
GenGaussian solve_beta(double a, double lambda, double p, double m);

/// Sample the density onto a normalized grid. Compact supports are gridded
/// exactly; full-line supports are truncated at an L solved from closed-form
/// tail bounds so that the neglected mass of both the density and its
/// |x|^p-weighted integrand stays below tail_mass_bound.
GriddedDensity to_gridded(const GenGaussian& g, int n, double tail_mass_bound);

/// The two classical one-parameter maxent solutions. A standard-mean
/// constraint maps to (a, lambda) = (1, q) (exponent 1/(q-1)); an
/// escort-mean constraint maps to (a, lambda) = (q, 1) (exponent 1/(1-q)).
enum class ConstraintKind { StandardConstraint, EscortConstraint };
GenGaussian classical_solution(ConstraintKind kind, double q, double p,
                               double m);

}  // namespace esq
