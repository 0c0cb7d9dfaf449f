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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "esq/dist.hpp"
#include "esq/qgaussian.hpp"

// Brute-force verification of the library's central claims, kept numerically
// independent of the measure/maxent modules: everything here is evaluated
// with its own long-double summation and search code, sharing only the
// distribution types. All runs are deterministic given a seed, and the
// parallel grid scans combine fixed per-row partials in row order, so
// reports are reproducible byte for byte and independent of partitioning.
namespace esq::oracle {

struct SweepConfig {
  long trials = 1000;
  int support_min = 2;
  int support_max = 6;
  double a_min = 0.2, a_max = 3.0;
  double lambda_min = 0.2, lambda_max = 3.0;
  std::uint64_t seed = 42;
  int inject_every = 10;  // every k-th trial re-uses f as g
  bool parallel = true;
};

struct SweepReport {
  std::string generator = "mt19937_64";
  SweepConfig config;
  long evaluated = 0;
  long injected = 0;
  long violations = 0;  // divergence below -1e-12, either family
  double min_renyi = 0.0;
  double min_tsallis = 0.0;
  long argmin_trial = -1;
  double argmin_a = 0.0;
  double argmin_lambda = 0.0;
  int argmin_size = 0;
  double max_injected_abs = 0.0;   // must stay <= 1e-12
  double min_separated = 0.0;      // min divergence when max|f-g| >= 0.1
  bool pass = false;
};

/// Sample random simplex pairs and parameters; report the minimum observed
/// (a,lambda) divergences and any value below -1e-12.
SweepReport nonnegativity_sweep(const SweepConfig& cfg = {});

/// Discrete analog of the maxent family on a fixed support:
/// probs[i] proportional to (1 - (lambda-a) beta x_i^p)_+^(1/(lambda-a)).
struct MaxentForm {
  std::vector<double> points;
  double a = 1.0, lambda = 1.0, p = 2.0, beta = 0.0;
  std::vector<double> probs;
  double z = 1.0;  // discrete normalization sum
};

MaxentForm discrete_maxent_form(std::vector<double> points, double a,
                                double lambda, double p, double beta);

/// Solve beta >= 0 by monotone bisection so the form's a-moment equals m.
MaxentForm discrete_maxent_form_for_moment(std::vector<double> points,
                                           double a, double lambda, double p,
                                           double m);

struct DominanceConfig {
  double grid_step = 1e-3;
  double tol_factor = 10.0;  // pass margin = tol_factor * grid_step
  bool parallel = true;
};

struct DominanceReport {
  double a = 1.0, lambda = 1.0, p = 2.0, m = 0.5;
  std::array<double, 3> support{};
  double beta = 0.0;
  std::array<double, 3> maxent_probs{};
  double maxent_entropy = 0.0;
  long feasible = 0;
  double max_margin = 0.0;  // max H(f) - H(maxent form) over the band
  std::array<double, 3> argmax_probs{};
  double tol = 0.0;
  bool pass = false;
};

/// Exhaustively enumerate the simplex on a 3-point support at the given
/// resolution and verify no distribution in the moment band beats the
/// maxent form's entropy by more than tol_factor * grid_step.
DominanceReport maxent_dominance(double a, double lambda, double p, double m,
                                 const std::array<double, 3>& support,
                                 const DominanceConfig& cfg = {});

struct ProofChainReport {
  double lhs = 0.0;   // integral of f^a G^(lambda-a)
  double rhs = 0.0;   // A^(lambda-a) (1 - (lambda-a) beta m_{p,a}[f]) M_a[f]
  double slack = 0.0; // lhs - rhs; nonnegative up to 1e-10
  double equality_gap = 0.0;  // |lhs-rhs| / max(1, |lhs|)
  bool equality_expected = false;  // lambda <= a, or f inside G's support
  bool inequality_ok = false;
  bool equality_ok = false;
};

/// Check the escort-moment inequality chain behind the maxent optimality
/// proof: lhs >= rhs always, with equality exactly when no mass of f falls
/// outside the support of G (in particular at f = G).
ProofChainReport proof_chain_check(const DiscreteDist& f, const MaxentForm& g);
ProofChainReport proof_chain_check(const GriddedDensity& f,
                                   const GenGaussian& g);

struct ProofChainSweepReport {
  double a = 1.0, lambda = 1.0, p = 2.0, beta = 1.0;
  long trials = 0;
  long inequality_failures = 0;
  double min_slack = 0.0;            // over random f
  double equality_gap_at_g = 0.0;    // f = G case, must be <= 1e-10
  bool pass = false;
};

/// Run proof_chain_check at f = G and on seeded random distributions over
/// the same points.
ProofChainSweepReport proof_chain_sweep(double a, double lambda, double p,
                                        double beta,
                                        std::vector<double> points,
                                        long trials, std::uint64_t seed);

}  // namespace esq::oracle
