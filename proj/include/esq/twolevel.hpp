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

// Exact closed forms for the two-level system with eigenenergies 0 and 1.
// p_exc is the excited-state probability; the internal energy m is the mean
// energy under the escort distribution of order a, so
//   m = p^a / (p^a + (1-p)^a),
// and the (a,lambda)-entropy as a function of m is
//   H(m) = (a/(a-lambda)) log( m^(lambda/a) + (1-m)^(lambda/a) ),
// which depends on (a, lambda) only through the ratio lambda/a and reduces
// to the Fermi-Dirac (binary Shannon) entropy on the diagonal.
namespace esq {

struct TwoLevelState {
  ParamPair params;
  double p_exc = 0.5;  // in (0,1)
  double m = 0.5;      // escort-a mean energy, in (0,1)
};

/// Maxent excited-state probability at inverse temperature beta.
/// Off the diagonal: p = (1+beta)^(1/(lambda-a)) / (1 + (1+beta)^(1/(lambda-a))),
/// defined for 1 + beta > 0. On the diagonal the Boltzmann two-level form
/// p = e^-beta / (1 + e^-beta) is used (the lambda -> a limit of the family).
double p_from_beta(const ParamPair& pp, double beta);

/// Escort-a mean energy of the state (p_exc, 1-p_exc).
double m_from_p(const ParamPair& pp, double p_exc);

/// Exact inverse of m_from_p: p = m^(1/a) / (m^(1/a) + (1-m)^(1/a)).
double p_from_m(const ParamPair& pp, double m);

/// (a,lambda)-entropy as a function of the internal energy.
double entropy_of_m(const ParamPair& pp, double m);

/// (a,lambda)-entropy of the state (1-p_exc, p_exc). Agrees with the general
/// al_renyi_entropy of the corresponding two-atom distribution and with
/// entropy_of_m at m_from_p(p_exc).
double entropy_of_state(const ParamPair& pp, double p_exc);

/// Analytic dH/dm:
///   (lambda/(a-lambda)) (m^(r-1) - (1-m)^(r-1)) / (m^r + (1-m)^r),  r = lambda/a;
/// log((1-m)/m) on the diagonal.
double inverse_temperature(const ParamPair& pp, double m);

/// -H'(m)^2 / H''(m), with H'' taken as a central difference of the analytic
/// derivative at step h = 1e-5. Vanishes at m = 1/2.
double heat_capacity(const ParamPair& pp, double m);

TwoLevelState two_level_from_p(const ParamPair& pp, double p_exc);
TwoLevelState two_level_from_m(const ParamPair& pp, double m);
TwoLevelState two_level_from_beta(const ParamPair& pp, double beta);

}  // namespace esq
