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

// Classical Renyi/Tsallis information measures and their two-parameter
// (a, lambda) extensions: the order-(a/lambda) measure evaluated on escort
// distributions of order lambda.
//
// Divergences return +inf when absolute continuity fails (a meaningful
// value, not an error). Within 1e-6 of the q = 1 (or a = lambda) diagonal
// the analytic l'Hospital limit is evaluated instead of the raw 0/0 form:
// Kullback-Leibler for the divergences, Shannon for the entropies. All
// integrals are accumulated in the log domain.
namespace esq {

enum class Family { Renyi, Tsallis };
enum class Flavor { Entropy, Divergence };

struct MeasureKind {
  Family family = Family::Renyi;
  Flavor flavor = Flavor::Entropy;
};

/// Dispatch on a measure descriptor. Entropy kinds ignore g; divergence
/// kinds require it. The Renyi divergence goes through the escort route.
double al_measure(const MeasureKind& kind, const DiscreteDist& f,
                  const DiscreteDist* g, const ParamPair& pp);
double al_measure(const MeasureKind& kind, const GriddedDensity& f,
                  const GriddedDensity* g, const ParamPair& pp);

double shannon_entropy(const DiscreteDist& f);
double shannon_entropy(const GriddedDensity& f);

double kl_divergence(const DiscreteDist& f, const DiscreteDist& g);
double kl_divergence(const GriddedDensity& f, const GriddedDensity& g);

/// (1/(1-q)) log M_q[f]; Shannon at q = 1.
double renyi_entropy(const DiscreteDist& f, double q);
double renyi_entropy(const GriddedDensity& f, double q);

/// (1/(1-q)) (M_q[f] - 1); Shannon at q = 1.
double tsallis_entropy(const DiscreteDist& f, double q);
double tsallis_entropy(const GriddedDensity& f, double q);

/// (1/(q-1)) log of the integral of f^q g^(1-q); Kullback-Leibler at q = 1.
double renyi_divergence(const DiscreteDist& f, const DiscreteDist& g, double q);
double renyi_divergence(const GriddedDensity& f, const GriddedDensity& g,
                        double q);

/// (1/(q-1)) (integral of f^q g^(1-q) - 1); Kullback-Leibler at q = 1.
double tsallis_divergence(const DiscreteDist& f, const DiscreteDist& g,
                          double q);
double tsallis_divergence(const GriddedDensity& f, const GriddedDensity& g,
                          double q);

/// (a,lambda)-Renyi entropy, (1/(lambda-a)) log M_a[f]^lambda M_lambda[f]^-a.
/// Equals the order-(a/lambda) Renyi entropy of the order-lambda escort.
double al_renyi_entropy(const DiscreteDist& f, const ParamPair& pp);
double al_renyi_entropy(const GriddedDensity& f, const ParamPair& pp);

/// (a,lambda)-Tsallis entropy, same argument with (x - 1) in place of log x.
double al_tsallis_entropy(const DiscreteDist& f, const ParamPair& pp);
double al_tsallis_entropy(const GriddedDensity& f, const ParamPair& pp);

/// (a,lambda)-Renyi divergence via the escort route: the order-(a/lambda)
/// Renyi divergence between the order-lambda escorts of f and g.
double al_renyi_divergence(const DiscreteDist& f, const DiscreteDist& g,
                           const ParamPair& pp);
double al_renyi_divergence(const GriddedDensity& f, const GriddedDensity& g,
                           const ParamPair& pp);

/// The same divergence evaluated through its developed form,
///   (1/(a-lambda)) log { I^lambda / (M_lambda[f]^a M_lambda[g]^(lambda-a)) }
/// with I the integral of f^a g^(lambda-a). Kept as an independent code
/// path so the two routes cross-validate each other.
double al_renyi_divergence_developed(const DiscreteDist& f,
                                     const DiscreteDist& g,
                                     const ParamPair& pp);
double al_renyi_divergence_developed(const GriddedDensity& f,
                                     const GriddedDensity& g,
                                     const ParamPair& pp);

/// (a,lambda)-Tsallis divergence, (1/(a-lambda)) (ratio - 1) with the same
/// ratio as the developed Renyi form.
double al_tsallis_divergence(const DiscreteDist& f, const DiscreteDist& g,
                             const ParamPair& pp);
double al_tsallis_divergence(const GriddedDensity& f, const GriddedDensity& g,
                             const ParamPair& pp);

}  // namespace esq
