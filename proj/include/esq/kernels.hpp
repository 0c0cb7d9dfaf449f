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

#include <cstddef>
#include <span>

// Reduction kernels backing the measure, maxent and oracle code paths.
//
// The parallel variants split the index range into fixed-width chunks,
// reduce each chunk independently (OpenMP when available), and combine the
// chunk partials in index order. The result therefore depends only on the
// chunk width, never on the thread count or schedule. esq::kernels::serial
// holds the plain-loop reference implementations the parallel kernels are
// tested against; the benchmark target compares their throughput.
//
// Conventions shared by every kernel:
//   * an empty weight span means unit weights,
//   * 0^q := 0 for every exponent q, so zeros never contribute,
//   * a term f[i]^a * g[i]^b with f[i] > 0, g[i] = 0 and b < 0 is +inf
//     (support escape), and an empty log-sum is -inf.
namespace esq::kernels {

inline constexpr std::size_t kChunk = 4096;

/// Sum of v[i].
double sum(std::span<const double> v);

/// Sum of w[i] * v[i]^q.
double power_sum(std::span<const double> v, double q,
                 std::span<const double> w = {});

/// log of sum of w[i] * v[i]^q, accumulated in the log domain so that large
/// |q| neither overflows nor flushes to zero.
double log_power_sum(std::span<const double> v, double q,
                     std::span<const double> w = {});

/// log of sum of w[i] * f[i]^a * g[i]^b, log-domain accumulation.
double log_cross_power_sum(std::span<const double> f, double a,
                           std::span<const double> g, double b,
                           std::span<const double> w = {});

/// Sum of w[i] * f[i] * log(f[i]/g[i]); +inf where f escapes g's support.
double kl_sum(std::span<const double> f, std::span<const double> g,
              std::span<const double> w = {});

/// -Sum of w[i] * v[i] * log(v[i]).
double neg_xlogx_sum(std::span<const double> v, std::span<const double> w = {});

/// Sum of w[i] * |x[i]|^p * v[i].
double abs_power_moment_sum(std::span<const double> x, double p,
                            std::span<const double> v,
                            std::span<const double> w = {});

namespace serial {

double sum(std::span<const double> v);
double power_sum(std::span<const double> v, double q,
                 std::span<const double> w = {});
double log_power_sum(std::span<const double> v, double q,
                     std::span<const double> w = {});
double log_cross_power_sum(std::span<const double> f, double a,
                           std::span<const double> g, double b,
                           std::span<const double> w = {});
double kl_sum(std::span<const double> f, std::span<const double> g,
              std::span<const double> w = {});
double neg_xlogx_sum(std::span<const double> v, std::span<const double> w = {});
double abs_power_moment_sum(std::span<const double> x, double p,
                            std::span<const double> v,
                            std::span<const double> w = {});

}  // namespace serial

}  // namespace esq::kernels
