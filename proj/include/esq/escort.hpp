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

namespace esq {

/// Information generating function M_q[f], the integral (or sum) of f^q.
/// M_1[f] is the total mass; zeros of f contribute nothing for any q > 0.
double info_generating(const DiscreteDist& f, double q);
double info_generating(const GriddedDensity& f, double q);

/// Escort transform of order a: f^a / M_a[f], on the same support or grid.
/// escort(f, 1) returns f unchanged; escort(escort(f, a), 1/a) recovers f.
/// Requires a > 0 (an order-zero escort is only meaningful on finite
/// supports and is not provided).
DiscreteDist escort(const DiscreteDist& f, double a);
GriddedDensity escort(const GriddedDensity& f, double a);

/// Generalized a-moment of order p: the mean of |x|^p under the escort of
/// order a, m_{p,a}[f] = integral of |x|^p f_a.
double gen_moment(const DiscreteDist& f, double p, double a);
double gen_moment(const GriddedDensity& f, double p, double a);

}  // namespace esq
