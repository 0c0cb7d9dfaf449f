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

#include "esq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace esq::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double weight_at(std::span<const double> w, std::size_t i) {
  return w.empty() ? 1.0 : w[i];
}

template <class Term>
double reduce_sum_serial(std::size_t n, Term term) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += term(i);
  return acc;
}

template <class Term>
double reduce_max_serial(std::size_t n, Term term) {
  double best = -kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = term(i);
    if (t > best) best = t;
  }
  return best;
}

// Fixed-width chunks, combined in index order: the value is independent of
// the OpenMP thread count.
template <class Term>
double reduce_sum_chunked(std::size_t n, Term term) {
  if (n <= kChunk) return reduce_sum_serial(n, term);
  const std::int64_t nchunks =
      static_cast<std::int64_t>((n + kChunk - 1) / kChunk);
  std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::size_t b = static_cast<std::size_t>(c) * kChunk;
    const std::size_t e = std::min(n, b + kChunk);
    double acc = 0.0;
    for (std::size_t i = b; i < e; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  double acc = 0.0;
  for (double v : partial) acc += v;
  return acc;
}

template <class Term>
double reduce_max_chunked(std::size_t n, Term term) {
  if (n <= kChunk) return reduce_max_serial(n, term);
  const std::int64_t nchunks =
      static_cast<std::int64_t>((n + kChunk - 1) / kChunk);
  std::vector<double> partial(static_cast<std::size_t>(nchunks), -kInf);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::size_t b = static_cast<std::size_t>(c) * kChunk;
    const std::size_t e = std::min(n, b + kChunk);
    double best = -kInf;
    for (std::size_t i = b; i < e; ++i) {
      const double t = term(i);
      if (t > best) best = t;
    }
    partial[static_cast<std::size_t>(c)] = best;
  }
  double best = -kInf;
  for (double v : partial) best = std::max(best, v);
  return best;
}

struct PowTerm {
  std::span<const double> v, w;
  double q;
  double operator()(std::size_t i) const {
    const double x = v[i];
    return x == 0.0 ? 0.0 : weight_at(w, i) * std::pow(x, q);
  }
};

struct KlTerm {
  std::span<const double> f, g, w;
  double operator()(std::size_t i) const {
    const double fi = f[i];
    if (fi == 0.0) return 0.0;
    const double gi = g[i];
    if (gi == 0.0) return kInf;
    return weight_at(w, i) * fi * std::log(fi / gi);
  }
};

struct NegXLogXTerm {
  std::span<const double> v, w;
  double operator()(std::size_t i) const {
    const double x = v[i];
    return x == 0.0 ? 0.0 : -weight_at(w, i) * x * std::log(x);
  }
};

struct AbsMomentTerm {
  std::span<const double> x, v, w;
  double p;
  double operator()(std::size_t i) const {
    const double vi = v[i];
    if (vi == 0.0) return 0.0;
    const double xi = std::abs(x[i]);
    return xi == 0.0 ? 0.0 : weight_at(w, i) * std::pow(xi, p) * vi;
  }
};

void check_sizes(std::size_t n, std::span<const double> w) {
  if (!w.empty() && w.size() != n)
    throw std::invalid_argument("weight length mismatch");
}

// log of each term of sum w f^a g^b; weights stay linear (applied after the
// exp shift), so the scratch holds a log f^a g^b per index.
struct CrossLogTerm {
  std::span<const double> f, g;
  double a, b;
  double operator()(std::size_t i) const {
    const double fi = f[i];
    if (fi == 0.0) return -kInf;
    const double gi = g[i];
    if (gi == 0.0) {
      if (b < 0.0) return kInf;  // support escape
      if (b > 0.0) return -kInf;
      return a * std::log(fi);
    }
    return a * std::log(fi) + b * std::log(gi);
  }
};

template <bool Parallel>
double log_sum_exp_terms(std::size_t n, const CrossLogTerm& term,
                         std::span<const double> w) {
  std::vector<double> lt(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && n > kChunk)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    lt[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));

  auto at = [&lt](std::size_t i) { return lt[i]; };
  const double shift =
      Parallel ? reduce_max_chunked(n, at) : reduce_max_serial(n, at);
  if (shift == kInf) return kInf;
  if (shift == -kInf) return -kInf;

  auto expterm = [&lt, &w, shift](std::size_t i) {
    const double t = lt[i];
    return t == -kInf ? 0.0 : weight_at(w, i) * std::exp(t - shift);
  };
  const double s = Parallel ? reduce_sum_chunked(n, expterm)
                            : reduce_sum_serial(n, expterm);
  return shift + std::log(s);
}

}  // namespace

double sum(std::span<const double> v) {
  return reduce_sum_chunked(v.size(), [v](std::size_t i) { return v[i]; });
}

double power_sum(std::span<const double> v, double q,
                 std::span<const double> w) {
  check_sizes(v.size(), w);
  return reduce_sum_chunked(v.size(), PowTerm{v, w, q});
}

double log_power_sum(std::span<const double> v, double q,
                     std::span<const double> w) {
  check_sizes(v.size(), w);
  return log_sum_exp_terms<true>(v.size(), CrossLogTerm{v, v, q, 0.0}, w);
}

double log_cross_power_sum(std::span<const double> f, double a,
                           std::span<const double> g, double b,
                           std::span<const double> w) {
  if (f.size() != g.size())
    throw std::invalid_argument("operand length mismatch");
  check_sizes(f.size(), w);
  return log_sum_exp_terms<true>(f.size(), CrossLogTerm{f, g, a, b}, w);
}

double kl_sum(std::span<const double> f, std::span<const double> g,
              std::span<const double> w) {
  if (f.size() != g.size())
    throw std::invalid_argument("operand length mismatch");
  check_sizes(f.size(), w);
  return reduce_sum_chunked(f.size(), KlTerm{f, g, w});
}

double neg_xlogx_sum(std::span<const double> v, std::span<const double> w) {
  check_sizes(v.size(), w);
  return reduce_sum_chunked(v.size(), NegXLogXTerm{v, w});
}

double abs_power_moment_sum(std::span<const double> x, double p,
                            std::span<const double> v,
                            std::span<const double> w) {
  if (x.size() != v.size())
    throw std::invalid_argument("operand length mismatch");
  check_sizes(v.size(), w);
  return reduce_sum_chunked(v.size(), AbsMomentTerm{x, v, w, p});
}

namespace serial {

double sum(std::span<const double> v) {
  return reduce_sum_serial(v.size(), [v](std::size_t i) { return v[i]; });
}

double power_sum(std::span<const double> v, double q,
                 std::span<const double> w) {
  check_sizes(v.size(), w);
  return reduce_sum_serial(v.size(), PowTerm{v, w, q});
}

double log_power_sum(std::span<const double> v, double q,
                     std::span<const double> w) {
  check_sizes(v.size(), w);
  return log_sum_exp_terms<false>(v.size(), CrossLogTerm{v, v, q, 0.0}, w);
}

double log_cross_power_sum(std::span<const double> f, double a,
                           std::span<const double> g, double b,
                           std::span<const double> w) {
  if (f.size() != g.size())
    throw std::invalid_argument("operand length mismatch");
  check_sizes(f.size(), w);
  return log_sum_exp_terms<false>(f.size(), CrossLogTerm{f, g, a, b}, w);
}

double kl_sum(std::span<const double> f, std::span<const double> g,
              std::span<const double> w) {
  if (f.size() != g.size())
    throw std::invalid_argument("operand length mismatch");
  check_sizes(f.size(), w);
  return reduce_sum_serial(f.size(), KlTerm{f, g, w});
}

double neg_xlogx_sum(std::span<const double> v, std::span<const double> w) {
  check_sizes(v.size(), w);
  return reduce_sum_serial(v.size(), NegXLogXTerm{v, w});
}

double abs_power_moment_sum(std::span<const double> x, double p,
                            std::span<const double> v,
                            std::span<const double> w) {
  if (x.size() != v.size())
    throw std::invalid_argument("operand length mismatch");
  check_sizes(v.size(), w);
  return reduce_sum_serial(v.size(), AbsMomentTerm{x, v, w, p});
}

}  // namespace serial

}  // namespace esq::kernels
