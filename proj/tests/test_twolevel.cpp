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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "esq/dist.hpp"
#include "esq/measures.hpp"
#include "esq/twolevel.hpp"

using namespace esq;

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t s) : eng(s) {}
  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  ParamPair params_off_diagonal() {
    for (;;) {
      const ParamPair pp{uniform(0.2, 3.0), uniform(0.2, 3.0)};
      if (std::abs(pp.a - pp.lambda) >= 1e-3) return pp;
    }
  }
};

double binary_shannon(double m) {
  return -m * std::log(m) - (1.0 - m) * std::log1p(-m);
}

}  // namespace

TEST_CASE("state probability from beta") {
  for (const ParamPair pp : {ParamPair{1.0, 2.0}, ParamPair{2.5, 0.4}})
    CHECK(p_from_beta(pp, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p_from_beta({1.0, 2.0}, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));  // lambda - a = 1
  CHECK(p_from_beta({2.0, 1.0}, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));  // lambda - a = -1
  // diagonal: Boltzmann form
  CHECK(p_from_beta({1.3, 1.3}, 1.0) ==
        doctest::Approx(std::exp(-1.0) / (1.0 + std::exp(-1.0))).epsilon(1e-14));
  CHECK_THROWS_WITH_AS((void)p_from_beta({1.0, 2.0}, -1.0),
                       "outside parameter domain", std::domain_error);
  CHECK_THROWS_AS((void)p_from_beta({1.0, 2.0}, -2.0), std::domain_error);
}

TEST_CASE("internal energy map and its inverse") {
  for (double a : {0.3, 1.0, 2.0})
    CHECK(m_from_p({a, 1.0}, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m_from_p({2.0, 1.0}, 0.75) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(m_from_p({1.0, 2.0}, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(p_from_m({2.0, 1.0}, 0.9) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(p_from_m({1.0, 0.7}, 0.42) == doctest::Approx(0.42).epsilon(1e-15));

  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const ParamPair pp{rng.uniform(0.2, 3.0), 1.0};
    const double p = rng.uniform(0.01, 0.99);
    // extreme (a, p) pairs push m against 1 and cost a couple of digits
    CHECK(std::abs(p_from_m(pp, m_from_p(pp, p)) - p) <= 1e-12);
  }
  for (double p = 0.1; p <= 0.9 + 1e-12; p += 0.1)
    CHECK(std::abs(p_from_m({2.0, 1.0}, m_from_p({2.0, 1.0}, p)) - p) <=
          1e-14);
  CHECK_THROWS_AS((void)m_from_p({1.0, 1.0}, 1.5), std::domain_error);
}

TEST_CASE("entropy of the internal energy") {
  Rng rng(9);
  for (int t = 0; t < 50; ++t)
    CHECK(entropy_of_m(rng.params_off_diagonal(), 0.5) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

  CHECK(entropy_of_m({2.0, 1.0}, 0.9) ==
        doctest::Approx(2.0 * std::log(std::sqrt(0.9) + std::sqrt(0.1)))
            .epsilon(1e-14));
  CHECK(entropy_of_m({1.4, 1.4}, 0.25) ==
        doctest::Approx(binary_shannon(0.25)).epsilon(1e-14));
  CHECK_THROWS_AS((void)entropy_of_m({1.0, 2.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)entropy_of_m({1.0, 2.0}, 1.0), std::domain_error);
}

TEST_CASE("entropy properties") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const ParamPair pp = rng.params_off_diagonal();
    const double m = rng.uniform(0.02, 0.98);
    const double c = rng.uniform(0.1, 10.0);
    // only the ratio lambda/a matters
    CHECK(std::abs(entropy_of_m(pp, m) -
                   entropy_of_m({c * pp.a, c * pp.lambda}, m)) <= 1e-12);
    // symmetry about m = 1/2
    CHECK(std::abs(entropy_of_m(pp, m) - entropy_of_m(pp, 1.0 - m)) <= 1e-12);
    CHECK(entropy_of_m(pp, m) >= 0.0);
  }
}

TEST_CASE("concavity in m for lambda >= a") {
  for (const ParamPair pp :
       {ParamPair{1.0, 1.0}, ParamPair{0.8, 1.6}, ParamPair{2.0, 2.9}}) {
    const double h = 1e-3;
    for (double m = 2.0 * h; m <= 1.0 - 2.0 * h + 1e-12; m += h) {
      const double dd = entropy_of_m(pp, m - h) - 2.0 * entropy_of_m(pp, m) +
                        entropy_of_m(pp, m + h);
      CHECK(dd <= 1e-9);
    }
  }
}

TEST_CASE("entropy of the state agrees with the general measures") {
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    const ParamPair pp = rng.params_off_diagonal();
    const double p = rng.uniform(0.02, 0.98);
    const double h = entropy_of_state(pp, p);
    // three independent routes
    CHECK(std::abs(h - entropy_of_m(pp, m_from_p(pp, p))) <= 1e-12);
    const DiscreteDist d{{0.0, 1.0}, {1.0 - p, p}};
    CHECK(std::abs(h - al_renyi_entropy(d, pp)) <= 1e-12);
  }
  CHECK(entropy_of_state({1.7, 0.6}, 0.5) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // degenerate state limit
  CHECK(entropy_of_state({1.5, 0.7}, 1e-12) <= 1e-6);
  CHECK(entropy_of_state({1.5, 0.7}, 1e-12) <
        entropy_of_state({1.5, 0.7}, 1e-6));
}

TEST_CASE("inverse temperature") {
  Rng rng(45);
  for (int t = 0; t < 50; ++t)
    CHECK(std::abs(inverse_temperature(rng.params_off_diagonal(), 0.5)) <=
          1e-12);
  for (double m : {0.1, 0.25, 0.6, 0.9})
    CHECK(inverse_temperature({1.2, 1.2}, m) ==
          doctest::Approx(std::log((1.0 - m) / m)).epsilon(1e-12));

  // central-difference oracle at h = 1e-6
  for (const ParamPair pp :
       {ParamPair{2.0, 1.0}, ParamPair{0.7, 1.9}, ParamPair{1.1, 1.1}}) {
    for (double m = 0.1; m <= 0.9 + 1e-12; m += 0.1) {
      const double h = 1e-6;
      const double fd =
          (entropy_of_m(pp, m + h) - entropy_of_m(pp, m - h)) / (2.0 * h);
      CHECK(std::abs(inverse_temperature(pp, m) - fd) <= 1e-6);
    }
  }
}

TEST_CASE("heat capacity") {
  CHECK(std::abs(heat_capacity({2.0, 1.0}, 0.5)) <= 1e-12);
  // Boltzmann two-level: C = beta^2 p (1-p) with beta = log((1-m)/m)
  const double m = 0.3;
  const double beta = std::log((1.0 - m) / m);
  CHECK(heat_capacity({1.0, 1.0}, m) ==
        doctest::Approx(beta * beta * m * (1.0 - m)).epsilon(1e-6));
}

TEST_CASE("state constructors keep the m-p invariant") {
  const ParamPair pp{1.8, 0.9};
  const TwoLevelState s1 = two_level_from_p(pp, 0.7);
  CHECK(std::abs(s1.m - m_from_p(pp, 0.7)) <= 1e-15);
  const TwoLevelState s2 = two_level_from_m(pp, s1.m);
  CHECK(std::abs(s2.p_exc - 0.7) <= 1e-13);
  const TwoLevelState s3 = two_level_from_beta(pp, 0.8);
  CHECK(std::abs(m_from_p(pp, s3.p_exc) - s3.m) <= 1e-15);
}
