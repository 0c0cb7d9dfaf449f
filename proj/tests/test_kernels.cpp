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
#include <limits>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "esq/kernels.hpp"

namespace k = esq::kernels;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> random_positive(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> v(n);
  for (double& x : v)
    x = 1e-4 + static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return v;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  for (std::size_t n : {5ul, 4096ul, 4097ul, 100000ul}) {
    const auto f = random_positive(n, 11 + n);
    const auto g = random_positive(n, 23 + n);
    const std::vector<double> w(n, 0.5);

    CHECK(k::sum(f) == doctest::Approx(k::serial::sum(f)).epsilon(1e-13));
    CHECK(k::power_sum(f, 1.7, w) ==
          doctest::Approx(k::serial::power_sum(f, 1.7, w)).epsilon(1e-13));
    CHECK(k::log_power_sum(f, 2.4) ==
          doctest::Approx(k::serial::log_power_sum(f, 2.4)).epsilon(1e-13));
    CHECK(k::log_cross_power_sum(f, 2.0, g, -1.0, w) ==
          doctest::Approx(k::serial::log_cross_power_sum(f, 2.0, g, -1.0, w))
              .epsilon(1e-13));
    CHECK(k::kl_sum(f, g) ==
          doctest::Approx(k::serial::kl_sum(f, g)).epsilon(1e-12));
    CHECK(k::neg_xlogx_sum(f, w) ==
          doctest::Approx(k::serial::neg_xlogx_sum(f, w)).epsilon(1e-13));
    CHECK(k::abs_power_moment_sum(g, 2.0, f) ==
          doctest::Approx(k::serial::abs_power_moment_sum(g, 2.0, f))
              .epsilon(1e-13));
  }
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
  const auto f = random_positive(300000, 3);
  const auto g = random_positive(300000, 4);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double s1 = k::power_sum(f, 1.3);
  const double l1 = k::log_cross_power_sum(f, 1.9, g, -0.9);
  omp_set_num_threads(saved);
  const double s2 = k::power_sum(f, 1.3);
  const double l2 = k::log_cross_power_sum(f, 1.9, g, -0.9);
  CHECK(s1 == s2);  // bit-identical, not just close
  CHECK(l1 == l2);
}
#endif

TEST_CASE("zero handling: 0^q contributes nothing") {
  const std::vector<double> v{0.0, 0.5, 0.0, 0.5};
  CHECK(k::power_sum(v, 0.3) == doctest::Approx(2.0 * std::pow(0.5, 0.3)));
  CHECK(k::neg_xlogx_sum(v) == doctest::Approx(std::log(2.0)));
  CHECK(k::log_power_sum(v, 2.0) == doctest::Approx(std::log(0.5)));
}

TEST_CASE("support escape yields +inf, empty log-sums -inf") {
  const std::vector<double> f{0.5, 0.5};
  const std::vector<double> g{1.0, 0.0};
  CHECK(k::log_cross_power_sum(f, 2.0, g, -1.0) == kInf);
  CHECK(k::kl_sum(f, g) == kInf);
  // b > 0: the escaping term vanishes instead
  CHECK(std::isfinite(k::log_cross_power_sum(f, 0.5, g, 0.5)));
  const std::vector<double> zero{0.0, 0.0};
  CHECK(k::log_cross_power_sum(zero, 1.0, g, 1.0) == -kInf);
  // b == 0 ignores g entirely
  CHECK(k::log_cross_power_sum(f, 2.0, g, 0.0) ==
        doctest::Approx(std::log(0.5)));
}

TEST_CASE("log-domain accumulation survives extreme exponents") {
  const std::vector<double> f(100, 1e-3);
  const std::vector<double> g(100, 2e-3);
  // terms are 1e-3^200 * 2e-3^-150: far outside double range linearly
  const double lv = k::log_cross_power_sum(f, 200.0, g, -150.0);
  const double expect =
      std::log(100.0) + 200.0 * std::log(1e-3) - 150.0 * std::log(2e-3);
  CHECK(lv == doctest::Approx(expect).epsilon(1e-12));
  CHECK(k::log_power_sum(f, 5000.0) ==
        doctest::Approx(std::log(100.0) + 5000.0 * std::log(1e-3))
            .epsilon(1e-12));
}

TEST_CASE("length mismatches are rejected") {
  const std::vector<double> f{0.5, 0.5};
  const std::vector<double> g{1.0};
  const std::vector<double> w{1.0, 1.0, 1.0};
  CHECK_THROWS_AS((void)k::kl_sum(f, g), std::invalid_argument);
  CHECK_THROWS_AS((void)k::power_sum(f, 2.0, w), std::invalid_argument);
  CHECK_THROWS_AS((void)k::log_cross_power_sum(f, 1.0, g, 1.0),
                  std::invalid_argument);
}
