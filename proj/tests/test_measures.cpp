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

#include "esq/dist.hpp"
#include "esq/escort.hpp"
#include "esq/measures.hpp"

using namespace esq;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t s) : eng(s) {}
  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  DiscreteDist simplex(int n) {
    DiscreteDist d;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      d.points.push_back(i);
      d.probs.push_back(-std::log1p(-uniform()));
      s += d.probs.back();
    }
    for (double& p : d.probs) p /= s;
    return d;
  }
  // draws kept out of the near-diagonal band; the diagonal limit has its own
  // continuity tests
  ParamPair params() {
    for (;;) {
      const ParamPair pp{uniform(0.2, 3.0), uniform(0.2, 3.0)};
      if (std::abs(pp.a - pp.lambda) >= 1e-3 &&
          std::abs(pp.q() - 1.0) >= 1e-4 &&
          std::abs(pp.lambda / pp.a - 1.0) >= 1e-4)
        return pp;
    }
  }
};

const DiscreteDist kF{{0, 1}, {0.5, 0.5}};
const DiscreteDist kG{{0, 1}, {0.25, 0.75}};

GriddedDensity gaussian_grid(double sigma, double halfwidth, int n) {
  GriddedDensity d;
  d.lo = -halfwidth;
  d.hi = halfwidth;
  d.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    d.values[static_cast<std::size_t>(i)] =
        std::exp(-0.5 * d.x(i) * d.x(i) / (sigma * sigma));
  return normalize(std::move(d));
}

}  // namespace

TEST_CASE("renyi divergence examples") {
  CHECK(std::abs(renyi_divergence(kF, kF, 2.0)) <= 1e-14);
  CHECK(renyi_divergence(kF, kG, 2.0) ==
        doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
  const double kl = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
  CHECK(renyi_divergence(kF, kG, 1.0) == doctest::Approx(kl).epsilon(1e-14));
  CHECK(kl_divergence(kF, kG) == doctest::Approx(kl).epsilon(1e-14));
}

TEST_CASE("tsallis divergence examples") {
  CHECK(std::abs(tsallis_divergence(kG, kG, 2.0)) <= 1e-14);
  CHECK(tsallis_divergence(kF, kG, 2.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("renyi and tsallis divergences are algebraically linked") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.eng() % 5);
    const DiscreteDist f = rng.simplex(n), g = rng.simplex(n);
    double q = rng.uniform(0.2, 3.0);
    if (std::abs(q - 1.0) < 1e-3) q = 1.5;
    const double dr = renyi_divergence(f, g, q);
    const double dt = tsallis_divergence(f, g, q);
    CHECK(std::abs(dt - std::expm1((q - 1.0) * dr) / (q - 1.0)) <= 1e-12);
  }
}

TEST_CASE("entropy examples") {
  const DiscreteDist uniform4{{0, 1, 2, 3}, {0.25, 0.25, 0.25, 0.25}};
  for (double q : {0.3, 1.0, 2.0, 2.7})
    CHECK(renyi_entropy(uniform4, q) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-13));
  const DiscreteDist point{{0.0}, {1.0}};
  for (double q : {0.5, 1.0, 3.0}) {
    CHECK(std::abs(renyi_entropy(point, q)) <= 1e-14);
    CHECK(std::abs(tsallis_entropy(point, q)) <= 1e-14);
  }
  const DiscreteDist f{{0, 1}, {0.75, 0.25}};
  CHECK(renyi_entropy(f, 2.0) ==
        doctest::Approx(-std::log(0.625)).epsilon(1e-14));
  CHECK(tsallis_entropy(f, 2.0) == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("al divergences: reductions and examples") {
  Rng rng(23);
  CHECK(std::abs(al_renyi_divergence(kF, kF, {2.0, 1.0})) <= 1e-12);
  CHECK(std::abs(al_tsallis_divergence(kG, kG, {0.7, 2.0})) <= 1e-12);
  CHECK(al_renyi_divergence(kF, kG, {2.0, 1.0}) ==
        doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-12));
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.eng() % 5);
    const DiscreteDist f = rng.simplex(n), g = rng.simplex(n);
    double a = rng.uniform(0.2, 3.0);
    if (std::abs(a - 1.0) < 1e-3) a = 2.0;
    // lambda = 1 reduces to the classical order-a measures
    CHECK(std::abs(al_renyi_divergence(f, g, {a, 1.0}) -
                   renyi_divergence(f, g, a)) <= 1e-12);
    CHECK(std::abs(al_tsallis_divergence(f, g, {a, 1.0}) -
                   tsallis_divergence(f, g, a)) <= 1e-12);
  }
}

TEST_CASE("escort route and developed form agree") {
  Rng rng(37);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.eng() % 5);
    const DiscreteDist f = rng.simplex(n), g = rng.simplex(n);
    const ParamPair pp = rng.params();
    const double via_escort = al_renyi_divergence(f, g, pp);
    const double developed = al_renyi_divergence_developed(f, g, pp);
    CHECK(std::abs(via_escort - developed) <= 1e-10);
    // and the Tsallis variant matches through the exp identity
    const double dt = al_tsallis_divergence(f, g, pp);
    const double d = pp.a - pp.lambda;
    CHECK(std::abs(dt - std::expm1(d * via_escort) / d) <= 1e-10);
  }
}

TEST_CASE("al divergences at the diagonal reduce to escort KL") {
  const ParamPair pp{1.0, 1.0};
  const double kl = kl_divergence(kF, kG);
  CHECK(al_renyi_divergence(kF, kG, pp) == doctest::Approx(kl).epsilon(1e-13));
  CHECK(al_renyi_divergence_developed(kF, kG, pp) ==
        doctest::Approx(kl).epsilon(1e-13));
  CHECK(al_tsallis_divergence(kF, kG, pp) ==
        doctest::Approx(kl).epsilon(1e-13));
  const ParamPair pq{1.7, 1.7};
  const double klq = kl_divergence(escort(kF, 1.7), escort(kG, 1.7));
  CHECK(al_renyi_divergence(kF, kG, pq) == doctest::Approx(klq).epsilon(1e-13));
}

TEST_CASE("al entropy examples and reductions") {
  const DiscreteDist uniform5{{0, 1, 2, 3, 4}, {0.2, 0.2, 0.2, 0.2, 0.2}};
  for (const ParamPair pp : {ParamPair{0.4, 2.0}, ParamPair{2.5, 0.7}})
    CHECK(al_renyi_entropy(uniform5, pp) ==
          doctest::Approx(std::log(5.0)).epsilon(1e-13));

  const DiscreteDist f{{0, 1}, {0.75, 0.25}};
  CHECK(al_renyi_entropy(f, {2.0, 1.0}) ==
        doctest::Approx(-std::log(0.625)).epsilon(1e-13));

  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const DiscreteDist d = rng.simplex(2 + static_cast<int>(rng.eng() % 5));
    double l = rng.uniform(0.2, 3.0);
    if (std::abs(l - 1.0) < 1e-3) l = 0.5;
    // a = 1 gives the classical order-lambda Renyi entropy; the Tsallis
    // analog picks up a 1/M_lambda factor instead
    CHECK(std::abs(al_renyi_entropy(d, {1.0, l}) - renyi_entropy(d, l)) <=
          1e-12);
    CHECK(std::abs(al_tsallis_entropy(d, {1.0, l}) -
                   tsallis_entropy(d, l) / info_generating(d, l)) <= 1e-12);
    // (1,1) is Shannon; (a,a) is Shannon of the order-a escort
    CHECK(std::abs(al_renyi_entropy(d, {1.0, 1.0}) - shannon_entropy(d)) <=
          1e-12);
    const double a = rng.uniform(0.2, 3.0);
    CHECK(std::abs(al_renyi_entropy(d, {a, a}) -
                   shannon_entropy(escort(d, a))) <= 1e-12);
  }
}

TEST_CASE("duality identities") {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const DiscreteDist f = rng.simplex(2 + static_cast<int>(rng.eng() % 5));
    const ParamPair pp = rng.params();
    const double h = al_renyi_entropy(f, pp);
    CHECK(std::abs(h - renyi_entropy(escort(f, pp.lambda), pp.q())) <= 1e-10);
    CHECK(std::abs(h - renyi_entropy(escort(f, pp.a), pp.lambda / pp.a)) <=
          1e-10);
    // q -> 1/q: the entropy of the escort at the inverse order is unchanged
    double q = rng.uniform(0.2, 3.0);
    if (std::abs(q - 1.0) < 1e-3) q = 2.2;
    CHECK(std::abs(renyi_entropy(escort(f, q), 1.0 / q) -
                   renyi_entropy(f, q)) <= 1e-10);
  }
}

TEST_CASE("continuity across the diagonal") {
  const DiscreteDist f{{0, 1, 2}, {0.2, 0.3, 0.5}};
  const DiscreteDist g{{0, 1, 2}, {0.25, 0.35, 0.4}};
  for (double a : {0.7, 1.0, 1.3}) {
    const double h0 = al_renyi_entropy(f, {a, a});
    const double d0 = al_renyi_divergence(f, g, {a, a});
    for (double eps : {1e-4, -1e-4}) {
      CHECK(std::abs(al_renyi_entropy(f, {a, a + eps}) - h0) <= 1e-3);
      CHECK(std::abs(al_renyi_divergence(f, g, {a, a + eps}) - d0) <= 1e-3);
      CHECK(std::abs(al_tsallis_entropy(f, {a, a + eps}) - h0) <= 1e-3);
    }
    CHECK(std::abs(al_renyi_entropy(f, {a, a}) -
                   shannon_entropy(escort(f, a))) <= 1e-12);
  }
}

TEST_CASE("absolute-continuity failures return +inf") {
  const DiscreteDist f{{0, 1}, {0.5, 0.5}};
  const DiscreteDist g{{0, 1}, {1.0, 0.0}};
  CHECK(renyi_divergence(f, g, 2.0) == kInf);
  CHECK(kl_divergence(f, g) == kInf);
  CHECK(al_renyi_divergence(f, g, {2.0, 1.5}) == kInf);
  CHECK(al_renyi_divergence_developed(f, g, {2.0, 1.5}) == kInf);

  // disjoint supports: Renyi infinite for q < 1, Tsallis finite 1/(1-q)
  const DiscreteDist l{{0, 1}, {1.0, 0.0}};
  const DiscreteDist r{{0, 1}, {0.0, 1.0}};
  CHECK(renyi_divergence(l, r, 0.5) == kInf);
  CHECK(tsallis_divergence(l, r, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("mismatched supports are rejected") {
  const DiscreteDist f{{0, 1}, {0.5, 0.5}};
  const DiscreteDist g{{0, 2}, {0.5, 0.5}};
  CHECK_THROWS_WITH_AS((void)renyi_divergence(f, g, 2.0),
                       "incompatible supports", std::invalid_argument);
  GriddedDensity a = gaussian_grid(1.0, 8.0, 101);
  GriddedDensity b = gaussian_grid(1.0, 9.0, 101);
  CHECK_THROWS_WITH_AS((void)kl_divergence(a, b), "incompatible supports",
                       std::invalid_argument);
}

TEST_CASE("gridded densities against closed forms") {
  // KL between centered Gaussians: log(s2/s1) + s1^2/(2 s2^2) - 1/2
  const double s1 = 1.0, s2 = 1.5;
  const GriddedDensity f = gaussian_grid(s1, 12.0, 20001);
  const GriddedDensity g = gaussian_grid(s2, 12.0, 20001);
  const double expect = std::log(s2 / s1) + s1 * s1 / (2.0 * s2 * s2) - 0.5;
  CHECK(kl_divergence(f, g) == doctest::Approx(expect).epsilon(1e-5));

  // differential Renyi entropy of a uniform density on [0,2] is log 2
  GriddedDensity u;
  u.lo = 0.0;
  u.hi = 2.0;
  u.values.assign(501, 0.5);
  for (double q : {0.5, 2.0})
    CHECK(renyi_entropy(u, q) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(al_renyi_entropy(u, {2.0, 0.8}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("measure-kind dispatch") {
  const ParamPair pp{1.8, 0.9};
  CHECK(al_measure({Family::Renyi, Flavor::Entropy}, kF, nullptr, pp) ==
        al_renyi_entropy(kF, pp));
  CHECK(al_measure({Family::Tsallis, Flavor::Entropy}, kF, nullptr, pp) ==
        al_tsallis_entropy(kF, pp));
  CHECK(al_measure({Family::Renyi, Flavor::Divergence}, kF, &kG, pp) ==
        al_renyi_divergence(kF, kG, pp));
  CHECK(al_measure({Family::Tsallis, Flavor::Divergence}, kF, &kG, pp) ==
        al_tsallis_divergence(kF, kG, pp));
  CHECK_THROWS_AS(
      (void)al_measure({Family::Renyi, Flavor::Divergence}, kF, nullptr, pp),
      std::invalid_argument);
}
