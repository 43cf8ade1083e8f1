#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "czlab/doubling.hpp"
#include "czlab/rng.hpp"
#include "support.hpp"

using namespace czlab;

TEST_CASE("doubling test on the running example") {
  const auto mu = test::three_atom_line();
  CHECK(is_doubling(mu, test::interval(0.0, 1.0), {2.0, 4.0}));    // 3 <= 4*1
  CHECK(!is_doubling(mu, test::interval(0.0, 1.0), {6.0, 2.0}));   // 7 > 2*1
  CHECK(is_doubling(mu, test::interval(50.0, 1.0), {2.0, 4.0}));   // 0 <= 0
  // Empty cube whose dilation captures mass is not doubling.
  CHECK(!is_doubling(mu, test::interval(1.9, 0.1), {100.0, 8.0}));
}

TEST_CASE("derived constants from the proof chains") {
  // d=1, n=1, C0=8, K=2: C1 = 8 * 6 * 36/30, C2 = 2*36/4, C3 = 1/2.
  const auto c = DerivedConstants::compute(1, 1.0, 8.0, 2.0);
  CHECK(c.C1 == doctest::Approx(57.6));
  CHECK(c.C2 == doctest::Approx(18.0));
  CHECK(c.C3 == doctest::Approx(0.5));
  CHECK(c.B == doctest::Approx(36.5));
  CHECK(c.K_overlap == 2.0);

  const auto c2 = DerivedConstants::compute(2, 1.0, 1.0, 4.0);
  CHECK(c2.C1 == doctest::Approx(7.2 * std::sqrt(2.0)));
  CHECK(c2.C2 == doctest::Approx(4.0 * 36.0 / 8.0));
  CHECK(c2.C3 == doctest::Approx(0.25));
}

TEST_CASE("upward doubling search: single atom stops at k = 0") {
  const AtomicMeasure mu(1, {0.0}, {1.0}, {1.0, 1.0, 1.0});
  const auto r = doubling_cube_at_least(mu, 0, 0.7, {2.0, 3.0});
  CHECK(r.power == 0);
  CHECK(r.cube.side == 0.7);
}

TEST_CASE("upward doubling search on the running example") {
  const auto mu = test::three_atom_line();
  const auto r = doubling_cube_at_least(mu, 0, 1.0, {6.0, 36.0});
  CHECK(r.power == 0);  // mu(Q)=1, mu(6Q)=7 <= 36
  CHECK(r.cube.side == 1.0);
}

TEST_CASE("upward doubling search against a brute-force scan") {
  // Tiny atom next to a heavy one: equal masses make every early step
  // doubling, so the scan result and the rule must agree everywhere.
  const AtomicMeasure two(1, {0.0, 1.0}, {1e-6, 1.0}, {1.0, 2e6, 1e-3});
  const DoublingParams p{2.0, 3.0};
  const auto got = doubling_cube_at_least(two, 0, 0.1, p);
  int expect = -1;
  for (int k = 0; k <= 40 && expect < 0; ++k) {
    const Cube q({0.0}, 0.1 * std::pow(2.0, k));
    if (is_doubling(two, q, p)) expect = k;
  }
  CHECK(got.power == expect);
  CHECK(got.power == 0);  // equal masses at both scales

  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const auto mu = test::random_measure(900 + rep);
    const std::size_t atom = rng.index(mu.size());
    const double c0 = rng.uniform(0.01, 0.3);
    const DoublingParams params{2.0, 2.5 + rng.uniform(0.0, 3.0)};
    if (!params.valid_for_growth(mu.growth().n)) continue;
    const auto res = doubling_cube_at_least(mu, atom, c0, params);
    CHECK(is_doubling(mu, res.cube, params));
    CHECK(res.cube.side >= c0);
    for (int k = 0; k < res.power; ++k) {
      const auto x = mu.position(atom);
      const Cube q(std::vector<double>(x.begin(), x.end()),
                   c0 * std::pow(params.alpha, k));
      CHECK(!is_doubling(mu, q, params));
    }
  }
}

TEST_CASE("smallest doubling power on the running example") {
  const auto mu = test::three_atom_line();
  const auto r = smallest_doubling_power(mu, test::interval(0.0, 1.5));
  CHECK(r.power == 1);
  CHECK(r.cube.side == doctest::Approx(9.0));
  CHECK(r.cube.center == std::vector<double>{0.0});
}

TEST_CASE("smallest doubling power: single atom is immediate") {
  const AtomicMeasure mu(1, {0.25}, {2.0}, {1.0, 8.0, 1.0});
  const auto r = smallest_doubling_power(mu, test::interval(0.25, 0.4));
  CHECK(r.power == 1);
}

TEST_CASE("smallest doubling power matches a direct scan") {
  std::vector<double> xs(101), ws(101, 1.0);
  for (int i = 0; i <= 100; ++i) xs[i] = i;
  const AtomicMeasure mu(1, std::move(xs), std::move(ws), {1.0, 3.0, 1.0});
  const Cube q({0.0}, 1.0);
  const auto got = smallest_doubling_power(mu, q);
  const DoublingParams p{6.0, 36.0};
  int expect = -1;
  for (int k = 1; k <= 10 && expect < 0; ++k)
    if (is_doubling(mu, q.dilated(std::pow(6.0, k)), p)) expect = k;
  CHECK(got.power == expect);
}

TEST_CASE("graded mass pushes the doubling power past 1") {
  // A feather at the center with a heavy ring entering at the 36Q scale:
  // 6Q is wildly non-doubling, 36Q is fine.
  std::vector<double> xs{0.0, 10.0, -10.0, 14.0};
  std::vector<double> ws{1e-6, 1.0, 1.0, 1.0};
  const AtomicMeasure mu(1, std::move(xs), std::move(ws), {1.0, 2.0, 4.0});
  const Cube q({0.0}, 1.0);
  const auto got = smallest_doubling_power(mu, q);
  const DoublingParams p{6.0, 36.0};
  int expect = -1;
  for (int k = 1; k <= 10 && expect < 0; ++k)
    if (is_doubling(mu, q.dilated(std::pow(6.0, k)), p)) expect = k;
  CHECK(got.power == expect);
  CHECK(got.power == 2);
}

TEST_CASE("annulus integral hand example") {
  const auto mu = test::three_atom_line();
  const double v = annulus_kernel_integral(mu, test::interval(0.0, 1.0),
                                           test::interval(0.0, 8.0));
  CHECK(v == doctest::Approx(2.0 / 1.0 + 4.0 / 3.0));
  CHECK(annulus_kernel_integral(mu, test::interval(0.0, 1.0),
                                test::interval(0.0, 1.0)) == 0.0);
  CHECK_THROWS_AS(annulus_kernel_integral(mu, test::interval(0.0, 1.0),
                                          test::interval(0.5, 2.0)),
                  std::invalid_argument);
}

TEST_CASE("annulus integral of companion pairs stays below C1") {
  for (int rep = 0; rep < 25; ++rep) {
    const auto mu = test::random_measure(2000 + rep);
    const auto c1 = DerivedConstants::compute(mu.dim(), mu.growth().n,
                                              mu.growth().C0,
                                              std::pow(2.0, mu.dim()))
                        .C1;
    Rng rng(rep);
    for (int t = 0; t < 5; ++t) {
      const std::size_t atom = rng.index(mu.size());
      const auto x = mu.position(atom);
      // Any cube around an atom with side at least the local resolution.
      const Cube q(std::vector<double>(x.begin(), x.end()),
                   mu.min_pair_distance() * rng.uniform(1.0, 20.0));
      const auto r = smallest_doubling_power(mu, q);
      const double v = annulus_kernel_integral(mu, q.dilated(6.0), r.cube);
      CHECK(v <= c1 * (1 + 1e-12));
    }
  }
}

TEST_CASE("small cubes around isolated atoms are doubling for every beta >= 1") {
  // Below the sup-distance to the nearest atom (scaled by alpha), dilation
  // captures nothing new.
  for (int rep = 0; rep < 10; ++rep) {
    const auto mu = test::random_measure(3000 + rep);
    Rng rng(rep);
    const std::size_t atom = rng.index(mu.size());
    const auto x = mu.position(atom);
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (k != atom) nearest = std::min(nearest, sup_dist(mu.position(k), x));
    const double alpha = rng.uniform(1.5, 4.0);
    const double side = rng.uniform(0.1, 0.99) * 2.0 * nearest / alpha;
    const Cube q(std::vector<double>(x.begin(), x.end()), side);
    CHECK(is_doubling(mu, q, {alpha, 1.0}));
  }
}
