// Copyright 2026 The epipriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "epipriv/doppelganger.h"
#include "epipriv/error.h"

using namespace epipriv;

namespace {

DoppelgangerParams make_params(int k, double epsilon, double r,
                               double r_prime) {
  DoppelgangerParams p;
  p.k = k;
  p.r = r;
  p.r_prime = r_prime;
  p.epsilon = PrivacyBudget(epsilon, BudgetKind::kPerUnitDistance);
  return p;
}

DoppelgangerSet set_of(std::vector<GeoPoint> points) {
  DoppelgangerSet s;
  s.points = std::move(points);
  return s;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(make_params(2, 1.0, 5.0, 5.0).validate());
  CHECK_NOTHROW(make_params(1, 1.0, 5.0, 5.0).validate());  // baseline
  CHECK_THROWS_AS(make_params(0, 1.0, 5.0, 5.0).validate(), ValidationError);
  CHECK_THROWS_AS(make_params(3, 1.0, 0.0, 5.0).validate(), ValidationError);
  CHECK_THROWS_AS(make_params(3, 1.0, 5.0, 4.0).validate(), ValidationError);

  DoppelgangerParams wrong_kind = make_params(3, 1.0, 5.0, 5.0);
  wrong_kind.epsilon = PrivacyBudget(1.0, BudgetKind::kPerDataset);
  CHECK_THROWS_AS(wrong_kind.validate(), ValidationError);
}

TEST_CASE("generation splits the budget and is reproducible") {
  SUBCASE("k = 5 points, each perturbed at eps/5") {
    const DoppelgangerParams params = make_params(5, 1.0, 5.0, 5.0);
    RandomSource rng(61);
    const DoppelgangerSet set =
        generate_doppelganger({3.0, 4.0}, params, rng, "case-1");
    REQUIRE(set.points.size() == 5);
    CHECK(set.origin_id == "case-1");

    // Identical stream, manual perturbation at the per-point share.
    RandomSource replay(61);
    const PrivacyBudget per_point(0.2, BudgetKind::kPerUnitDistance);
    for (const GeoPoint& q : set.points) {
      const GeoPoint manual = perturb_location({3.0, 4.0}, per_point, replay);
      CHECK(q.x == manual.x);
      CHECK(q.y == manual.y);
    }
  }

  SUBCASE("k = 1 release is rejected") {
    const DoppelgangerParams params = make_params(1, 1.0, 5.0, 5.0);
    RandomSource rng(62);
    CHECK_THROWS_AS(generate_doppelganger({0.0, 0.0}, params, rng),
                    ValidationError);
  }

  SUBCASE("huge budget keeps every copy at the origin") {
    const DoppelgangerParams params = make_params(2, 1e6, 5.0, 5.0);
    RandomSource rng(63);
    for (int rep = 0; rep < 50; ++rep) {
      const DoppelgangerSet set =
          generate_doppelganger({0.0, 0.0}, params, rng);
      for (const GeoPoint& q : set.points) {
        CHECK(std::hypot(q.x, q.y) < 1e-2);
      }
    }
  }

  SUBCASE("fixed stream, fixed output") {
    const DoppelgangerParams params = make_params(4, 0.7, 5.0, 6.0);
    RandomSource a(64), b(64);
    const DoppelgangerSet s1 = generate_doppelganger({1.0, 1.0}, params, a);
    const DoppelgangerSet s2 = generate_doppelganger({1.0, 1.0}, params, b);
    for (std::size_t i = 0; i < s1.points.size(); ++i) {
      CHECK(s1.points[i].x == s2.points[i].x);
      CHECK(s1.points[i].y == s2.points[i].y);
    }
  }
}

TEST_CASE("effectiveness predicate") {
  const GeoPoint origin{0.0, 0.0};
  CHECK(is_effective(origin, set_of({{1.0, 0.0}, {100.0, 0.0}}), 10.0, 10.0));
  // no point beyond r'
  CHECK_FALSE(
      is_effective(origin, set_of({{5.0, 0.0}, {0.0, 5.0}}), 10.0, 10.0));
  // no point within r
  CHECK_FALSE(
      is_effective(origin, set_of({{50.0, 0.0}, {0.0, 50.0}}), 10.0, 10.0));
  // strict inequalities: a point exactly at r is neither near nor far
  CHECK_FALSE(
      is_effective(origin, set_of({{10.0, 0.0}, {10.0, 0.0}}), 10.0, 10.0));
  CHECK_THROWS_AS(is_effective(origin, set_of({{1.0, 0.0}}), 10.0, 5.0),
                  ValidationError);
}

TEST_CASE("centroid inference") {
  CHECK(infer_centroid(set_of({{0.0, 0.0}, {2.0, 0.0}})).x ==
        doctest::Approx(1.0));
  CHECK(infer_centroid(set_of({{0.0, 0.0}, {2.0, 0.0}})).y ==
        doctest::Approx(0.0));

  const GeoPoint p{3.5, -1.25};
  const GeoPoint c = infer_centroid(set_of({p, p, p}));
  CHECK(c.x == doctest::Approx(p.x));
  CHECK(c.y == doctest::Approx(p.y));

  const GeoPoint sq =
      infer_centroid(set_of({{0.0, 0.0}, {0.0, 2.0}, {2.0, 0.0}, {2.0, 2.0}}));
  CHECK(sq.x == doctest::Approx(1.0));
  CHECK(sq.y == doctest::Approx(1.0));

  CHECK_THROWS_AS(infer_centroid(set_of({})), ValidationError);
}

TEST_CASE("geometric median attacker") {
  const GeoPoint sq = infer_geometric_median(
      set_of({{0.0, 0.0}, {0.0, 2.0}, {2.0, 0.0}, {2.0, 2.0}}));
  CHECK(sq.x == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sq.y == doctest::Approx(1.0).epsilon(1e-6));

  // Median resists the outlier that drags the centroid.
  const DoppelgangerSet skewed =
      set_of({{0.0, 0.0}, {0.1, 0.0}, {-0.1, 0.0}, {100.0, 0.0}});
  CHECK(std::abs(infer_geometric_median(skewed).x) < 0.11);
  CHECK(infer_centroid(skewed).x == doctest::Approx(25.0));
}

TEST_CASE("closed-form effectiveness") {
  SUBCASE("p = 1/2 with two copies gives exactly 1/2") {
    // eps*r/k = 1.678346990... puts the per-copy inside-probability at 1/2.
    const double t = 1.67834699001666065;
    CHECK(planar_radius_cdf(t, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(closed_form_effectiveness(2, 2.0 * t, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("both copies collapse inside as eps*r grows") {
    CHECK(closed_form_effectiveness(2, 1e4, 1.0) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  }

  SUBCASE("frozen value at k = 4, eps*r = 5") {
    CHECK(closed_form_effectiveness(4, 5.0, 1.0) ==
          doctest::Approx(0.811366210191139).epsilon(1e-12));
    // invariant in the factorization of the product
    CHECK(closed_form_effectiveness(4, 1.0, 5.0) ==
          doctest::Approx(0.811366210191139).epsilon(1e-12));
  }

  SUBCASE("rejects k < 2 and non-positive products") {
    CHECK_THROWS_AS(closed_form_effectiveness(1, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(closed_form_effectiveness(4, 0.0, 1.0), ValidationError);
  }
}

TEST_CASE("Monte-Carlo effectiveness agrees with the closed form") {
  const int reps = 1'000'000;
  const DoppelgangerParams params = make_params(4, 1.0, 5.0, 5.0);
  RandomSource rng(71);
  const Estimate est = estimate_effectiveness(params, reps, rng);
  const double exact = closed_form_effectiveness(4, 1.0, 5.0);
  CHECK(std::abs(est.value - exact) <= 3.0 * est.std_error);
  CHECK(est.std_error == doctest::Approx(std::sqrt(exact * (1 - exact) / reps))
                             .epsilon(0.05));
}

TEST_CASE("effectiveness is high when the product is large") {
  // eps*r = 15 peaks at large k: k = 10 sits near 0.997.
  const DoppelgangerParams params = make_params(10, 3.0, 5.0, 5.0);
  RandomSource rng(72);
  CHECK(estimate_effectiveness(params, 100'000, rng).value >= 0.97);
}

TEST_CASE("only the eps*r product matters") {
  const int reps = 200'000;
  RandomSource rng_a(73), rng_b(74);
  const DoppelgangerEvaluation a =
      evaluate_doppelganger(make_params(4, 1.0, 5.0, 5.0), 5.0, reps, rng_a);
  const DoppelgangerEvaluation b =
      evaluate_doppelganger(make_params(4, 0.25, 20.0, 20.0), 20.0, reps,
                            rng_b);
  const double eff_se = std::hypot(a.effectiveness.std_error,
                                   b.effectiveness.std_error);
  const double reid_se = std::hypot(a.reidentification.std_error,
                                    b.reidentification.std_error);
  CHECK(std::abs(a.effectiveness.value - b.effectiveness.value) <=
        3.0 * eff_se);
  CHECK(std::abs(a.reidentification.value - b.reidentification.value) <=
        3.0 * reid_se);
}

TEST_CASE("re-identification behaviour") {
  SUBCASE("close to certain at eps*r = 15") {
    const DoppelgangerParams params = make_params(2, 15.0, 1.0, 1.0);
    RandomSource rng(75);
    CHECK(estimate_reidentification(params, 1.0, 100'000, rng).value >= 0.95);
  }

  SUBCASE("k = 1 baseline matches the single-release closed form") {
    // P(gamma(2, eps) radius <= r), frozen at eps*r = 2.5.
    const DoppelgangerParams params = make_params(1, 2.5, 1.0, 1.0);
    RandomSource rng(76);
    const Estimate est = estimate_reidentification(params, 1.0, 200'000, rng);
    CHECK(std::abs(est.value - 0.712702504816354) <= 3.0 * est.std_error);
  }

  SUBCASE("monotone in the product") {
    RandomSource rng_lo(77), rng_hi(78);
    const Estimate lo = estimate_reidentification(
        make_params(4, 2.5, 1.0, 1.0), 1.0, 100'000, rng_lo);
    const Estimate hi = estimate_reidentification(
        make_params(4, 15.0, 1.0, 1.0), 1.0, 100'000, rng_hi);
    CHECK(hi.value - lo.value > 3.0 * std::hypot(lo.std_error, hi.std_error));
  }

  SUBCASE("rejects bad cutoffs and rep counts") {
    const DoppelgangerParams params = make_params(2, 1.0, 1.0, 1.0);
    RandomSource rng(79);
    CHECK_THROWS_AS(estimate_reidentification(params, 0.0, 10, rng),
                    ValidationError);
    CHECK_THROWS_AS(estimate_reidentification(params, 1.0, 0, rng),
                    ValidationError);
  }
}

TEST_CASE("effectiveness and re-identification gap") {
  SUBCASE("exactly zero at the k = 1 baseline") {
    RandomSource rng(81);
    CHECK(alpha_beta_gap(make_params(1, 5.0, 1.0, 1.0), 1.0, 50'000, rng) ==
          0.0);
  }

  SUBCASE("positive for many copies at a small product") {
    RandomSource rng(82);
    CHECK(alpha_beta_gap(make_params(8, 2.5, 1.0, 1.0), 1.0, 100'000, rng) >
          0.05);
  }
}
