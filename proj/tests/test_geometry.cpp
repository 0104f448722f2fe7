#include <doctest.h>

#include <cmath>

#include "ncar/geometry.hpp"
#include "ncar/rng.hpp"
#include "oracles.hpp"

using namespace ncar;

namespace {

Point pt(std::vector<double> coords, int id = -1) {
  return Point{std::move(coords), id};
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("ratio of collinear points") {
  CHECK(ratio(pt({0, 0}), pt({2, 0}), pt({1, 0})) == doctest::Approx(1.0));
  CHECK(ratio(pt({0, 0}), pt({2, 0}), pt({4, 0})) == doctest::Approx(2.0));
}

TEST_CASE("ratio degenerates when m coincides with b") {
  CHECK_THROWS_AS(ratio(pt({0, 0}), pt({2, 0}), pt({2, 0})), DegenerateRatio);
}

TEST_CASE("region on side B") {
  const auto region = apollonius_region(pt({0, 0}), pt({2, 0}), 2.0);
  CHECK(region.form == RegionForm::SphereSideB);
  REQUIRE(region.center.has_value());
  CHECK((*region.center)[0] == doctest::Approx(8.0 / 3.0));
  CHECK((*region.center)[1] == doctest::Approx(0.0));
  CHECK(*region.radius == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("region on side A") {
  const auto region = apollonius_region(pt({0, 0}), pt({2, 0}), 0.5);
  CHECK(region.form == RegionForm::SphereSideA);
  REQUIRE(region.center.has_value());
  CHECK((*region.center)[0] == doctest::Approx(-2.0 / 3.0));
  CHECK(*region.radius == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("unit ratio degenerates to the bisector") {
  const auto region = apollonius_region(pt({0, 0}), pt({2, 0}), 1.0);
  CHECK(region.form == RegionForm::BisectorLine);
  CHECK(!region.center.has_value());
  CHECK(!region.radius.has_value());
}

TEST_CASE("coincident foci rejected") {
  CHECK_THROWS_AS(apollonius_region(pt({1, 1}), pt({1, 1}), 2.0),
                  CoincidentFoci);
}

TEST_CASE("radius matches the locus radius formula") {
  // two boundary points on the focal axis determine the circle directly
  const auto region = apollonius_region(pt({0, 0}), pt({2, 0}), 2.0);
  // ratio-2 points on the axis: (4/3, 0) and (4, 0)
  CHECK(*region.radius ==
        doctest::Approx(0.5 * (4.0 - 4.0 / 3.0)).epsilon(1e-12));
  CHECK((*region.center)[0] ==
        doctest::Approx(0.5 * (4.0 + 4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("side classification around side-B region") {
  const auto region = apollonius_region(pt({0, 0}), pt({2, 0}), 2.0);
  CHECK(side_of(region, pt({2, 0})) == Side::Inside);    // focus B
  CHECK(side_of(region, pt({4, 0})) == Side::OnBoundary);
  CHECK(side_of(region, pt({0, 0})) == Side::Outside);   // focus A
}

TEST_CASE("bisector region is never Inside") {
  const auto region = apollonius_region(pt({0, 0}), pt({2, 0}), 1.0);
  CHECK(side_of(region, pt({1, 5})) == Side::OnBoundary);
  CHECK(side_of(region, pt({0.5, 0})) == Side::Outside);
  CHECK(side_of(region, pt({3, 0})) == Side::Outside);
}

TEST_CASE("ratio-locus property in 2D") {
  Rng rng(101);
  for (int iter = 0; iter < 1000; ++iter) {
    const Point a = oracle::random_point(rng, 2);
    Point b = oracle::random_point(rng, 2);
    while (distance(a, b) < 1e-3) b = oracle::random_point(rng, 2);
    double k = 0.1 + 4.9 * rng.uniform();
    if (std::abs(k - 1.0) < 1e-6) k += 0.01;
    const auto region = apollonius_region(a, b, k);
    const double theta = 2.0 * 3.14159265358979323846 * rng.uniform();
    const Point m = pt({(*region.center)[0] + *region.radius * std::cos(theta),
                        (*region.center)[1] + *region.radius * std::sin(theta)});
    CHECK(ratio(a, b, m) == doctest::Approx(k).epsilon(1e-7));
  }
}

TEST_CASE("ratio test agrees with the center/radius test in 2D") {
  Rng rng(202);
  int checked = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const Point a = oracle::random_point(rng, 2);
    Point b = oracle::random_point(rng, 2);
    while (distance(a, b) < 1e-3) b = oracle::random_point(rng, 2);
    double k = 0.2 + 3.0 * rng.uniform();
    if (std::abs(k - 1.0) < 1e-6) k += 0.01;
    const auto region = apollonius_region(a, b, k);
    const Point m = oracle::random_point(rng, 2, 30.0);
    const double r = ratio(a, b, m);
    if (std::abs(r - k) <= 10 * boundary_tol(k)) continue;  // tolerance band
    const double signed_gap =
        euclidean(m.coords, *region.center) - *region.radius;
    const Side side = side_of(region, m);
    CHECK(side != Side::OnBoundary);
    CHECK((side == Side::Inside) == (signed_gap < 0.0));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("radius shrinks monotonically away from k = 1") {
  const Point a = pt({0, 0});
  const Point b = pt({3, 1});
  double previous = std::numeric_limits<double>::infinity();
  for (double k = 1.1; k < 6.0; k += 0.25) {
    const auto region = apollonius_region(a, b, k);
    CHECK(*region.radius < previous);
    previous = *region.radius;
  }
  previous = std::numeric_limits<double>::infinity();
  for (double k = 0.9; k > 0.05; k -= 0.05) {
    const auto region = apollonius_region(a, b, k);
    CHECK(*region.radius < previous);
    previous = *region.radius;
  }
}

TEST_CASE("ratio-locus property holds in 3D and 7D") {
  Rng rng(303);
  for (int dim : {3, 7}) {
    for (int iter = 0; iter < 300; ++iter) {
      const Point a = oracle::random_point(rng, dim);
      Point b = oracle::random_point(rng, dim);
      while (distance(a, b) < 1e-3) b = oracle::random_point(rng, dim);
      double k = 0.1 + 4.9 * rng.uniform();
      if (std::abs(k - 1.0) < 1e-6) k += 0.01;
      const auto region = apollonius_region(a, b, k);
      const auto dir = oracle::random_unit(rng, dim);
      Point m;
      for (int d = 0; d < dim; ++d)
        m.coords.push_back((*region.center)[d] + *region.radius * dir[d]);
      CHECK(ratio(a, b, m) == doctest::Approx(k).epsilon(1e-7));
    }
  }
}

}  // TEST_SUITE
