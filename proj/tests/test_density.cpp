#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ncar/dataset.hpp"
#include "ncar/density.hpp"
#include "ncar/rng.hpp"
#include "oracles.hpp"

using namespace ncar;

namespace {

DistanceMatrix matrix_of(std::vector<std::vector<double>> rows) {
  DistanceMatrix dist(static_cast<int>(rows.size()));
  for (int i = 0; i < dist.size(); ++i)
    for (int j = 0; j < dist.size(); ++j) dist.at(i, j) = rows[i][j];
  return dist;
}

std::vector<Point> make_points(std::vector<std::vector<double>> coords) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    out.push_back({coords[i], static_cast<int>(i)});
  return out;
}

}  // namespace

TEST_SUITE("density") {

TEST_CASE("distance matrix of a 3-4-5 triangle") {
  const auto points = make_points({{0, 0}, {3, 4}});
  const auto dist = distance_matrix(points);
  CHECK(dist(0, 1) == doctest::Approx(5.0));
  CHECK(dist(1, 0) == doctest::Approx(5.0));
  CHECK(dist(0, 0) == 0.0);
  CHECK(dist(1, 1) == 0.0);
}

TEST_CASE("distance matrix of coincident points is zero") {
  const auto dist = distance_matrix(make_points({{1, 1}, {1, 1}}));
  CHECK(dist(0, 1) == 0.0);
}

TEST_CASE("distance matrix of the unit right triangle") {
  const auto dist = distance_matrix(make_points({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(dist(0, 1) == doctest::Approx(1.0));
  CHECK(dist(0, 2) == doctest::Approx(1.0));
  CHECK(dist(1, 2) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("distance matrix rejects mixed dimensions") {
  CHECK_THROWS_AS(distance_matrix(make_points({{0, 0}, {1, 2, 3}})),
                  DimensionMismatch);
}

TEST_CASE("density is 1 when all r neighbors coincide") {
  const auto dist = matrix_of({{0, 0, 5}, {0, 0, 5}, {5, 5, 0}});
  const auto [rho, r] = local_density(dist, 0.34);
  CHECK(r == 1);
  CHECK(rho[0] == doctest::Approx(1.0));
  CHECK(rho[1] == doctest::Approx(1.0));
}

TEST_CASE("two points at unit distance") {
  const auto dist = matrix_of({{0, 1}, {1, 0}});
  const auto [rho, r] = local_density(dist, 0.4);
  CHECK(r == 1);
  CHECK(rho[0] == doctest::Approx(std::exp(-1.0)));
  CHECK(rho[1] == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("collinear triple with r = 1") {
  const auto points = make_points({{0}, {1}, {3}});
  const auto dist = distance_matrix(points);
  const auto [rho, r] = local_density(dist, 0.33);
  CHECK(r == 1);
  CHECK(rho[0] == doctest::Approx(std::exp(-1.0)));
  CHECK(rho[1] == doctest::Approx(std::exp(-1.0)));
  CHECK(rho[2] == doctest::Approx(std::exp(-4.0)));
}

TEST_CASE("neighbor count clamps into [1, n-1]") {
  const auto dist = matrix_of({{0, 1}, {1, 0}});
  CHECK(local_density(dist, 0.01).second == 1);
  CHECK(local_density(dist, 0.99).second == 1);
}

TEST_CASE("densest point takes the farthest distance") {
  const auto dist = matrix_of({{0, 2}, {2, 0}});
  const auto ds = delta_and_score(dist, std::vector<double>{0.9, 0.5});
  CHECK(ds.delta[0] == doctest::Approx(2.0));
  CHECK(ds.delta[1] == doctest::Approx(2.0));
  CHECK(ds.score[0] == doctest::Approx(1.8));
  CHECK(ds.score[1] == doctest::Approx(1.0));
  CHECK(!ds.nearest_higher[0].has_value());
  REQUIRE(ds.nearest_higher[1].has_value());
  CHECK(*ds.nearest_higher[1] == 0);
}

TEST_CASE("tied densities all take the fallback branch") {
  const auto dist = matrix_of({{0, 2}, {2, 0}});
  const auto ds = delta_and_score(dist, std::vector<double>{0.5, 0.5});
  CHECK(ds.delta[0] == doctest::Approx(2.0));
  CHECK(ds.delta[1] == doctest::Approx(2.0));
  CHECK(!ds.nearest_higher[0].has_value());
  CHECK(!ds.nearest_higher[1].has_value());
}

TEST_CASE("automatic selection cuts at the largest relative gap") {
  const std::vector<double> score{9.0, 8.0, 0.1, 0.09};
  const auto targets = select_targets(score);
  CHECK(targets == std::vector<int>{0, 1});
}

TEST_CASE("explicit count picks the top scores") {
  const std::vector<double> score{5.0, 1.0, 1.0};
  CHECK(select_targets(score, 1) == std::vector<int>{0});
}

TEST_CASE("count ties break to the lower index") {
  const std::vector<double> score{5.0, 3.0, 3.0};
  CHECK(select_targets(score, 2) == std::vector<int>{0, 1});
}

TEST_CASE("all-zero scores raise EmptySelection") {
  const std::vector<double> score{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(select_targets(score), EmptySelection);
  CHECK(select_targets(score, 2) == std::vector<int>{0, 1});
}

TEST_CASE("delta and nearest_higher match the exhaustive oracle") {
  Rng rng(404);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 5 + static_cast<int>(rng.uniform() * 45);
    const auto data = oracle::random_dataset(rng, n, 2 + iter % 3);
    const auto dist = distance_matrix(data);
    const auto [rho, r] = local_density(dist, 0.1);
    (void)r;
    const auto ds = delta_and_score(dist, rho);
    const auto ref = oracle::delta_exhaustive(dist, rho);
    for (int i = 0; i < n; ++i) {
      CHECK(ds.delta[i] == ref.delta[i]);
      CHECK(ds.nearest_higher[i] == ref.nearest_higher[i]);
    }
  }
}

TEST_CASE("scaling coordinates scales delta and keeps structure") {
  Rng rng(505);
  const auto data = oracle::random_dataset(rng, 40, 3);
  const auto dist = distance_matrix(data);
  const auto [rho, r] = local_density(dist, 0.1);
  const auto ds = delta_and_score(dist, rho);
  const auto targets = select_targets(ds.score, 4);

  DataSet scaled = data;
  for (double& v : scaled.values) v *= 2.0;  // power of two: exact scaling
  const auto dist2 = distance_matrix(scaled);
  const auto [rho2, r2] = local_density(dist2, 0.1);
  CHECK(r2 == r);
  const auto ds2 = delta_and_score(dist2, rho2);

  std::vector<int> order(data.n), order2(data.n);
  std::iota(order.begin(), order.end(), 0);
  order2 = order;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rho[a] > rho[b]; });
  std::sort(order2.begin(), order2.end(),
            [&](int a, int b) { return rho2[a] > rho2[b]; });
  CHECK(order == order2);  // rho ranking unchanged
  for (int i = 0; i < data.n; ++i) {
    CHECK(ds2.delta[i] == 2.0 * ds.delta[i]);
    CHECK(ds2.nearest_higher[i] == ds.nearest_higher[i]);
  }
  CHECK(select_targets(ds2.score, 4) == targets);
}

TEST_CASE("permuting the input permutes the profile") {
  Rng rng(606);
  const auto data = oracle::random_dataset(rng, 25, 2);
  const auto dist = distance_matrix(data);
  const auto profile = density_profile(dist, 0.15);

  // rotate points by 7
  DataSet permuted = data;
  const int shift = 7;
  for (int i = 0; i < data.n; ++i) {
    const int src = (i + shift) % data.n;
    for (int d = 0; d < data.dim; ++d)
      permuted.values[static_cast<std::size_t>(i) * data.dim + d] =
          data.at(src, d);
  }
  const auto dist2 = distance_matrix(permuted);
  const auto profile2 = density_profile(dist2, 0.15);
  for (int i = 0; i < data.n; ++i) {
    const int src = (i + shift) % data.n;
    CHECK(profile2.rho[i] == profile.rho[src]);
    CHECK(profile2.delta[i] == profile.delta[src]);
    CHECK(profile2.score[i] == profile.score[src]);
  }
}

}  // TEST_SUITE
