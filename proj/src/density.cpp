#include "ncar/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ncar {

DistanceMatrix distance_matrix(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw std::invalid_argument("distance_matrix: need n >= 2");
  const std::size_t dim = points[0].coords.size();
  for (const Point& p : points)
    if (p.coords.size() != dim)
      throw DimensionMismatch("distance_matrix: points differ in dimension");

  DistanceMatrix dist(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(points[i], points[j]);
      dist.at(i, j) = d;
      dist.at(j, i) = d;
    }
  }
  return dist;
}

std::pair<std::vector<double>, int> local_density(const DistanceMatrix& dist,
                                                  double p) {
  const int n = dist.size();
  if (n < 2) throw std::invalid_argument("local_density: need n >= 2");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("local_density: p must be in (0,1)");
  const int r = std::clamp(static_cast<int>(std::lround(p * n)), 1, n - 1);

  std::vector<double> rho(n);
  std::vector<double> row(n - 1);
  for (int i = 0; i < n; ++i) {
    int m = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) row[m++] = dist(i, j);
    std::nth_element(row.begin(), row.begin() + (r - 1), row.end());
    double sum = 0.0;
    for (int t = 0; t < r; ++t) sum += row[t] * row[t];
    rho[i] = std::exp(-sum / r);
  }
  return {std::move(rho), r};
}

DeltaScore delta_and_score(const DistanceMatrix& dist,
                           std::span<const double> rho) {
  const int n = dist.size();
  if (static_cast<int>(rho.size()) != n)
    throw std::invalid_argument("delta_and_score: rho length mismatch");

  DeltaScore out;
  out.delta.resize(n);
  out.score.resize(n);
  out.nearest_higher.resize(n);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (rho[j] > rho[i] && dist(i, j) < best_d) {
        best_d = dist(i, j);
        best = j;
      }
    }
    if (best >= 0) {
      out.delta[i] = best_d;
      out.nearest_higher[i] = best;
    } else {
      double max_d = 0.0;
      for (int j = 0; j < n; ++j) max_d = std::max(max_d, dist(i, j));
      out.delta[i] = max_d;
    }
    out.score[i] = out.delta[i] * rho[i];
  }
  return out;
}

std::vector<int> select_targets(std::span<const double> score,
                                std::optional<int> count) {
  const int n = static_cast<int>(score.size());
  if (n < 1) throw std::invalid_argument("select_targets: empty score vector");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });

  int cut;
  if (count) {
    if (*count < 1 || *count > n)
      throw std::invalid_argument("select_targets: count out of range");
    cut = *count;
  } else {
    if (!(score[order[0]] > 0.0))
      throw EmptySelection("select_targets: all scores are zero");
    const int window =
        std::min(n - 1, static_cast<int>(std::ceil(std::sqrt(double(n)))));
    cut = 1;
    double best_gap = -1.0;
    for (int c = 1; c <= window; ++c) {
      const double hi = score[order[c - 1]];
      const double lo = score[order[c]];
      double gap;
      if (lo > 0.0)
        gap = hi / lo;
      else
        gap = hi > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
      if (gap > best_gap) {
        best_gap = gap;
        cut = c;
      }
    }
  }

  std::vector<int> targets(order.begin(), order.begin() + cut);
  std::sort(targets.begin(), targets.end());
  return targets;
}

DensityProfile density_profile(const DistanceMatrix& dist, double p) {
  DensityProfile profile;
  auto [rho, r] = local_density(dist, p);
  profile.rho = std::move(rho);
  profile.r = r;
  DeltaScore ds = delta_and_score(dist, profile.rho);
  profile.delta = std::move(ds.delta);
  profile.score = std::move(ds.score);
  profile.nearest_higher = std::move(ds.nearest_higher);
  return profile;
}

}  // namespace ncar
