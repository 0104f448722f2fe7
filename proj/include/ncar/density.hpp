#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncar/geometry.hpp"

namespace ncar {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by select_targets in automatic mode when all scores are zero.
struct EmptySelection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetric pairwise Euclidean distance matrix with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }
  double& at(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

DistanceMatrix distance_matrix(std::span<const Point> points);

/// Per-point density statistics used to rank candidate target points.
///
/// rho is the Gaussian of mean squared distance to the r nearest neighbors,
/// delta the distance to the nearest strictly denser point (falling back to
/// the farthest distance for the densest points, which have no
/// nearest_higher), and score = rho * delta.
struct DensityProfile {
  std::vector<double> rho;
  std::vector<double> delta;
  std::vector<double> score;
  std::vector<std::optional<int>> nearest_higher;
  int r = 0;
};

/// rho[i] = exp(-(1/r) * sum of squared distances to i's r nearest
/// neighbors), with r = round(p * n) clamped to [1, n-1]. Returns rho and r.
std::pair<std::vector<double>, int> local_density(const DistanceMatrix& dist,
                                                  double p);

struct DeltaScore {
  std::vector<double> delta;
  std::vector<double> score;
  std::vector<std::optional<int>> nearest_higher;
};

/// delta[i] = min distance to a strictly denser point, or the max distance
/// to any point when none exists; score[i] = delta[i] * rho[i]. Density ties
/// use strict inequality, so equally densest points all take the fallback.
DeltaScore delta_and_score(const DistanceMatrix& dist,
                           std::span<const double> rho);

/// Picks target points by score. With a count, returns the count best
/// (ties to the lower index). Without one, sorts scores descending and cuts
/// at the largest relative gap score[i]/score[i+1] within the first
/// min(n-1, ceil(sqrt(n))) positions. Indices come back sorted ascending.
std::vector<int> select_targets(std::span<const double> score,
                                std::optional<int> count = std::nullopt);

DensityProfile density_profile(const DistanceMatrix& dist, double p);

}  // namespace ncar
