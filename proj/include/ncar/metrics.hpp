#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncar/density.hpp"
#include "ncar/neighborhood.hpp"

namespace ncar {

struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rand index over all unordered point pairs:
/// (same cluster & class + different cluster & class) / all pairs.
/// Outlier labels (kOutlierGroup) count as one-point singleton clusters.
/// Implemented through a contingency table; the pair-enumeration oracle in
/// the tests provides the independent route.
double rand_index(std::span<const int> predicted, std::span<const int> truth);

/// Mean over all points of the fraction of a point's group-mates that share
/// its class; points alone in their group (outliers included) contribute 1.
double similarity_neighborhood(const Partition& partition,
                               std::span<const int> truth);

/// Mean over points with at least two group-mates of the population standard
/// deviation of their distances to those mates; 0 when no point qualifies.
double variability_neighborhood(const Partition& partition,
                                const DistanceMatrix& dist);

/// One algorithm's evaluation on one dataset. ri and sn need ground-truth
/// labels and stay empty without them.
struct MetricsReport {
  std::optional<double> ri;
  std::optional<double> sn;
  double vn = 0.0;
  double runtime_seconds = 0.0;
  std::string algorithm;
  std::string dataset;
  std::vector<std::pair<std::string, std::string>> params;
};

}  // namespace ncar
