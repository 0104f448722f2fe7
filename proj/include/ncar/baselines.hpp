#pragma once

#include <optional>

#include "ncar/dataset.hpp"
#include "ncar/neighborhood.hpp"

namespace ncar {

enum class BaselineMethod { KnnGraph, EpsilonGraph, DpcNearestCenter };

/// Configuration for one baseline run; only the fields relevant to the
/// method are set (KNN1 uses k_fraction 0.05, KNN2 uses 0.10).
struct BaselineConfig {
  BaselineMethod method = BaselineMethod::KnnGraph;
  std::optional<double> k_fraction;
  std::optional<double> epsilon;
  std::optional<double> p;
  std::optional<int> center_count;
};

/// Groups are the connected components of the union-symmetrized directed
/// kNN graph with k = max(1, round(k_fraction * n)); never flags outliers.
Partition knn_graph_groups(const DataSet& data, double k_fraction);

/// Epsilon from the 4-distance graph: sorted 4th-nearest-neighbor distances,
/// split below the largest consecutive gap.
double k_distance_epsilon(const DistanceMatrix& dist);

/// Connects points within epsilon (auto-selected via k_distance_epsilon when
/// absent); components with at least two members become groups, singletons
/// become outliers.
Partition epsilon_groups(const DataSet& data,
                         std::optional<double> epsilon = std::nullopt);

/// Density-peaks style baseline: the center_count best-scoring points become
/// centers and every other point joins its nearest center (ties to the lower
/// center index); never flags outliers.
Partition dpc_nearest_center(const DataSet& data, double p, int center_count);

Partition run_baseline(const DataSet& data, const BaselineConfig& config);

}  // namespace ncar
