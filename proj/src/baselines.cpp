#include "ncar/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ncar {

namespace {

// Connected components over an undirected adjacency list; components are
// numbered by their smallest member index.
std::vector<int> components(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adjacency[u]) {
        if (comp[v] < 0) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

Partition partition_from_components(const std::vector<int>& comp,
                                    int component_count,
                                    bool singletons_are_outliers) {
  const int n = static_cast<int>(comp.size());
  std::vector<int> sizes(component_count, 0);
  for (int c : comp) ++sizes[c];

  // map kept components to dense group ids in component order
  std::vector<int> group_of(component_count, kOutlierGroup);
  int groups = 0;
  for (int c = 0; c < component_count; ++c)
    if (!singletons_are_outliers || sizes[c] >= 2) group_of[c] = groups++;

  Partition part;
  part.assignments.resize(n);
  part.provenance.resize(n);
  for (int g = 0; g < groups; ++g)
    part.groups.push_back({g, std::nullopt, std::nullopt});
  for (int i = 0; i < n; ++i) {
    const int g = group_of[comp[i]];
    part.assignments[i] = g;
    if (g == kOutlierGroup) {
      part.provenance[i] = Provenance::Outlier;
      part.outliers.push_back(i);
    } else {
      part.provenance[i] = Provenance::Member;
    }
  }
  return part;
}

}  // namespace

Partition knn_graph_groups(const DataSet& data, double k_fraction) {
  const int n = data.n;
  if (n < 2) throw std::invalid_argument("knn_graph_groups: need n >= 2");
  const int k = std::max(1, static_cast<int>(std::lround(k_fraction * n)));
  if (k >= n)
    throw std::invalid_argument("knn_graph_groups: k must be below n");

  const DistanceMatrix dist = distance_matrix(data);
  std::vector<std::vector<int>> adjacency(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    order.erase(order.begin() + i);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](int a, int b) {
                        if (dist(i, a) != dist(i, b))
                          return dist(i, a) < dist(i, b);
                        return a < b;
                      });
    for (int t = 0; t < k; ++t) {
      const int j = order[t];
      adjacency[i].push_back(j);  // union symmetrization
      adjacency[j].push_back(i);
    }
  }

  const auto comp = components(adjacency);
  const int count = 1 + *std::max_element(comp.begin(), comp.end());
  return partition_from_components(comp, count, false);
}

double k_distance_epsilon(const DistanceMatrix& dist) {
  const int n = dist.size();
  if (n < 2) throw std::invalid_argument("k_distance_epsilon: need n >= 2");
  const int k = std::min(4, n - 1);

  std::vector<double> kth(n);
  std::vector<double> row(n - 1);
  for (int i = 0; i < n; ++i) {
    int m = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) row[m++] = dist(i, j);
    std::nth_element(row.begin(), row.begin() + (k - 1), row.end());
    kth[i] = row[k - 1];
  }
  std::sort(kth.begin(), kth.end());

  int cut = 0;
  double best_gap = -1.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double gap = kth[i + 1] - kth[i];
    if (gap > best_gap) {
      best_gap = gap;
      cut = i;
    }
  }
  return kth[cut];
}

Partition epsilon_groups(const DataSet& data, std::optional<double> epsilon) {
  const int n = data.n;
  if (n < 2) throw std::invalid_argument("epsilon_groups: need n >= 2");
  if (epsilon && !(*epsilon > 0.0))
    throw std::invalid_argument("epsilon_groups: epsilon must be positive");

  const DistanceMatrix dist = distance_matrix(data);
  const double eps = epsilon ? *epsilon : k_distance_epsilon(dist);

  std::vector<std::vector<int>> adjacency(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) <= eps) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }

  const auto comp = components(adjacency);
  const int count = 1 + *std::max_element(comp.begin(), comp.end());
  return partition_from_components(comp, count, true);
}

Partition dpc_nearest_center(const DataSet& data, double p, int center_count) {
  if (center_count < 1)
    throw std::invalid_argument("dpc_nearest_center: center_count >= 1");
  const DistanceMatrix dist = distance_matrix(data);
  const DensityProfile profile = density_profile(dist, p);
  const std::vector<int> centers = select_targets(profile.score, center_count);

  Partition part;
  part.assignments.assign(data.n, kUnassigned);
  part.provenance.assign(data.n, Provenance::Member);
  for (std::size_t g = 0; g < centers.size(); ++g) {
    part.groups.push_back({static_cast<int>(g), centers[g], std::nullopt});
    part.assignments[centers[g]] = static_cast<int>(g);
    part.provenance[centers[g]] = Provenance::Target;
  }
  for (int i = 0; i < data.n; ++i) {
    if (part.assignments[i] != kUnassigned) continue;
    int best = 0;
    for (std::size_t g = 1; g < centers.size(); ++g)
      if (dist(i, centers[g]) < dist(i, centers[best])) best = static_cast<int>(g);
    part.assignments[i] = best;
  }
  return part;
}

Partition run_baseline(const DataSet& data, const BaselineConfig& config) {
  switch (config.method) {
    case BaselineMethod::KnnGraph:
      return knn_graph_groups(data, config.k_fraction.value_or(0.05));
    case BaselineMethod::EpsilonGraph:
      return epsilon_groups(data, config.epsilon);
    case BaselineMethod::DpcNearestCenter:
      if (!config.center_count)
        throw std::invalid_argument("run_baseline: dpc needs center_count");
      return dpc_nearest_center(data, config.p.value_or(0.05),
                                *config.center_count);
  }
  throw std::invalid_argument("run_baseline: unknown method");
}

}  // namespace ncar
