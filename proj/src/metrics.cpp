#include "ncar/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace ncar {

namespace {

std::int64_t pairs_of(std::int64_t c) { return c * (c - 1) / 2; }

// Densifies labels; each kOutlierGroup entry becomes its own fresh id.
std::vector<int> densify(std::span<const int> labels,
                         bool outliers_are_singletons, int& count) {
  std::unordered_map<int, int> ids;
  std::vector<int> out(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (outliers_are_singletons && labels[i] == kOutlierGroup) {
      out[i] = next++;
      continue;
    }
    auto [it, inserted] = ids.try_emplace(labels[i], next);
    if (inserted) ++next;
    out[i] = it->second;
  }
  count = next;
  return out;
}

}  // namespace

double rand_index(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size())
    throw LengthMismatch("rand_index: label vectors differ in length");
  const std::int64_t n = static_cast<std::int64_t>(predicted.size());
  if (n < 2) throw std::invalid_argument("rand_index: need n >= 2");

  int cluster_count = 0;
  int class_count = 0;
  const auto clusters = densify(predicted, true, cluster_count);
  const auto classes = densify(truth, false, class_count);

  std::unordered_map<std::int64_t, std::int64_t> cells;
  std::vector<std::int64_t> row(cluster_count, 0), col(class_count, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    ++cells[static_cast<std::int64_t>(clusters[i]) * class_count + classes[i]];
    ++row[clusters[i]];
    ++col[classes[i]];
  }

  std::int64_t a = 0;
  for (const auto& [key, c] : cells) a += pairs_of(c);
  std::int64_t same_cluster = 0, same_class = 0;
  for (std::int64_t c : row) same_cluster += pairs_of(c);
  for (std::int64_t c : col) same_class += pairs_of(c);

  const std::int64_t total = pairs_of(n);
  const std::int64_t b = same_cluster - a;
  const std::int64_t c = same_class - a;
  const std::int64_t d = total - a - b - c;
  return static_cast<double>(a + d) / static_cast<double>(total);
}

double similarity_neighborhood(const Partition& partition,
                               std::span<const int> truth) {
  const int n = partition.size();
  if (static_cast<int>(truth.size()) != n)
    throw LengthMismatch("similarity_neighborhood: label length mismatch");

  const auto members = partition.group_members();
  std::vector<std::unordered_map<int, int>> class_counts(members.size());
  for (std::size_t g = 0; g < members.size(); ++g)
    for (int i : members[g]) ++class_counts[g][truth[i]];

  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int g = partition.assignments[i];
    const int group_size =
        g >= 0 ? static_cast<int>(members[g].size()) : 1;
    if (group_size <= 1) {
      sum += 1.0;  // alone in its group: vacuous purity
      continue;
    }
    const int same = class_counts[g][truth[i]] - 1;  // excluding i
    sum += static_cast<double>(same) / (group_size - 1);
  }
  return sum / n;
}

double variability_neighborhood(const Partition& partition,
                                const DistanceMatrix& dist) {
  const int n = partition.size();
  if (dist.size() != n)
    throw LengthMismatch("variability_neighborhood: matrix size mismatch");

  const auto members = partition.group_members();
  double sum = 0.0;
  int qualifying = 0;
  for (int i = 0; i < n; ++i) {
    const int g = partition.assignments[i];
    if (g < 0) continue;
    const int mates = static_cast<int>(members[g].size()) - 1;
    if (mates < 2) continue;
    double mean = 0.0;
    for (int j : members[g])
      if (j != i) mean += dist(i, j);
    mean /= mates;
    double var = 0.0;
    for (int j : members[g]) {
      if (j == i) continue;
      const double d = dist(i, j) - mean;
      var += d * d;
    }
    sum += std::sqrt(var / mates);
    ++qualifying;
  }
  return qualifying == 0 ? 0.0 : sum / qualifying;
}

}  // namespace ncar
