#include "ncar/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ncar {

std::vector<std::vector<int>> Partition::group_members() const {
  std::vector<std::vector<int>> members(groups.size());
  for (int i = 0; i < size(); ++i) {
    const int g = assignments[i];
    if (g >= 0) members[g].push_back(i);
  }
  return members;
}

std::vector<TargetPairing> pair_targets(std::span<const int> targets,
                                        const DistanceMatrix& dist) {
  if (targets.empty())
    throw std::invalid_argument("pair_targets: no targets");
  if (targets.size() == 1)
    throw SingleTarget("pair_targets: single target forms one trivial group");

  std::vector<TargetPairing> pairings;
  pairings.reserve(targets.size());
  for (int t : targets) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int u : targets) {
      if (u == t) continue;
      if (dist(t, u) < best_d || (dist(t, u) == best_d && u < best)) {
        best_d = dist(t, u);
        best = u;
      }
    }
    pairings.push_back({t, best, best_d});
  }
  std::sort(pairings.begin(), pairings.end(),
            [](const TargetPairing& a, const TargetPairing& b) {
              if (a.pair_distance != b.pair_distance)
                return a.pair_distance < b.pair_distance;
              return a.target < b.target;
            });
  return pairings;
}

std::optional<FarthestPoint> farthest_admissible(
    const TargetPairing& pairing, const DistanceMatrix& dist,
    std::span<const int> targets, std::span<const int> non_targets) {
  const int t = pairing.target;
  int best = -1;
  double best_d = -1.0;
  for (int m : non_targets) {
    const double d = dist(t, m);
    if (!(d < pairing.pair_distance)) continue;
    bool closest_to_t = true;
    for (int l : targets) {
      if (l == t) continue;
      if (!(d < dist(l, m))) {
        closest_to_t = false;
        break;
      }
    }
    if (!closest_to_t) continue;
    if (d > best_d) {
      best_d = d;
      best = m;
    }
  }
  if (best < 0) return std::nullopt;
  return FarthestPoint{best, best_d};
}

std::vector<std::optional<ApolloniusRegion>> build_group_regions(
    std::span<const TargetPairing> pairings,
    std::span<const std::optional<FarthestPoint>> fps, const DataSet& data) {
  if (pairings.size() != fps.size())
    throw std::invalid_argument("build_group_regions: size mismatch");

  std::vector<std::optional<ApolloniusRegion>> regions(pairings.size());
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    if (!fps[i]) continue;
    const Point a = data.point(pairings[i].target);
    const Point b = data.point(pairings[i].partner);
    const Point m = data.point(fps[i]->index);
    const double k = ratio(a, b, m);
    if (k <= 0.0) continue;  // fp coincides with the target itself
    regions[i] = apollonius_region(a, b, k);
  }
  return regions;
}

namespace {

// Region coverage for assignment purposes: boundary points belong to the
// circle they define, so OnBoundary counts. Bisector regions cover nothing.
bool region_covers(const ApolloniusRegion& region, const Point& m) {
  if (region.form == RegionForm::BisectorLine) return false;
  return side_of(region, m) != Side::Outside;
}

}  // namespace

AssignmentDraft initial_assignment(
    std::span<const std::optional<ApolloniusRegion>> regions,
    const DataSet& data, std::span<const TargetPairing> pairings) {
  if (regions.size() != pairings.size())
    throw std::invalid_argument("initial_assignment: size mismatch");

  AssignmentDraft draft;
  Partition& part = draft.partition;
  part.assignments.assign(data.n, kUnassigned);
  part.provenance.assign(data.n, Provenance::Member);
  part.groups.reserve(pairings.size());
  for (std::size_t g = 0; g < pairings.size(); ++g) {
    part.groups.push_back({static_cast<int>(g), pairings[g].target,
                           regions[g] ? std::optional(*regions[g])
                                      : std::nullopt});
    part.assignments[pairings[g].target] = static_cast<int>(g);
    part.provenance[pairings[g].target] = Provenance::Target;
  }

  draft.containing.assign(data.n, {});
  for (int m = 0; m < data.n; ++m) {
    if (part.assignments[m] != kUnassigned) continue;  // a target
    const Point pm = data.point(m);
    for (std::size_t g = 0; g < regions.size(); ++g)
      if (regions[g] && region_covers(*regions[g], pm))
        draft.containing[m].push_back(static_cast<int>(g));
    const auto& covers = draft.containing[m];
    if (covers.size() == 1) {
      part.assignments[m] = covers[0];
      part.provenance[m] = Provenance::InsideCircle;
    } else if (covers.empty()) {
      draft.uncovered.push_back(m);
    } else {
      draft.overlaps.push_back(m);
    }
  }
  return draft;
}

void detect_outliers(const DistanceMatrix& dist,
                     std::span<const TargetPairing> pairings,
                     AssignmentDraft& draft) {
  Partition& part = draft.partition;
  std::vector<int> keep;
  keep.reserve(draft.uncovered.size());
  for (int m : draft.uncovered) {
    int nearest = -1;
    double nearest_d = std::numeric_limits<double>::infinity();
    double nearest_pair = 0.0;
    for (const TargetPairing& pr : pairings) {
      const double d = dist(pr.target, m);
      if (d < nearest_d || (d == nearest_d && pr.target < nearest)) {
        nearest_d = d;
        nearest = pr.target;
        nearest_pair = pr.pair_distance;
      }
    }
    if (nearest_d >= nearest_pair) {
      part.assignments[m] = kOutlierGroup;
      part.provenance[m] = Provenance::Outlier;
      part.outliers.push_back(m);
    } else {
      keep.push_back(m);
    }
  }
  draft.uncovered = std::move(keep);
}

namespace {

// Distance from point m to group g's region center, derived from pairwise
// distances alone: the center is the affine combination
// alpha * A + beta * B with alpha = 1/(1-k^2), beta = -k^2/(1-k^2),
// alpha + beta = 1, for which
// d(m,c)^2 = alpha d(m,A)^2 + beta d(m,B)^2 - alpha beta d(A,B)^2.
// Groups without a center fall back to the distance to the target.
double center_distance(const GroupInfo& info, int m,
                       const DistanceMatrix& dist) {
  if (!info.region || !info.region->center) return dist(*info.target, m);
  const ApolloniusRegion& region = *info.region;
  const int a = region.focus_a.id;
  const int b = region.focus_b.id;
  const double k2 = region.k * region.k;
  const double alpha = 1.0 / (1.0 - k2);
  const double beta = -k2 / (1.0 - k2);
  const double sq = alpha * dist(m, a) * dist(m, a) +
                    beta * dist(m, b) * dist(m, b) -
                    alpha * beta * dist(a, b) * dist(a, b);
  return std::sqrt(std::max(sq, 0.0));
}

// Mean-distance reassignment shared by the uncovered and overlap passes.
// Memberships are frozen for the duration of one pass.
void reassign_points(AssignmentDraft& draft, const DistanceMatrix& dist,
                     const std::vector<int>& queue,
                     const std::vector<std::vector<int>>* candidate_groups,
                     Provenance tag) {
  Partition& part = draft.partition;
  const auto members = part.group_members();
  const int group_count = static_cast<int>(part.groups.size());

  for (int m : queue) {
    int best = -1;
    double best_mean = std::numeric_limits<double>::infinity();
    double best_center = std::numeric_limits<double>::infinity();
    auto consider = [&](int g) {
      const auto& mem = members[g];
      if (mem.empty()) return;
      double sum = 0.0;
      for (int j : mem) sum += dist(m, j);
      const double mean = sum / static_cast<double>(mem.size());
      if (mean > best_mean) return;
      const double center_d = center_distance(part.groups[g], m, dist);
      // ties on the mean fall to the center distance; ties on both keep the
      // lower group id, which is the one already stored
      if (mean < best_mean || center_d < best_center) {
        best = g;
        best_mean = mean;
        best_center = center_d;
      }
    };
    if (candidate_groups) {
      for (int g : (*candidate_groups)[m]) consider(g);
    } else {
      for (int g = 0; g < group_count; ++g) consider(g);
    }
    part.assignments[m] = best;
    part.provenance[m] = tag;
  }
}

}  // namespace

void reassign_uncovered(AssignmentDraft& draft, const DistanceMatrix& dist) {
  std::vector<int> queue = draft.uncovered;
  std::sort(queue.begin(), queue.end());
  reassign_points(draft, dist, queue, nullptr,
                  Provenance::ReassignedUncovered);
  draft.uncovered.clear();
}

Partition resolve_overlaps(AssignmentDraft&& draft,
                           const DistanceMatrix& dist) {
  std::vector<int> queue = draft.overlaps;
  std::sort(queue.begin(), queue.end());
  reassign_points(draft, dist, queue, &draft.containing,
                  Provenance::ReassignedOverlap);
  draft.overlaps.clear();

  Partition part = std::move(draft.partition);
  std::sort(part.outliers.begin(), part.outliers.end());
  for (int i = 0; i < part.size(); ++i)
    if (part.assignments[i] == kUnassigned)
      throw std::logic_error("resolve_overlaps: unassigned point remains");
  return part;
}

namespace {

Partition trivial_partition(const DataSet& data, int target) {
  Partition part;
  part.assignments.assign(data.n, 0);
  part.provenance.assign(data.n, Provenance::Member);
  part.provenance[target] = Provenance::Target;
  part.groups.push_back({0, target, std::nullopt});
  return part;
}

}  // namespace

Partition run_ncar(const DataSet& data, const NcarParams& params) {
  if (data.n < 2) throw std::invalid_argument("run_ncar: need n >= 2");
  const DistanceMatrix dist = distance_matrix(data);
  auto [rho, r] = local_density(dist, params.p);
  (void)r;
  const DeltaScore ds = delta_and_score(dist, rho);

  std::vector<int> targets;
  if (params.target_count) {
    targets = select_targets(ds.score, params.target_count);
  } else {
    try {
      targets = select_targets(ds.score);
    } catch (const EmptySelection&) {
      return trivial_partition(data, 0);  // all points coincide
    }
  }
  if (targets.size() == 1) return trivial_partition(data, targets[0]);

  std::vector<char> is_target(data.n, 0);
  for (int t : targets) is_target[t] = 1;
  std::vector<int> non_targets;
  non_targets.reserve(data.n - targets.size());
  for (int i = 0; i < data.n; ++i)
    if (!is_target[i]) non_targets.push_back(i);

  const auto pairings = pair_targets(targets, dist);
  std::vector<std::optional<FarthestPoint>> fps(pairings.size());
  for (std::size_t i = 0; i < pairings.size(); ++i)
    fps[i] = farthest_admissible(pairings[i], dist, targets, non_targets);
  const auto regions = build_group_regions(pairings, fps, data);

  AssignmentDraft draft = initial_assignment(regions, data, pairings);
  detect_outliers(dist, pairings, draft);
  reassign_uncovered(draft, dist);
  return resolve_overlaps(std::move(draft), dist);
}

std::vector<KSequenceEntry> k_sequence_diagnostic(
    const TargetPairing& pairing, const DistanceMatrix& dist,
    std::span<const int> non_targets) {
  std::vector<int> remaining;
  for (int m : non_targets)
    if (dist(pairing.target, m) < pairing.pair_distance)
      remaining.push_back(m);

  std::vector<double> ks;
  while (!remaining.empty()) {
    double fd = -1.0;
    for (int m : remaining) fd = std::max(fd, dist(pairing.target, m));
    int representative = -1;
    std::vector<int> next;
    next.reserve(remaining.size());
    for (int m : remaining) {
      if (dist(pairing.target, m) == fd) {
        if (representative < 0) representative = m;
      } else {
        next.push_back(m);
      }
    }
    const double dpm = dist(pairing.partner, representative);
    if (dpm > kCoincidentTol)
      ks.push_back(dist(pairing.target, representative) / dpm);
    remaining = std::move(next);
  }

  const int j = static_cast<int>(ks.size());
  std::vector<KSequenceEntry> out(j);
  for (int l = 0; l < j; ++l) {
    const int count = j - l;
    double mean = 0.0;
    for (int i = l; i < j; ++i) mean += ks[i];
    mean /= count;
    double variance = 0.0;
    if (count > 1) {
      for (int i = l; i < j; ++i) variance += (ks[i] - mean) * (ks[i] - mean);
      variance /= count - 1;
    }
    out[l] = {ks[l], mean, variance};
  }
  return out;
}

}  // namespace ncar
