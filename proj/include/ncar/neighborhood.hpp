#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncar/dataset.hpp"
#include "ncar/density.hpp"
#include "ncar/geometry.hpp"

namespace ncar {

/// Thrown by pair_targets for a single target; callers fall back to the
/// trivial one-group partition.
struct SingleTarget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A target point paired with its nearest other target.
struct TargetPairing {
  int target = -1;
  int partner = -1;
  double pair_distance = 0.0;
};

enum class Provenance {
  Target,
  InsideCircle,
  ReassignedUncovered,
  ReassignedOverlap,
  Outlier,
  Member,  // baseline assignments and the trivial single-target partition
};

inline constexpr int kOutlierGroup = -1;
inline constexpr int kUnassigned = -2;

struct GroupInfo {
  int id = -1;
  std::optional<int> target;
  std::optional<ApolloniusRegion> region;
};

/// Final grouping: one group id (or kOutlierGroup) per point, one group per
/// target, and the outlier set, with a per-point provenance tag.
struct Partition {
  std::vector<int> assignments;
  std::vector<GroupInfo> groups;
  std::vector<int> outliers;  // sorted ascending
  std::vector<Provenance> provenance;

  int size() const { return static_cast<int>(assignments.size()); }
  std::vector<std::vector<int>> group_members() const;
};

/// Pairs every target with its nearest other target (ties to the lower
/// index); the result is sorted ascending by pair distance, then by target.
std::vector<TargetPairing> pair_targets(std::span<const int> targets,
                                        const DistanceMatrix& dist);

struct FarthestPoint {
  int index = -1;
  double distance = 0.0;
};

/// The farthest admissible point of a target: maximizes d(target, m) over
/// non-targets m with (a) d(target, m) < pair_distance and (b) m strictly
/// closer to this target than to every other target. Absent when no point
/// qualifies (isolated target).
std::optional<FarthestPoint> farthest_admissible(
    const TargetPairing& pairing, const DistanceMatrix& dist,
    std::span<const int> targets, std::span<const int> non_targets);

/// Builds each group's Apollonius region from its farthest point:
/// k = d(target, fp) / d(fp, partner) with foci (target, partner), so the
/// region encloses the target. Targets without a farthest point get none.
std::vector<std::optional<ApolloniusRegion>> build_group_regions(
    std::span<const TargetPairing> pairings,
    std::span<const std::optional<FarthestPoint>> fps, const DataSet& data);

/// Partition under construction plus the queues the later passes consume.
struct AssignmentDraft {
  Partition partition;
  std::vector<int> uncovered;  // inside no region, pending reassignment
  std::vector<int> overlaps;   // inside two or more regions
  std::vector<std::vector<int>> containing;  // point -> covering group ids
};

/// Assigns targets to their own groups and every non-target covered by
/// exactly one region (boundary included, so the farthest point that fixed a
/// circle belongs to it) to that group; queues uncovered and overlap points.
AssignmentDraft initial_assignment(
    std::span<const std::optional<ApolloniusRegion>> regions,
    const DataSet& data, std::span<const TargetPairing> pairings);

/// Flags an uncovered point as Outlier when its distance to its nearest
/// target is at least that target's pair distance, i.e. it is inadmissible
/// for every circle. Outliers leave the reassignment queue.
void detect_outliers(const DistanceMatrix& dist,
                     std::span<const TargetPairing> pairings,
                     AssignmentDraft& draft);

/// Assigns each queued uncovered point to the group with the smallest mean
/// distance to its current members; ties fall to the distance to the group's
/// region center (target when absent), then the lower group id. Single pass
/// over ascending point indices against frozen memberships.
void reassign_uncovered(AssignmentDraft& draft, const DistanceMatrix& dist);

/// Resolves points covered by two or more regions among exactly those groups
/// using the same rule and tie-breaks as reassign_uncovered; returns the
/// finished partition.
Partition resolve_overlaps(AssignmentDraft&& draft, const DistanceMatrix& dist);

struct NcarParams {
  double p = 0.05;
  std::optional<int> target_count;
};

/// Full pipeline: density profile, target selection, pairing, farthest
/// points, Apollonius regions, initial assignment, outlier detection and the
/// two reassignment passes. Deterministic for a fixed input. A dataset whose
/// scores are all zero (all points coincident) yields one group.
Partition run_ncar(const DataSet& data, const NcarParams& params = {});

struct KSequenceEntry {
  double k = 0.0;
  double mean = 0.0;      // mean of the sequence from this stage onward
  double variance = 0.0;  // sample variance of the same tail, 0 for the last
};

/// Observational diagnostic: repeatedly removes the farthest-point set among
/// the points within the pairing's distance and records the ratio
/// k = d(target, m) / d(partner, m) per stage, with the tail mean and
/// variance from each stage onward. Never alters a partition.
std::vector<KSequenceEntry> k_sequence_diagnostic(
    const TargetPairing& pairing, const DistanceMatrix& dist,
    std::span<const int> non_targets);

}  // namespace ncar
