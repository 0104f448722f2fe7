#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncar/dataset.hpp"
#include "ncar/metrics.hpp"
#include "ncar/neighborhood.hpp"

namespace ncar {

/// Algorithm selection for the CLI and the bench harness. Valid names:
/// ncar, knn1, knn2, epsilon, dpc.
struct AlgorithmConfig {
  std::string name = "ncar";
  double p = 0.05;
  std::optional<int> target_count;   // ncar targets / dpc centers
  std::optional<double> epsilon;     // epsilon baseline override
  std::optional<double> k_fraction;  // knn override
};

bool is_known_algorithm(const std::string& name);

Partition run_algorithm(const DataSet& data, const AlgorithmConfig& config);

struct EvaluationResult {
  Partition partition;
  MetricsReport report;
};

/// Runs the algorithm `repeats` times on the in-memory dataset, records the
/// median wall-clock time of the algorithm call alone, and computes VN plus
/// RI/SN when the dataset has labels.
EvaluationResult evaluate(const DataSet& data, const AlgorithmConfig& config,
                          int repeats = 3);

/// Builds a dataset from a generator spec string:
///   rings:<clusters>x<per>[:radius=R][:sigma=S][:seed=N]
///   blobs:<blobs>x<per>[:sigma=S][:sep=D][:outliers=K][:odist=D][:seed=N]
///   fig8
DataSet generate_from_spec(const std::string& spec);

/// One dataset entry of a bench manifest: either a CSV path or a generator
/// spec, with loading options.
struct ManifestDataset {
  std::string name;
  std::string path;       // CSV source when non-empty
  std::string generator;  // generator spec when non-empty
  std::optional<int> label_column = -1;
  bool header = false;
  bool normalize = false;
};

struct BenchRow {
  std::string dataset;
  std::string algorithm;
  std::optional<MetricsReport> report;  // empty on failure
  std::string error;
};

struct BenchSuite {
  std::vector<ManifestDataset> datasets;
  std::vector<AlgorithmConfig> algorithms;
  int repeats = 3;
};

/// Parses the JSON manifest; throws std::runtime_error with a description on
/// malformed input.
BenchSuite load_manifest(const std::string& path);

/// Runs the full dataset x algorithm grid in manifest order. Failures are
/// recorded per-row and never abort the suite.
std::vector<BenchRow> run_bench(const BenchSuite& suite);

/// CSV comparison table, one row per (dataset, algorithm). With
/// include_timing false the runtime column is written as "-" so repeated
/// runs produce byte-identical files.
void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out,
                       bool include_timing = true);

}  // namespace ncar
