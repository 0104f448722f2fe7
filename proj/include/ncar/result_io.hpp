#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ncar/metrics.hpp"

namespace ncar {

struct CircleRecord {
  int group = -1;
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
};

/// Everything one `run` invocation produced, serializable to the line
/// oriented result format:
///
///   ncar-result v1
///   key=value            (metadata block; `circle` may repeat)
///   points=<n>
///   <point_id>,<group or "outlier">   (n lines)
///
/// Numbers use shortest round-trip formatting, so parsing a written file
/// reproduces the result exactly.
struct RunResult {
  std::string algorithm;
  std::string dataset;
  std::string source;  // csv:<path>, gen:<spec> or fixture:<name>
  int n = 0;
  int dim = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::optional<double> ri;
  std::optional<double> sn;
  double vn = 0.0;
  double runtime_seconds = 0.0;
  std::vector<int> targets;
  std::vector<CircleRecord> circles;  // recorded for 2D runs only
  std::vector<int> assignments;       // group id or kOutlierGroup
};

struct ResultFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_run_result(const RunResult& result, std::ostream& out);
void write_run_result(const RunResult& result, const std::string& path);
RunResult read_run_result(std::istream& in);
RunResult read_run_result(const std::string& path);

/// Assembles a RunResult from an evaluation; extracts targets and, for 2D
/// data, the Apollonius circles of the partition's groups.
RunResult make_run_result(const DataSet& data, const Partition& partition,
                          const MetricsReport& report,
                          const std::string& source,
                          std::vector<std::pair<std::string, std::string>>
                              config);

}  // namespace ncar
