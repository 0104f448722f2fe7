#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncar/density.hpp"
#include "ncar/geometry.hpp"

namespace ncar {

enum class DataSource { CsvFile, Generator, Fixture };

/// Immutable point matrix (n rows x dim features) with optional class labels.
/// Label strings are mapped to dense integer ids in load order; label_names
/// maps an id back to its original string.
struct DataSet {
  std::string name;
  int n = 0;
  int dim = 0;
  std::vector<double> values;  // row-major
  std::optional<std::vector<int>> labels;
  std::vector<std::string> label_names;
  DataSource source = DataSource::Generator;
  std::string note;

  std::span<const double> row(int i) const {
    return {values.data() + static_cast<std::size_t>(i) * dim,
            static_cast<std::size_t>(dim)};
  }
  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * dim + j];
  }
  Point point(int i) const {
    auto r = row(i);
    return Point{{r.begin(), r.end()}, i};
  }
  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(point(i));
    return out;
  }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int row_, int column_)
      : std::runtime_error(msg), row(row_), column(column_) {}
  int row;     // 1-based; 0 for file-level problems
  int column;  // 1-based; 0 when not applicable
};

struct NonNumericFeature : ParseError {
  using ParseError::ParseError;
};

struct EmptyDataset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// CSV profile: comma delimiter, '.' decimal point, optional single header
/// line, UTF-8. label_column selects the class column; negative values count
/// from the end (-1 = last). No label column when unset.
struct CsvOptions {
  std::optional<int> label_column;
  char delimiter = ',';
  bool header = false;
};

DataSet load_csv(const std::string& path, const CsvOptions& options = {});

/// Writes the dataset in the same profile load_csv reads. Feature values use
/// shortest round-trip formatting, so save-then-load reproduces them exactly.
void save_csv(const DataSet& data, const std::string& path,
              bool header = false);

/// Transforms each feature column to mean 0 and population standard
/// deviation 1; zero-variance columns become all-zeros.
DataSet normalize_zscore(const DataSet& data);

/// Gaussian clusters with centers on concentric rings: the first center sits
/// at the origin; up to 7 further centers share one ring of the given radius,
/// and larger counts split between an inner ring at half radius and the outer
/// ring (15 clusters -> 1 + 7 + 7). Labels are cluster ids.
DataSet generate_gaussian_rings(int cluster_count, int points_per_cluster,
                                double ring_radius, double sigma,
                                std::uint64_t seed);

struct BlobSpec {
  std::vector<double> center;
  double sigma = 1.0;
  int count = 0;
};

/// Gaussian blobs plus outlier_count far points placed at least
/// placement_distance from every blob center (the outliers are the trailing
/// rows and carry the reserved label id = number of blobs).
/// placement_distance must exceed the largest blob diameter, taken as
/// 6 * sigma.
DataSet generate_blobs_with_outliers(std::span<const BlobSpec> blobs,
                                     int outlier_count,
                                     double placement_distance,
                                     std::uint64_t seed);

/// The ten-point 2D worked-example layout. With p = 0.2 and three targets the
/// pipeline selects points {1, 5, 8} (1-based), finds point 4 as the farthest
/// point of target 1, forms initial group {2, 3, 4} around it, and flags
/// point 10 as the outlier.
DataSet fig8_fixture();

DistanceMatrix distance_matrix(const DataSet& data);

}  // namespace ncar
