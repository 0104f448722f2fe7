#include "ncar/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "ncar/rng.hpp"

namespace ncar {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return {buf, ptr};
}

bool parse_double(std::string_view token, double& out) {
  // trim ASCII whitespace
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
    token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
    token.remove_suffix(1);
  if (token.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() &&
         std::isfinite(out);
}

std::vector<std::string_view> split_line(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

DataSet load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 0, 0);

  DataSet data;
  data.source = DataSource::CsvFile;
  const std::size_t slash = path.find_last_of("/\\");
  std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = stem.find_last_of('.');
  data.name = dot == std::string::npos ? stem : stem.substr(0, dot);

  std::unordered_map<std::string, int> label_ids;
  std::vector<int> labels;
  std::string line;
  int file_row = 0;
  int columns = -1;
  int label_col = -1;  // resolved 0-based feature-file column, -1 = none
  bool skipped_header = false;

  while (std::getline(in, line)) {
    ++file_row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (options.header && !skipped_header) {
      skipped_header = true;
      continue;
    }
    auto tokens = split_line(line, options.delimiter);
    if (columns < 0) {
      columns = static_cast<int>(tokens.size());
      if (options.label_column) {
        int c = *options.label_column;
        if (c < 0) c += columns;
        if (c < 0 || c >= columns)
          throw ParseError("label column out of range", file_row, 0);
        label_col = c;
      }
      data.dim = columns - (label_col >= 0 ? 1 : 0);
      if (data.dim < 1)
        throw EmptyDataset("load_csv: no feature columns in " + path);
    } else if (static_cast<int>(tokens.size()) != columns) {
      throw ParseError("row has " + std::to_string(tokens.size()) +
                           " fields, expected " + std::to_string(columns),
                       file_row, static_cast<int>(tokens.size()));
    }
    for (int c = 0; c < columns; ++c) {
      if (c == label_col) {
        std::string key(tokens[c]);
        auto [it, inserted] =
            label_ids.try_emplace(key, static_cast<int>(label_ids.size()));
        if (inserted) data.label_names.push_back(key);
        labels.push_back(it->second);
        continue;
      }
      double v;
      if (!parse_double(tokens[c], v))
        throw NonNumericFeature("non-numeric feature value '" +
                                    std::string(tokens[c]) + "'",
                                file_row, c + 1);
      data.values.push_back(v);
    }
    ++data.n;
  }

  if (data.n < 2)
    throw EmptyDataset("load_csv: need at least 2 data rows in " + path);
  if (label_col >= 0) data.labels = std::move(labels);
  return data;
}

void save_csv(const DataSet& data, const std::string& path, bool header) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path, 0, 0);
  if (header) {
    for (int j = 0; j < data.dim; ++j) {
      if (j) out << ',';
      out << 'f' << j;
    }
    if (data.labels) out << ",label";
    out << '\n';
  }
  for (int i = 0; i < data.n; ++i) {
    for (int j = 0; j < data.dim; ++j) {
      if (j) out << ',';
      out << format_double(data.at(i, j));
    }
    if (data.labels) {
      const int id = (*data.labels)[i];
      out << ',';
      if (id >= 0 && id < static_cast<int>(data.label_names.size()))
        out << data.label_names[id];
      else
        out << id;
    }
    out << '\n';
  }
}

DataSet normalize_zscore(const DataSet& data) {
  if (data.n < 2) throw std::invalid_argument("normalize_zscore: need n >= 2");
  DataSet out = data;
  for (int j = 0; j < data.dim; ++j) {
    double mean = 0.0;
    for (int i = 0; i < data.n; ++i) mean += data.at(i, j);
    mean /= data.n;
    double var = 0.0;
    for (int i = 0; i < data.n; ++i) {
      const double d = data.at(i, j) - mean;
      var += d * d;
    }
    var /= data.n;
    const double sd = std::sqrt(var);
    for (int i = 0; i < data.n; ++i) {
      double& v = out.values[static_cast<std::size_t>(i) * data.dim + j];
      v = sd == 0.0 ? 0.0 : (v - mean) / sd;
    }
  }
  return out;
}

DataSet generate_gaussian_rings(int cluster_count, int points_per_cluster,
                                double ring_radius, double sigma,
                                std::uint64_t seed) {
  if (cluster_count < 1)
    throw std::invalid_argument("generate_gaussian_rings: cluster_count >= 1");
  if (!(sigma > 0.0))
    throw std::invalid_argument("generate_gaussian_rings: sigma > 0");

  constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
  std::vector<std::pair<double, double>> centers;
  centers.emplace_back(0.0, 0.0);
  const int rest = cluster_count - 1;
  if (rest > 0 && rest <= 7) {
    for (int i = 0; i < rest; ++i) {
      const double a = kTwoPi * i / rest;
      centers.emplace_back(ring_radius * std::cos(a),
                           ring_radius * std::sin(a));
    }
  } else if (rest > 7) {
    const int inner = (rest + 1) / 2;
    const int outer = rest - inner;
    for (int i = 0; i < inner; ++i) {
      const double a = kTwoPi * i / inner;
      centers.emplace_back(0.5 * ring_radius * std::cos(a),
                           0.5 * ring_radius * std::sin(a));
    }
    for (int i = 0; i < outer; ++i) {
      // stagger the outer ring against the inner one
      const double a = kTwoPi * i / outer + kTwoPi / (2.0 * outer);
      centers.emplace_back(ring_radius * std::cos(a),
                           ring_radius * std::sin(a));
    }
  }

  DataSet data;
  data.source = DataSource::Generator;
  data.name = "rings-" + std::to_string(cluster_count) + "x" +
              std::to_string(points_per_cluster);
  data.dim = 2;
  data.labels.emplace();
  Rng rng(seed);
  for (int c = 0; c < cluster_count; ++c) {
    data.label_names.push_back("c" + std::to_string(c));
    for (int i = 0; i < points_per_cluster; ++i) {
      data.values.push_back(centers[c].first + sigma * rng.gaussian());
      data.values.push_back(centers[c].second + sigma * rng.gaussian());
      data.labels->push_back(c);
      ++data.n;
    }
  }
  return data;
}

DataSet generate_blobs_with_outliers(std::span<const BlobSpec> blobs,
                                     int outlier_count,
                                     double placement_distance,
                                     std::uint64_t seed) {
  if (blobs.empty())
    throw std::invalid_argument("generate_blobs_with_outliers: no blobs");
  const std::size_t dim = blobs[0].center.size();
  double sigma_max = 0.0;
  for (const BlobSpec& b : blobs) {
    if (b.center.size() != dim)
      throw DimensionMismatch("blob centers differ in dimension");
    sigma_max = std::max(sigma_max, b.sigma);
  }
  if (outlier_count > 0 && !(placement_distance > 6.0 * sigma_max))
    throw std::invalid_argument(
        "generate_blobs_with_outliers: placement_distance must exceed the "
        "largest blob diameter (6 * sigma)");

  DataSet data;
  data.source = DataSource::Generator;
  data.name = "blobs-" + std::to_string(blobs.size());
  data.dim = static_cast<int>(dim);
  data.labels.emplace();

  Rng rng(seed);
  for (std::size_t b = 0; b < blobs.size(); ++b) {
    data.label_names.push_back("blob" + std::to_string(b));
    for (int i = 0; i < blobs[b].count; ++i) {
      for (std::size_t d = 0; d < dim; ++d)
        data.values.push_back(blobs[b].center[d] +
                              blobs[b].sigma * rng.gaussian());
      data.labels->push_back(static_cast<int>(b));
      ++data.n;
    }
  }

  if (outlier_count > 0) {
    data.label_names.push_back("outlier");
    const int reserved = static_cast<int>(blobs.size());
    std::vector<double> centroid(dim, 0.0);
    for (const BlobSpec& b : blobs)
      for (std::size_t d = 0; d < dim; ++d)
        centroid[d] += b.center[d] / blobs.size();
    double center_spread = 0.0;
    for (const BlobSpec& b : blobs)
      center_spread =
          std::max(center_spread, euclidean(b.center, centroid));
    for (int j = 0; j < outlier_count; ++j) {
      // random direction; radius guarantees >= placement_distance from
      // every blob center
      std::vector<double> dir(dim);
      double norm = 0.0;
      do {
        norm = 0.0;
        for (double& v : dir) {
          v = rng.gaussian();
          norm += v * v;
        }
        norm = std::sqrt(norm);
      } while (norm <= 1e-12);
      const double radius =
          placement_distance + center_spread + j * std::max(sigma_max, 1.0);
      for (std::size_t d = 0; d < dim; ++d)
        data.values.push_back(centroid[d] + radius * dir[d] / norm);
      data.labels->push_back(reserved);
      ++data.n;
    }
  }
  return data;
}

DataSet fig8_fixture() {
  // Constructed coordinates; the relations they encode (targets, farthest
  // points, initial memberships, the outlier) are the fixed part.
  static const double coords[10][2] = {
      {0.00, 0.00},  // 1: target of the first group
      {0.26, 0.10},  // 2
      {-0.18, 0.28}, // 3
      {0.39, -0.39}, // 4: farthest point of target 1
      {1.55, 0.00},  // 5: target
      {1.70, 0.02},  // 6
      {3.82, 0.05},  // 7
      {3.20, 0.35},  // 8: target
      {3.35, 0.61},  // 9
      {2.00, 8.00},  // 10: outlier
  };
  DataSet data;
  data.source = DataSource::Fixture;
  data.name = "fig8";
  data.n = 10;
  data.dim = 2;
  data.note =
      "Synthetic 10-point layout: with p=0.2 and three targets the pipeline "
      "selects points {1,5,8} (1-based), finds point 4 as the farthest point "
      "of target 1 with initial group {2,3,4}, and flags point 10 as outlier.";
  data.labels.emplace();
  data.label_names = {"g1", "g2", "g3", "noise"};
  static const int classes[10] = {0, 0, 0, 0, 1, 1, 2, 2, 2, 3};
  for (int i = 0; i < 10; ++i) {
    data.values.push_back(coords[i][0]);
    data.values.push_back(coords[i][1]);
    data.labels->push_back(classes[i]);
  }
  return data;
}

DistanceMatrix distance_matrix(const DataSet& data) {
  if (data.n < 2) throw std::invalid_argument("distance_matrix: need n >= 2");
  DistanceMatrix dist(data.n);
  for (int i = 0; i < data.n; ++i) {
    for (int j = i + 1; j < data.n; ++j) {
      const double d = euclidean(data.row(i), data.row(j));
      dist.at(i, j) = d;
      dist.at(j, i) = d;
    }
  }
  return dist;
}

}  // namespace ncar
