#include "ncar/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ncar/baselines.hpp"

namespace ncar {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return {buf, ptr};
}

}  // namespace

bool is_known_algorithm(const std::string& name) {
  return name == "ncar" || name == "knn1" || name == "knn2" ||
         name == "epsilon" || name == "dpc";
}

Partition run_algorithm(const DataSet& data, const AlgorithmConfig& config) {
  if (config.name == "ncar")
    return run_ncar(data, {config.p, config.target_count});
  if (config.name == "knn1")
    return knn_graph_groups(data, config.k_fraction.value_or(0.05));
  if (config.name == "knn2")
    return knn_graph_groups(data, config.k_fraction.value_or(0.10));
  if (config.name == "epsilon") return epsilon_groups(data, config.epsilon);
  if (config.name == "dpc") {
    if (!config.target_count)
      throw std::invalid_argument("dpc needs a center count (targets)");
    return dpc_nearest_center(data, config.p, *config.target_count);
  }
  throw std::invalid_argument("unknown algorithm: " + config.name);
}

EvaluationResult evaluate(const DataSet& data, const AlgorithmConfig& config,
                          int repeats) {
  if (repeats < 1) repeats = 1;
  using clock = std::chrono::steady_clock;

  EvaluationResult result;
  std::vector<double> times;
  times.reserve(repeats);
  for (int rep = 0; rep < repeats; ++rep) {
    const auto start = clock::now();
    Partition part = run_algorithm(data, config);
    const auto stop = clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
    if (rep == 0) result.partition = std::move(part);
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  const double median = times.size() % 2 == 1
                            ? times[mid]
                            : 0.5 * (times[mid - 1] + times[mid]);

  MetricsReport& report = result.report;
  report.algorithm = config.name;
  report.dataset = data.name;
  report.runtime_seconds = median;
  report.params.emplace_back("p", format_double(config.p));
  if (config.target_count)
    report.params.emplace_back("targets", std::to_string(*config.target_count));
  if (config.epsilon)
    report.params.emplace_back("epsilon", format_double(*config.epsilon));
  if (config.k_fraction)
    report.params.emplace_back("k_fraction", format_double(*config.k_fraction));

  const DistanceMatrix dist = distance_matrix(data);
  report.vn = variability_neighborhood(result.partition, dist);
  if (data.labels) {
    report.ri = rand_index(result.partition.assignments, *data.labels);
    report.sn = similarity_neighborhood(result.partition, *data.labels);
  }
  return result;
}

namespace {

double parse_num(const std::string& text, const std::string& what) {
  double v;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + what + " in generator spec: " + text);
  return v;
}

}  // namespace

DataSet generate_from_spec(const std::string& spec) {
  if (spec == "fig8") return fig8_fixture();

  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
  if (parts.size() < 2)
    throw std::invalid_argument("generator spec needs kind:<count>x<per>");

  const std::size_t x = parts[1].find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("generator spec needs <count>x<per>: " + spec);
  const int count = static_cast<int>(parse_num(parts[1].substr(0, x), "count"));
  const int per = static_cast<int>(parse_num(parts[1].substr(x + 1), "per"));

  double radius = 10.0, sigma = 0.0, sep = 8.0, odist = 0.0;
  int outliers = 0;
  std::uint64_t seed = 42;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const std::size_t eq = parts[i].find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("generator option needs key=value: " +
                                  parts[i]);
    const std::string key = parts[i].substr(0, eq);
    const std::string val = parts[i].substr(eq + 1);
    if (key == "radius")
      radius = parse_num(val, key);
    else if (key == "sigma")
      sigma = parse_num(val, key);
    else if (key == "sep")
      sep = parse_num(val, key);
    else if (key == "outliers")
      outliers = static_cast<int>(parse_num(val, key));
    else if (key == "odist")
      odist = parse_num(val, key);
    else if (key == "seed")
      seed = static_cast<std::uint64_t>(parse_num(val, key));
    else
      throw std::invalid_argument("unknown generator option: " + key);
  }

  if (parts[0] == "rings") {
    if (sigma == 0.0) sigma = 0.4;
    return generate_gaussian_rings(count, per, radius, sigma, seed);
  }
  if (parts[0] == "blobs") {
    if (sigma == 0.0) sigma = 0.5;
    std::vector<BlobSpec> blobs;
    constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
    for (int b = 0; b < count; ++b) {
      BlobSpec blob;
      if (count == 1) {
        blob.center = {0.0, 0.0};
      } else {
        const double a = kTwoPi * b / count;
        blob.center = {sep * std::cos(a), sep * std::sin(a)};
      }
      blob.sigma = sigma;
      blob.count = per;
      blobs.push_back(std::move(blob));
    }
    if (odist == 0.0) odist = 10.0 * 6.0 * sigma;
    DataSet data = generate_blobs_with_outliers(blobs, outliers, odist, seed);
    data.name = spec;
    return data;
  }
  throw std::invalid_argument("unknown generator kind: " + parts[0]);
}

BenchSuite load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("manifest parse error: " + std::string(e.what()));
  }

  BenchSuite suite;
  suite.repeats = doc.value("repeats", 3);
  for (const auto& d : doc.value("datasets", nlohmann::json::array())) {
    ManifestDataset entry;
    entry.path = d.value("path", "");
    entry.generator = d.value("generator", "");
    entry.name = d.value("name", entry.path.empty() ? entry.generator
                                                    : entry.path);
    if (d.contains("label_column")) {
      if (d["label_column"].is_null())
        entry.label_column = std::nullopt;
      else
        entry.label_column = d["label_column"].get<int>();
    }
    entry.header = d.value("header", false);
    entry.normalize = d.value("normalize", false);
    suite.datasets.push_back(std::move(entry));
  }
  for (const auto& a : doc.value("algorithms", nlohmann::json::array())) {
    AlgorithmConfig config;
    config.name = a.value("name", "");
    config.p = a.value("p", 0.05);
    if (a.contains("targets")) config.target_count = a["targets"].get<int>();
    if (a.contains("epsilon")) config.epsilon = a["epsilon"].get<double>();
    if (a.contains("k_fraction"))
      config.k_fraction = a["k_fraction"].get<double>();
    suite.algorithms.push_back(std::move(config));
  }
  return suite;
}

std::vector<BenchRow> run_bench(const BenchSuite& suite) {
  std::vector<BenchRow> rows;
  for (const ManifestDataset& entry : suite.datasets) {
    DataSet data;
    std::string load_error;
    try {
      if (!entry.generator.empty()) {
        data = generate_from_spec(entry.generator);
      } else {
        CsvOptions options;
        options.label_column = entry.label_column;
        options.header = entry.header;
        data = load_csv(entry.path, options);
      }
      if (!entry.name.empty()) data.name = entry.name;
      if (entry.normalize) data = normalize_zscore(data);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (const AlgorithmConfig& config : suite.algorithms) {
      BenchRow row;
      row.dataset = entry.name;
      row.algorithm = config.name;
      if (!load_error.empty()) {
        row.error = load_error;
      } else {
        try {
          row.report = evaluate(data, config, suite.repeats).report;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out,
                       bool include_timing) {
  out << "dataset,algorithm,ri,sn,vn,runtime_seconds,status\n";
  for (const BenchRow& row : rows) {
    out << row.dataset << ',' << row.algorithm << ',';
    if (row.report) {
      const MetricsReport& r = *row.report;
      out << (r.ri ? format_double(*r.ri) : "") << ','
          << (r.sn ? format_double(*r.sn) : "") << ',' << format_double(r.vn)
          << ','
          << (include_timing ? format_double(r.runtime_seconds) : "-")
          << ",ok\n";
    } else {
      std::string msg = row.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      out << ",,,-,error: " << msg << '\n';
    }
  }
}

}  // namespace ncar
