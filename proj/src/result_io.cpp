#include "ncar/result_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ncar {

namespace {

constexpr const char* kHeader = "ncar-result v1";

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return {buf, ptr};
}

double parse_double(std::string_view text, const char* what) {
  double v;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ResultFormatError(std::string("bad number for ") + what + ": " +
                            std::string(text));
  return v;
}

long parse_int(std::string_view text, const char* what) {
  long v;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ResultFormatError(std::string("bad integer for ") + what + ": " +
                            std::string(text));
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void write_run_result(const RunResult& result, std::ostream& out) {
  out << kHeader << '\n';
  out << "algorithm=" << result.algorithm << '\n';
  out << "dataset=" << result.dataset << '\n';
  out << "source=" << result.source << '\n';
  out << "n=" << result.n << '\n';
  out << "dim=" << result.dim << '\n';
  for (const auto& [key, value] : result.config)
    out << "config." << key << '=' << value << '\n';
  if (result.ri) out << "ri=" << format_double(*result.ri) << '\n';
  if (result.sn) out << "sn=" << format_double(*result.sn) << '\n';
  out << "vn=" << format_double(result.vn) << '\n';
  out << "runtime_seconds=" << format_double(result.runtime_seconds) << '\n';
  out << "targets=";
  for (std::size_t i = 0; i < result.targets.size(); ++i) {
    if (i) out << ',';
    out << result.targets[i];
  }
  out << '\n';
  for (const CircleRecord& c : result.circles)
    out << "circle=" << c.group << ',' << format_double(c.cx) << ','
        << format_double(c.cy) << ',' << format_double(c.radius) << '\n';
  out << "points=" << result.assignments.size() << '\n';
  for (std::size_t i = 0; i < result.assignments.size(); ++i) {
    out << i << ',';
    if (result.assignments[i] == kOutlierGroup)
      out << "outlier";
    else
      out << result.assignments[i];
    out << '\n';
  }
}

void write_run_result(const RunResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw ResultFormatError("cannot open result file for writing: " + path);
  write_run_result(result, out);
}

RunResult read_run_result(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw ResultFormatError("missing result header '" + std::string(kHeader) +
                            "'");

  RunResult result;
  long point_count = -1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ResultFormatError("expected key=value line, got: " + line);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "algorithm") {
      result.algorithm = value;
    } else if (key == "dataset") {
      result.dataset = value;
    } else if (key == "source") {
      result.source = value;
    } else if (key == "n") {
      result.n = static_cast<int>(parse_int(value, "n"));
    } else if (key == "dim") {
      result.dim = static_cast<int>(parse_int(value, "dim"));
    } else if (key.rfind("config.", 0) == 0) {
      result.config.emplace_back(key.substr(7), value);
    } else if (key == "ri") {
      result.ri = parse_double(value, "ri");
    } else if (key == "sn") {
      result.sn = parse_double(value, "sn");
    } else if (key == "vn") {
      result.vn = parse_double(value, "vn");
    } else if (key == "runtime_seconds") {
      result.runtime_seconds = parse_double(value, "runtime_seconds");
    } else if (key == "targets") {
      if (!value.empty())
        for (auto part : split(value, ','))
          result.targets.push_back(
              static_cast<int>(parse_int(part, "targets")));
    } else if (key == "circle") {
      const auto parts = split(value, ',');
      if (parts.size() != 4)
        throw ResultFormatError("circle needs group,cx,cy,radius: " + value);
      CircleRecord c;
      c.group = static_cast<int>(parse_int(parts[0], "circle group"));
      c.cx = parse_double(parts[1], "circle cx");
      c.cy = parse_double(parts[2], "circle cy");
      c.radius = parse_double(parts[3], "circle radius");
      result.circles.push_back(c);
    } else if (key == "points") {
      point_count = parse_int(value, "points");
      break;
    } else {
      throw ResultFormatError("unknown result key: " + key);
    }
  }
  if (point_count < 0)
    throw ResultFormatError("result file has no points section");

  result.assignments.assign(point_count, kUnassigned);
  for (long i = 0; i < point_count; ++i) {
    if (!std::getline(in, line))
      throw ResultFormatError("points section ended early at line " +
                              std::to_string(i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto parts = split(line, ',');
    if (parts.size() != 2)
      throw ResultFormatError("point line needs id,group: " + line);
    const long id = parse_int(parts[0], "point id");
    if (id < 0 || id >= point_count)
      throw ResultFormatError("point id out of range: " + line);
    result.assignments[id] = parts[1] == "outlier"
                                 ? kOutlierGroup
                                 : static_cast<int>(
                                       parse_int(parts[1], "point group"));
  }
  return result;
}

RunResult read_run_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResultFormatError("cannot open result file: " + path);
  return read_run_result(in);
}

RunResult make_run_result(
    const DataSet& data, const Partition& partition,
    const MetricsReport& report, const std::string& source,
    std::vector<std::pair<std::string, std::string>> config) {
  RunResult result;
  result.algorithm = report.algorithm;
  result.dataset = data.name;
  result.source = source;
  result.n = data.n;
  result.dim = data.dim;
  result.config = std::move(config);
  result.ri = report.ri;
  result.sn = report.sn;
  result.vn = report.vn;
  result.runtime_seconds = report.runtime_seconds;
  result.assignments = partition.assignments;
  for (const GroupInfo& group : partition.groups) {
    if (group.target) result.targets.push_back(*group.target);
    if (data.dim == 2 && group.region && group.region->center)
      result.circles.push_back({group.id, (*group.region->center)[0],
                                (*group.region->center)[1],
                                *group.region->radius});
  }
  return result;
}

}  // namespace ncar
