// Command-line front end: run one algorithm on a dataset, benchmark a suite
// from a JSON manifest, generate synthetic datasets, and plot 2D partitions
// with their Apollonius circles as SVG.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ncar/bench.hpp"
#include "ncar/dataset.hpp"
#include "ncar/result_io.hpp"
#include "ncar/svg_plot.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct RunArgs {
  std::string data_path;
  std::string gen_spec;
  std::string algo = "ncar";
  double p = 0.05;
  std::optional<int> targets;
  std::optional<double> epsilon;
  std::optional<double> k_fraction;
  std::string label_col = "last";
  bool header = false;
  std::string delimiter = ",";
  bool normalize = false;
  int repeats = 3;
  std::string out;
};

std::string default_out_dir() {
  const char* dir = std::getenv("NCAR_OUT_DIR");
  return dir ? std::string(dir) + "/" : std::string();
}

std::optional<int> parse_label_col(const std::string& text) {
  if (text == "none") return std::nullopt;
  if (text == "last") return -1;
  int v;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw CLI::ValidationError("--label-col",
                               "expected 'last', 'none' or a column index");
  return v;
}

ncar::DataSet load_input(const RunArgs& args, std::string& source) {
  ncar::DataSet data;
  if (!args.gen_spec.empty()) {
    data = ncar::generate_from_spec(args.gen_spec);
    source = (data.source == ncar::DataSource::Fixture ? "fixture:" : "gen:") +
             args.gen_spec;
  } else {
    ncar::CsvOptions options;
    options.label_column = parse_label_col(args.label_col);
    options.header = args.header;
    options.delimiter = args.delimiter.empty() ? ',' : args.delimiter[0];
    data = ncar::load_csv(args.data_path, options);
    source = "csv:" + args.data_path;
  }
  if (args.normalize) data = ncar::normalize_zscore(data);
  return data;
}

int cmd_run(const RunArgs& args) {
  if (!ncar::is_known_algorithm(args.algo)) {
    std::cerr << "unknown algorithm '" << args.algo
              << "' (expected ncar, knn1, knn2, epsilon or dpc)\n";
    return kExitUsage;
  }
  std::string source;
  ncar::DataSet data = load_input(args, source);

  ncar::AlgorithmConfig config;
  config.name = args.algo;
  config.p = args.p;
  config.target_count = args.targets;
  config.epsilon = args.epsilon;
  config.k_fraction = args.k_fraction;

  const ncar::EvaluationResult eval =
      ncar::evaluate(data, config, args.repeats);

  std::vector<std::pair<std::string, std::string>> echo = eval.report.params;
  echo.emplace_back("normalize", args.normalize ? "1" : "0");
  echo.emplace_back("repeats", std::to_string(args.repeats));
  const ncar::RunResult result =
      ncar::make_run_result(data, eval.partition, eval.report, source, echo);

  const std::string out_path =
      args.out.empty() ? default_out_dir() + data.name + ".result" : args.out;
  ncar::write_run_result(result, out_path);

  std::cout << "algorithm=" << args.algo << " dataset=" << data.name
            << " groups=" << eval.partition.groups.size()
            << " outliers=" << eval.partition.outliers.size();
  if (eval.report.ri) std::cout << " ri=" << *eval.report.ri;
  if (eval.report.sn) std::cout << " sn=" << *eval.report.sn;
  std::cout << " vn=" << eval.report.vn
            << " runtime_s=" << eval.report.runtime_seconds << "\nwrote "
            << out_path << '\n';
  return 0;
}

int cmd_bench(const std::string& manifest_path, const std::string& out_path,
              bool omit_timing) {
  const ncar::BenchSuite suite = ncar::load_manifest(manifest_path);
  if (suite.datasets.empty() || suite.algorithms.empty()) {
    std::cerr << "manifest lists no datasets or no algorithms\n";
    return kExitUsage;
  }
  const auto rows = ncar::run_bench(suite);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << '\n';
    return kExitData;
  }
  ncar::write_bench_table(rows, out, !omit_timing);

  int ok = 0;
  for (const auto& row : rows)
    if (row.report) ++ok;
  std::cout << "bench: " << ok << '/' << rows.size() << " rows ok, wrote "
            << out_path << '\n';
  return ok > 0 ? 0 : kExitData;
}

int cmd_generate(const std::string& spec, const std::string& out_path,
                 bool header) {
  const ncar::DataSet data = ncar::generate_from_spec(spec);
  ncar::save_csv(data, out_path, header);
  std::cout << "wrote " << data.n << " x " << data.dim << " dataset to "
            << out_path << '\n';
  return 0;
}

int cmd_plot(const std::string& result_path, const std::string& data_override,
             const std::string& out_path, bool project) {
  const ncar::RunResult result = ncar::read_run_result(result_path);

  ncar::DataSet data;
  if (!data_override.empty()) {
    ncar::CsvOptions options;
    options.label_column = -1;
    data = ncar::load_csv(data_override, options);
  } else if (result.source.rfind("csv:", 0) == 0) {
    ncar::CsvOptions options;
    options.label_column = -1;
    data = ncar::load_csv(result.source.substr(4), options);
  } else if (result.source.rfind("gen:", 0) == 0) {
    data = ncar::generate_from_spec(result.source.substr(4));
  } else if (result.source.rfind("fixture:", 0) == 0) {
    data = ncar::generate_from_spec(result.source.substr(8));
  } else {
    std::cerr << "result has no usable source; pass --data\n";
    return kExitData;
  }
  for (const auto& [key, value] : result.config)
    if (key == "normalize" && value == "1") data = ncar::normalize_zscore(data);

  ncar::PlotOptions options;
  options.project_first_two = project;
  const std::string svg = ncar::render_partition_svg(data, result, options);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << '\n';
    return kExitData;
  }
  out << svg;
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apollonius-circle neighborhood construction toolkit"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run one algorithm on a dataset");
  auto* data_opt =
      run->add_option("--data", run_args.data_path, "CSV dataset path");
  auto* gen_opt = run->add_option(
      "--gen", run_args.gen_spec,
      "generator spec, e.g. rings:15x40 or blobs:3x50:outliers=10 or fig8");
  data_opt->excludes(gen_opt);
  run->add_option("--algo", run_args.algo,
                  "algorithm: ncar, knn1, knn2, epsilon, dpc");
  run->add_option("--p", run_args.p, "neighbor fraction for the density step");
  run->add_option("--targets", run_args.targets,
                  "target/center count (auto-selected when omitted)");
  run->add_option("--epsilon", run_args.epsilon,
                  "radius for the epsilon baseline (auto when omitted)");
  run->add_option("--k-fraction", run_args.k_fraction,
                  "neighbor fraction override for the knn baselines");
  run->add_option("--label-col", run_args.label_col,
                  "label column: 'last', 'none' or an index (default last)");
  run->add_flag("--header", run_args.header, "skip one CSV header line");
  run->add_option("--delim", run_args.delimiter, "CSV delimiter");
  run->add_flag("--normalize", run_args.normalize,
                "z-score features before running");
  run->add_option("--repeats", run_args.repeats,
                  "timing repeats (median is reported)");
  run->add_option("--out", run_args.out, "result file path");

  std::string manifest_path, bench_out = "bench.csv";
  bool omit_timing = false;
  CLI::App* bench =
      app.add_subcommand("bench", "run a dataset x algorithm suite");
  bench->add_option("--manifest", manifest_path, "JSON suite manifest")
      ->required();
  bench->add_option("--out", bench_out, "output table path");
  bench->add_flag("--omit-timing", omit_timing,
                  "write '-' for runtimes so outputs are byte-stable");

  std::string gen_spec, gen_out = "dataset.csv";
  bool gen_header = false;
  CLI::App* generate =
      app.add_subcommand("generate", "write a synthetic dataset as CSV");
  generate->add_option("--gen", gen_spec, "generator spec")->required();
  generate->add_option("--out", gen_out, "output CSV path");
  generate->add_flag("--header", gen_header, "write a header line");

  std::string plot_result, plot_data, plot_out = "plot.svg";
  bool plot_project = false;
  CLI::App* plot =
      app.add_subcommand("plot", "render a run result as an SVG scatter");
  plot->add_option("--result", plot_result, "run result file")->required();
  plot->add_option("--data", plot_data, "dataset CSV override");
  plot->add_option("--out", plot_out, "output SVG path");
  plot->add_flag("--project", plot_project,
                 "plot the first two features of >2D data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      if (run_args.data_path.empty() && run_args.gen_spec.empty()) {
        std::cerr << "run needs --data or --gen\n" << run->help();
        return kExitUsage;
      }
      return cmd_run(run_args);
    }
    if (bench->parsed()) return cmd_bench(manifest_path, bench_out, omit_timing);
    if (generate->parsed()) return cmd_generate(gen_spec, gen_out, gen_header);
    if (plot->parsed())
      return cmd_plot(plot_result, plot_data, plot_out, plot_project);
  } catch (const ncar::ParseError& e) {
    std::cerr << "data error: " << e.what();
    if (e.row > 0) std::cerr << " (row " << e.row << ", column " << e.column << ")";
    std::cerr << '\n';
    return kExitData;
  } catch (const ncar::EmptyDataset& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const ncar::ResultFormatError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const ncar::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
