#pragma once

#include <stdexcept>
#include <string>

#include "ncar/dataset.hpp"
#include "ncar/result_io.hpp"

namespace ncar {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlotOptions {
  int width = 800;
  int height = 800;
  bool project_first_two = false;  // plot the first two features of >2D data
};

/// Renders a standalone SVG 1.1 scatter plot of a partition: one fill color
/// per group, triangles for targets, crosses for outliers, the recorded
/// Apollonius circles, and axes auto-scaled with 5% margins. Throws
/// DimensionError for non-2D data unless project_first_two is set.
std::string render_partition_svg(const DataSet& data, const RunResult& result,
                                 const PlotOptions& options = {});

}  // namespace ncar
