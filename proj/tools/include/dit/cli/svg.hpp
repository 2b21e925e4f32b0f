#pragma once

#include <string>
#include <vector>

namespace dit::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  /// Start a new polyline when consecutive y values differ by more than
  /// this (used to avoid drawing wrap-around jumps of a principal phase).
  double break_above = 0.0;  ///< 0 disables
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Minimal line plot: frame, ticks, labelled axes, one polyline per series
/// and a legend. Output depends only on the input values.
std::string render_svg(const Plot& plot);

}  // namespace dit::cli
