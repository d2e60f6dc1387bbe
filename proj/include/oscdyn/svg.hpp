#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "oscdyn/kernels.hpp"

namespace oscdyn {

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct FigureStyle {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  int width = 960;
  int height = 600;
};

// Self-contained static SVG, one polyline per series plus axes, ticks and a
// legend.  All geometry is formatted with fixed precision so identical inputs
// render identical bytes.
std::string emit_figure(const std::vector<LineSeries>& series,
                        const FigureStyle& style);

// Heat map of grid values (row i = imaginary axis, column j = real axis) on
// a monotone dark-to-light ramp.
std::string emit_heatmap(const Eigen::MatrixXd& values, const GridSpec& grid,
                         const FigureStyle& style);

}  // namespace oscdyn
