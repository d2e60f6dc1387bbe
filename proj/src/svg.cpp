#include "oscdyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oscdyn {
namespace {

// Fixed-precision geometry so identical inputs produce identical bytes.
std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0, hi = 1.0;

  double place(double v, double a, double b) const {
    return a + (b - a) * (v - lo) / (hi - lo);
  }
};

Range padded_range(double lo, double hi) {
  if (!(hi > lo)) {  // degenerate: open a symmetric window
    const double pad = std::max(1.0, std::abs(lo)) * 0.5;
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

struct Frame {
  double left, right, top, bottom;  // plot box in pixels
  Range x, y;

  double sx(double v) const { return x.place(v, left, right); }
  double sy(double v) const { return y.place(v, bottom, top); }  // y grows up
};

void emit_frame(std::string& out, const Frame& f, const FigureStyle& style,
                int width, int height) {
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" fill=\"white\"/>\n";
  out += "<rect x=\"" + px(f.left) + "\" y=\"" + px(f.top) + "\" width=\"" +
         px(f.right - f.left) + "\" height=\"" + px(f.bottom - f.top) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  const int ticks = 5;
  for (int i = 0; i < ticks; ++i) {
    const double fx = f.x.lo + (f.x.hi - f.x.lo) * i / (ticks - 1);
    const double fy = f.y.lo + (f.y.hi - f.y.lo) * i / (ticks - 1);
    const double xp = f.sx(fx), yp = f.sy(fy);
    out += "<line x1=\"" + px(xp) + "\" y1=\"" + px(f.bottom) + "\" x2=\"" +
           px(xp) + "\" y2=\"" + px(f.bottom + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + px(xp) + "\" y=\"" + px(f.bottom + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" +
           escape(tick_label(fx)) + "</text>\n";
    out += "<line x1=\"" + px(f.left - 5) + "\" y1=\"" + px(yp) + "\" x2=\"" +
           px(f.left) + "\" y2=\"" + px(yp) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + px(f.left - 8) + "\" y=\"" + px(yp + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" +
           escape(tick_label(fy)) + "</text>\n";
  }
  out += "<text x=\"" + px((f.left + f.right) / 2) + "\" y=\"22\" "
         "font-size=\"14\" text-anchor=\"middle\">" +
         escape(style.title) + "</text>\n";
  out += "<text x=\"" + px((f.left + f.right) / 2) + "\" y=\"" +
         px(f.bottom + 36) + "\" font-size=\"12\" text-anchor=\"middle\">" +
         escape(style.xlabel) + "</text>\n";
  out += "<text x=\"16\" y=\"" + px((f.top + f.bottom) / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         px((f.top + f.bottom) / 2) + ")\">" + escape(style.ylabel) +
         "</text>\n";
}

std::string svg_open(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\" font-family=\"sans-serif\">\n";
}

// Dark-to-light ramp through blue/teal/yellow; t in [0, 1].
std::string ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double anchors[4][3] = {{0.05, 0.03, 0.28},
                                {0.13, 0.42, 0.55},
                                {0.37, 0.78, 0.38},
                                {0.99, 0.91, 0.14}};
  const double pos = t * 3.0;
  const int lo = std::min(2, static_cast<int>(pos));
  const double w = pos - lo;
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) {
    const double v = anchors[lo][c] * (1.0 - w) + anchors[lo + 1][c] * w;
    rgb[c] = static_cast<int>(std::lround(v * 255.0));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

}  // namespace

std::string emit_figure(const std::vector<LineSeries>& series,
                        const FigureStyle& style) {
  if (series.empty()) throw std::invalid_argument("emit_figure: no series");
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty())
      throw std::invalid_argument("emit_figure: bad series '" + s.label + "'");
    for (double v : s.x) {
      if (!std::isfinite(v))
        throw std::invalid_argument("emit_figure: non-finite data");
      xlo = std::min(xlo, v);
      xhi = std::max(xhi, v);
    }
    for (double v : s.y) {
      if (!std::isfinite(v))
        throw std::invalid_argument("emit_figure: non-finite data");
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  }

  Frame f{70.0, style.width - 20.0, 40.0, style.height - 50.0,
          padded_range(xlo, xhi), padded_range(ylo, yhi)};
  std::string out = svg_open(style.width, style.height);
  emit_frame(out, f, style, style.width, style.height);

  for (size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % kPaletteSize];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (i) out += ' ';
      out += px(f.sx(s.x[i])) + "," + px(f.sy(s.y[i]));
    }
    out += "\"/>\n";
  }
  for (size_t k = 0; k < series.size(); ++k) {
    const double ly = f.top + 16.0 + 16.0 * static_cast<double>(k);
    const char* color = kPalette[k % kPaletteSize];
    out += "<line x1=\"" + px(f.right - 150) + "\" y1=\"" + px(ly - 4) +
           "\" x2=\"" + px(f.right - 125) + "\" y2=\"" + px(ly - 4) +
           "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + px(f.right - 120) + "\" y=\"" + px(ly) +
           "\" font-size=\"11\">" + escape(series[k].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit_heatmap(const Eigen::MatrixXd& values, const GridSpec& grid,
                         const FigureStyle& style) {
  grid.check();
  if (values.rows() != grid.points || values.cols() != grid.points)
    throw std::invalid_argument("emit_heatmap: values do not match grid");
  if (!values.allFinite())
    throw std::invalid_argument("emit_heatmap: non-finite data");
  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  const double span = hi > lo ? hi - lo : 1.0;

  Frame f{70.0, style.width - 20.0, 40.0, style.height - 50.0,
          {grid.re_min, grid.re_max},
          {grid.im_min, grid.im_max}};
  std::string out = svg_open(style.width, style.height);

  const double cw = (f.right - f.left) / grid.points;
  const double ch = (f.bottom - f.top) / grid.points;
  for (int i = 0; i < grid.points; ++i) {
    // row i holds the i-th imaginary value; larger imag is drawn higher
    const double yp = f.bottom - ch * (i + 1);
    for (int j = 0; j < grid.points; ++j) {
      const double t = (values(i, j) - lo) / span;
      out += "<rect x=\"" + px(f.left + cw * j) + "\" y=\"" + px(yp) +
             "\" width=\"" + px(cw + 0.5) + "\" height=\"" + px(ch + 0.5) +
             "\" fill=\"" + ramp(t) + "\"/>\n";
    }
  }
  emit_frame(out, f, style, style.width, style.height);
  out += "</svg>\n";
  return out;
}

}  // namespace oscdyn
