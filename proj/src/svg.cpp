#include "locodyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "locodyn/io.hpp"

namespace locodyn::svg {

namespace {
std::string num(double v) { return io::format_double(v); }

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void include(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  double span() const { return (hi > lo) ? hi - lo : 1.0; }
};
}  // namespace

Canvas::Canvas(double width, double height) : width_(width), height_(height) {}

void Canvas::rect(double x, double y, double w, double h, const std::string& fill,
                  const std::string& stroke, double stroke_width) {
  body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
        << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << num(stroke_width) << "\"/>\n";
}

void Canvas::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                  double width) {
  body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
        << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << num(width) << "\"/>\n";
}

void Canvas::polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                      const std::string& stroke, double width) {
  body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << num(width) << "\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
    body_ << num(xs[i]) << "," << num(ys[i]) << " ";
  }
  body_ << "\"/>\n";
}

void Canvas::circle(double cx, double cy, double r, const std::string& fill) {
  body_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
        << "\" fill=\"" << fill << "\"/>\n";
}

void Canvas::text(double x, double y, const std::string& content, double size,
                  const std::string& anchor) {
  body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
        << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">" << content
        << "</text>\n";
}

std::string Canvas::str() const {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_)
      << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(width_) << " "
      << num(height_) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

void Canvas::write_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("svg: cannot open " + path);
  f << str();
}

std::string heat_color(double v) {
  v = std::clamp(v, 0.0, 1.0);
  // blue -> white -> red
  int r, g, b;
  if (v < 0.5) {
    const double u = v / 0.5;
    r = int(255 * u);
    g = int(255 * u);
    b = 255;
  } else {
    const double u = (v - 0.5) / 0.5;
    r = 255;
    g = int(255 * (1.0 - u));
    b = int(255 * (1.0 - u));
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string heatmap(const std::vector<double>& x_grid, const std::vector<double>& y_grid,
                    const std::vector<std::vector<double>>& values,
                    const std::vector<double>& ridge_x, const std::string& x_label,
                    const std::string& y_label, const std::string& title) {
  const double margin = 60.0, cw = 600.0, ch = 400.0;
  Canvas c(cw + 2 * margin, ch + 2 * margin);

  Range vr;
  for (const auto& row : values)
    for (double v : row) vr.include(v);

  const std::size_t nx = x_grid.size(), ny = y_grid.size();
  const double cellw = cw / double(nx), cellh = ch / double(ny);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double v = values[j][i];
      const std::string fill =
          std::isfinite(v) ? heat_color((v - vr.lo) / vr.span()) : "#cccccc";
      // y axis grows upward: row 0 at the bottom
      c.rect(margin + double(i) * cellw, margin + ch - double(j + 1) * cellh, cellw,
             cellh, fill);
    }
  }

  if (!ridge_x.empty() && nx > 1) {
    std::vector<double> px, py;
    const double x0 = x_grid.front(), x1 = x_grid.back();
    for (std::size_t j = 0; j < ridge_x.size(); ++j) {
      if (!std::isfinite(ridge_x[j])) continue;
      px.push_back(margin + (ridge_x[j] - x0) / (x1 - x0) * (cw - cellw) + cellw / 2);
      py.push_back(margin + ch - (double(j) + 0.5) * cellh);
    }
    Canvas dummy(0, 0);
    c.polyline(px, py, "black", 2.0);
    for (std::size_t k = 0; k < px.size(); ++k) c.circle(px[k], py[k], 3.0, "black");
  }

  c.text(margin + cw / 2, margin / 2, title, 14, "middle");
  c.text(margin + cw / 2, margin + ch + 40, x_label, 12, "middle");
  c.text(15, margin + ch / 2, y_label, 12, "middle");
  if (nx > 0) {
    c.text(margin, margin + ch + 18, num(x_grid.front()), 10, "middle");
    c.text(margin + cw, margin + ch + 18, num(x_grid.back()), 10, "middle");
  }
  if (ny > 0) {
    c.text(margin - 8, margin + ch, num(y_grid.front()), 10, "end");
    c.text(margin - 8, margin + 12, num(y_grid.back()), 10, "end");
  }
  return c.str();
}

std::string hinton(const std::vector<std::string>& labels,
                   const std::vector<std::vector<double>>& r, const std::string& title) {
  const std::size_t n = labels.size();
  const double cell = 36.0, margin = 110.0;
  Canvas c(margin + cell * double(n) + 20, margin + cell * double(n) + 20);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = r[i][j];
      const double side = cell * 0.92 * std::sqrt(std::min(1.0, std::abs(v)));
      const double cx = margin + double(j) * cell + cell / 2;
      const double cy = margin + double(i) * cell + cell / 2;
      c.rect(margin + double(j) * cell, margin + double(i) * cell, cell, cell, "none",
             "#dddddd", 0.5);
      if (side > 0.5)
        c.rect(cx - side / 2, cy - side / 2, side, side, v >= 0 ? "#2ca02c" : "#d62728");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    c.text(margin - 6, margin + double(i) * cell + cell * 0.65, labels[i], 10, "end");
    c.text(margin + double(i) * cell + cell / 2, margin - 6, labels[i], 10, "middle");
  }
  c.text(margin + cell * double(n) / 2, 20, title, 14, "middle");
  return c.str();
}

std::string line_plot(const std::vector<double>& x,
                      const std::vector<std::vector<double>>& series,
                      const std::vector<std::string>& series_names,
                      const std::string& x_label, const std::string& title) {
  const double margin = 60.0, cw = 640.0, ch = 360.0;
  Canvas c(cw + 2 * margin, ch + 2 * margin);

  Range xr, yr;
  for (double v : x) xr.include(v);
  for (const auto& s : series)
    for (double v : s) yr.include(v);

  auto px = [&](double v) { return margin + (v - xr.lo) / xr.span() * cw; };
  auto py = [&](double v) { return margin + ch - (v - yr.lo) / yr.span() * ch; };

  c.line(margin, margin + ch, margin + cw, margin + ch, "black", 1.0);
  c.line(margin, margin, margin, margin + ch, "black", 1.0);

  for (std::size_t s = 0; s < series.size(); ++s) {
    std::vector<double> sx, sy;
    sx.reserve(x.size());
    sy.reserve(x.size());
    for (std::size_t i = 0; i < x.size() && i < series[s].size(); ++i) {
      sx.push_back(px(x[i]));
      sy.push_back(py(series[s][i]));
    }
    const std::string color = kPalette[s % 8];
    c.polyline(sx, sy, color, 1.5);
    if (s < series_names.size())
      c.text(margin + cw - 4, margin + 16 + 14 * double(s), series_names[s], 11, "end");
  }

  c.text(margin + cw / 2, margin / 2, title, 14, "middle");
  c.text(margin + cw / 2, margin + ch + 40, x_label, 12, "middle");
  c.text(margin - 8, margin + ch, num(yr.lo), 10, "end");
  c.text(margin - 8, margin + 12, num(yr.hi), 10, "end");
  c.text(margin, margin + ch + 18, num(xr.lo), 10, "middle");
  c.text(margin + cw, margin + ch + 18, num(xr.hi), 10, "middle");
  return c.str();
}

}  // namespace locodyn::svg
