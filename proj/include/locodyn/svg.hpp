// Minimal SVG emitter for diagnostic plots. CSV stays the authoritative
// output; these figures are for eyeballing runs.
#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace locodyn::svg {

class Canvas {
 public:
  Canvas(double width, double height);

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& stroke = "none", double stroke_width = 0.0);
  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double width = 1.0);
  void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                const std::string& stroke, double width = 1.0);
  void circle(double cx, double cy, double r, const std::string& fill);
  void text(double x, double y, const std::string& content, double size = 12.0,
            const std::string& anchor = "start");

  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  double width_, height_;
  std::ostringstream body_;
};

// Blue-to-red color for v in [0,1].
std::string heat_color(double v);

// Heat map with axes; one colored cell per matrix entry, optional ridge
// overlay (one x per row).
std::string heatmap(const std::vector<double>& x_grid, const std::vector<double>& y_grid,
                    const std::vector<std::vector<double>>& values,
                    const std::vector<double>& ridge_x, const std::string& x_label,
                    const std::string& y_label, const std::string& title);

// Hinton-style diagram of a correlation matrix: green positive, red negative,
// square area proportional to |r|.
std::string hinton(const std::vector<std::string>& labels,
                   const std::vector<std::vector<double>>& r, const std::string& title);

// Simple multi-line plot.
std::string line_plot(const std::vector<double>& x,
                      const std::vector<std::vector<double>>& series,
                      const std::vector<std::string>& series_names,
                      const std::string& x_label, const std::string& title);

}  // namespace locodyn::svg
