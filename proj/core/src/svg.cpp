#include "morphcx/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace morphcx::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

class Canvas {
 public:
  Canvas(double w, double h) : w_(w), h_(h) {}

  void line(double x1, double y1, double x2, double y2, const std::string& stroke, double width = 1.0) {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
             "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
  }
  void circle(double cx, double cy, double r, const std::string& fill) {
    body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" + fill + "\"/>\n";
  }
  void rect(double x, double y, double w, double h, const std::string& fill) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
             "\" fill=\"" + fill + "\"/>\n";
  }
  void text(double x, double y, const std::string& s, double size = 10, const std::string& anchor = "start",
            const std::string& extra = "") {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
             "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\"" + extra + ">" + escape(s) + "</text>\n";
  }

  std::string str() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w_) +
           "\" height=\"" + num(h_) + "\" viewBox=\"0 0 " + num(w_) + " " + num(h_) + "\">\n" +
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ + "</svg>\n";
  }

 private:
  double w_, h_;
  std::string body_;
};

std::pair<double, double> padded_range(double lo, double hi) {
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string rank_panels(const std::vector<RankPanel>& panels, const std::string& title, int columns) {
  const double panel_w = 220, row_h = 11, top = 40, head = 24, foot = 30;
  std::size_t max_items = 1;
  for (const auto& p : panels) max_items = std::max(max_items, p.items.size());
  const double panel_h = head + row_h * static_cast<double>(max_items) + foot;
  const int cols = std::max(1, std::min<int>(columns, static_cast<int>(std::max<std::size_t>(1, panels.size()))));
  const int rows = static_cast<int>((panels.size() + static_cast<std::size_t>(cols) - 1) / static_cast<std::size_t>(cols));
  Canvas c(panel_w * cols + 20, top + panel_h * std::max(rows, 1) + 10);
  c.text(10, 22, title, 14);

  for (std::size_t k = 0; k < panels.size(); ++k) {
    const auto& p = panels[k];
    const double x0 = 10 + panel_w * static_cast<double>(static_cast<int>(k) % cols);
    const double y0 = top + panel_h * static_cast<double>(static_cast<int>(k) / cols);
    const double plot_x0 = x0 + 70, plot_x1 = x0 + panel_w - 15;
    c.text(x0 + panel_w / 2, y0 + 14, p.title, 12, "middle", " font-weight=\"bold\"");
    if (p.items.empty()) continue;

    auto items = p.items;
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    const auto [lo, hi] = std::minmax_element(items.begin(), items.end(),
                                              [](const auto& a, const auto& b) { return a.value < b.value; });
    const auto [rlo, rhi] = padded_range(lo->value, hi->value);
    auto sx = [&](double v) { return plot_x0 + (v - rlo) / (rhi - rlo) * (plot_x1 - plot_x0); };
    const double mean = std::accumulate(items.begin(), items.end(), 0.0,
                                        [](double s, const auto& it) { return s + it.value; }) /
                        static_cast<double>(items.size());
    const double ys = y0 + head, ye = ys + row_h * static_cast<double>(items.size());
    c.line(sx(mean), ys, sx(mean), ye, "#bbbbbb", 1.5);
    for (std::size_t i = 0; i < items.size(); ++i) {
      const double y = ys + row_h * (static_cast<double>(i) + 0.5);
      c.text(plot_x0 - 4, y + 3, items[i].label, 8, "end");
      c.circle(sx(items[i].value), y, 2.5, "#1f4e9c");
    }
    c.line(plot_x0, ye + 2, plot_x1, ye + 2, "#333333");
    c.text(plot_x0, ye + 14, short_num(lo->value), 8, "start");
    c.text(plot_x1, ye + 14, short_num(hi->value), 8, "end");
  }
  return c.str();
}

std::string scatter(const std::vector<ScatterPoint>& points, const std::string& x_label, const std::string& y_label,
                    const std::string& title) {
  const double w = 760, h = 560, l = 70, r = 30, t = 50, b = 60;
  Canvas c(w, h);
  c.text(w / 2, 24, title, 14, "middle");
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!points.empty()) {
    xlo = xhi = points[0].x;
    ylo = yhi = points[0].y;
    for (const auto& p : points) {
      xlo = std::min(xlo, p.x);
      xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y);
      yhi = std::max(yhi, p.y);
    }
  }
  std::tie(xlo, xhi) = padded_range(xlo, xhi);
  std::tie(ylo, yhi) = padded_range(ylo, yhi);
  auto sx = [&](double v) { return l + (v - xlo) / (xhi - xlo) * (w - l - r); };
  auto sy = [&](double v) { return h - b - (v - ylo) / (yhi - ylo) * (h - t - b); };
  c.line(l, h - b, w - r, h - b, "#333333");
  c.line(l, t, l, h - b, "#333333");
  if (xlo < 0 && xhi > 0) c.line(sx(0), t, sx(0), h - b, "#dddddd");
  if (ylo < 0 && yhi > 0) c.line(l, sy(0), w - r, sy(0), "#dddddd");
  c.text(l, h - b + 16, short_num(xlo), 9, "start");
  c.text(w - r, h - b + 16, short_num(xhi), 9, "end");
  c.text(l - 6, h - b, short_num(ylo), 9, "end");
  c.text(l - 6, t + 8, short_num(yhi), 9, "end");
  c.text((l + w - r) / 2, h - 18, x_label, 12, "middle");
  c.text(18, (t + h - b) / 2, y_label, 12, "middle",
         " transform=\"rotate(-90 18 " + num((t + h - b) / 2) + ")\"");
  for (const auto& p : points) {
    c.circle(sx(p.x), sy(p.y), 3, "#1f4e9c");
    c.text(sx(p.x) + 4, sy(p.y) - 4, p.label, 8);
  }
  return c.str();
}

std::string bars(const std::vector<LabeledValue>& values, const std::string& y_label, const std::string& title) {
  const double bar_w = 48, l = 70, r = 20, t = 50, b = 60, h = 360;
  const double w = l + r + bar_w * static_cast<double>(std::max<std::size_t>(values.size(), 1));
  Canvas c(w, h);
  c.text(w / 2, 24, title, 14, "middle");
  double lo = 0, hi = 0;
  for (const auto& v : values) {
    lo = std::min(lo, v.value);
    hi = std::max(hi, v.value);
  }
  std::tie(lo, hi) = padded_range(lo, hi);
  auto sy = [&](double v) { return h - b - (v - lo) / (hi - lo) * (h - t - b); };
  c.line(l, sy(0), w - r, sy(0), "#333333");
  c.line(l, t, l, h - b, "#333333");
  c.text(l - 6, sy(lo) + 3, short_num(lo), 9, "end");
  c.text(l - 6, sy(hi) + 3, short_num(hi), 9, "end");
  c.text(18, (t + h - b) / 2, y_label, 12, "middle",
         " transform=\"rotate(-90 18 " + num((t + h - b) / 2) + ")\"");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = l + bar_w * static_cast<double>(i) + 6;
    const double y0 = sy(0), y1 = sy(values[i].value);
    c.rect(x, std::min(y0, y1), bar_w - 12, std::fabs(y1 - y0), "#1f4e9c");
    c.text(x + (bar_w - 12) / 2, std::min(y0, y1) - 4, num(values[i].value), 8, "middle");
    c.text(x + (bar_w - 12) / 2, h - b + 16, values[i].label, 9, "middle");
  }
  return c.str();
}

}  // namespace morphcx::svg
