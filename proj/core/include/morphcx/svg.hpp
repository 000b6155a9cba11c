#pragma once

#include <string>
#include <utility>
#include <vector>

namespace morphcx::svg {

struct LabeledValue {
  std::string label;
  double value = 0.0;
};

/// One sorted dot-plot panel: items ranked by value, highest at the top.
struct RankPanel {
  std::string title;
  std::vector<LabeledValue> items;
};

struct ScatterPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

/// Grid of ranked dot plots with a gray line at each panel's mean and the
/// panel's value range printed underneath.
std::string rank_panels(const std::vector<RankPanel>& panels, const std::string& title, int columns = 4);

std::string scatter(const std::vector<ScatterPoint>& points, const std::string& x_label, const std::string& y_label,
                    const std::string& title);

std::string bars(const std::vector<LabeledValue>& bars, const std::string& y_label, const std::string& title);

std::string escape(const std::string& s);

}  // namespace morphcx::svg
