#include "pedkit/anchors.hpp"

#include <cmath>
#include <limits>

#include "pedkit/errors.hpp"

namespace pedkit {

std::size_t AnchorGrid::total_anchors() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.anchors.size();
  return n;
}

AnchorGrid generate_anchor_grid(int image_w, int image_h, std::span<const int> strides,
                                std::span<const double> aspect_ratios) {
  static constexpr double kDefaultRatio[] = {kPedestrianAspectRatio};
  if (aspect_ratios.empty()) aspect_ratios = kDefaultRatio;
  if (strides.empty()) throw ConfigError("anchor strides must be non-empty");
  if (image_w <= 0 || image_h <= 0) throw ConfigError("image dimensions must be positive");
  for (std::size_t i = 0; i < strides.size(); ++i) {
    if (strides[i] <= 0) throw ConfigError("anchor strides must be positive");
    if (i > 0 && strides[i] <= strides[i - 1]) throw ConfigError("anchor strides must ascend");
  }
  for (double r : aspect_ratios) {
    if (!(r > 0.0)) throw ConfigError("anchor aspect ratios must be positive");
  }

  AnchorGrid grid;
  grid.image_w = image_w;
  grid.image_h = image_h;
  grid.aspect_ratios.assign(aspect_ratios.begin(), aspect_ratios.end());
  grid.levels.reserve(strides.size());
  for (int stride : strides) {
    AnchorLevel level;
    level.stride = stride;
    level.scale = 8.0 * stride;
    level.grid_w = (image_w + stride - 1) / stride;
    level.grid_h = (image_h + stride - 1) / stride;
    level.anchors.reserve(static_cast<std::size_t>(level.grid_w) * level.grid_h *
                          aspect_ratios.size());
    for (int row = 0; row < level.grid_h; ++row) {
      const double cy = (row + 0.5) * stride;
      for (int col = 0; col < level.grid_w; ++col) {
        const double cx = (col + 0.5) * stride;
        for (double ratio : aspect_ratios) {
          const double w = level.scale / std::sqrt(ratio);
          const double h = level.scale * std::sqrt(ratio);
          level.anchors.emplace_back(cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h);
        }
      }
    }
    grid.levels.push_back(std::move(level));
  }
  return grid;
}

std::size_t level_for_scale(const BBox& box, const AnchorGrid& grid) {
  const double area = box.area();
  if (area <= 0.0) throw ValidationError("level_for_scale: box must have positive area");
  if (grid.levels.empty()) throw ConfigError("anchor grid has no levels");
  const double log_size = 0.5 * std::log(area);
  std::size_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.levels.size(); ++i) {
    const double gap = std::abs(log_size - std::log(grid.levels[i].scale));
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

}  // namespace pedkit
