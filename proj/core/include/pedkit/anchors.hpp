#pragma once

#include <array>
#include <span>
#include <vector>

#include "pedkit/geometry.hpp"

namespace pedkit {

// Pyramid strides covering anchor scales 32..512 px (scale = 8 * stride).
inline constexpr std::array<int, 5> kDefaultStrides{4, 8, 16, 32, 64};

// Tall pedestrian boxes; ratio means h/w.
inline constexpr double kPedestrianAspectRatio = 2.44;

// One pyramid level. Anchors are laid out row-major over the cell grid with
// the aspect ratios innermost: index = (row * grid_w + col) * |ratios| + r.
struct AnchorLevel {
  int stride = 0;
  double scale = 0.0;  // 8 * stride
  int grid_w = 0;      // ceil(image_w / stride)
  int grid_h = 0;
  std::vector<BBox> anchors;
};

struct AnchorGrid {
  std::vector<AnchorLevel> levels;
  std::vector<double> aspect_ratios;
  int image_w = 0;
  int image_h = 0;

  std::size_t total_anchors() const;
};

// The anchor for level stride S, cell (row, col), ratio r is centered at
// ((col + 0.5) * S, (row + 0.5) * S) with width 8S/sqrt(r) and height
// 8S*sqrt(r), i.e. constant area (8S)^2. Anchors are not clipped to the
// image; border handling is the matcher's concern. Strides must be positive
// and ascending, ratios positive; throws ConfigError otherwise.
AnchorGrid generate_anchor_grid(int image_w, int image_h,
                                std::span<const int> strides = kDefaultStrides,
                                std::span<const double> aspect_ratios = std::span<const double>());

// Index of the level whose anchor scale is nearest to sqrt(area(box)) in log
// space. Throws ValidationError on a zero-area box.
std::size_t level_for_scale(const BBox& box, const AnchorGrid& grid);

}  // namespace pedkit
