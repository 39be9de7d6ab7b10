#pragma once

#include <span>
#include <vector>

namespace pedkit {

// Axis-aligned box in continuous pixel coordinates, origin at the top-left.
// area = (x2 - x1) * (y2 - y1), no +1 pixel convention. Zero-area boxes are
// legal values; inverted extents are rejected at construction so data bugs
// surface where they happen.
struct BBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  BBox() = default;
  BBox(double x1, double y1, double x2, double y2);

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  double center_x() const { return 0.5 * (x1 + x2); }
  double center_y() const { return 0.5 * (y1 + y2); }

  // Closed-interval point membership.
  bool contains(double x, double y) const { return x >= x1 && x <= x2 && y >= y1 && y <= y2; }

  bool operator==(const BBox&) const = default;
};

// Center-offset / log-scale box regression parameterization.
struct BoxDeltas {
  double dx = 0.0;
  double dy = 0.0;
  double dw = 0.0;
  double dh = 0.0;

  bool operator==(const BoxDeltas&) const = default;
};

double intersection_area(const BBox& a, const BBox& b);

// Intersection over union; 0 when the union has zero area.
double iou(const BBox& a, const BBox& b);

// Intersection over area(a); 0 when area(a) is zero. Used for matching
// detections against ignore regions, where the region may dwarf the box.
double ioa(const BBox& a, const BBox& b);

// Clamps the box into [0, width] x [0, height].
BBox clip(const BBox& b, double width, double height);

// Smallest box covering both inputs.
BBox union_box(const BBox& a, const BBox& b);

// Regression target for predicting `gt` from `anchor`. The anchor must have
// positive width and height; throws ValidationError otherwise.
BoxDeltas encode_deltas(const BBox& anchor, const BBox& gt);

// Inverse of encode_deltas: decode(encode(a, g), a) == g up to rounding.
BBox decode_deltas(const BBox& anchor, const BoxDeltas& deltas);

// Row-major |a| x |b| matrices. Same arithmetic as the scalar functions, so
// the entries compare bit-equal against elementwise calls.
std::vector<double> iou_matrix(std::span<const BBox> a, std::span<const BBox> b);
std::vector<double> ioa_matrix(std::span<const BBox> a, std::span<const BBox> b);

}  // namespace pedkit
