#include "pedkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pedkit/errors.hpp"

namespace pedkit {

BBox::BBox(double x1, double y1, double x2, double y2) : x1(x1), y1(y1), x2(x2), y2(y2) {
  if (!(std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) && std::isfinite(y2))) {
    throw ValidationError("box has non-finite coordinates");
  }
  if (x2 < x1 || y2 < y1) {
    std::ostringstream msg;
    msg << "box has negative extent: [" << x1 << ", " << y1 << ", " << x2 << ", " << y2 << "]";
    throw ValidationError(msg.str());
  }
}

double intersection_area(const BBox& a, const BBox& b) {
  const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  return iw * ih;
}

double iou(const BBox& a, const BBox& b) {
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double ioa(const BBox& a, const BBox& b) {
  const double denom = a.area();
  return denom > 0.0 ? intersection_area(a, b) / denom : 0.0;
}

BBox clip(const BBox& b, double width, double height) {
  if (width <= 0.0 || height <= 0.0) {
    throw ValidationError("clip bounds must be positive");
  }
  const auto clamp = [](double v, double hi) { return std::min(std::max(v, 0.0), hi); };
  return BBox(clamp(b.x1, width), clamp(b.y1, height), clamp(b.x2, width), clamp(b.y2, height));
}

BBox union_box(const BBox& a, const BBox& b) {
  return BBox(std::min(a.x1, b.x1), std::min(a.y1, b.y1), std::max(a.x2, b.x2),
              std::max(a.y2, b.y2));
}

BoxDeltas encode_deltas(const BBox& anchor, const BBox& gt) {
  const double aw = anchor.width();
  const double ah = anchor.height();
  if (aw <= 0.0 || ah <= 0.0) {
    throw ValidationError("degenerate anchor: width and height must be positive");
  }
  BoxDeltas d;
  d.dx = (gt.center_x() - anchor.center_x()) / aw;
  d.dy = (gt.center_y() - anchor.center_y()) / ah;
  d.dw = std::log(gt.width() / aw);
  d.dh = std::log(gt.height() / ah);
  return d;
}

BBox decode_deltas(const BBox& anchor, const BoxDeltas& deltas) {
  const double aw = anchor.width();
  const double ah = anchor.height();
  if (aw <= 0.0 || ah <= 0.0) {
    throw ValidationError("degenerate anchor: width and height must be positive");
  }
  const double cx = anchor.center_x() + deltas.dx * aw;
  const double cy = anchor.center_y() + deltas.dy * ah;
  const double w = std::exp(deltas.dw) * aw;
  const double h = std::exp(deltas.dh) * ah;
  return BBox(cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h);
}

std::vector<double> iou_matrix(std::span<const BBox> a, std::span<const BBox> b) {
  std::vector<double> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BBox& ai = a[i];
    const double area_a = ai.area();
    double* row = out.data() + i * b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      const BBox& bj = b[j];
      const double iw = std::min(ai.x2, bj.x2) - std::max(ai.x1, bj.x1);
      const double ih = std::min(ai.y2, bj.y2) - std::max(ai.y1, bj.y1);
      const double inter = (iw <= 0.0 || ih <= 0.0) ? 0.0 : iw * ih;
      const double uni = area_a + bj.area() - inter;
      row[j] = uni > 0.0 ? inter / uni : 0.0;
    }
  }
  return out;
}

std::vector<double> ioa_matrix(std::span<const BBox> a, std::span<const BBox> b) {
  std::vector<double> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BBox& ai = a[i];
    const double area_a = ai.area();
    double* row = out.data() + i * b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      const BBox& bj = b[j];
      const double iw = std::min(ai.x2, bj.x2) - std::max(ai.x1, bj.x1);
      const double ih = std::min(ai.y2, bj.y2) - std::max(ai.y1, bj.y1);
      const double inter = (iw <= 0.0 || ih <= 0.0) ? 0.0 : iw * ih;
      row[j] = area_a > 0.0 ? inter / area_a : 0.0;
    }
  }
  return out;
}

}  // namespace pedkit
