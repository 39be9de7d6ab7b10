#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pedkit/geometry.hpp"

namespace pedkit {

// One annotated human. `id` is the ordinal position within the image's
// instance list. The visible box, when present, must lie inside the full box
// (up to 1e-6 relative slack); a present head box must have positive area.
struct Instance {
  BBox full;
  std::optional<BBox> visible;
  std::optional<BBox> head;
  bool ignore = false;
  int id = 0;

  bool operator==(const Instance&) const = default;
};

struct ImageAnnotation {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::vector<Instance> instances;

  bool operator==(const ImageAnnotation&) const = default;
};

struct Detection {
  std::string image_id;
  BBox box;
  double score = 0.0;  // finite, in [0, 1]

  bool operator==(const Detection&) const = default;
};

// Detections of one image, in file order.
struct ImageDetections {
  std::string image_id;
  std::vector<Detection> dets;

  bool operator==(const ImageDetections&) const = default;
};

// Evaluation subset filter: full-box height at least min_height and
// occlusion ratio inside [occ_lo, occ_hi).
struct SubsetSpec {
  double min_height = 0.0;
  double occ_lo = 0.0;
  double occ_hi = 1.0;

  void validate() const;

  // Height >= 50 px, occlusion < 35%.
  static SubsetSpec reasonable() { return {50.0, 0.0, 0.35}; }
  // Height >= 50 px, occlusion in [35%, 80%).
  static SubsetSpec heavy() { return {50.0, 0.35, 0.80}; }
  static SubsetSpec all() { return {0.0, 0.0, 1.0}; }
};

// Annotation files (".odann") are UTF-8 JSON lines:
//   {"ID": str, "width": int, "height": int,
//    "gtboxes": [{"fbox": [x1,y1,x2,y2], "vbox": [...]|null,
//                 "hbox": [...]|null, "ignore": 0|1}, ...]}
// Detection files (".oddet"):
//   {"ID": str, "dtboxes": [{"box": [x1,y1,x2,y2], "score": float}, ...]}
// Boxes are corner-format floats. Unknown fields are ignored on input.
std::vector<ImageAnnotation> parse_annotations(std::istream& in);
std::vector<ImageAnnotation> parse_annotations_file(const std::string& path);
void write_annotations(std::ostream& out, const std::vector<ImageAnnotation>& annotations);
void write_annotations_file(const std::string& path, const std::vector<ImageAnnotation>& annotations);

std::vector<ImageDetections> parse_detections(std::istream& in);
std::vector<ImageDetections> parse_detections_file(const std::string& path);
void write_detections(std::ostream& out, const std::vector<ImageDetections>& detections);
void write_detections_file(const std::string& path, const std::vector<ImageDetections>& detections);

// 1 - area(visible ∩ full) / area(full); 0 when no visible box is annotated.
// Throws ValidationError on a zero-area full box.
double occlusion_ratio(const Instance& inst);

// Splits instances into (evaluate, ignore). Ignore-flagged instances always
// land in the ignore partition; the rest are filtered by the subset spec.
std::pair<std::vector<Instance>, std::vector<Instance>> partition_for_eval(
    const ImageAnnotation& ann, const SubsetSpec& spec);

}  // namespace pedkit
