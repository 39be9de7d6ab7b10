#include "pedkit/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pedkit/errors.hpp"

namespace pedkit {
namespace {

using json = nlohmann::ordered_json;

json box_to_json(const BBox& b) { return json::array({b.x1, b.y1, b.x2, b.y2}); }

BBox box_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(context + ": box must be an array of 4 numbers");
  }
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(context + ": box must be an array of 4 numbers");
  }
  try {
    return BBox(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
  } catch (const ValidationError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

void validate_instance(const Instance& inst, const std::string& context) {
  if (inst.visible) {
    const double va = inst.visible->area();
    const double inter = intersection_area(*inst.visible, inst.full);
    if (inter < va - 1e-6 * va) {
      throw ValidationError(context + ": visible box extends outside the full box");
    }
  }
  if (inst.head && inst.head->area() <= 0.0) {
    throw ValidationError(context + ": head box must have positive area");
  }
}

json require_field(const json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(context + ": missing field \"" + std::string(key) + "\"");
  return *it;
}

ImageAnnotation annotation_from_json(const json& obj, int line_no) {
  const std::string line_ctx = "line " + std::to_string(line_no);
  if (!obj.is_object()) throw ParseError(line_ctx + ": expected a JSON object");
  ImageAnnotation ann;
  ann.image_id = require_field(obj, "ID", line_ctx).get<std::string>();
  ann.width = require_field(obj, "width", line_ctx).get<int>();
  ann.height = require_field(obj, "height", line_ctx).get<int>();
  if (ann.width <= 0 || ann.height <= 0) {
    throw ValidationError("image \"" + ann.image_id + "\": width and height must be positive");
  }
  const json gtboxes = require_field(obj, "gtboxes", line_ctx);
  if (!gtboxes.is_array()) throw ParseError(line_ctx + ": \"gtboxes\" must be an array");
  int id = 0;
  for (const auto& gj : gtboxes) {
    const std::string ctx = "image \"" + ann.image_id + "\" instance " + std::to_string(id);
    Instance inst;
    inst.id = id;
    inst.full = box_from_json(require_field(gj, "fbox", ctx), ctx + " fbox");
    if (auto it = gj.find("vbox"); it != gj.end() && !it->is_null()) {
      inst.visible = box_from_json(*it, ctx + " vbox");
    }
    if (auto it = gj.find("hbox"); it != gj.end() && !it->is_null()) {
      inst.head = box_from_json(*it, ctx + " hbox");
    }
    if (auto it = gj.find("ignore"); it != gj.end() && !it->is_null()) {
      inst.ignore = it->get<int>() != 0;
    }
    validate_instance(inst, ctx);
    ann.instances.push_back(std::move(inst));
    ++id;
  }
  return ann;
}

ImageDetections detections_from_json(const json& obj, int line_no) {
  const std::string line_ctx = "line " + std::to_string(line_no);
  if (!obj.is_object()) throw ParseError(line_ctx + ": expected a JSON object");
  ImageDetections dets;
  dets.image_id = require_field(obj, "ID", line_ctx).get<std::string>();
  const json dtboxes = require_field(obj, "dtboxes", line_ctx);
  if (!dtboxes.is_array()) throw ParseError(line_ctx + ": \"dtboxes\" must be an array");
  int index = 0;
  for (const auto& dj : dtboxes) {
    const std::string ctx =
        "image \"" + dets.image_id + "\" detection " + std::to_string(index);
    Detection det;
    det.image_id = dets.image_id;
    det.box = box_from_json(require_field(dj, "box", ctx), ctx + " box");
    det.score = require_field(dj, "score", ctx).get<double>();
    if (!std::isfinite(det.score) || det.score < 0.0 || det.score > 1.0) {
      throw ValidationError(ctx + ": score must be finite and in [0, 1]");
    }
    dets.dets.push_back(std::move(det));
    ++index;
  }
  return dets;
}

template <typename Record, typename FromJson>
std::vector<Record> parse_lines(std::istream& in, FromJson from_json) {
  std::vector<Record> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    records.push_back(from_json(obj, line_no));
  }
  return records;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
  return out;
}

}  // namespace

std::vector<ImageAnnotation> parse_annotations(std::istream& in) {
  return parse_lines<ImageAnnotation>(in, annotation_from_json);
}

std::vector<ImageAnnotation> parse_annotations_file(const std::string& path) {
  auto in = open_input(path);
  return parse_annotations(in);
}

void write_annotations(std::ostream& out, const std::vector<ImageAnnotation>& annotations) {
  for (const auto& ann : annotations) {
    json obj;
    obj["ID"] = ann.image_id;
    obj["width"] = ann.width;
    obj["height"] = ann.height;
    json gtboxes = json::array();
    for (const auto& inst : ann.instances) {
      json gj;
      gj["fbox"] = box_to_json(inst.full);
      gj["vbox"] = inst.visible ? box_to_json(*inst.visible) : json(nullptr);
      gj["hbox"] = inst.head ? box_to_json(*inst.head) : json(nullptr);
      gj["ignore"] = inst.ignore ? 1 : 0;
      gtboxes.push_back(std::move(gj));
    }
    obj["gtboxes"] = std::move(gtboxes);
    out << obj.dump() << '\n';
  }
}

void write_annotations_file(const std::string& path, const std::vector<ImageAnnotation>& annotations) {
  auto out = open_output(path);
  write_annotations(out, annotations);
}

std::vector<ImageDetections> parse_detections(std::istream& in) {
  return parse_lines<ImageDetections>(in, detections_from_json);
}

std::vector<ImageDetections> parse_detections_file(const std::string& path) {
  auto in = open_input(path);
  return parse_detections(in);
}

void write_detections(std::ostream& out, const std::vector<ImageDetections>& detections) {
  for (const auto& image : detections) {
    json obj;
    obj["ID"] = image.image_id;
    json dtboxes = json::array();
    for (const auto& det : image.dets) {
      json dj;
      dj["box"] = box_to_json(det.box);
      dj["score"] = det.score;
      dtboxes.push_back(std::move(dj));
    }
    obj["dtboxes"] = std::move(dtboxes);
    out << obj.dump() << '\n';
  }
}

void write_detections_file(const std::string& path, const std::vector<ImageDetections>& detections) {
  auto out = open_output(path);
  write_detections(out, detections);
}

void SubsetSpec::validate() const {
  if (min_height < 0.0) throw ConfigError("subset min_height must be >= 0");
  if (!(occ_lo >= 0.0 && occ_lo < occ_hi && occ_hi <= 1.0)) {
    throw ConfigError("subset occlusion range must satisfy 0 <= lo < hi <= 1");
  }
}

double occlusion_ratio(const Instance& inst) {
  const double full_area = inst.full.area();
  if (full_area <= 0.0) {
    throw ValidationError("instance " + std::to_string(inst.id) +
                          ": occlusion ratio of a zero-area full box");
  }
  if (!inst.visible) return 0.0;
  return 1.0 - intersection_area(*inst.visible, inst.full) / full_area;
}

std::pair<std::vector<Instance>, std::vector<Instance>> partition_for_eval(
    const ImageAnnotation& ann, const SubsetSpec& spec) {
  spec.validate();
  std::vector<Instance> evaluate;
  std::vector<Instance> ignore;
  for (const auto& inst : ann.instances) {
    // Zero-area full boxes cannot be evaluated (no occlusion ratio).
    if (inst.ignore || inst.full.area() <= 0.0) {
      ignore.push_back(inst);
      continue;
    }
    const double occ = occlusion_ratio(inst);
    const bool selected =
        inst.full.height() >= spec.min_height && occ >= spec.occ_lo && occ < spec.occ_hi;
    (selected ? evaluate : ignore).push_back(inst);
  }
  return {std::move(evaluate), std::move(ignore)};
}

}  // namespace pedkit
