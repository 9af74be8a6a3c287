#include "rectsupport/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rectsupport {

namespace {

Coord require_int(const nlohmann::json& j, const char* where) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected an integer coordinate in ") + where);
  return j.get<Coord>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) +
                         ": " + e.what(),
                     e.byte);
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance inst;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    inst.label = j["label"].get<std::string>();
  }
  if (j.contains("points")) {
    if (!j["points"].is_array()) throw ParseError("points must be an array");
    for (const auto& e : j["points"]) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("each point must be [x, y]");
      Point p;
      p.id = static_cast<PointId>(inst.points.size());
      p.x = require_int(e[0], "points");
      p.y = require_int(e[1], "points");
      inst.points.push_back(p);
    }
  }
  if (j.contains("rects")) {
    if (!j["rects"].is_array()) throw ParseError("rects must be an array");
    for (const auto& e : j["rects"]) {
      if (!e.is_array() || e.size() != 4)
        throw ParseError("each rect must be [x_lo, y_lo, x_hi, y_hi]");
      Rect r;
      r.id = static_cast<RectId>(inst.rects.size());
      r.x_lo = require_int(e[0], "rects");
      r.y_lo = require_int(e[1], "rects");
      r.x_hi = require_int(e[2], "rects");
      r.y_hi = require_int(e[3], "rects");
      inst.rects.push_back(r);
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  nlohmann::ordered_json j;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const Point& p : inst.points) pts.push_back({p.x, p.y});
  auto& rcs = j["rects"] = nlohmann::ordered_json::array();
  for (const Rect& r : inst.rects) rcs.push_back({r.x_lo, r.y_lo, r.x_hi, r.y_hi});
  j["label"] = inst.label;
  return j.dump();
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

Instance load_instance(const std::string& path) {
  return parse_instance(load_text(path));
}

void save_instance(const Instance& inst, const std::string& path) {
  save_text(serialize_instance(inst) + "\n", path);
}

std::string format_edges(const std::vector<LEdge>& edges) {
  std::vector<LEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  for (const LEdge& e : sorted) os << e.from << " " << e.to << "\n";
  return os.str();
}

std::vector<LEdge> parse_edges(const std::string& text, int n_points) {
  std::vector<LEdge> edges;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a >> b))
      throw ParseError("edge file line " + std::to_string(lineno) +
                       ": expected \"from to\"");
    if (a < 0 || b < 0 || a >= n_points || b >= n_points)
      throw ParseError("edge file line " + std::to_string(lineno) +
                       ": point id out of range");
    edges.push_back({static_cast<PointId>(a), static_cast<PointId>(b)});
  }
  return edges;
}

std::vector<LEdge> load_edges(const std::string& path, int n_points) {
  return parse_edges(load_text(path), n_points);
}

}  // namespace rectsupport
