#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectsupport/geometry.hpp"

namespace rectsupport {

struct ParseError : std::runtime_error {
  std::size_t byte;  // 0 when unknown
  ParseError(const std::string& msg, std::size_t byte_ = 0)
      : std::runtime_error(msg), byte(byte_) {}
};

/// Canonical instance schema:
///   { "points": [[x,y], ...], "rects": [[x_lo,y_lo,x_hi,y_hi], ...],
///     "label": "..." }
/// Coordinates are integers; ids are array positions.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// Edge list format: one line per edge, "fromId toId", sorted by (from, to).
std::string format_edges(const std::vector<LEdge>& edges);
std::vector<LEdge> parse_edges(const std::string& text, int n_points);
std::vector<LEdge> load_edges(const std::string& path, int n_points);
void save_text(const std::string& text, const std::string& path);
std::string load_text(const std::string& path);

}  // namespace rectsupport
