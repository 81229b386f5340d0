#include "edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "frames/errors.hpp"

namespace frames::cli {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidArgument("line " + std::to_string(line) + ": " + what);
}

Int parse_vertex(const std::string& token, std::size_t line) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) fail(line, "'" + token + "' is not an integer");
  if (value < 1) fail(line, "vertex labels start at 1, got " + token);
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, std::optional<Int> vertex_count) {
  if (vertex_count && *vertex_count < 2) throw InvalidArgument("--vertices must be at least 2");
  EdgeList out;
  std::set<std::pair<Int, Int>> seen;
  std::string raw;
  std::size_t line = 0;
  Int max_label = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(t);
    if (fields.empty()) continue;
    if (fields.size() != 2) fail(line, "expected two vertex labels, found " + std::to_string(fields.size()));
    const Int u = parse_vertex(fields[0], line);
    const Int v = parse_vertex(fields[1], line);
    if (u == v) fail(line, "self-loop at vertex " + std::to_string(u));
    if (vertex_count && std::max(u, v) > *vertex_count) {
      fail(line, "vertex " + std::to_string(std::max(u, v)) + " exceeds --vertices " + std::to_string(*vertex_count));
    }
    max_label = std::max({max_label, u, v});
    const auto key = std::minmax(u, v);
    if (seen.insert(key).second) out.edges.push_back(key);
  }
  if (out.edges.empty()) throw InvalidArgument("edge list contains no edges");
  out.vertex_count = vertex_count.value_or(max_label);
  return out;
}

}  // namespace frames::cli
