#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "frames/exact_int.hpp"

namespace frames::cli {

struct EdgeList {
  Int vertex_count = 0;
  std::vector<std::pair<Int, Int>> edges;  // distinct, u < v, input order
};

/// One "u v" pair per line, 1-indexed; '#' starts a comment. vertex_count is
/// the largest label unless given. Throws InvalidArgument with a line number.
[[nodiscard]] EdgeList parse_edge_list(std::istream& in, std::optional<Int> vertex_count = std::nullopt);

}  // namespace frames::cli
