#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grkoszul/field.hpp"

namespace grk {

struct QuiverVertex {
  std::string label;
  std::optional<long> length;
  std::optional<std::vector<long>> weight;
  bool operator==(const QuiverVertex&) const = default;
};

struct QuiverArrow {
  std::string name;
  int src = 0, tgt = 0;
  bool operator==(const QuiverArrow&) const = default;
};

// A path is read left to right: arrows[0] is traversed first.
struct PathTerm {
  Scalar coef;
  std::vector<int> arrows;
  bool operator==(const PathTerm&) const = default;
};
using Relation = std::vector<PathTerm>;

// Image of an arrow under an anti-involution that fixes the vertices.
struct ArrowImage {
  int arrow = 0;
  bool negate = false;
  bool operator==(const ArrowImage&) const = default;
};

struct QuiverPresentation {
  Field field = Field::rational();
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<Relation> relations;
  std::vector<std::pair<int, int>> order;  // (a, b) means a < b
  std::vector<ArrowImage> duality;         // empty, or one entry per arrow
  int max_length = 32;

  int vertex_index(const std::string& label) const;  // -1 if absent
  int arrow_index(const std::string& name) const;
  int path_src(const std::vector<int>& path) const;
  int path_tgt(const std::vector<int>& path) const;
  bool operator==(const QuiverPresentation& o) const;
};

// Throws InputError when relations are not composable, not in the arrow
// ideal, or do not share endpoints.
void validate(const QuiverPresentation& q);

}  // namespace grk
