#pragma once
#include <string>
#include <vector>

#include "grkoszul/algebra.hpp"

namespace grk {

// A unital subalgebra a of A, re-presented as a split basic algebra in its
// own right. embed maps a-coordinates to A-coordinates.
struct SubalgebraEmbedding {
  AlgebraPtr ambient;
  AlgebraPtr sub;
  Matrix embed;                            // A.dim x a.dim
  std::vector<std::vector<int>> blocks;    // a-vertex -> A-vertices
  Subspace span;                           // image in A
  bool normal = false;                     // a_+ A == A a_+ with a_+ = rad a

  Vec to_ambient(const Vec& x) const { return apply(ambient->field(), embed, x); }
};

// Smallest unital subalgebra containing the generators (given in A
// coordinates).
SubalgebraEmbedding subalgebra_from_generators(const AlgebraPtr& a, const std::vector<Vec>& gens);

struct RadGenReport {
  bool holds = false;
  std::size_t dim_generated = 0;  // dim (rad a)A
  std::size_t dim_radical = 0;    // dim rad A
};
// Does (rad a) A equal rad A?
RadGenReport radical_generation_check(const SubalgebraEmbedding& s);

// Elements of A given as "path" expressions, e.g. "2*alpha*beta + e1".
Vec parse_element(const Algebra& a, const std::string& text);

}  // namespace grk
