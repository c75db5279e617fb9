#pragma once
#include <optional>
#include <string>
#include <vector>

#include "grkoszul/filtration.hpp"
#include "grkoszul/homology.hpp"
#include "grkoszul/subalgebra.hpp"

namespace grk {

struct Ext1Row {
  int vertex = 0;
  std::size_t over_a = 0;              // dim Ext^1_A(M, L)
  std::size_t over_gr = 0;             // dim Ext^1_grA(gr M, L)
  std::optional<std::size_t> over_sub; // dim Ext^1_a(M, L) after restriction
};

// Truncation M/rad^r M against its bottom layer rad^(r-1)M/rad^r M:
// whether Ext^1(M_r, L) -> Ext^1(N_r, L) is injective for every simple L,
// decided through the long exact Hom/Ext sequence.
struct TruncationRow {
  std::size_t r = 0;
  bool injective = false;
  bool truncated_projective = false;  // M_r = P/rad^r P for its cover P
};

struct GrExt1Report {
  std::vector<Ext1Row> rows;
  std::vector<TruncationRow> truncations;
  bool all_equal = true;
  bool sub_bound = true;   // Ext^1_A <= Ext^1_a for every L (when a sub is given)
};

// Throws HypothesisError when sub is given but (rad a)A != rad A.
GrExt1Report gr_ext1_compare(const Module& m, const SubalgebraEmbedding* sub = nullptr);

struct RestrictReport {
  IsoResult iso;                 // M|a against gr(M|a), both ungraded
  std::vector<std::size_t> ext1; // dim Ext^1_a(M|a, L) per simple of a
  bool restricted_projective = false;
};
RestrictReport restrict_iso_check(const Module& m, const SubalgebraEmbedding& sub);

// Graded comparison of A with gr A through the canonical map sending a
// homogeneous b of grade k to its class in rad^k A / rad^(k+1) A.
struct AlgebraIsoReport {
  std::vector<std::size_t> graded_dims;     // of gr A
  std::vector<std::size_t> own_dims;        // of A, empty when A is ungraded
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::string reason;
};
AlgebraIsoReport gr_algebra_iso(const AlgebraPtr& a);

}  // namespace grk
