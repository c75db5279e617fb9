#pragma once
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grkoszul/matrix.hpp"
#include "grkoszul/quiver.hpp"

namespace grk {

using SparseVec = std::vector<std::pair<int, Scalar>>;

// Split basic finite dimensional algebra with an adapted basis: one
// idempotent per vertex plus radical elements b with b = e_tgt(b) b e_src(b).
// The product x*y means "y first, then x", matching left modules and paths
// written left to right (x*y is the path y followed by x).
class Algebra {
 public:
  Algebra(Field f, std::vector<std::string> vertex_labels, std::vector<std::string> basis_labels,
          std::vector<int> src, std::vector<int> tgt, std::vector<int> idempotents,
          std::vector<SparseVec> table, std::vector<int> grades = {});

  const Field& field() const { return f_; }
  std::size_t dim() const { return src_.size(); }
  std::size_t num_vertices() const { return idem_.size(); }
  const std::string& vertex_label(int v) const { return vlabels_[v]; }
  const std::vector<std::string>& vertex_labels() const { return vlabels_; }
  const std::string& basis_label(int b) const { return blabels_[b]; }
  int src(int b) const { return src_[b]; }
  int tgt(int b) const { return tgt_[b]; }
  int idempotent(int v) const { return idem_[v]; }
  bool is_idempotent(int b) const { return idem_vertex_[b] >= 0; }
  int vertex_of_idempotent(int b) const { return idem_vertex_[b]; }
  int vertex_index(const std::string& label) const;

  bool graded() const { return !grades_.empty(); }
  const std::vector<int>& grades() const { return grades_; }
  int grade(int b) const { return grades_.at(b); }
  int max_grade() const;
  std::vector<std::size_t> graded_dims() const;

  const SparseVec& product(int i, int j) const { return table_[i * dim() + j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec unit(int b) const { return unit_vec(dim(), b); }
  Vec one() const;
  Matrix left_mult(int b) const;

  std::vector<int> radical_basis() const;
  // rad^0 = A, rad^1, ..., rad^L = 0 where L is the Loewy length.
  const std::vector<Subspace>& radical_powers() const { return radpow_; }
  std::size_t loewy_length() const { return radpow_.size() - 1; }
  const Subspace& rad_power(std::size_t k) const;
  // Basis elements whose classes span rad/rad^2; with the idempotents they
  // generate the algebra.
  const std::vector<int>& generators() const { return gens_; }

  std::string format(const Vec& x) const;

  // Full structural self-check: associativity, unit, Peirce and grading
  // compatibility. Throws InvariantError.
  void verify() const;

  // Optional quiver provenance.
  std::optional<QuiverPresentation> presentation;
  std::vector<std::vector<int>> basis_paths;  // arrow sequence per basis element (empty for idempotents)
  std::vector<Vec> arrow_elements;            // each arrow as an algebra element

 private:
  Field f_;
  std::vector<std::string> vlabels_, blabels_;
  std::vector<int> src_, tgt_, idem_, idem_vertex_, grades_;
  std::vector<SparseVec> table_;
  std::vector<Subspace> radpow_;
  std::vector<int> gens_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr build_algebra(const QuiverPresentation& q);
// Same structure constants, new grading (checked for compatibility).
AlgebraPtr with_grades(const Algebra& a, std::vector<int> grades);
AlgebraPtr opposite(const Algebra& a);

// gr A with respect to the radical filtration. reps[i] is an element of A
// whose class spans the i-th basis vector of gr A; level = grade.
struct GradedAlgebra {
  AlgebraPtr gr;
  std::vector<Vec> reps;
};
GradedAlgebra gr_algebra(const Algebra& a);

struct TightReport {
  bool tight = false;
  std::string failing_clause;  // empty when tight
};
TightReport tight_grading_check(const Algebra& a);

// Quotient by a two sided ideal. Vertices whose idempotent lies in the ideal
// disappear. reps are A-elements lifting the quotient basis.
struct QuotientAlgebra {
  AlgebraPtr quotient;
  std::vector<Vec> reps;
  std::vector<int> vertex_map;  // A vertex -> quotient vertex or -1
  Subspace ideal;
  Vec project(const Vec& x) const;  // A coords -> quotient coords

  // Ideal in reversed coordinates so that complements prefer early basis
  // elements; rep_index[i] is the A basis element lifting quotient element i.
  Subspace ideal_rev;
  std::vector<int> rep_index;
};
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Subspace& ideal);

// Two sided ideal generated by the given elements.
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens);
// span{x*b} and span{b*x} for x in s and b in the basis of A.
Subspace span_times_algebra(const Algebra& a, const Subspace& s);
Subspace span_algebra_times(const Algebra& a, const Subspace& s);

}  // namespace grk
