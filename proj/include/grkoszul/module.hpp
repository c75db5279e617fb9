#pragma once
#include <string>
#include <vector>

#include "grkoszul/algebra.hpp"

namespace grk {

struct SubalgebraEmbedding;

// Finite dimensional left module with a vertex-adapted basis: basis vector i
// lies in e_vertex(i) M. act(b) is the matrix of algebra basis element b.
// Graded modules carry one grade per basis vector.
class Module {
 public:
  Module(AlgebraPtr alg, std::vector<int> vertex, std::vector<Matrix> action, std::vector<int> grades = {});

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  std::size_t dim() const { return vertex_.size(); }
  int vertex(std::size_t i) const { return vertex_[i]; }
  const std::vector<int>& vertices() const { return vertex_; }
  bool graded() const { return !grades_.empty(); }
  int grade(std::size_t i) const { return grades_.at(i); }
  const std::vector<int>& grades() const { return grades_; }
  const Matrix& act(int b) const { return action_[b]; }
  const std::vector<Matrix>& actions() const { return action_; }
  Matrix act_element(const Vec& x) const;
  std::vector<std::size_t> vertex_dims() const;
  // basis indices in vertex v (and grade g when given)
  std::vector<int> block(int v) const;
  std::vector<int> block(int v, int g) const;
  int min_grade() const;
  int max_grade() const;

  // Module axioms against the algebra's structure constants.
  void verify() const;

 private:
  AlgebraPtr alg_;
  std::vector<int> vertex_;
  std::vector<Matrix> action_;
  std::vector<int> grades_;
};

Module simple_module(const AlgebraPtr& a, int v, int grade = 0);
Module zero_module(const AlgebraPtr& a, bool graded);

// Direct sum of shifted indecomposable projectives A e_{v_k} <shift_k>.
struct ProjectiveSum {
  std::vector<int> vertex, shift;
  std::vector<std::vector<int>> elems;  // algebra basis elements with src = vertex[k]
  std::vector<int> offset;
  int pos(std::size_t k, int b) const;  // module index of (k, b), or -1
  // generator of summand k: the idempotent e_{vertex[k]}
  int gen(std::size_t k) const;
  std::size_t rank() const { return vertex.size(); }
};
std::pair<Module, ProjectiveSum> projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices,
                                                const std::vector<int>& shifts = {});
Module projective(const AlgebraPtr& a, int v, int shift = 0);

struct SubmoduleResult {
  Module module;
  Matrix inclusion;  // M.dim x U.dim
};
SubmoduleResult submodule(const Module& m, const Subspace& u);

struct QuotientResult {
  Module module;
  Matrix projection;  // Q.dim x M.dim
  std::vector<int> lift;  // quotient basis index -> M basis index it came from
};
QuotientResult quotient(const Module& m, const Subspace& u);

Subspace generated_submodule(const Module& m, const std::vector<Vec>& gens);
Subspace radical(const Module& m);
Subspace rad_power(const Module& m, std::size_t k);
Subspace socle(const Module& m);
Subspace annihilated_by(const Module& m, const std::vector<int>& algebra_elems);
std::size_t loewy_length(const Module& m);

Module direct_sum(const Module& a, const Module& b);
Module shift(const Module& m, int d);
Module ungraded(const Module& m);
// Dual module over the opposite algebra.
Module dual(const Module& m, const AlgebraPtr& opposite_alg);
// Restriction to a subalgebra, re-based along the sub's idempotents.
Module restrict_to(const Module& m, const SubalgebraEmbedding& s);
// Change of base along algebra elements: new action of basis b is
// act_element(images[b]) where the new algebra has the same vertices.
Module change_of_rings(const Module& m, const AlgebraPtr& target, const std::vector<Vec>& images,
                       const std::vector<int>& vertex_map);
// Apply a basis change: new basis vectors are the columns of t (invertible).
Module rebase(const Module& m, const Matrix& t, const std::vector<int>& vertex, const std::vector<int>& grades);

std::string describe_dims(const Module& m);

}  // namespace grk
