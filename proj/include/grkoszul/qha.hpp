#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grkoszul/algebra.hpp"
#include "grkoszul/homology.hpp"
#include "grkoszul/koszul.hpp"
#include "grkoszul/laurent.hpp"
#include "grkoszul/subalgebra.hpp"

namespace grk {

// Strict partial order on weights, indexed like the algebra's vertices.
class WeightPoset {
 public:
  WeightPoset() = default;
  // Transitive closure of the given relations; throws InputError on cycles.
  static WeightPoset from_pairs(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less);
  std::size_t size() const { return labels_.size(); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool less(int a, int b) const { return lt_[a][b] != 0; }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  bool is_ideal(const std::vector<int>& s) const;
  // Maximal elements of s, in index order.
  std::vector<int> maximal_in(const std::vector<int>& s) const;
  // Linear extension listing larger weights first; ties broken by index.
  std::vector<int> top_down() const;
  std::vector<std::pair<int, int>> cover_pairs() const;
  WeightPoset restrict_to(const std::vector<int>& keep) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> lt_;
};

// Poset from the presentation's order lines (vertex order otherwise empty).
WeightPoset poset_of(const Algebra& a);
// Length function from the presentation's vertex length tags, if all present.
std::optional<std::vector<long>> lengths_of(const Algebra& a);
// Anti-involution on the algebra basis induced by the presentation's arrow
// duality, checked to be an anti-automorphism of order two.
std::optional<Matrix> duality_of(const Algebra& a);

struct HighestWeight {
  AlgebraPtr alg, op;
  WeightPoset poset;
  std::vector<Module> simple, proj, standard, costandard, injective;
  std::optional<Matrix> duality;

  std::size_t size() const { return simple.size(); }
  // 𝔡M: the dual space with a acting through the transpose of d(a).
  Module twist_dual(const Module& m) const;
};

// Δ(λ) = P(λ) modulo the images of all P(μ) -> rad P(λ) with μ not < λ; ∇
// dually through the opposite algebra. Modules are graded when A is.
HighestWeight standard_modules(const AlgebraPtr& a, const WeightPoset& p, std::optional<Matrix> duality = {});

struct Section {
  int weight = 0;
  int shift = 0;
};
struct DeltaFiltration {
  bool found = false;
  bool backtracked = false;      // the greedy first choice did not succeed
  std::vector<Section> sections;  // bottom first
};
// Δ-filtration of m, peeling maximal weights through trace submodules.
// `top` >= 0 additionally demands the P(top) shape: Δ(top) once, on top, and
// all other sections of strictly larger weight.
DeltaFiltration delta_filtration(const HighestWeight& h, const Module& m, int top = -1);

struct QhaReport {
  bool qha = false;
  std::string failure;
  std::vector<DeltaFiltration> filtrations;  // one per P(λ)
  std::vector<int> chain_order;              // weights in the order the chain adds them
  std::vector<std::size_t> chain_dims;       // dims of the heredity chain J_1 ⊂ J_2 ⊂ ...
  std::optional<std::size_t> gldim;
};
QhaReport qha_check(const HighestWeight& h);

// Global dimension as max projective dimension of the simples, or nullopt
// when some resolution does not stop within `cap` terms.
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t cap = 16);

struct Truncation {
  QuotientAlgebra q;
  HighestWeight h;
  std::vector<int> gamma;       // kept weights of the ambient poset
  bool ext_verified = false;    // sampled Ext tables agree on both sides
};
// A_Γ = A / A e A with e the idempotent of the weights outside Γ.
Truncation truncate(const HighestWeight& h, const std::vector<int>& gamma);
// A/J-module viewed as an A-module.
Module inflate(const Module& m, const QuotientAlgebra& q, const AlgebraPtr& ambient);

struct OrthogonalityReport {
  bool orthogonal = true;
  std::size_t upto = 0;
  std::map<std::pair<int, int>, std::vector<std::size_t>> table;  // (λ, μ) -> dims Ext^n(Δλ, ∇μ)
  bool graded = false;
  bool reciprocity = true;
  struct Entry {
    int mu, tau, s;
    std::size_t nabla_mult, hom_dim, delta_mult;
  };
  std::vector<Entry> entries;
};
OrthogonalityReport orthogonality_reciprocity_check(const HighestWeight& h);

struct ParityReport {
  bool kl = true, skl = true;
  std::optional<bool> graded_kl;  // only for tightly graded algebras
  bool duality_used = false;
  std::size_t upto = 0;
  std::string kl_witness, skl_witness, graded_witness;
};
ParityReport parity_checks(const HighestWeight& h, const std::vector<long>& l);

struct CategoryKl {
  std::map<std::pair<int, int>, Laurent> p;        // (ν, λ) -> P_{ν,λ}
  std::map<std::pair<int, int>, Laurent> p_right;  // from Ext(Δ(ν), L(λ))
  bool left_equals_right = true;
  std::vector<std::size_t> dual_degrees;     // dims of Ext^n(⊕L, ⊕L)
  std::vector<std::size_t> gr_dual_degrees;  // the same for gr A
  bool dual_complete = false;                // all simples have finite pd
  bool duals_match = false;
  std::size_t dual_dim() const;
};
CategoryKl category_kl_and_dual(const HighestWeight& h, const std::vector<long>& l);
// Degree table of Ext^•(⊕L, ⊕L) up to degree cap (or pd when finite).
std::vector<std::size_t> homological_dual_degrees(const AlgebraPtr& a, std::size_t cap, bool* complete = nullptr);

struct PipelineReport {
  // hypotheses
  bool sub_tight = false, radgen = false, sub_normal = false, projective_restriction = false, kl_truncation = false;
  // conclusions computed directly
  bool gr_qha = false, gr_standards_match = false, skl = false, gr_koszul = false, gr_standards_linear = false;
  bool kl_polys_preserved = true;
  // the elementary route: a Koszul, (rad a)B = rad B, B projective over a
  bool sub_koszul = false, radgen_b = false, b_projective = false;
  std::string main_verdict;     // "implied" or "not implied"
  std::string elementary_verdict;
  std::vector<std::string> failed;  // names of failed hypothesis clauses
  std::vector<std::string> failed_elementary;
};
PipelineReport pipeline_checks(const HighestWeight& h, const SubalgebraEmbedding& sub, const std::vector<int>& gamma,
                               const std::vector<long>& l);

}  // namespace grk
