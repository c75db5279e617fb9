#include "grkoszul/grcompare.hpp"

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

std::vector<std::size_t> ext1_all(const Module& m) {
  const AlgebraPtr& a = m.algebra_ptr();
  Resolution res = minimal_resolution(ungraded(m), 3);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    out.push_back(ext_dims(res, simple_module(a, static_cast<int>(v)), 1)[1]);
  return out;
}

std::vector<std::size_t> hom_to_simples(const Module& m) {
  const AlgebraPtr& a = m.algebra_ptr();
  std::vector<std::size_t> out;
  Module u = ungraded(m);
  for (std::size_t v = 0; v < a->num_vertices(); ++v) out.push_back(hom_dim(u, simple_module(a, static_cast<int>(v))));
  return out;
}

}  // namespace

GrExt1Report gr_ext1_compare(const Module& m0, const SubalgebraEmbedding* sub) {
  if (sub && !radical_generation_check(*sub).holds)
    throw HypothesisError("radical generation (rad a)A = rad A fails for the given subalgebra");
  Module m = ungraded(m0);
  GrExt1Report rep;
  GradedAlgebra ga = gr_algebra(m.algebra());
  Module grm = ungraded(gr_module(m, ga).module);
  auto ea = ext1_all(m);
  auto eg = ext1_all(grm);
  std::vector<std::size_t> es;
  if (sub) {
    Module r = restrict_to(m, *sub);
    Resolution res = minimal_resolution(r, 3);
    // L restricted to a is the simple at the a-vertex containing v
    std::vector<int> owner(m.algebra().num_vertices(), -1);
    for (std::size_t c = 0; c < sub->blocks.size(); ++c)
      for (int v : sub->blocks[c]) owner[v] = static_cast<int>(c);
    for (std::size_t v = 0; v < owner.size(); ++v)
      es.push_back(ext_dims(res, simple_module(sub->sub, owner[v]), 1)[1]);
  }
  for (std::size_t v = 0; v < ea.size(); ++v) {
    Ext1Row row{static_cast<int>(v), ea[v], eg[v], std::nullopt};
    if (sub) {
      row.over_sub = es[v];
      if (es[v] < ea[v]) rep.sub_bound = false;
    }
    if (ea[v] != eg[v]) rep.all_equal = false;
    // the gr-construction only ever injects
    check_invariant(ea[v] <= eg[v], "gr-construction: Ext^1 over A exceeds Ext^1 over gr A");
    rep.rows.push_back(row);
  }
  // truncations of M along its radical series
  auto rs = radical_series(m);
  const std::size_t ll = rs.size() - 1;
  for (std::size_t r = 2; r <= ll; ++r) {
    QuotientResult mr = quotient(m, rs[r]);
    // bottom layer of M_r, i.e. the image of rad^(r-1) M
    Subspace bottom(m.field(), mr.module.dim());
    for (const auto& x : rs[r - 1].basis()) bottom.add(apply(m.field(), mr.projection, x));
    auto nr = submodule(mr.module, bottom).module;
    auto qr = quotient(mr.module, bottom).module;
    auto hm = hom_to_simples(mr.module), hn = hom_to_simples(nr), hq = hom_to_simples(qr);
    auto eq = ext1_all(qr);
    TruncationRow tr;
    tr.r = r;
    tr.injective = true;
    for (std::size_t v = 0; v < hm.size(); ++v)
      if (eq[v] + hm[v] != hn[v] + hq[v]) tr.injective = false;
    ProjectiveCover pc = projective_cover(mr.module);
    tr.truncated_projective = pc.projective.dim() - rad_power(pc.projective, r).dim() == mr.module.dim();
    if (tr.truncated_projective)
      check_invariant(tr.injective, "restriction to the bottom layer of a truncated projective is not injective");
    rep.truncations.push_back(tr);
  }
  return rep;
}

RestrictReport restrict_iso_check(const Module& m, const SubalgebraEmbedding& sub) {
  RestrictReport rep;
  Module r = ungraded(restrict_to(ungraded(m), sub));
  if (sub.sub->graded() && tight_grading_check(*sub.sub).tight) {
    Module g = ungraded(gr_module_tight(r).module);
    rep.iso = isomorphic(r, g);
  } else {
    rep.iso.verdict = IsoVerdict::undetermined;
    rep.iso.reason = "subalgebra is not tightly graded";
  }
  Resolution res = minimal_resolution(r, 3);
  rep.restricted_projective = true;
  for (std::size_t c = 0; c < sub.sub->num_vertices(); ++c) {
    std::size_t e = ext_dims(res, simple_module(sub.sub, static_cast<int>(c)), 1)[1];
    rep.ext1.push_back(e);
    if (e) rep.restricted_projective = false;
  }
  return rep;
}

AlgebraIsoReport gr_algebra_iso(const AlgebraPtr& ap) {
  const Algebra& a = *ap;
  const Field& f = a.field();
  GradedAlgebra ga = gr_algebra(a);
  AlgebraIsoReport rep;
  rep.graded_dims = ga.gr->graded_dims();
  if (!a.graded()) {
    rep.reason = "A carries no grading";
    return rep;
  }
  rep.own_dims = a.graded_dims();
  if (rep.own_dims != rep.graded_dims) {
    rep.verdict = IsoVerdict::not_isomorphic;
    rep.reason = "graded dimensions differ";
    return rep;
  }
  const std::size_t n = a.dim(), levels = a.loewy_length();
  std::vector<std::vector<int>> at(levels + 1);
  for (std::size_t i = 0; i < n; ++i) at[ga.gr->grade(static_cast<int>(i))].push_back(static_cast<int>(i));
  Matrix phi(n, n);
  for (std::size_t k = 0; k < levels; ++k) {
    std::vector<Vec> cols;
    for (int i : at[k]) cols.push_back(ga.reps[i]);
    for (const auto& r : a.rad_power(k + 1).basis()) cols.push_back(r);
    LinearSolver solver(f, Matrix::from_cols(cols, n));
    for (std::size_t b = 0; b < n; ++b) {
      if (a.grade(static_cast<int>(b)) != static_cast<int>(k)) continue;
      auto c = solver.solve(a.unit(static_cast<int>(b)));
      if (!c) {
        rep.verdict = IsoVerdict::not_isomorphic;
        rep.reason = "basis element " + a.basis_label(static_cast<int>(b)) + " of grade " + std::to_string(k) +
                     " lies outside rad^" + std::to_string(k);
        return rep;
      }
      for (std::size_t j = 0; j < at[k].size(); ++j) phi(at[k][j], b) = (*c)[j];
    }
  }
  if (rank(f, phi) != n) {
    rep.verdict = IsoVerdict::not_isomorphic;
    rep.reason = "canonical map is not bijective";
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = apply(f, phi, a.mul(a.unit(static_cast<int>(i)), a.unit(static_cast<int>(j))));
      Vec rhs = ga.gr->mul(phi.col(i), phi.col(j));
      if (lhs != rhs) {
        rep.verdict = IsoVerdict::not_isomorphic;
        rep.reason = "canonical map is not multiplicative at (" + a.basis_label(static_cast<int>(i)) + ", " +
                     a.basis_label(static_cast<int>(j)) + ")";
        return rep;
      }
    }
  rep.verdict = IsoVerdict::isomorphic;
  rep.reason = "canonical map is a graded isomorphism";
  return rep;
}

}  // namespace grk
