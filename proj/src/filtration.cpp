#include "grkoszul/filtration.hpp"

#include <algorithm>
#include <memory>

#include "grkoszul/errors.hpp"

namespace grk {

std::vector<Subspace> radical_series(const Module& m) {
  std::vector<Subspace> out;
  out.push_back(Subspace::whole(m.field(), m.dim()));
  auto rb = m.algebra().radical_basis();
  while (out.back().dim() > 0) {
    Subspace next(m.field(), m.dim());
    for (int b : rb)
      for (const auto& x : out.back().basis()) next.add(apply(m.field(), m.act(b), x));
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subspace> socle_series(const Module& m) {
  const Field& f = m.field();
  std::vector<Subspace> out;
  out.push_back(Subspace(f, m.dim()));
  const auto& gens = m.algebra().generators();
  while (out.back().dim() < m.dim()) {
    // soc^(k+1) = {x : g x in soc^k for every generator g}
    const Subspace& cur = out.back();
    auto fc = cur.free_columns();
    Subspace rows(f, m.dim());
    for (int g : gens) {
      const Matrix& a = m.act(g);
      // rows of (reduce mod cur) ∘ a, restricted to free coordinates
      std::vector<Vec> reduced_cols;
      for (std::size_t j = 0; j < m.dim(); ++j) reduced_cols.push_back(cur.reduce(a.col(j)));
      for (auto r : fc) {
        Vec row(m.dim());
        for (std::size_t j = 0; j < m.dim(); ++j) row[j] = reduced_cols[j][r];
        rows.add(std::move(row));
      }
    }
    Subspace next = Subspace::span(f, m.dim(), kernel_of_rows(rows));
    check_invariant(next.dim() > cur.dim(), "socle series did not grow");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<std::vector<std::size_t>> layer_dims(const Module& m, const std::vector<Subspace>& chain) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t nv = m.algebra().num_vertices();
  auto count = [&](const Subspace& s) {
    std::vector<std::size_t> d(nv, 0);
    for (auto p : s.pivots()) ++d[m.vertex(p)];
    return d;
  };
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto a = count(chain[i]), b = count(chain[i + 1]);
    std::vector<std::size_t> d(nv);
    for (std::size_t v = 0; v < nv; ++v) d[v] = a[v] > b[v] ? a[v] - b[v] : b[v] - a[v];
    out.push_back(d);
  }
  return out;
}

std::vector<std::vector<std::size_t>> radical_layers(const Module& m) { return layer_dims(m, radical_series(m)); }
std::vector<std::vector<std::size_t>> socle_layers(const Module& m) { return layer_dims(m, socle_series(m)); }

std::vector<std::vector<std::size_t>> filtration_slices(const Module& m, std::size_t r, std::size_t s) {
  auto all = radical_layers(m);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = r; k < s; ++k)
    out.push_back(k < all.size() ? all[k] : std::vector<std::size_t>(m.algebra().num_vertices(), 0));
  return out;
}

namespace {

Subspace vertex_part(const Module& m, const Subspace& s, int v) {
  Subspace out(m.field(), m.dim());
  for (const auto& row : s.basis()) {
    Vec x(m.dim(), Scalar(0));
    bool any = false;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (m.vertex(i) == v && row[i] != 0) {
        x[i] = row[i];
        any = true;
      }
    if (any) out.add(std::move(x));
  }
  return out;
}

}  // namespace

GradedModule associated_graded(const Module& m, const std::vector<Subspace>& filt, const AlgebraPtr& target,
                               const std::vector<Vec>& reps, const std::vector<int>& rep_grades, int base) {
  const Field& f = m.field();
  const std::size_t L = filt.size() - 1;  // filt[L] must be zero
  check_invariant(filt.back().dim() == 0, "associated graded: filtration must end in zero");
  struct Item {
    int level, vertex;
    Vec v;
  };
  std::vector<Item> items;
  const std::size_t nv = m.algebra().num_vertices();
  for (std::size_t k = 0; k < L; ++k)
    for (std::size_t v = 0; v < nv; ++v) {
      Subspace cur = vertex_part(m, filt[k], v);
      Subspace nxt = vertex_part(m, filt[k + 1], v);
      std::vector<Vec> cands;
      for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.vertex(i) == (int)v && cur.contains(unit_vec(m.dim(), i))) cands.push_back(unit_vec(m.dim(), i));
      for (const auto& r : cur.basis()) cands.push_back(r);
      for (auto& c : greedy_complement(nxt, cands)) items.push_back({(int)k, (int)v, c});
    }
  std::vector<std::vector<int>> at_level(L + 1);
  for (std::size_t i = 0; i < items.size(); ++i) at_level[items[i].level].push_back(static_cast<int>(i));
  std::vector<std::unique_ptr<LinearSolver>> solvers(L);
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Vec> cols;
    for (int i : at_level[k]) cols.push_back(items[i].v);
    for (const auto& r : filt[k + 1].basis()) cols.push_back(r);
    if (cols.empty()) continue;
    solvers[k] = std::make_unique<LinearSolver>(f, Matrix::from_cols(cols, m.dim()));
  }
  const std::size_t n = items.size();
  std::vector<Matrix> act;
  for (std::size_t c = 0; c < target->dim(); ++c) {
    Matrix a(n, n);
    Matrix r = m.act_element(reps[c]);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t lev = items[j].level + rep_grades[c];
      if (lev >= L) continue;
      Vec img = apply(f, r, items[j].v);
      if (!solvers[lev]) {
        check_invariant(is_zero(img), "associated graded: action leaves the filtration");
        continue;
      }
      auto co = solvers[lev]->solve(img);
      check_invariant(co.has_value(), "associated graded: action does not respect the filtration");
      for (std::size_t q = 0; q < at_level[lev].size(); ++q) a(at_level[lev][q], j) = (*co)[q];
    }
    act.push_back(std::move(a));
  }
  std::vector<int> vert, grades;
  GradedModule out{Module(target, {}, std::vector<Matrix>(target->dim(), Matrix(0, 0))), {}};
  for (const auto& it : items) {
    vert.push_back(it.vertex);
    grades.push_back(base + it.level);
    out.reps.push_back(it.v);
  }
  out.module = Module(target, vert, std::move(act), target->graded() ? grades : std::vector<int>{});
  return out;
}

GradedModule gr_module(const Module& m, const GradedAlgebra& ga) {
  return associated_graded(m, radical_series(m), ga.gr, ga.reps, ga.gr->grades());
}

GradedModule gr_module_tight(const Module& m) {
  const Algebra& a = m.algebra();
  if (!a.graded()) throw HypothesisError("gr over A itself needs a graded algebra");
  std::vector<Vec> reps;
  for (std::size_t b = 0; b < a.dim(); ++b) reps.push_back(a.unit(b));
  return associated_graded(m, radical_series(m), m.algebra_ptr(), reps, a.grades());
}

GradedModule gr_sharp(const Module& m, const Subspace& l, const GradedAlgebra& ga) {
  auto rs = radical_series(m);
  std::vector<Subspace> filt;
  for (const auto& r : rs) filt.push_back(intersect(l, r));
  // drop trailing duplicates of zero so the filtration ends exactly once
  while (filt.size() >= 2 && filt[filt.size() - 2].dim() == 0) filt.pop_back();
  return associated_graded(m, filt, ga.gr, ga.reps, ga.gr->grades());
}

}  // namespace grk
