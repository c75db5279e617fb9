#include "grkoszul/qha.hpp"

#include <algorithm>
#include <functional>

#include "grkoszul/errors.hpp"
#include "grkoszul/filtration.hpp"

namespace grk {

WeightPoset WeightPoset::from_pairs(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less) {
  WeightPoset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.lt_.assign(n, std::vector<char>(n, 0));
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw InputError("order relation names an unknown weight");
    p.lt_[a][b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.lt_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.lt_[k][j]) p.lt_[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (p.lt_[i][i]) throw InputError("order relations contain a cycle through " + p.labels_[i]);
  return p;
}

bool WeightPoset::is_ideal(const std::vector<int>& s) const {
  std::vector<char> in(size(), 0);
  for (int x : s) in.at(x) = 1;
  for (int x : s)
    for (std::size_t y = 0; y < size(); ++y)
      if (lt_[y][x] && !in[y]) return false;
  return true;
}

std::vector<int> WeightPoset::maximal_in(const std::vector<int>& s) const {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int x : sorted) {
    bool top = true;
    for (int y : sorted)
      if (lt_[x][y]) top = false;
    if (top) out.push_back(x);
  }
  return out;
}

std::vector<int> WeightPoset::top_down() const {
  std::vector<int> left(size());
  for (std::size_t i = 0; i < size(); ++i) left[i] = static_cast<int>(i);
  std::vector<int> out;
  while (!left.empty()) {
    int pick = maximal_in(left).front();
    out.push_back(pick);
    left.erase(std::find(left.begin(), left.end(), pick));
  }
  return out;
}

std::vector<std::pair<int, int>> WeightPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (!lt_[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < size() && cover; ++c)
        if (lt_[a][c] && lt_[c][b]) cover = false;
      if (cover) out.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  return out;
}

WeightPoset WeightPoset::restrict_to(const std::vector<int>& keep) const {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> rel;
  for (int k : keep) labels.push_back(labels_.at(k));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (lt_[keep[i]][keep[j]]) rel.push_back({static_cast<int>(i), static_cast<int>(j)});
  return from_pairs(labels, rel);
}

WeightPoset poset_of(const Algebra& a) {
  std::vector<std::pair<int, int>> rel;
  if (a.presentation) rel = a.presentation->order;
  return WeightPoset::from_pairs(a.vertex_labels(), rel);
}

std::optional<std::vector<long>> lengths_of(const Algebra& a) {
  if (!a.presentation) return std::nullopt;
  std::vector<long> l;
  for (const auto& v : a.presentation->vertices) {
    if (!v.length) return std::nullopt;
    l.push_back(*v.length);
  }
  return l;
}

std::optional<Matrix> duality_of(const Algebra& a) {
  if (!a.presentation || a.presentation->duality.empty()) return std::nullopt;
  const auto& q = *a.presentation;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Matrix d(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec img;
    if (a.is_idempotent(b)) {
      img = a.unit(b);
    } else {
      // reversed path of images: the anti-involution swaps the order
      const auto& path = a.basis_paths.at(b);
      Scalar sign = f.from_int(1);
      bool start = true;
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const ArrowImage& im = q.duality.at(*it);
        if (im.negate) sign = f.neg(sign);
        const Vec& x = a.arrow_elements.at(im.arrow);
        img = start ? x : a.mul(x, img);
        start = false;
      }
      f.scale(img, sign);
    }
    for (std::size_t r = 0; r < n; ++r) d(r, b) = img[r];
  }
  if (mul(f, d, d) != Matrix::identity(n)) throw InputError("duality is not an involution");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = apply(f, d, a.mul(a.unit(i), a.unit(j)));
      Vec rhs = a.mul(d.col(j), d.col(i));
      if (lhs != rhs) throw InputError("duality does not reverse products");
    }
  return d;
}

Module HighestWeight::twist_dual(const Module& m) const {
  check_invariant(duality.has_value(), "no duality supplied");
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < alg->dim(); ++b) act.push_back(m.act_element(duality->col(b)).transpose());
  std::vector<int> g;
  for (int x : m.grades()) g.push_back(-x);
  return Module(alg, m.vertices(), std::move(act), g);
}

namespace {

Module standard_of(const AlgebraPtr& a, const WeightPoset& p, int lambda) {
  auto [pm, ps] = projective_sum(a, {lambda});
  std::vector<Vec> gens;
  for (std::size_t idx = 1; idx < ps.elems[0].size(); ++idx) {
    int b = ps.elems[0][idx];
    if (!p.less(a->tgt(b), lambda)) gens.push_back(unit_vec(pm.dim(), idx));
  }
  return quotient(pm, generated_submodule(pm, gens)).module;
}

}  // namespace

HighestWeight standard_modules(const AlgebraPtr& a, const WeightPoset& p, std::optional<Matrix> duality) {
  if (p.size() != a->num_vertices()) throw InputError("weights and simple modules are not in bijection");
  HighestWeight h;
  h.alg = a;
  h.op = opposite(*a);
  h.poset = p;
  h.duality = std::move(duality);
  for (std::size_t v = 0; v < p.size(); ++v) {
    int lam = static_cast<int>(v);
    h.simple.push_back(simple_module(a, lam));
    h.proj.push_back(projective(a, lam));
    h.standard.push_back(standard_of(a, p, lam));
    h.costandard.push_back(dual(standard_of(h.op, p, lam), a));
    h.injective.push_back(dual(projective(h.op, lam), a));
    const Module& d = h.standard.back();
    check_invariant(d.block(lam).size() >= 1, "standard module lost its head");
  }
  return h;
}

namespace {

struct Peeler {
  const HighestWeight& h;
  int top;
  bool backtracked = false;

  // Sections of m bottom first, or nullopt.
  std::optional<std::vector<Section>> run(const Module& m, bool first_path) {
    if (m.dim() == 0) return std::vector<Section>{};
    const Algebra& a = *h.alg;
    std::vector<int> support;
    auto vd = m.vertex_dims();
    for (std::size_t v = 0; v < vd.size(); ++v)
      if (vd[v]) support.push_back(static_cast<int>(v));
    auto maxi = h.poset.maximal_in(support);
    for (std::size_t choice = 0; choice < maxi.size(); ++choice) {
      int mu = maxi[choice];
      if (top >= 0 && mu != top && !h.poset.less(top, mu)) continue;
      std::vector<int> idx = m.block(mu);
      std::vector<Vec> gens;
      for (int i : idx) gens.push_back(unit_vec(m.dim(), i));
      bool ok = true;
      // P(mu)^k -> m must factor through Δ(mu)^k
      for (std::size_t b = 0; b < a.dim() && ok; ++b) {
        if (a.src(b) != mu || a.is_idempotent(b) || h.poset.less(a.tgt(b), mu)) continue;
        for (const auto& g : gens)
          if (!is_zero(apply(m.field(), m.act(b), g))) {
            ok = false;
            break;
          }
      }
      Subspace u = generated_submodule(m, gens);
      if (ok && u.dim() != gens.size() * h.standard[mu].dim()) ok = false;
      if (ok && top >= 0 && mu == top && (gens.size() != 1 || u.dim() != m.dim())) ok = false;
      if (ok) {
        Module rest = quotient(m, u).module;
        auto tail = run(rest, first_path && choice == 0);
        if (tail) {
          std::vector<Section> out;
          for (int i : idx) out.push_back({mu, m.graded() ? m.grade(i) : 0});
          out.insert(out.end(), tail->begin(), tail->end());
          return out;
        }
      }
      backtracked = true;
    }
    return std::nullopt;
  }
};

}  // namespace

DeltaFiltration delta_filtration(const HighestWeight& h, const Module& m, int top) {
  Peeler p{h, top};
  DeltaFiltration out;
  auto s = p.run(m, true);
  out.backtracked = p.backtracked;
  if (s) {
    out.found = true;
    out.sections = std::move(*s);
  }
  return out;
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t cap) {
  std::size_t gl = 0;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    Resolution r = minimal_resolution(simple_module(a, static_cast<int>(v)), cap + 1);
    if (!r.terminated) return std::nullopt;
    gl = std::max(gl, *r.pd());
  }
  return gl;
}

QhaReport qha_check(const HighestWeight& h) {
  QhaReport rep;
  const Algebra& a = *h.alg;
  rep.qha = true;
  for (std::size_t v = 0; v < h.size(); ++v) {
    int lam = static_cast<int>(v);
    if (h.standard[v].block(lam).size() != 1) {
      rep.qha = false;
      if (rep.failure.empty()) rep.failure = "[Δ(" + h.poset.label(lam) + "):L(" + h.poset.label(lam) + ")] != 1";
    }
    auto df = delta_filtration(h, h.proj[v], lam);
    if (!df.found && rep.qha) {
      rep.qha = false;
      rep.failure = "P(" + h.poset.label(lam) + ") has no standard filtration of the required shape";
    }
    rep.filtrations.push_back(std::move(df));
  }
  const std::size_t n = h.size();
  if (rep.qha) {
    rep.chain_order = h.poset.top_down();
    std::vector<Vec> idem;
    for (int w : rep.chain_order) {
      idem.push_back(a.unit(a.idempotent(w)));
      rep.chain_dims.push_back(two_sided_ideal(a, idem).dim());
    }
    for (std::size_t i = 1; i < rep.chain_dims.size(); ++i)
      check_invariant(rep.chain_dims[i] > rep.chain_dims[i - 1], "heredity chain is not strictly increasing");
    check_invariant(rep.chain_dims.back() == a.dim(), "heredity chain does not reach A");
  }
  rep.gldim = global_dimension(h.alg, 2 * n + 2);
  if (rep.qha) check_invariant(rep.gldim.has_value(), "quasi-hereditary algebra with infinite global dimension");
  return rep;
}

Module inflate(const Module& m, const QuotientAlgebra& q, const AlgebraPtr& ambient) {
  std::vector<Vec> images;
  for (std::size_t b = 0; b < ambient->dim(); ++b) images.push_back(q.project(ambient->unit(b)));
  std::vector<int> back(q.quotient->num_vertices(), -1);
  for (std::size_t v = 0; v < q.vertex_map.size(); ++v)
    if (q.vertex_map[v] >= 0) back[q.vertex_map[v]] = static_cast<int>(v);
  // the new module lives over `ambient`, so translate the action directly
  std::vector<int> vert;
  for (int v : m.vertices()) vert.push_back(back[v]);
  std::vector<Matrix> act;
  for (const auto& x : images) act.push_back(m.act_element(x));
  std::vector<int> g = ambient->graded() ? m.grades() : std::vector<int>{};
  return Module(ambient, vert, std::move(act), g);
}

Truncation truncate(const HighestWeight& h, const std::vector<int>& gamma0) {
  std::vector<int> gamma = gamma0;
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  for (int x : gamma)
    if (x < 0 || static_cast<std::size_t>(x) >= h.size()) throw InputError("truncation names an unknown weight");
  if (gamma.empty()) throw InputError("truncation needs a non-empty ideal");
  if (!h.poset.is_ideal(gamma)) throw InputError("weight set is not downward closed");
  const Algebra& a = *h.alg;
  std::vector<Vec> idem;
  for (std::size_t v = 0; v < h.size(); ++v)
    if (!std::binary_search(gamma.begin(), gamma.end(), static_cast<int>(v))) idem.push_back(a.unit(a.idempotent(v)));
  Subspace j = idem.empty() ? Subspace(a.field(), a.dim()) : two_sided_ideal(a, idem);
  QuotientAlgebra q = quotient_algebra(h.alg, j);
  std::optional<Matrix> dq;
  if (h.duality) {
    const std::size_t m = q.quotient->dim();
    Matrix d(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      Vec img = q.project(apply(a.field(), *h.duality, q.reps[i]));
      for (std::size_t r = 0; r < m; ++r) d(r, i) = img[r];
    }
    dq = d;
  }
  Truncation t{q, standard_modules(q.quotient, h.poset.restrict_to(gamma), dq), gamma, true};
  // sampled check: Ext over A/J against Ext over A for modules inflated from A/J
  auto gl = global_dimension(q.quotient, 2 * gamma.size() + 2);
  std::size_t upto = gl ? std::min<std::size_t>(*gl, 4) : 3;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      for (const Module* m : {&t.h.standard[i], &t.h.simple[i]}) {
        auto lhs = ext_upto(*m, t.h.simple[k], upto);
        auto rhs = ext_upto(inflate(*m, q, h.alg), h.simple[gamma[k]], upto);
        if (lhs != rhs) t.ext_verified = false;
      }
    }
  return t;
}

}  // namespace grk
