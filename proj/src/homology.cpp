#include "grkoszul/homology.hpp"

#include <algorithm>

#include "grkoszul/errors.hpp"
#include "grkoszul/filtration.hpp"

namespace grk {

std::optional<std::size_t> Resolution::pd() const {
  if (!terminated) return std::nullopt;
  if (terms.empty()) return 0;
  return terms.size() - 1;
}

ProjectiveCover projective_cover(const Module& m) {
  const Field& f = m.field();
  Subspace rad = radical(m);
  std::vector<int> head;
  {
    Subspace s = rad;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (s.add(unit_vec(m.dim(), i))) head.push_back(static_cast<int>(i));
  }
  std::vector<int> vertices, shifts;
  for (int i : head) {
    vertices.push_back(m.vertex(i));
    shifts.push_back(m.graded() ? m.grade(i) : 0);
  }
  auto [p, ps] = projective_sum(m.algebra_ptr(), vertices, shifts);
  if (!m.graded()) p = ungraded(p);
  Matrix pi(m.dim(), p.dim());
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < head.size(); ++k) {
    Vec g = unit_vec(m.dim(), head[k]);
    gens.push_back(g);
    for (std::size_t idx = 0; idx < ps.elems[k].size(); ++idx) {
      Vec img = apply(f, m.act(ps.elems[k][idx]), g);
      int col = ps.offset[k] + static_cast<int>(idx);
      for (std::size_t r = 0; r < m.dim(); ++r) pi(r, col) = img[r];
    }
  }
  Subspace rows = Subspace::span(f, p.dim(), pi.row_list());
  check_invariant(rows.dim() == m.dim(), "projective cover: map is not surjective");
  Subspace ker = Subspace::span(f, p.dim(), kernel_of_rows(rows));
  auto sub = submodule(p, ker);
  return {ps, p, gens, pi, sub.module, sub.inclusion};
}

Resolution minimal_resolution(const Module& m, std::size_t max_terms,
                              const std::function<bool(const Resolution&)>& keep_going) {
  Resolution res;
  res.syzygies.push_back(m);
  if (m.dim() == 0) {
    res.terminated = true;
    return res;
  }
  Matrix prev_incl;
  while (res.terms.size() < max_terms) {
    ProjectiveCover pc = projective_cover(res.syzygies.back());
    if (!res.terms.empty()) {
      std::vector<Vec> imgs;
      for (const auto& g : pc.generators) imgs.push_back(apply(m.field(), prev_incl, g));
      res.images.push_back(std::move(imgs));
    } else {
      res.images.push_back({});
    }
    res.terms.push_back(pc.sum);
    res.projectives.push_back(pc.projective);
    res.syzygies.push_back(pc.kernel);
    prev_incl = pc.kernel_inclusion;
    if (pc.kernel.dim() == 0) {
      res.terminated = true;
      break;
    }
    if (keep_going && !keep_going(res)) break;
  }
  return res;
}

namespace {

// Coordinates of Hom(P_n, N) = ⊕_k e_{v_k} N.
struct Cochains {
  std::vector<std::pair<int, int>> coords;  // (summand k, N basis index)
  std::vector<int> degree;                  // r such that the coordinate lives in Hom(P, N<r>)_0
};

Cochains cochains(const ProjectiveSum& ps, const Module& n) {
  Cochains c;
  for (std::size_t k = 0; k < ps.rank(); ++k)
    for (std::size_t i = 0; i < n.dim(); ++i)
      if (n.vertex(i) == ps.vertex[k]) {
        c.coords.push_back({static_cast<int>(k), static_cast<int>(i)});
        c.degree.push_back(n.graded() ? ps.shift[k] - n.grade(i) : 0);
      }
  return c;
}

// Matrix of d^n : Hom(P_(n-1), N) -> Hom(P_n, N).
Matrix coboundary(const Resolution& res, std::size_t n, const Module& mod, const Cochains& from, const Cochains& to) {
  const Field& f = mod.field();
  const ProjectiveSum& prev = res.terms[n - 1];
  Matrix d(to.coords.size(), from.coords.size());
  // index of (j, i') in `from`
  std::vector<std::vector<int>> idx(prev.rank(), std::vector<int>(mod.dim(), -1));
  for (std::size_t c = 0; c < from.coords.size(); ++c) idx[from.coords[c].first][from.coords[c].second] = c;
  for (std::size_t row = 0; row < to.coords.size(); ++row) {
    auto [k, i] = to.coords[row];
    const Vec& img = res.images[n][k];
    for (std::size_t j = 0; j < prev.rank(); ++j)
      for (std::size_t e = 0; e < prev.elems[j].size(); ++e) {
        const Scalar& coef = img[prev.offset[j] + e];
        if (coef == 0) continue;
        const Matrix& rho = mod.act(prev.elems[j][e]);
        for (std::size_t ip = 0; ip < mod.dim(); ++ip) {
          if (rho(i, ip) == 0) continue;
          int col = idx[j][ip];
          if (col < 0) continue;
          d(row, col) = f.add(d(row, col), f.mul(coef, rho(i, ip)));
        }
      }
  }
  return d;
}

Matrix sub_block(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

}  // namespace

std::vector<std::size_t> ext_dims(const Resolution& res, const Module& n, std::size_t upto) {
  auto g = ext_graded(res, ungraded(n), upto);
  std::vector<std::size_t> out;
  for (const auto& m : g) {
    std::size_t s = 0;
    for (const auto& kv : m) s += kv.second;
    out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> ext_upto(const Module& m, const Module& n, std::size_t upto) {
  return ext_dims(minimal_resolution(m, upto + 2), n, upto);
}

std::vector<std::map<int, std::size_t>> ext_graded(const Resolution& res, const Module& n, std::size_t upto) {
  if (!res.terminated && res.length() < upto + 2)
    throw InvariantError("ext: resolution too short for the requested degree");
  const Field& f = n.field();
  std::vector<Cochains> cc;
  for (std::size_t k = 0; k < res.length(); ++k) cc.push_back(cochains(res.terms[k], n));
  auto term_count = res.length();
  // rank of d^k restricted to degree r, for k = 1 .. upto+1
  std::vector<std::map<int, std::size_t>> rank_d(upto + 2);
  for (std::size_t k = 1; k <= upto + 1 && k < term_count; ++k) {
    Matrix d = coboundary(res, k, n, cc[k - 1], cc[k]);
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (std::size_t r = 0; r < cc[k].coords.size(); ++r) blocks[cc[k].degree[r]].first.push_back(r);
    for (std::size_t c = 0; c < cc[k - 1].coords.size(); ++c) blocks[cc[k - 1].degree[c]].second.push_back(c);
    for (auto& [deg, rc] : blocks) {
      if (rc.first.empty() || rc.second.empty()) continue;
      rank_d[k][deg] = rank(f, sub_block(d, rc.first, rc.second));
    }
  }
  std::vector<std::map<int, std::size_t>> out(upto + 1);
  for (std::size_t k = 0; k <= upto && k < term_count; ++k) {
    std::map<int, std::size_t> dimc;
    for (int deg : cc[k].degree) ++dimc[deg];
    for (auto [deg, d] : dimc) {
      std::size_t r_in = k >= 1 && rank_d[k].count(deg) ? rank_d[k][deg] : 0;
      std::size_t r_out = rank_d[k + 1].count(deg) ? rank_d[k + 1][deg] : 0;
      std::size_t e = d - r_in - r_out;
      if (e) out[k][deg] = e;
    }
  }
  return out;
}

std::vector<Matrix> hom_basis(const Module& m, const Module& n, std::optional<int> shift) {
  const Field& f = m.field();
  const Algebra& a = m.algebra();
  const bool graded = m.graded() && n.graded();
  const int sh = shift.value_or(0);
  // unknown F[i][j], i in N, j in M
  std::vector<std::vector<int>> var(n.dim(), std::vector<int>(m.dim(), -1));
  std::vector<std::pair<int, int>> vars;
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (n.vertex(i) != m.vertex(j)) continue;
      if (graded && n.grade(i) != m.grade(j) - sh) continue;
      var[i][j] = static_cast<int>(vars.size());
      vars.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  const std::size_t nv = vars.size();
  Subspace eqs(f, nv);
  for (int g : a.generators()) {
    const Matrix& rm = m.act(g);
    const Matrix& rn = n.act(g);
    for (std::size_t i = 0; i < n.dim(); ++i) {
      if (n.vertex(i) != a.tgt(g)) continue;
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (m.vertex(j) != a.src(g)) continue;
        Vec row(nv, Scalar(0));
        bool any = false;
        for (std::size_t l = 0; l < m.dim(); ++l)
          if (rm(l, j) != 0 && var[i][l] >= 0) {
            row[var[i][l]] = f.add(row[var[i][l]], rm(l, j));
            any = true;
          }
        for (std::size_t l = 0; l < n.dim(); ++l)
          if (rn(i, l) != 0 && var[l][j] >= 0) {
            row[var[l][j]] = f.sub(row[var[l][j]], rn(i, l));
            any = true;
          }
        if (any) eqs.add(std::move(row));
        if (eqs.dim() == nv) break;
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& k : kernel_of_rows(eqs)) {
    Matrix h(n.dim(), m.dim());
    for (std::size_t v = 0; v < nv; ++v) h(vars[v].first, vars[v].second) = k[v];
    out.push_back(std::move(h));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) {
  if (!m.graded() || !n.graded() || m.dim() == 0 || n.dim() == 0) return hom_basis(m, n).size();
  std::size_t total = 0;
  for (int s = m.min_grade() - n.max_grade(); s <= m.max_grade() - n.min_grade(); ++s) total += hom_basis(m, n, s).size();
  return total;
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic:
      return "isomorphic";
    case IsoVerdict::not_isomorphic:
      return "not_isomorphic";
    default:
      return "undetermined";
  }
}

namespace {

std::vector<std::vector<long>> graded_vertex_dims(const Module& m) {
  std::map<std::pair<int, int>, long> d;
  for (std::size_t i = 0; i < m.dim(); ++i) ++d[{m.vertex(i), m.graded() ? m.grade(i) : 0}];
  std::vector<std::vector<long>> out;
  for (auto& [k, v] : d) out.push_back({k.first, k.second, v});
  return out;
}

bool invertible_combo(const Field& f, const std::vector<Matrix>& h, const Vec& c, std::size_t dim, Matrix& out) {
  Matrix s(dim, dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (c[i] != 0) s = add(f, s, scaled(f, h[i], c[i]));
  if (rank(f, s) == dim) {
    out = s;
    return true;
  }
  return false;
}

}  // namespace

IsoResult isomorphic(const Module& m, const Module& n0, int sh) {
  IsoResult res;
  const Field& f = m.field();
  const bool graded = m.graded() && n0.graded();
  Module n = graded ? shift(n0, sh) : n0;
  auto no = [&](const std::string& why) {
    res.verdict = IsoVerdict::not_isomorphic;
    res.reason = why;
    return res;
  };
  if (m.dim() != n.dim()) return no("dimensions differ");
  if (graded_vertex_dims(m) != graded_vertex_dims(n)) return no("graded vertex dimensions differ");
  if (radical_layers(m) != radical_layers(n)) return no("radical layers differ");
  if (socle_layers(m) != socle_layers(n)) return no("socle layers differ");
  if (m.dim() == 0) {
    res.verdict = IsoVerdict::isomorphic;
    res.reason = "zero modules";
    res.witness = Matrix(0, 0);
    return res;
  }
  auto h = hom_basis(m, n, graded ? std::optional<int>(0) : std::nullopt);
  auto hmm = hom_basis(m, m, graded ? std::optional<int>(0) : std::nullopt);
  auto hnn = hom_basis(n, n, graded ? std::optional<int>(0) : std::nullopt);
  if (h.size() != hmm.size() || h.size() != hnn.size()) return no("Hom dimensions differ");
  const std::size_t k = h.size();
  if (k == 0) return no("no homomorphisms");
  Matrix w;
  auto found = [&](const std::string& how) {
    res.verdict = IsoVerdict::isomorphic;
    res.reason = how;
    res.witness = w;
    return res;
  };
  for (std::size_t i = 0; i < k; ++i)
    if (invertible_combo(f, h, unit_vec(k, i), m.dim(), w)) return found("basis homomorphism is invertible");
  // deterministic pseudo-random points
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  const long range = f.is_rational() ? 101 : static_cast<long>(f.characteristic());
  for (int t = 0; t < 24; ++t) {
    Vec c(k);
    for (auto& x : c) x = f.from_int(static_cast<long>(next() % range) - (f.is_rational() ? 50 : 0));
    if (invertible_combo(f, h, c, m.dim(), w)) return found("random combination is invertible");
  }
  // exhaustive grid, exact when small
  const unsigned long base = f.is_rational() ? m.dim() + 1 : f.characteristic();
  double points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= static_cast<double>(base);
  if (points <= 4096) {
    std::vector<unsigned long> digit(k, 0);
    for (;;) {
      Vec c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = f.from_int(static_cast<long>(digit[i]));
      if (invertible_combo(f, h, c, m.dim(), w)) return found("grid search");
      std::size_t p = 0;
      while (p < k && ++digit[p] == base) digit[p++] = 0;
      if (p == k) break;
    }
    return no(f.is_rational() ? "determinant vanishes on a full grid" : "no invertible homomorphism over the field");
  }
  res.verdict = IsoVerdict::undetermined;
  res.reason = "no invertible combination found; search space too large";
  return res;
}

}  // namespace grk
