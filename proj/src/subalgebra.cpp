#include "grkoszul/subalgebra.hpp"

#include <algorithm>
#include <cctype>

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

Subspace multiplicative_closure(const Algebra& a, const std::vector<Vec>& gens) {
  Subspace s(a.field(), a.dim());
  s.add(a.one());
  for (const auto& g : gens) {
    if (g.size() != a.dim()) throw InputError("generator has wrong length");
    s.add(g);
  }
  for (;;) {
    std::size_t before = s.dim();
    auto basis = s.basis();
    for (const auto& x : basis)
      for (const auto& y : basis) s.add(a.mul(x, y));
    if (s.dim() == before) return s;
  }
}

Vec idempotent_part(const Algebra& a, const Vec& x) {
  Vec out(a.num_vertices());
  for (std::size_t v = 0; v < a.num_vertices(); ++v) out[v] = x[a.idempotent(v)];
  return out;
}

Vec lift_idempotent(const Algebra& a, Vec e) {
  const Field& f = a.field();
  for (int it = 0; it < 64; ++it) {
    Vec e2 = a.mul(e, e);
    if (e2 == e) return e;
    Vec e3 = a.mul(e2, e);
    Vec next(a.dim(), Scalar(0));
    f.axpy(next, f.from_int(3), e2);
    f.axpy(next, f.from_int(-2), e3);
    e = std::move(next);
  }
  throw InvariantError("idempotent lifting did not converge");
}

Vec homogeneous_part(const Algebra& a, const Vec& x, int g) {
  Vec out(a.dim(), Scalar(0));
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.grade(b) == g) out[b] = x[b];
  return out;
}

bool is_graded_subspace(const Algebra& a, const Subspace& s) {
  if (!a.graded()) return false;
  for (const auto& r : s.basis())
    for (int g = 0; g <= a.max_grade(); ++g)
      if (!s.contains(homogeneous_part(a, r, g))) return false;
  return true;
}

bool homogeneous_of(const Algebra& a, const Vec& x, int g) {
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (x[b] != 0 && a.grade(b) != g) return false;
  return true;
}

std::size_t leading(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

SubalgebraEmbedding subalgebra_from_generators(const AlgebraPtr& ap, const std::vector<Vec>& gens) {
  const Algebra& a = *ap;
  const Field& f = a.field();
  const std::size_t n = a.dim(), nv = a.num_vertices();
  Subspace s = multiplicative_closure(a, gens);

  // a / rad a sits inside K^n as block indicator functions.
  std::vector<Vec> proj;
  for (const auto& r : s.basis()) proj.push_back(idempotent_part(a, r));
  std::vector<int> block_of(nv, -1);
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < nv; ++i) {
    if (block_of[i] >= 0) continue;
    block_of[i] = static_cast<int>(blocks.size());
    blocks.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (block_of[j] >= 0) continue;
      bool same = true;
      for (const auto& p : proj)
        if (p[i] != p[j]) same = false;
      if (same) {
        block_of[j] = block_of[i];
        blocks.back().push_back(static_cast<int>(j));
      }
    }
  }
  const std::size_t nb = blocks.size();

  // Orthogonal idempotents lifting the block indicators.
  std::vector<Vec> fid(nb);
  bool canonical = true;
  for (std::size_t c = 0; c < nb; ++c) {
    Vec e(n, Scalar(0));
    for (int v : blocks[c]) e[a.idempotent(v)] = 1;
    if (!s.contains(e)) canonical = false;
    fid[c] = e;
  }
  if (!canonical) {
    LinearSolver solver(f, Matrix::from_cols(proj, nv));
    Vec acc(n, Scalar(0));
    for (std::size_t c = 0; c + 1 < nb; ++c) {
      Vec ind(nv, Scalar(0));
      for (int v : blocks[c]) ind[v] = 1;
      auto coef = solver.solve(ind);
      check_invariant(coef.has_value(), "subalgebra: block indicator not in image");
      Vec x(n, Scalar(0));
      for (std::size_t k = 0; k < s.dim(); ++k) f.axpy(x, (*coef)[k], s.basis()[k]);
      Vec comp = a.one();
      f.axpy(comp, f.from_int(-1), acc);
      x = a.mul(comp, a.mul(x, comp));
      fid[c] = lift_idempotent(a, x);
      f.axpy(acc, Scalar(1), fid[c]);
    }
    Vec last = a.one();
    f.axpy(last, f.from_int(-1), acc);
    fid[nb - 1] = last;
  }

  bool graded = is_graded_subspace(a, s);
  if (graded)
    for (const auto& e : fid)
      if (!homogeneous_of(a, e, 0)) graded = false;

  Subspace rad = intersect(s, a.rad_power(1));
  struct Elt {
    int src, tgt, grade;
    bool idem;
    Vec v;
  };
  std::vector<Elt> elts;
  for (std::size_t c = 0; c < nb; ++c) elts.push_back({(int)c, (int)c, 0, true, fid[c]});
  const int gmax = graded ? a.max_grade() : 0;
  for (std::size_t tc = 0; tc < nb; ++tc)
    for (std::size_t sc = 0; sc < nb; ++sc)
      for (int g = 0; g <= gmax; ++g) {
        Subspace blk(f, n);
        for (const auto& r : s.basis()) {
          Vec x = graded ? homogeneous_part(a, r, g) : r;
          blk.add(a.mul(fid[tc], a.mul(x, fid[sc])));
        }
        if (tc == sc) blk = intersect(blk, rad);
        for (const auto& v : blk.basis()) elts.push_back({(int)sc, (int)tc, g, false, v});
      }
  check_invariant(elts.size() == s.dim(), "subalgebra: Peirce decomposition lost dimension");
  std::stable_sort(elts.begin() + nb, elts.end(), [](const Elt& x, const Elt& y) {
    if (x.grade != y.grade) return x.grade < y.grade;
    return leading(x.v) < leading(y.v);
  });

  const std::size_t m = elts.size();
  std::vector<Vec> cols;
  std::vector<std::string> labels, vlabels;
  std::vector<int> src, tgt, idem(nb), grades;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = elts[i];
    cols.push_back(e.v);
    src.push_back(e.src);
    tgt.push_back(e.tgt);
    if (graded) grades.push_back(e.grade);
    if (e.idem) idem[e.src] = static_cast<int>(i);
    std::size_t l = leading(e.v);
    bool unit = l < n && e.v[l] == 1 && std::count_if(e.v.begin(), e.v.end(), [](const Scalar& x) { return x != 0; }) == 1;
    labels.push_back(unit ? a.basis_label(l) : "[" + a.format(e.v) + "]");
  }
  for (const auto& b : blocks) {
    std::string l;
    for (std::size_t k = 0; k < b.size(); ++k) l += (k ? "+" : "") + a.vertex_label(b[k]);
    vlabels.push_back(l);
  }
  Matrix embed = Matrix::from_cols(cols, n);
  LinearSolver coords(f, embed);
  std::vector<SparseVec> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (src[i] != tgt[j]) continue;
      auto c = coords.solve(a.mul(cols[i], cols[j]));
      check_invariant(c.has_value(), "subalgebra: not closed under products");
      for (std::size_t k = 0; k < m; ++k)
        if ((*c)[k] != 0) table[i * m + j].push_back({static_cast<int>(k), (*c)[k]});
    }
  SubalgebraEmbedding out{ap, nullptr, embed, blocks, s, false};
  out.sub = std::make_shared<Algebra>(f, vlabels, labels, src, tgt, idem, std::move(table), grades);
  Subspace rad_sub = intersect(s, a.rad_power(1));
  out.normal = span_times_algebra(a, rad_sub) == span_algebra_times(a, rad_sub);
  return out;
}

RadGenReport radical_generation_check(const SubalgebraEmbedding& s) {
  const Algebra& a = *s.ambient;
  Subspace rad_sub = intersect(s.span, a.rad_power(1));
  Subspace gen = span_times_algebra(a, rad_sub);
  RadGenReport r;
  r.dim_generated = gen.dim();
  r.dim_radical = a.rad_power(1).dim();
  r.holds = gen == a.rad_power(1);
  return r;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Vec factor_element(const Algebra& a, const std::string& tok) {
  if (a.presentation) {
    int ai = a.presentation->arrow_index(tok);
    if (ai >= 0) return a.arrow_elements.at(ai);
  }
  if (tok.size() > 1 && tok[0] == 'e') {
    int v = a.vertex_index(tok.substr(1));
    if (v >= 0) return a.unit(a.idempotent(v));
  }
  if (tok == "1") return a.one();
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.basis_label(b) == tok) return a.unit(b);
  throw InputError("unknown algebra symbol '" + tok + "'");
}

}  // namespace

Vec parse_element(const Algebra& a, const std::string& text) {
  const Field& f = a.field();
  Vec out(a.dim(), Scalar(0));
  // split into signed terms
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool neg = false;
  int depth = 0;
  std::string t = trim(text);
  if (t.empty()) throw InputError("empty algebra element");
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if ((c == '+' || c == '-') && depth == 0 && !trim(cur).empty() && trim(cur).back() != '*' &&
        trim(cur).back() != '/') {
      terms.push_back({neg, trim(cur)});
      cur.clear();
      neg = (c == '-');
      continue;
    }
    if ((c == '+' || c == '-') && trim(cur).empty()) {
      if (c == '-') neg = !neg;
      continue;
    }
    cur += c;
  }
  terms.push_back({neg, trim(cur)});
  for (auto& [negative, term] : terms) {
    std::vector<std::string> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= term.size(); ++i)
      if (i == term.size() || term[i] == '*') {
        factors.push_back(trim(term.substr(start, i - start)));
        start = i + 1;
      }
    Scalar coef = 1;
    std::size_t k = 0;
    if (!factors.empty() && !factors[0].empty() &&
        (std::isdigit(static_cast<unsigned char>(factors[0][0])) && factors[0] != "1")) {
      coef = f.parse(factors[0]);
      k = 1;
    }
    Vec x;
    if (k == factors.size()) {
      x = a.one();
    } else {
      x = factor_element(a, factors[k]);
      for (std::size_t i = k + 1; i < factors.size(); ++i) x = a.mul(factor_element(a, factors[i]), x);
    }
    if (negative) coef = f.neg(coef);
    f.axpy(out, f.reduce(coef), x);
  }
  return out;
}

}  // namespace grk
