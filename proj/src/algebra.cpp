#include "grkoszul/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grkoszul/errors.hpp"

namespace grk {

Algebra::Algebra(Field f, std::vector<std::string> vertex_labels, std::vector<std::string> basis_labels,
                 std::vector<int> src, std::vector<int> tgt, std::vector<int> idempotents,
                 std::vector<SparseVec> table, std::vector<int> grades)
    : f_(f),
      vlabels_(std::move(vertex_labels)),
      blabels_(std::move(basis_labels)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      idem_(std::move(idempotents)),
      grades_(std::move(grades)),
      table_(std::move(table)) {
  const std::size_t n = src_.size();
  check_invariant(tgt_.size() == n && blabels_.size() == n && table_.size() == n * n, "algebra: inconsistent sizes");
  check_invariant(vlabels_.size() == idem_.size(), "algebra: one idempotent per vertex");
  check_invariant(grades_.empty() || grades_.size() == n, "algebra: grade vector has wrong length");
  idem_vertex_.assign(n, -1);
  for (std::size_t v = 0; v < idem_.size(); ++v) {
    int b = idem_[v];
    check_invariant(src_[b] == (int)v && tgt_[b] == (int)v, "algebra: idempotent not at its vertex");
    idem_vertex_[b] = static_cast<int>(v);
    check_invariant(grades_.empty() || grades_[b] == 0, "algebra: idempotents must have grade 0");
  }

  // radical powers
  Subspace whole = Subspace::whole(f_, n);
  radpow_.push_back(whole);
  Subspace rad(f_, n);
  for (int b : radical_basis()) rad.add(unit(b));
  const auto rb = radical_basis();
  while (rad.dim() > 0) {
    radpow_.push_back(rad);
    if (radpow_.size() > n + 2) throw InvariantError("algebra: radical is not nilpotent");
    Subspace next(f_, n);
    for (int b : rb)
      for (const auto& x : rad.basis()) next.add(mul(unit(b), x));
    rad = std::move(next);
  }
  radpow_.push_back(rad);
  if (radpow_.size() >= 3) {
    Subspace s = radpow_[2];
    for (int b : rb)
      if (s.add(unit(b))) gens_.push_back(b);
  } else {
    for (int b : rb) gens_.push_back(b);
  }
}

int Algebra::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vlabels_.size(); ++i)
    if (vlabels_[i] == label) return static_cast<int>(i);
  return -1;
}

int Algebra::max_grade() const {
  int m = 0;
  for (int g : grades_) m = std::max(m, g);
  return m;
}

std::vector<std::size_t> Algebra::graded_dims() const {
  std::vector<std::size_t> d(max_grade() + 1, 0);
  for (int g : grades_) ++d[g];
  return d;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || src_[i] != tgt_[j]) continue;
      Scalar c = f_.mul(x[i], y[j]);
      for (const auto& [k, v] : product(i, j)) out[k] = f_.add(out[k], f_.mul(c, v));
    }
  }
  return out;
}

Vec Algebra::one() const {
  Vec v(dim(), Scalar(0));
  for (int b : idem_) v[b] = 1;
  return v;
}

Matrix Algebra::left_mult(int b) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, v] : product(b, j)) m(k, j) = v;
  return m;
}

std::vector<int> Algebra::radical_basis() const {
  std::vector<int> out;
  for (std::size_t b = 0; b < dim(); ++b)
    if (idem_vertex_[b] < 0) out.push_back(static_cast<int>(b));
  return out;
}

const Subspace& Algebra::rad_power(std::size_t k) const {
  return radpow_[std::min(k, radpow_.size() - 1)];
}

std::string Algebra::format(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (x[i] != 1) os << f_.format(x[i]) << "*";
    os << blabels_[i];
  }
  if (first) os << "0";
  return os.str();
}

void Algebra::verify() const {
  const int n = static_cast<int>(dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& p = product(i, j);
      if (src_[i] != tgt_[j]) check_invariant(p.empty(), "algebra: product across Peirce blocks");
      for (const auto& [k, v] : p) {
        check_invariant(src_[k] == src_[j] && tgt_[k] == tgt_[i], "algebra: product not Peirce homogeneous");
        if (!grades_.empty())
          check_invariant(grades_[k] == grades_[i] + grades_[j], "algebra: product not homogeneous");
        (void)v;
      }
    }
  for (int b = 0; b < n; ++b) {
    check_invariant(mul(one(), unit(b)) == unit(b) && mul(unit(b), one()) == unit(b), "algebra: unit law fails");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (src_[i] != tgt_[j]) continue;
      Vec ij = mul(unit(i), unit(j));
      for (int k = 0; k < n; ++k) {
        if (src_[j] != tgt_[k]) continue;
        check_invariant(mul(ij, unit(k)) == mul(unit(i), mul(unit(j), unit(k))), "algebra: not associative");
      }
    }
}

namespace {

// ----- path enumeration for quiver algebras -----

struct Path {
  int vertex = -1;  // for trivial paths
  std::vector<int> arrows;
  std::size_t len() const { return arrows.size(); }
};

bool deglex_less(const Path& a, const Path& b) {
  if (a.len() != b.len()) return a.len() < b.len();
  if (a.len() == 0) return a.vertex < b.vertex;
  return a.arrows < b.arrows;
}

struct PathSpace {
  std::vector<Path> paths;                    // deglex ascending, lengths < N
  std::map<std::vector<int>, int> index;      // nontrivial paths
  std::vector<int> trivial;                   // vertex -> index
  int col(int idx) const { return static_cast<int>(paths.size()) - 1 - idx; }
};

constexpr std::size_t kPathLimit = 200000;

PathSpace enumerate_paths(const QuiverPresentation& q, std::size_t below) {
  PathSpace ps;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Path p;
    p.vertex = static_cast<int>(v);
    ps.paths.push_back(p);
  }
  if (below > 1) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back(Path{-1, {static_cast<int>(a)}});
    for (std::size_t len = 1; len < below && !layer.empty(); ++len) {
      for (auto& p : layer) ps.paths.push_back(p);
      if (ps.paths.size() > kPathLimit)
        throw HypothesisError("infinite-dimensional algebra: path count exceeds limit");
      if (len + 1 >= below) break;
      std::vector<Path> next;
      for (const auto& p : layer)
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[a].src == q.arrows[p.arrows.back()].tgt) {
            Path n = p;
            n.arrows.push_back(static_cast<int>(a));
            next.push_back(std::move(n));
          }
      layer = std::move(next);
    }
  }
  std::stable_sort(ps.paths.begin(), ps.paths.end(), deglex_less);
  ps.trivial.assign(q.vertices.size(), -1);
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    if (ps.paths[i].len() == 0)
      ps.trivial[ps.paths[i].vertex] = static_cast<int>(i);
    else
      ps.index[ps.paths[i].arrows] = static_cast<int>(i);
  }
  return ps;
}

int path_src(const QuiverPresentation& q, const Path& p) { return p.len() ? q.arrows[p.arrows.front()].src : p.vertex; }
int path_tgt(const QuiverPresentation& q, const Path& p) { return p.len() ? q.arrows[p.arrows.back()].tgt : p.vertex; }

// Ideal I + R^N inside KQ/R^N, in reversed (largest path first) columns.
Subspace ideal_in_truncation(const QuiverPresentation& q, const PathSpace& ps, std::size_t N) {
  const Field& f = q.field;
  Subspace ideal(f, ps.paths.size());
  for (const auto& rel : q.relations) {
    std::size_t minlen = rel.front().arrows.size();
    for (const auto& t : rel) minlen = std::min(minlen, t.arrows.size());
    if (minlen >= N) continue;
    int rs = q.path_src(rel.front().arrows), rt = q.path_tgt(rel.front().arrows);
    for (const auto& u : ps.paths) {
      if (path_tgt(q, u) != rs || u.len() + minlen >= N) continue;
      for (const auto& v : ps.paths) {
        if (path_src(q, v) != rt || u.len() + minlen + v.len() >= N) continue;
        Vec vec(ps.paths.size(), Scalar(0));
        for (const auto& term : rel) {
          std::vector<int> w = u.arrows;
          w.insert(w.end(), term.arrows.begin(), term.arrows.end());
          w.insert(w.end(), v.arrows.begin(), v.arrows.end());
          if (w.size() >= N) continue;
          int c = ps.col(ps.index.at(w));
          vec[c] = f.add(vec[c], f.reduce(term.coef));
        }
        ideal.add(std::move(vec));
      }
    }
  }
  return ideal;
}

std::string path_label(const QuiverPresentation& q, const Path& p) {
  if (p.len() == 0) return "e" + q.vertices[p.vertex].label;
  std::string s;
  for (std::size_t i = 0; i < p.len(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

}  // namespace

AlgebraPtr build_algebra(const QuiverPresentation& q) {
  validate(q);
  if (q.vertices.empty()) throw InputError("quiver has no vertices");
  const std::size_t cap = static_cast<std::size_t>(std::max(q.max_length, 1));
  // Grow the truncation N until R^N lies in I + R^(N+1); then the algebra is
  // KQ/(I + R^N).
  std::size_t N = 1;
  std::size_t prev = 0;
  bool stable = false;
  {
    PathSpace ps = enumerate_paths(q, 1);
    prev = ps.paths.size();
  }
  for (std::size_t n = 2; n <= cap + 1; ++n) {
    PathSpace ps = enumerate_paths(q, n);
    Subspace id = ideal_in_truncation(q, ps, n);
    std::size_t d = ps.paths.size() - id.dim();
    if (d == prev) {
      N = n - 1;
      stable = true;
      break;
    }
    prev = d;
  }
  if (!stable)
    throw HypothesisError("infinite-dimensional algebra: no stabilisation up to path length " + std::to_string(cap));

  PathSpace ps = enumerate_paths(q, N);
  Subspace ideal = ideal_in_truncation(q, ps, N);
  const Field& f = q.field;
  // normal paths: free columns, listed in deglex ascending order
  std::vector<int> basis_of_path(ps.paths.size(), -1);
  std::vector<int> normal;
  for (std::size_t idx = 0; idx < ps.paths.size(); ++idx) {
    std::size_t c = ps.col(static_cast<int>(idx));
    bool pivot = std::binary_search(ideal.pivots().begin(), ideal.pivots().end(), c);
    if (!pivot) {
      basis_of_path[idx] = static_cast<int>(normal.size());
      normal.push_back(static_cast<int>(idx));
    }
  }
  const std::size_t n = normal.size();
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    if (basis_of_path[ps.trivial[v]] < 0) throw HypothesisError("relations kill the vertex idempotent");

  auto reduce_path = [&](const std::vector<int>& w) {
    Vec out(n, Scalar(0));
    if (w.size() >= N) return out;
    Vec u(ps.paths.size(), Scalar(0));
    u[ps.col(ps.index.at(w))] = 1;
    u = ideal.reduce(std::move(u));
    for (std::size_t idx = 0; idx < ps.paths.size(); ++idx) {
      const Scalar& c = u[ps.col(static_cast<int>(idx))];
      if (c != 0) out[basis_of_path[idx]] = c;
    }
    return out;
  };

  bool homogeneous = true;
  for (const auto& rel : q.relations)
    for (const auto& t : rel)
      if (t.arrows.size() != rel.front().arrows.size()) homogeneous = false;

  std::vector<std::string> vlabels, blabels;
  for (const auto& v : q.vertices) vlabels.push_back(v.label);
  std::vector<int> src(n), tgt(n), grades;
  std::vector<int> idem(q.vertices.size());
  std::vector<std::vector<int>> paths(n);
  for (std::size_t b = 0; b < n; ++b) {
    const Path& p = ps.paths[normal[b]];
    src[b] = path_src(q, p);
    tgt[b] = path_tgt(q, p);
    blabels.push_back(path_label(q, p));
    paths[b] = p.arrows;
    if (p.len() == 0) idem[p.vertex] = static_cast<int>(b);
    if (homogeneous) grades.push_back(static_cast<int>(p.len()));
  }
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] != tgt[j]) continue;
      SparseVec& out = table[i * n + j];
      if (paths[j].empty()) {
        out.push_back({static_cast<int>(i), Scalar(1)});
        continue;
      }
      if (paths[i].empty()) {
        out.push_back({static_cast<int>(j), Scalar(1)});
        continue;
      }
      std::vector<int> w = paths[j];
      w.insert(w.end(), paths[i].begin(), paths[i].end());
      Vec r = reduce_path(w);
      for (std::size_t k = 0; k < n; ++k)
        if (r[k] != 0) out.push_back({static_cast<int>(k), r[k]});
    }
  auto alg = std::make_shared<Algebra>(f, vlabels, blabels, src, tgt, idem, std::move(table), grades);
  alg->presentation = q;
  alg->basis_paths = paths;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) alg->arrow_elements.push_back(reduce_path({static_cast<int>(a)}));
  return alg;
}

namespace {

std::vector<SparseVec> copy_table(const Algebra& a) {
  std::vector<SparseVec> t(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t[i * a.dim() + j] = a.product(i, j);
  return t;
}

struct Raw {
  std::vector<std::string> blabels;
  std::vector<int> src, tgt, idem;
};

Raw raw(const Algebra& a) {
  Raw r;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    r.blabels.push_back(a.basis_label(b));
    r.src.push_back(a.src(b));
    r.tgt.push_back(a.tgt(b));
  }
  for (std::size_t v = 0; v < a.num_vertices(); ++v) r.idem.push_back(a.idempotent(v));
  return r;
}

}  // namespace

AlgebraPtr with_grades(const Algebra& a, std::vector<int> grades) {
  if (grades.size() != a.dim()) throw InputError("grading has wrong length");
  Raw r = raw(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& kv : a.product(i, j))
        if (grades[kv.first] != grades[i] + grades[j]) throw InputError("grading is not multiplicative");
  for (int e : r.idem)
    if (grades[e] != 0) throw InputError("idempotents must sit in grade 0");
  for (int g : grades)
    if (g < 0) throw InputError("grading must be non-negative");
  auto out = std::make_shared<Algebra>(a.field(), a.vertex_labels(), r.blabels, r.src, r.tgt, r.idem, copy_table(a),
                                       std::move(grades));
  out->presentation = a.presentation;
  out->basis_paths = a.basis_paths;
  out->arrow_elements = a.arrow_elements;
  return out;
}

AlgebraPtr opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  Raw r = raw(a);
  std::vector<SparseVec> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = a.product(j, i);
  return std::make_shared<Algebra>(a.field(), a.vertex_labels(), r.blabels, r.tgt, r.src, r.idem, std::move(t),
                                   a.grades());
}

namespace {

std::vector<int> block_members(const Algebra& a, int s, int t) {
  std::vector<int> out;
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.src(b) == s && a.tgt(b) == t) out.push_back(static_cast<int>(b));
  return out;
}

// Projection of a Peirce-decomposed subspace onto one block.
Subspace block_part(const Subspace& s, const std::vector<int>& members) {
  Subspace out(s.field(), s.ambient());
  for (const auto& row : s.basis()) {
    Vec v(s.ambient(), Scalar(0));
    for (int m : members) v[m] = row[m];
    out.add(std::move(v));
  }
  return out;
}

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

bool is_unit(const Vec& v) {
  std::size_t nz = 0;
  for (const auto& x : v)
    if (x != 0) {
      if (x != 1) return false;
      ++nz;
    }
  return nz == 1;
}

}  // namespace

GradedAlgebra gr_algebra(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim(), L = a.loewy_length();
  struct Rep {
    int level, src, tgt;
    Vec v;
  };
  std::vector<Rep> reps;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) reps.push_back({0, (int)v, (int)v, a.unit(a.idempotent(v))});
  for (std::size_t k = 1; k < L; ++k)
    for (std::size_t s = 0; s < a.num_vertices(); ++s)
      for (std::size_t t = 0; t < a.num_vertices(); ++t) {
        auto members = block_members(a, s, t);
        if (members.empty()) continue;
        Subspace cur = block_part(a.rad_power(k), members);
        Subspace nxt = block_part(a.rad_power(k + 1), members);
        std::vector<Vec> cands;
        for (int m : members)
          if (cur.contains(a.unit(m))) cands.push_back(a.unit(m));
        for (const auto& r : cur.basis()) cands.push_back(r);
        for (auto& c : greedy_complement(nxt, cands)) reps.push_back({(int)k, (int)s, (int)t, c});
      }
  std::stable_sort(reps.begin(), reps.end(), [](const Rep& x, const Rep& y) {
    if (x.level != y.level) return x.level < y.level;
    return leading_index(x.v) < leading_index(y.v);
  });
  const std::size_t m = reps.size();
  check_invariant(m == n, "gr: dimension changed");

  // Per level: solver for coordinates modulo the next radical power.
  std::vector<std::vector<int>> at_level(L + 1);
  for (std::size_t i = 0; i < m; ++i) at_level[reps[i].level].push_back(static_cast<int>(i));
  std::vector<std::unique_ptr<LinearSolver>> solvers(L);
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Vec> cols;
    for (int i : at_level[k]) cols.push_back(reps[i].v);
    for (const auto& r : a.rad_power(k + 1).basis()) cols.push_back(r);
    solvers[k] = std::make_unique<LinearSolver>(f, Matrix::from_cols(cols, n));
  }

  std::vector<std::string> labels;
  std::vector<int> src, tgt, grades, idem(a.num_vertices());
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = reps[i];
    src.push_back(r.src);
    tgt.push_back(r.tgt);
    grades.push_back(r.level);
    if (is_unit(r.v))
      labels.push_back(a.basis_label(leading_index(r.v)));
    else
      labels.push_back("[" + a.format(r.v) + "]");
    if (r.level == 0) idem[r.src] = static_cast<int>(i);
  }
  std::vector<SparseVec> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (src[i] != tgt[j]) continue;
      std::size_t lev = reps[i].level + reps[j].level;
      if (lev >= L) continue;
      Vec p = a.mul(reps[i].v, reps[j].v);
      auto c = solvers[lev]->solve(p);
      check_invariant(c.has_value(), "gr: product escapes the radical filtration");
      for (std::size_t q = 0; q < at_level[lev].size(); ++q)
        if ((*c)[q] != 0) table[i * m + j].push_back({at_level[lev][q], (*c)[q]});
    }
  GradedAlgebra out;
  out.gr = std::make_shared<Algebra>(f, a.vertex_labels(), labels, src, tgt, idem, std::move(table), grades);
  for (auto& r : reps) out.reps.push_back(r.v);
  return out;
}

TightReport tight_grading_check(const Algebra& a) {
  TightReport rep;
  if (!a.graded()) {
    rep.failing_clause = "algebra carries no grading";
    return rep;
  }
  const Field& f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t b = 0; b < n; ++b)
    if (a.grade(b) == 0 && !a.is_idempotent(b)) {
      rep.failing_clause = "grade 0 part is not semisimple";
      return rep;
    }
  std::vector<int> deg1;
  for (std::size_t b = 0; b < n; ++b)
    if (a.grade(b) == 1) deg1.push_back(static_cast<int>(b));
  Subspace power = Subspace::span(f, n, [&] {
    std::vector<Vec> v;
    for (int b : deg1) v.push_back(a.unit(b));
    return v;
  }());
  for (int g = 2; g <= a.max_grade() + 1; ++g) {
    Subspace next(f, n);
    for (int b : deg1)
      for (const auto& x : power.basis()) next.add(a.mul(a.unit(b), x));
    Subspace want(f, n);
    for (std::size_t b = 0; b < n; ++b)
      if (a.grade(b) == g) want.add(a.unit(b));
    if (!(next == want)) {
      rep.failing_clause = "A_" + std::to_string(g) + " != A_1^" + std::to_string(g);
      return rep;
    }
    power = std::move(next);
  }
  // grade 1 itself must be nonzero when there is anything above grade 0
  for (std::size_t b = 0; b < n; ++b)
    if (a.grade(b) > 0 && deg1.empty()) {
      rep.failing_clause = "A_1 = 0 but A is not concentrated in grade 0";
      return rep;
    }
  rep.tight = true;
  return rep;
}

Subspace span_times_algebra(const Algebra& a, const Subspace& s) {
  Subspace out(a.field(), a.dim());
  for (const auto& x : s.basis())
    for (std::size_t b = 0; b < a.dim(); ++b) out.add(a.mul(x, a.unit(b)));
  return out;
}

Subspace span_algebra_times(const Algebra& a, const Subspace& s) {
  Subspace out(a.field(), a.dim());
  for (const auto& x : s.basis())
    for (std::size_t b = 0; b < a.dim(); ++b) out.add(a.mul(a.unit(b), x));
  return out;
}

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(a.field(), a.dim(), gens);
  return span_algebra_times(a, span_times_algebra(a, s));
}

namespace {

Vec reversed(const Vec& v) { return Vec(v.rbegin(), v.rend()); }

}  // namespace

Vec QuotientAlgebra::project(const Vec& x) const {
  Vec r = ideal_rev.reduce(reversed(x));
  const std::size_t n = x.size();
  Vec out(rep_index.size());
  for (std::size_t i = 0; i < rep_index.size(); ++i) out[i] = r[n - 1 - rep_index[i]];
  return out;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& ap, const Subspace& ideal) {
  const Algebra& a = *ap;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Subspace rev(f, n);
  for (const auto& r : ideal.basis()) rev.add(reversed(r));
  std::vector<bool> pivot(n, false);
  for (auto p : rev.pivots()) pivot[n - 1 - p] = true;

  QuotientAlgebra q{nullptr, {}, std::vector<int>(a.num_vertices(), -1), ideal, rev, {}};
  std::vector<std::string> vlabels;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (ideal.contains(a.unit(a.idempotent(v)))) continue;
    check_invariant(!pivot[a.idempotent(v)], "quotient: idempotent chosen as pivot");
    q.vertex_map[v] = static_cast<int>(vlabels.size());
    vlabels.push_back(a.vertex_label(v));
  }
  std::vector<std::string> labels;
  std::vector<int> src, tgt, grades, idem(vlabels.size());
  for (std::size_t b = 0; b < n; ++b) {
    if (pivot[b]) continue;
    int s = q.vertex_map[a.src(b)], t = q.vertex_map[a.tgt(b)];
    check_invariant(s >= 0 && t >= 0, "quotient: surviving element at a dead vertex");
    if (a.is_idempotent(b)) idem[s] = static_cast<int>(q.rep_index.size());
    q.rep_index.push_back(static_cast<int>(b));
    q.reps.push_back(a.unit(b));
    labels.push_back(a.basis_label(b));
    src.push_back(s);
    tgt.push_back(t);
  }
  bool graded = a.graded();
  if (graded)
    for (const auto& r : ideal.basis()) {
      for (int g = 0; g <= a.max_grade() && graded; ++g) {
        Vec part(n, Scalar(0));
        for (std::size_t b = 0; b < n; ++b)
          if (a.grade(b) == g) part[b] = r[b];
        if (!ideal.contains(part)) graded = false;
      }
    }
  if (graded)
    for (int b : q.rep_index) grades.push_back(a.grade(b));
  const std::size_t m = q.rep_index.size();
  std::vector<SparseVec> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (src[i] != tgt[j]) continue;
      Vec p = q.project(a.mul(q.reps[i], q.reps[j]));
      for (std::size_t k = 0; k < m; ++k)
        if (p[k] != 0) table[i * m + j].push_back({static_cast<int>(k), p[k]});
    }
  q.quotient = std::make_shared<Algebra>(f, vlabels, labels, src, tgt, idem, std::move(table), grades);
  return q;
}

}  // namespace grk
