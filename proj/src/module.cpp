#include "grkoszul/module.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "grkoszul/errors.hpp"
#include "grkoszul/subalgebra.hpp"

namespace grk {

Module::Module(AlgebraPtr alg, std::vector<int> vertex, std::vector<Matrix> action, std::vector<int> grades)
    : alg_(std::move(alg)), vertex_(std::move(vertex)), action_(std::move(action)), grades_(std::move(grades)) {
  check_invariant(action_.size() == alg_->dim(), "module: one action matrix per algebra basis element");
  for (const auto& m : action_)
    check_invariant(m.rows() == dim() && m.cols() == dim(), "module: action matrix has wrong shape");
  check_invariant(grades_.empty() || grades_.size() == dim(), "module: grade vector has wrong length");
}

Matrix Module::act_element(const Vec& x) const {
  const Field& f = field();
  Matrix out(dim(), dim());
  for (std::size_t b = 0; b < x.size(); ++b)
    if (x[b] != 0) out = add(f, out, scaled(f, action_[b], x[b]));
  return out;
}

std::vector<std::size_t> Module::vertex_dims() const {
  std::vector<std::size_t> d(alg_->num_vertices(), 0);
  for (int v : vertex_) ++d[v];
  return d;
}

std::vector<int> Module::block(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (vertex_[i] == v) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Module::block(int v, int g) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (vertex_[i] == v && grades_.at(i) == g) out.push_back(static_cast<int>(i));
  return out;
}

int Module::min_grade() const {
  int m = std::numeric_limits<int>::max();
  for (int g : grades_) m = std::min(m, g);
  return grades_.empty() ? 0 : m;
}

int Module::max_grade() const {
  int m = std::numeric_limits<int>::min();
  for (int g : grades_) m = std::max(m, g);
  return grades_.empty() ? 0 : m;
}

void Module::verify() const {
  const Algebra& a = *alg_;
  const Field& f = field();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c) {
        const Scalar& x = action_[i](r, c);
        if (x == 0) continue;
        check_invariant(vertex_[c] == a.src(i) && vertex_[r] == a.tgt(i), "module: action not vertex adapted");
        if (graded() && a.graded())
          check_invariant(grades_[r] == grades_[c] + a.grade(i), "module: action not homogeneous");
      }
    for (std::size_t j = 0; j < n; ++j) {
      if (a.src(i) != a.tgt(j)) continue;
      Matrix lhs = mul(f, action_[i], action_[j]);
      Matrix rhs(dim(), dim());
      for (const auto& [k, v] : a.product(i, j)) rhs = add(f, rhs, scaled(f, action_[k], v));
      check_invariant(lhs == rhs, "module: action is not multiplicative");
    }
  }
  Matrix id(dim(), dim());
  for (std::size_t v = 0; v < a.num_vertices(); ++v) id = add(f, id, action_[a.idempotent(v)]);
  check_invariant(id == Matrix::identity(dim()), "module: idempotents do not sum to the identity");
}

Module simple_module(const AlgebraPtr& a, int v, int grade) {
  std::vector<Matrix> act(a->dim(), Matrix(1, 1));
  act[a->idempotent(v)](0, 0) = 1;
  return Module(a, {v}, std::move(act), a->graded() ? std::vector<int>{grade} : std::vector<int>{});
}

Module zero_module(const AlgebraPtr& a, bool graded) {
  (void)graded;
  return Module(a, {}, std::vector<Matrix>(a->dim(), Matrix(0, 0)), {});
}

int ProjectiveSum::pos(std::size_t k, int b) const {
  auto it = std::find(elems[k].begin(), elems[k].end(), b);
  if (it == elems[k].end()) return -1;
  return offset[k] + static_cast<int>(it - elems[k].begin());
}

int ProjectiveSum::gen(std::size_t k) const { return offset[k]; }

std::pair<Module, ProjectiveSum> projective_sum(const AlgebraPtr& ap, const std::vector<int>& vertices,
                                                const std::vector<int>& shifts) {
  const Algebra& a = *ap;
  ProjectiveSum ps;
  ps.vertex = vertices;
  ps.shift = shifts.empty() ? std::vector<int>(vertices.size(), 0) : shifts;
  std::vector<int> vert, grades;
  int off = 0;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    std::vector<int> el;
    // idempotent first so that the generator sits at the summand offset
    el.push_back(a.idempotent(vertices[k]));
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (a.src(b) == vertices[k] && !a.is_idempotent(b)) el.push_back(static_cast<int>(b));
    ps.offset.push_back(off);
    for (int b : el) {
      vert.push_back(a.tgt(b));
      if (a.graded()) grades.push_back(a.grade(b) + ps.shift[k]);
    }
    off += static_cast<int>(el.size());
    ps.elems.push_back(el);
  }
  std::vector<Matrix> act(a.dim(), Matrix(off, off));
  for (std::size_t k = 0; k < vertices.size(); ++k)
    for (std::size_t idx = 0; idx < ps.elems[k].size(); ++idx) {
      int b = ps.elems[k][idx];
      for (std::size_t c = 0; c < a.dim(); ++c) {
        if (a.src(c) != a.tgt(b)) continue;
        for (const auto& [d, v] : a.product(c, b)) {
          auto it = std::find(ps.elems[k].begin(), ps.elems[k].end(), d);
          check_invariant(it != ps.elems[k].end(), "projective: product leaves A e");
          act[c](ps.offset[k] + (it - ps.elems[k].begin()), ps.offset[k] + idx) = v;
        }
      }
    }
  Module mod(ap, vert, std::move(act), grades);
  return {std::move(mod), ps};
}

Module projective(const AlgebraPtr& a, int v, int shift) { return projective_sum(a, {v}, {shift}).first; }

namespace {

bool same_block(const Module& m, const Vec& row, int& vertex, int& grade) {
  vertex = -1;
  grade = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (vertex < 0) {
      vertex = m.vertex(i);
      if (m.graded()) grade = m.grade(i);
    } else if (m.vertex(i) != vertex || (m.graded() && m.grade(i) != grade)) {
      return false;
    }
  }
  return true;
}

}  // namespace

SubmoduleResult submodule(const Module& m, const Subspace& u) {
  const Field& f = m.field();
  const std::size_t k = u.dim();
  std::vector<int> vert, grades;
  for (const auto& row : u.basis()) {
    int v, g;
    check_invariant(same_block(m, row, v, g), "submodule: subspace is not a sum of vertex blocks");
    vert.push_back(v);
    if (m.graded()) grades.push_back(g);
  }
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < m.algebra().dim(); ++b) {
    Matrix a(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec img = apply(f, m.act(b), u.basis()[j]);
      check_invariant(u.contains(img), "submodule: subspace is not invariant");
      Vec c = u.coords(img);
      for (std::size_t i = 0; i < k; ++i) a(i, j) = c[i];
    }
    act.push_back(std::move(a));
  }
  return {Module(m.algebra_ptr(), vert, std::move(act), grades), Matrix::from_cols(u.basis(), m.dim())};
}

QuotientResult quotient(const Module& m, const Subspace& u) {
  const Field& f = m.field();
  auto free = u.free_columns();
  const std::size_t k = free.size();
  std::vector<int> vert, grades, lift;
  for (auto c : free) {
    vert.push_back(m.vertex(c));
    if (m.graded()) grades.push_back(m.grade(c));
    lift.push_back(static_cast<int>(c));
  }
  Matrix proj(k, m.dim());
  for (std::size_t c = 0; c < m.dim(); ++c) {
    Vec r = u.reduce(unit_vec(m.dim(), c));
    for (std::size_t i = 0; i < k; ++i) proj(i, c) = r[free[i]];
  }
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < m.algebra().dim(); ++b) {
    Matrix a(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec img = u.reduce(m.act(b).col(free[j]));
      for (std::size_t i = 0; i < k; ++i) a(i, j) = img[free[i]];
    }
    act.push_back(std::move(a));
  }
  (void)f;
  return {Module(m.algebra_ptr(), vert, std::move(act), grades), proj, lift};
}

Subspace generated_submodule(const Module& m, const std::vector<Vec>& gens) {
  const Field& f = m.field();
  Subspace s(f, m.dim());
  for (const auto& g : gens)
    for (std::size_t b = 0; b < m.algebra().dim(); ++b) s.add(apply(f, m.act(b), g));
  return s;
}

Subspace radical(const Module& m) {
  Subspace s(m.field(), m.dim());
  for (int b : m.algebra().radical_basis())
    for (const auto& c : m.act(b).col_list()) s.add(c);
  return s;
}

Subspace rad_power(const Module& m, std::size_t k) {
  const Field& f = m.field();
  Subspace s = Subspace::whole(f, m.dim());
  auto rb = m.algebra().radical_basis();
  for (std::size_t i = 0; i < k && s.dim() > 0; ++i) {
    Subspace next(f, m.dim());
    for (int b : rb)
      for (const auto& x : s.basis()) next.add(apply(f, m.act(b), x));
    s = std::move(next);
  }
  return s;
}

Subspace annihilated_by(const Module& m, const std::vector<int>& elems) {
  const Field& f = m.field();
  Subspace rows(f, m.dim());
  for (int b : elems)
    for (const auto& r : m.act(b).row_list()) rows.add(r);
  return Subspace::span(f, m.dim(), kernel_of_rows(rows));
}

Subspace socle(const Module& m) { return annihilated_by(m, m.algebra().generators()); }

std::size_t loewy_length(const Module& m) {
  std::size_t k = 0;
  while (rad_power(m, k).dim() > 0) ++k;
  return k;
}

Module direct_sum(const Module& x, const Module& y) {
  const std::size_t n = x.dim() + y.dim();
  std::vector<int> vert = x.vertices();
  vert.insert(vert.end(), y.vertices().begin(), y.vertices().end());
  std::vector<int> grades;
  if (x.graded() && y.graded()) {
    grades = x.grades();
    grades.insert(grades.end(), y.grades().begin(), y.grades().end());
  } else if (x.graded() != y.graded() && x.dim() && y.dim()) {
    throw InputError("direct sum of graded and ungraded modules");
  } else if (x.graded()) {
    grades = x.grades();
  } else if (y.graded()) {
    grades = y.grades();
  }
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < x.algebra().dim(); ++b) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (std::size_t j = 0; j < x.dim(); ++j) a(i, j) = x.act(b)(i, j);
    for (std::size_t i = 0; i < y.dim(); ++i)
      for (std::size_t j = 0; j < y.dim(); ++j) a(x.dim() + i, x.dim() + j) = y.act(b)(i, j);
    act.push_back(std::move(a));
  }
  return Module(x.algebra_ptr(), vert, std::move(act), grades);
}

Module shift(const Module& m, int d) {
  if (!m.graded()) return m;
  std::vector<int> g = m.grades();
  for (auto& x : g) x += d;
  return Module(m.algebra_ptr(), m.vertices(), m.actions(), g);
}

Module ungraded(const Module& m) { return Module(m.algebra_ptr(), m.vertices(), m.actions(), {}); }

Module dual(const Module& m, const AlgebraPtr& op) {
  check_invariant(op->dim() == m.algebra().dim(), "dual: opposite algebra mismatch");
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(a.transpose());
  std::vector<int> g;
  for (int x : m.grades()) g.push_back(-x);
  return Module(op, m.vertices(), std::move(act), g);
}

Module rebase(const Module& m, const Matrix& t, const std::vector<int>& vertex, const std::vector<int>& grades) {
  const Field& f = m.field();
  LinearSolver inv(f, t);
  check_invariant(inv.rank() == m.dim(), "rebase: basis change is singular");
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) {
    Matrix at = mul(f, a, t);
    Matrix out(m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      auto c = inv.solve(at.col(j));
      for (std::size_t i = 0; i < m.dim(); ++i) out(i, j) = (*c)[i];
    }
    act.push_back(std::move(out));
  }
  return Module(m.algebra_ptr(), vertex, std::move(act), grades);
}

Module change_of_rings(const Module& m, const AlgebraPtr& target, const std::vector<Vec>& images,
                       const std::vector<int>& vertex_map) {
  check_invariant(images.size() == target->dim(), "change of rings: one image per basis element");
  std::vector<int> vert;
  for (int v : m.vertices()) {
    int nv = vertex_map.at(v);
    if (nv < 0) throw HypothesisError("module is supported on a vertex that does not survive");
    vert.push_back(nv);
  }
  std::vector<Matrix> act;
  for (const auto& x : images) act.push_back(m.act_element(x));
  std::vector<int> g = target->graded() ? m.grades() : std::vector<int>{};
  return Module(target, vert, std::move(act), g);
}

Module restrict_to(const Module& m, const SubalgebraEmbedding& s) {
  const Field& f = m.field();
  const Algebra& sub = *s.sub;
  std::vector<Vec> images;
  for (std::size_t b = 0; b < sub.dim(); ++b) images.push_back(s.embed.col(b));
  std::vector<Matrix> act;
  for (const auto& x : images) act.push_back(m.act_element(x));
  // new basis: images of the sub idempotents, graded pieces kept apart
  std::vector<Vec> cols;
  std::vector<int> vert, grades;
  bool graded = m.graded() && sub.graded();
  int gmin = m.min_grade(), gmax = m.max_grade();
  for (std::size_t c = 0; c < sub.num_vertices(); ++c) {
    const Matrix& p = act[sub.idempotent(c)];
    for (int g = gmin; g <= (graded ? gmax : gmin); ++g) {
      Subspace img(f, m.dim());
      for (std::size_t j = 0; j < m.dim(); ++j)
        if (!graded || m.grade(j) == g) img.add(p.col(j));
      for (const auto& v : img.basis()) {
        cols.push_back(v);
        vert.push_back(static_cast<int>(c));
        if (graded) grades.push_back(g);
      }
    }
  }
  check_invariant(cols.size() == m.dim(), "restriction: idempotents do not decompose the module");
  Matrix t = Matrix::from_cols(cols, m.dim());
  LinearSolver inv(f, t);
  std::vector<Matrix> out;
  for (const auto& a : act) {
    Matrix at = mul(f, a, t);
    Matrix o(m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      auto c = inv.solve(at.col(j));
      check_invariant(c.has_value(), "restriction: singular basis change");
      for (std::size_t i = 0; i < m.dim(); ++i) o(i, j) = (*c)[i];
    }
    out.push_back(std::move(o));
  }
  return Module(s.sub, vert, std::move(out), grades);
}

std::string describe_dims(const Module& m) {
  std::ostringstream os;
  auto d = m.vertex_dims();
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

}  // namespace grk
