#include "grkoszul/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

struct Lines {
  std::string source;
  std::vector<std::pair<std::size_t, std::string>> items;  // (line number, content without comment)

  Lines(const std::string& text, std::string src) : source(std::move(src)) {
    std::istringstream is(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
      ++no;
      auto h = line.find('#');
      if (h != std::string::npos) line = line.substr(0, h);
      line = strip(line);
      if (!line.empty()) items.push_back({no, line});
    }
  }
  [[noreturn]] void fail(std::size_t line, const std::string& msg) const {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
  }
};

bool order_reaches(const std::vector<std::pair<int, int>>& order, int from, int to) {
  if (from == to) return true;
  std::vector<int> stack{from}, seen{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [x, y] : order) {
      if (x != v || std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
      if (y == to) return true;
      seen.push_back(y);
      stack.push_back(y);
    }
  }
  return false;
}

bool numeric(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  return true;
}

// Splits "a*b - 2*c*d + e" into signed terms.
std::vector<std::pair<bool, std::string>> signed_terms(const std::string& expr) {
  std::vector<std::pair<bool, std::string>> out;
  std::string cur;
  bool neg = false;
  for (char c : expr) {
    if (c == ' ' || c == '\t') continue;
    if (c == '+' || c == '-') {
      if (cur.empty() || cur.back() == '*' || cur.back() == '/') {
        if (cur.empty()) {
          if (c == '-') neg = !neg;
          continue;
        }
        cur += c;
        continue;
      }
      out.push_back({neg, cur});
      cur.clear();
      neg = (c == '-');
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back({neg, cur});
  return out;
}

}  // namespace

QuiverPresentation parse_qalg(const std::string& text, const std::string& source) {
  Lines lines(text, source);
  QuiverPresentation q;
  bool have_field = false;
  std::vector<std::pair<std::size_t, std::string>> relation_lines, duality_lines;
  for (const auto& [no, line] : lines.items) {
    auto w = words(line);
    const std::string& key = w[0];
    if (key == "field") {
      if (have_field) lines.fail(no, "field declared twice");
      have_field = true;
      if (w.size() == 2 && w[1] == "Q") {
        q.field = Field::rational();
      } else if (w.size() == 3 && w[1] == "F") {
        try {
          q.field = Field::prime(std::stoul(w[2]));
        } catch (const InputError& e) {
          lines.fail(no, e.what());
        } catch (const std::exception&) {
          lines.fail(no, "bad characteristic '" + w[2] + "'");
        }
      } else {
        lines.fail(no, "expected 'field Q' or 'field F <p>'");
      }
    } else if (key == "vertex") {
      if (w.size() < 2) lines.fail(no, "vertex needs a label");
      QuiverVertex v{w[1], std::nullopt, std::nullopt};
      for (std::size_t i = 2; i < w.size(); ++i) {
        auto eq = w[i].find('=');
        if (eq == std::string::npos) lines.fail(no, "unexpected '" + w[i] + "'");
        std::string k = w[i].substr(0, eq), val = w[i].substr(eq + 1);
        try {
          if (k == "length") {
            v.length = std::stol(val);
          } else if (k == "weight") {
            std::vector<long> c;
            std::stringstream ss(val);
            std::string part;
            while (std::getline(ss, part, ',')) c.push_back(std::stol(part));
            if (c.empty()) lines.fail(no, "empty weight");
            v.weight = c;
          } else {
            lines.fail(no, "unknown vertex attribute '" + k + "'");
          }
        } catch (const std::invalid_argument&) {
          lines.fail(no, "bad integer in '" + w[i] + "'");
        } catch (const std::out_of_range&) {
          lines.fail(no, "integer out of range in '" + w[i] + "'");
        }
      }
      if (q.vertex_index(v.label) >= 0) lines.fail(no, "duplicate vertex '" + v.label + "'");
      q.vertices.push_back(v);
    } else if (key == "arrow") {
      if (w.size() != 4) lines.fail(no, "expected 'arrow <name> <src> <dst>'");
      int s = q.vertex_index(w[2]), t = q.vertex_index(w[3]);
      if (s < 0) lines.fail(no, "unknown vertex '" + w[2] + "'");
      if (t < 0) lines.fail(no, "unknown vertex '" + w[3] + "'");
      if (q.arrow_index(w[1]) >= 0) lines.fail(no, "duplicate arrow '" + w[1] + "'");
      q.arrows.push_back({w[1], s, t});
    } else if (key == "relation") {
      relation_lines.push_back({no, strip(line.substr(8))});
    } else if (key == "order") {
      if (w.size() != 4 || w[2] != "<") lines.fail(no, "expected 'order <a> < <b>'");
      int a = q.vertex_index(w[1]), b = q.vertex_index(w[3]);
      if (a < 0 || b < 0) lines.fail(no, "order names an unknown vertex");
      if (order_reaches(q.order, b, a)) lines.fail(no, "order relations form a cycle");
      q.order.push_back({a, b});
    } else if (key == "duality") {
      duality_lines.push_back({no, line});
    } else if (key == "maxlength") {
      if (w.size() != 2) lines.fail(no, "expected 'maxlength <int>'");
      try {
        q.max_length = std::stoi(w[1]);
      } catch (const std::exception&) {
        lines.fail(no, "bad integer '" + w[1] + "'");
      }
      if (q.max_length < 1) lines.fail(no, "maxlength must be positive");
    } else {
      lines.fail(no, "unknown directive '" + key + "'");
    }
  }
  if (!have_field) q.field = Field::rational();
  for (const auto& [no, expr] : relation_lines) {
    Relation rel;
    auto terms = signed_terms(expr);
    if (terms.empty()) lines.fail(no, "empty relation");
    for (const auto& [neg, term] : terms) {
      PathTerm pt{q.field.from_int(1), {}};
      std::stringstream ss(term);
      std::string f;
      while (std::getline(ss, f, '*')) {
        if (f.empty()) lines.fail(no, "empty factor in '" + term + "'");
        if (pt.arrows.empty() && numeric(f)) {
          try {
            pt.coef = q.field.mul(pt.coef, q.field.parse(f));
          } catch (const InputError& e) {
            lines.fail(no, e.what());
          }
          continue;
        }
        int a = q.arrow_index(f);
        if (a < 0) lines.fail(no, "unknown arrow '" + f + "'");
        pt.arrows.push_back(a);
      }
      if (neg) pt.coef = q.field.neg(pt.coef);
      rel.push_back(pt);
    }
    q.relations.push_back(rel);
  }
  if (duality_lines.size() > 1) lines.fail(duality_lines[1].first, "duality declared twice");
  if (!duality_lines.empty()) {
    auto [no, line] = duality_lines[0];
    auto w = words(line);
    q.duality.assign(q.arrows.size(), ArrowImage{-1, false});
    for (std::size_t i = 1; i < w.size(); ++i) {
      auto c = w[i].find(':');
      if (c == std::string::npos) lines.fail(no, "expected '<arrow>:<image>' in '" + w[i] + "'");
      std::string from = w[i].substr(0, c), to = w[i].substr(c + 1);
      bool neg = !to.empty() && to[0] == '-';
      if (neg) to = to.substr(1);
      int a = q.arrow_index(from), b = q.arrow_index(to);
      if (a < 0 || b < 0) lines.fail(no, "duality names an unknown arrow");
      if (q.duality[a].arrow >= 0) lines.fail(no, "arrow '" + from + "' mapped twice");
      q.duality[a] = {b, neg};
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.duality[a].arrow < 0) lines.fail(no, "duality misses arrow '" + q.arrows[a].name + "'");
  }
  try {
    validate(q);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  return q;
}

std::string write_qalg(const QuiverPresentation& q) {
  std::ostringstream os;
  const Field& f = q.field;
  os << "field " << (f.is_rational() ? std::string("Q") : "F " + std::to_string(f.characteristic())) << "\n";
  for (const auto& v : q.vertices) {
    os << "vertex " << v.label;
    if (v.length) os << " length=" << *v.length;
    if (v.weight) {
      os << " weight=";
      for (std::size_t i = 0; i < v.weight->size(); ++i) os << (i ? "," : "") << (*v.weight)[i];
    }
    os << "\n";
  }
  for (const auto& a : q.arrows) os << "arrow " << a.name << " " << q.vertices[a.src].label << " " << q.vertices[a.tgt].label << "\n";
  for (const auto& rel : q.relations) {
    os << "relation";
    for (std::size_t i = 0; i < rel.size(); ++i) {
      Scalar c = rel[i].coef;
      bool neg = f.is_rational() && c < 0;
      if (neg) c = -c;
      if (i == 0)
        os << (neg ? " -" : " ");
      else
        os << (neg ? " - " : " + ");
      if (c != 1) os << f.format(c) << "*";
      for (std::size_t k = 0; k < rel[i].arrows.size(); ++k) os << (k ? "*" : "") << q.arrows[rel[i].arrows[k]].name;
    }
    os << "\n";
  }
  for (auto [a, b] : q.order) os << "order " << q.vertices[a].label << " < " << q.vertices[b].label << "\n";
  if (!q.duality.empty()) {
    os << "duality";
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      os << " " << q.arrows[a].name << ":" << (q.duality[a].negate ? "-" : "") << q.arrows[q.duality[a].arrow].name;
    os << "\n";
  }
  if (q.max_length != 32) os << "maxlength " << q.max_length << "\n";
  return os.str();
}

QuiverRep parse_qrep(const std::string& text, const QuiverPresentation& q, const std::string& source) {
  Lines lines(text, source);
  QuiverRep r;
  r.dims.assign(q.vertices.size(), 0);
  std::vector<char> dim_seen(q.vertices.size(), 0), mat_seen(q.arrows.size(), 0);
  std::vector<std::vector<int>> grades(q.vertices.size());
  bool any_grades = false;
  r.arrows.assign(q.arrows.size(), Matrix());
  std::size_t i = 0;
  const auto& it = lines.items;
  while (i < it.size()) {
    auto [no, line] = it[i];
    auto w = words(line);
    if (w[0] == "vertexdim") {
      if (w.size() != 3) lines.fail(no, "expected 'vertexdim <label> <int>'");
      int v = q.vertex_index(w[1]);
      if (v < 0) lines.fail(no, "unknown vertex '" + w[1] + "'");
      if (dim_seen[v]) lines.fail(no, "dimension of '" + w[1] + "' given twice");
      long d = -1;
      try {
        d = std::stol(w[2]);
      } catch (const std::exception&) {
        lines.fail(no, "bad integer '" + w[2] + "'");
      }
      if (d < 0) lines.fail(no, "negative dimension");
      r.dims[v] = static_cast<std::size_t>(d);
      dim_seen[v] = 1;
      ++i;
    } else if (w[0] == "grades") {
      if (w.size() < 2) lines.fail(no, "expected 'grades <label> <g>...'");
      int v = q.vertex_index(w[1]);
      if (v < 0) lines.fail(no, "unknown vertex '" + w[1] + "'");
      for (std::size_t k = 2; k < w.size(); ++k) {
        try {
          grades[v].push_back(std::stoi(w[k]));
        } catch (const std::exception&) {
          lines.fail(no, "bad grade '" + w[k] + "'");
        }
      }
      any_grades = true;
      ++i;
    } else if (w[0] == "matrix") {
      if (w.size() != 2) lines.fail(no, "expected 'matrix <arrow>'");
      int a = q.arrow_index(w[1]);
      if (a < 0) lines.fail(no, "unknown arrow '" + w[1] + "'");
      if (mat_seen[a]) lines.fail(no, "matrix of '" + w[1] + "' given twice");
      mat_seen[a] = 1;
      std::size_t rows = r.dims[q.arrows[a].tgt], cols = r.dims[q.arrows[a].src];
      Matrix m(rows, cols);
      ++i;
      for (std::size_t row = 0; row < rows; ++row, ++i) {
        if (i >= it.size()) lines.fail(no, "matrix of '" + w[1] + "' needs " + std::to_string(rows) + " rows");
        auto vals = words(it[i].second);
        if (vals.size() != cols)
          lines.fail(it[i].first, "expected " + std::to_string(cols) + " entries, found " + std::to_string(vals.size()));
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            m(row, c) = q.field.parse(vals[c]);
          } catch (const InputError& e) {
            lines.fail(it[i].first, e.what());
          }
        }
      }
      r.arrows[a] = std::move(m);
    } else {
      lines.fail(no, "unknown directive '" + w[0] + "'");
    }
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (!mat_seen[a]) {
      std::size_t rows = r.dims[q.arrows[a].tgt], cols = r.dims[q.arrows[a].src];
      if (rows && cols) throw InputError(source + ": missing matrix for arrow '" + q.arrows[a].name + "'");
      r.arrows[a] = Matrix(rows, cols);
    }
  if (any_grades) {
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      if (grades[v].size() != r.dims[v])
        throw InputError(source + ": grades of '" + q.vertices[v].label + "' do not match its dimension");
    r.grades = grades;
  }
  return r;
}

std::string write_qrep(const QuiverRep& r, const QuiverPresentation& q) {
  std::ostringstream os;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) os << "vertexdim " << q.vertices[v].label << " " << r.dims[v] << "\n";
  if (!r.grades.empty())
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      os << "grades " << q.vertices[v].label;
      for (int g : r.grades[v]) os << " " << g;
      os << "\n";
    }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Matrix& m = r.arrows[a];
    if (m.rows() == 0 || m.cols() == 0) continue;
    os << "matrix " << q.arrows[a].name << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << q.field.format(m(i, j));
      os << "\n";
    }
  }
  return os.str();
}

namespace {

Matrix path_matrix(const Field& f, const QuiverRep& r, const QuiverPresentation& q, const std::vector<int>& path) {
  Matrix m = r.arrows[path.front()];
  for (std::size_t k = 1; k < path.size(); ++k) m = mul(f, r.arrows[path[k]], m);
  (void)q;
  return m;
}

}  // namespace

Module module_from_rep(const AlgebraPtr& ap, const QuiverRep& r) {
  const Algebra& a = *ap;
  if (!a.presentation) throw InputError("representations need an algebra built from a quiver");
  const auto& q = *a.presentation;
  const Field& f = a.field();
  for (std::size_t k = 0; k < q.relations.size(); ++k) {
    const auto& rel = q.relations[k];
    int s = q.path_src(rel[0].arrows), t = q.path_tgt(rel[0].arrows);
    Matrix sum(r.dims[t], r.dims[s]);
    for (const auto& term : rel) sum = add(f, sum, scaled(f, path_matrix(f, r, q, term.arrows), term.coef));
    if (!sum.is_zero()) throw InputError("relation " + std::to_string(k + 1) + " does not vanish on the representation");
  }
  std::vector<std::size_t> off(q.vertices.size() + 1, 0);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) off[v + 1] = off[v] + r.dims[v];
  const std::size_t n = off.back();
  std::vector<int> vert(n), grades;
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    for (std::size_t i = off[v]; i < off[v + 1]; ++i) vert[i] = static_cast<int>(v);
  if (!r.grades.empty())
    for (const auto& g : r.grades) grades.insert(grades.end(), g.begin(), g.end());
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Matrix m(n, n);
    if (a.is_idempotent(b)) {
      int v = a.vertex_of_idempotent(b);
      for (std::size_t i = off[v]; i < off[v + 1]; ++i) m(i, i) = 1;
    } else {
      Matrix p = path_matrix(f, r, q, a.basis_paths.at(b));
      int s = a.src(b), t = a.tgt(b);
      for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) m(off[t] + i, off[s] + j) = p(i, j);
    }
    act.push_back(std::move(m));
  }
  Module out(ap, vert, std::move(act), grades);
  out.verify();
  return out;
}

QuiverRep rep_from_module(const Module& m) {
  const Algebra& a = m.algebra();
  if (!a.presentation) throw InputError("representations need an algebra built from a quiver");
  const auto& q = *a.presentation;
  QuiverRep r;
  std::vector<std::vector<int>> blocks;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    blocks.push_back(m.block(static_cast<int>(v)));
    r.dims.push_back(blocks.back().size());
    if (m.graded()) {
      std::vector<int> g;
      for (int i : blocks.back()) g.push_back(m.grade(i));
      r.grades.push_back(g);
    }
  }
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    Matrix full = m.act_element(a.arrow_elements.at(k));
    const auto& rows = blocks[q.arrows[k].tgt];
    const auto& cols = blocks[q.arrows[k].src];
    Matrix x(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) x(i, j) = full(rows[i], cols[j]);
    r.arrows.push_back(std::move(x));
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace grk
