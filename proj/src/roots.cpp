#include "grkoszul/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grkoszul/errors.hpp"
#include "grkoszul/matrix.hpp"

namespace grk {

std::string weight_str(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

Weight parse_weight(const std::string& text) {
  Weight w;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::string part;
  while (is >> part) {
    try {
      std::size_t used = 0;
      long v = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      w.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad weight coordinate '" + part + "'");
    }
  }
  if (w.empty()) throw InputError("empty weight '" + text + "'");
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
Weight sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
Weight scale(const Weight& a, long k) {
  Weight r(a);
  for (auto& x : r) x *= k;
  return r;
}

long RootDatum::pair(const Weight& v, std::size_t k) const {
  long s = 0;
  for (int j = 0; j < rank; ++j) s += coroots[k][j] * v[j];
  return s;
}

Weight RootDatum::reflect(const Weight& v, std::size_t k) const {
  long c = pair(v, k);
  Weight r(v);
  for (int j = 0; j < rank; ++j) r[j] -= c * roots_w[k][j];
  return r;
}

Weight RootDatum::simple_reflect(const Weight& v, int i) const {
  Weight r(v);
  for (int j = 0; j < rank; ++j) r[j] -= v[i] * cartan[i][j];
  return r;
}

Weight RootDatum::apply_w0(const Weight& v) const {
  Weight r(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r[i] += w0[i][j] * v[j];
  return r;
}

std::vector<Scalar> RootDatum::root_coords(const Weight& v) const {
  std::vector<Scalar> n(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) n[i] += inv_[i][j] * v[j];
  return n;
}

Scalar RootDatum::form(const Weight& u, const Weight& v) const {
  // (u, alpha_j) = half_sq[j] * u_j
  auto n = root_coords(v);
  Scalar s = 0;
  for (int j = 0; j < rank; ++j) s += n[j] * half_sq[j] * u[j];
  return s;
}

namespace {

std::vector<std::vector<long>> cartan_matrix(char type, int n) {
  std::vector<std::vector<long>> k(n, std::vector<long>(n, 0));
  auto link = [&](int i, int j) { k[i][j] = k[j][i] = -1; };
  for (int i = 0; i < n; ++i) k[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      // B: last simple root short; C: last simple root long
      if (type == 'B') {
        k[n - 2][n - 1] = -2;
      } else {
        k[n - 1][n - 2] = -2;
      }
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      k[1][2] = -2;
      break;
    case 'G':
      link(0, 1);
      k[1][0] = -3;
      break;
  }
  return k;
}

bool supported(char type, int n) {
  switch (type) {
    case 'A': return n >= 1 && n <= 16;
    case 'B': return n >= 2 && n <= 12;
    case 'C': return n >= 2 && n <= 12;
    case 'D': return n >= 4 && n <= 12;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
  }
  return false;
}

}  // namespace

RootDatum root_datum(char type, int rank) {
  if (!supported(type, rank))
    throw InputError("unsupported root system " + std::string(1, type) + std::to_string(rank));
  RootDatum rd;
  rd.type = type;
  rd.rank = rank;
  rd.cartan = cartan_matrix(type, rank);
  const auto& k = rd.cartan;

  // symmetrizer: k[i][j] d_j = k[j][i] d_i, propagated along the diagram
  std::vector<Scalar> d(rank, 0);
  d[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (i != j && k[i][j] != 0 && d[i] != 0 && d[j] == 0) {
          d[j] = d[i] * k[j][i] / Scalar(k[i][j]);
          changed = true;
        }
  }
  Scalar lo = *std::min_element(d.begin(), d.end());
  for (int i = 0; i < rank; ++i) {
    Scalar x = d[i] / lo;
    check_invariant(x.get_den() == 1, "root lengths are not integral multiples");
    rd.half_sq.push_back(x.get_num().get_si());
  }

  // positive roots by height through root strings
  std::map<std::vector<long>, int> index;
  for (int i = 0; i < rank; ++i) {
    std::vector<long> e(rank, 0);
    e[i] = 1;
    index[e] = static_cast<int>(rd.roots.size());
    rd.roots.push_back(e);
  }
  for (std::size_t pos = 0; pos < rd.roots.size(); ++pos) {
    const auto beta = rd.roots[pos];
    for (int i = 0; i < rank; ++i) {
      long pr = 0;
      for (int j = 0; j < rank; ++j) pr += beta[j] * k[j][i];
      long p = 0;
      for (auto b = beta;;) {
        b[i] -= 1;
        if (b[i] < 0 || !index.count(b)) break;
        ++p;
      }
      long q = p - pr;
      if (q > 0) {
        auto up = beta;
        up[i] += 1;
        if (!index.count(up)) {
          index[up] = static_cast<int>(rd.roots.size());
          rd.roots.push_back(up);
        }
      }
    }
  }
  std::stable_sort(rd.roots.begin(), rd.roots.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    return ha < hb;
  });

  long min_len = -1;
  std::vector<long> lens;
  for (const auto& n : rd.roots) {
    // (alpha, alpha)/2 = (1/2) sum n_i n_j k[i][j] d_j
    long s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += n[i] * n[j] * k[i][j] * rd.half_sq[j];
    check_invariant(s % 2 == 0, "odd root norm");
    long len = s / 2;
    lens.push_back(len);
    if (min_len < 0 || len < min_len) min_len = len;
    std::vector<long> c(rank);
    for (int j = 0; j < rank; ++j) {
      check_invariant(n[j] * rd.half_sq[j] % len == 0, "coroot not integral");
      c[j] = n[j] * rd.half_sq[j] / len;
    }
    rd.coroots.push_back(c);
    Weight w(rank, 0);
    for (int j = 0; j < rank; ++j)
      for (int i = 0; i < rank; ++i) w[j] += n[i] * k[i][j];
    rd.roots_w.push_back(w);
  }
  long best = -1;
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    if (lens[r] != min_len) continue;
    long ht = 0;
    for (long x : rd.roots[r]) ht += x;
    if (ht > best) {
      best = ht;
      rd.highest_short = static_cast<int>(r);
    }
  }
  rd.rho.assign(rank, 1);
  rd.h = rd.pair_highest(rd.rho) + 1;

  // weight -> root coordinates: solve sum_i n_i k[i][j] = v_j
  Field q = Field::rational();
  Matrix kt(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) kt(j, i) = k[i][j];
  rd.inv_.assign(rank, std::vector<Scalar>(rank, 0));
  for (int j = 0; j < rank; ++j) {
    auto col = solve(q, kt, unit_vec(rank, j));
    check_invariant(col.has_value(), "singular Cartan matrix");
    for (int i = 0; i < rank; ++i) rd.inv_[i][j] = (*col)[i];
  }

  // w0 by folding rho to -rho; the product of the reflections used
  std::vector<std::vector<long>> m(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  Weight v = rd.rho;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rank; ++i)
      if (v[i] > 0) {
        v = rd.simple_reflect(v, i);
        // m <- s_i m, with s_i(x)_j = x_j - x_i k[i][j]
        auto mi = m[i];
        for (int j = 0; j < rank; ++j)
          for (int c = 0; c < rank; ++c) m[j][c] -= mi[c] * k[i][j];
        moved = true;
        break;
      }
  }
  check_invariant(v == scale(rd.rho, -1), "longest element does not send rho to -rho");
  rd.w0 = m;
  return rd;
}

}  // namespace grk
