#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace oracle {

std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Q>(c, Q(0))); }

Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat matmul(const Mat& a, const Mat& b, std::size_t inner, std::size_t cols) {
  Mat c = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Matrix of the path arrows[from..to) in rep r (first arrow applied first).
Mat path(const grk::QuiverPresentation& q, const Rep& r, const std::vector<int>& arrows, std::size_t from,
         std::size_t to, int start_vertex) {
  Mat m = eye(r.dims[start_vertex]);
  int cur = start_vertex;
  for (std::size_t k = from; k < to; ++k) {
    const auto& a = q.arrows[arrows[k]];
    m = matmul(r.arrows[arrows[k]], m, r.dims[cur], r.dims[start_vertex]);
    cur = a.tgt;
  }
  return m;
}

}  // namespace

Rep from_library(const grk::QuiverRep& r) {
  Rep out;
  out.dims = r.dims;
  for (const auto& a : r.arrows) {
    Mat m = zeros(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    out.arrows.push_back(m);
  }
  return out;
}

Rep simple(const grk::QuiverPresentation& q, int v) {
  Rep r;
  r.dims.assign(q.vertices.size(), 0);
  r.dims[v] = 1;
  for (const auto& a : q.arrows) r.arrows.push_back(zeros(r.dims[a.tgt], r.dims[a.src]));
  return r;
}

namespace {

// Coboundary map phi -> (N_a phi_src - phi_tgt M_a)_a as a matrix.
Mat coboundary(const grk::QuiverPresentation& q, const Rep& m, const Rep& n, std::vector<std::size_t>& f_off,
               std::size_t& nf) {
  std::vector<std::size_t> phi_off;
  std::size_t nphi = 0;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    phi_off.push_back(nphi);
    nphi += n.dims[v] * m.dims[v];
  }
  nf = 0;
  f_off.clear();
  for (const auto& a : q.arrows) {
    f_off.push_back(nf);
    nf += n.dims[a.tgt] * m.dims[a.src];
  }
  Mat d = zeros(nf, nphi);
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto& a = q.arrows[k];
    const std::size_t ms = m.dims[a.src], mt = m.dims[a.tgt], ns = n.dims[a.src], nt = n.dims[a.tgt];
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < ms; ++j) {
        auto& row = d[f_off[k] + i * ms + j];
        // (N_a phi_src)[i][j] = sum_u N_a[i][u] phi_src[u][j]
        for (std::size_t u = 0; u < ns; ++u) row[phi_off[a.src] + u * ms + j] += n.arrows[k][i][u];
        // (phi_tgt M_a)[i][j] = sum_u phi_tgt[i][u] M_a[u][j]
        for (std::size_t u = 0; u < mt; ++u) row[phi_off[a.tgt] + i * mt + u] -= m.arrows[k][u][j];
      }
  }
  return d;
}

}  // namespace

std::size_t hom_dim(const grk::QuiverPresentation& q, const Rep& m, const Rep& n) {
  std::vector<std::size_t> f_off;
  std::size_t nf = 0;
  Mat d = coboundary(q, m, n, f_off, nf);
  const std::size_t nphi = d.empty() ? 0 : d[0].size();
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) total += n.dims[v] * m.dims[v];
  if (d.empty()) return total;
  return nphi - rank(d);
}

std::size_t ext1_dim(const grk::QuiverPresentation& q, const Rep& m, const Rep& n) {
  if (!q.field.is_rational()) throw std::runtime_error("oracle works over Q only");
  std::vector<std::size_t> f_off;
  std::size_t nf = 0;
  Mat d = coboundary(q, m, n, f_off, nf);
  if (nf == 0) return 0;
  // linearized relations
  Mat c;
  for (const auto& rel : q.relations) {
    const int s = q.path_src(rel[0].arrows), t = q.path_tgt(rel[0].arrows);
    const std::size_t rows = n.dims[t], cols = m.dims[s];
    Mat block = zeros(rows * cols, nf);
    for (const auto& term : rel) {
      const auto& ar = term.arrows;
      for (std::size_t j = 0; j < ar.size(); ++j) {
        const auto& a = q.arrows[ar[j]];
        Mat left = path(q, n, ar, j + 1, ar.size(), a.tgt);  // n.dims[t] x n.dims[tgt a]
        Mat right = path(q, m, ar, 0, j, s);                 // m.dims[src a] x m.dims[s]
        const std::size_t fr = n.dims[a.tgt], fc = m.dims[a.src];
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t col = 0; col < cols; ++col)
            for (std::size_t u = 0; u < fr; ++u) {
              if (left[r][u] == 0) continue;
              for (std::size_t v = 0; v < fc; ++v)
                if (right[v][col] != 0) block[r * cols + col][f_off[ar[j]] + u * fc + v] += term.coef * left[r][u] * right[v][col];
            }
      }
    }
    c.insert(c.end(), block.begin(), block.end());
  }
  const std::size_t z = nf - (c.empty() ? 0 : rank(c));
  const std::size_t b = d.empty() || d[0].empty() ? 0 : rank(d);
  return z - b;
}

AffinePerm identity(int n) {
  AffinePerm p;
  for (int i = 1; i <= n; ++i) p.w.push_back(i);
  return p;
}

AffinePerm right_mul(const AffinePerm& x, int s) {
  AffinePerm y = x;
  const long n = static_cast<long>(x.w.size());
  if (s == 0) {
    y.w[0] = x.w[n - 1] - n;
    y.w[n - 1] = x.w[0] + n;
  } else {
    std::swap(y.w[s - 1], y.w[s]);
  }
  return y;
}

AffinePerm left_mul(int s, const AffinePerm& x) {
  AffinePerm y = x;
  const long n = static_cast<long>(x.w.size());
  const long lo = s % n, hi = (s + 1) % n;
  for (auto& k : y.w) {
    const long r = ((k % n) + n) % n;
    if (r == lo)
      k += 1;
    else if (r == hi)
      k -= 1;
  }
  return y;
}

namespace {
long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
}  // namespace

long length(const AffinePerm& x) {
  const long n = static_cast<long>(x.w.size());
  long l = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) l += std::labs(floor_div(x.w[j] - x.w[i], n));
  return l;
}

AffinePerm from_word(int n, const std::string& word) {
  AffinePerm p = identity(n);
  if (word == "e") return p;
  for (char c : word) p = right_mul(p, c - '0');
  return p;
}

KlOracle kl_oracle(int n, int max_len) {
  KlOracle o;
  o.n = n;
  std::vector<std::string> words;
  std::deque<int> queue;
  auto add = [&](const AffinePerm& p, const std::string& w) {
    o.index[p] = static_cast<int>(o.elems.size());
    o.elems.push_back(p);
    o.len.push_back(length(p));
    words.push_back(w);
    queue.push_back(static_cast<int>(o.elems.size()) - 1);
  };
  add(identity(n), "");
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (o.len[i] == max_len) continue;
    for (int s = 0; s < n; ++s) {
      AffinePerm y = right_mul(o.elems[i], s);
      if (length(y) == o.len[i] + 1 && !o.index.count(y)) add(y, words[i] + static_cast<char>('0' + s));
    }
  }
  const std::size_t m = o.elems.size();
  o.leq.assign(m, std::vector<char>(m, 0));
  for (std::size_t w = 0; w < m; ++w) {
    const std::string& word = words[w];
    for (unsigned long mask = 0; mask < (1ul << word.size()); ++mask) {
      AffinePerm p = identity(n);
      for (std::size_t k = 0; k < word.size(); ++k)
        if (mask >> k & 1) p = right_mul(p, word[k] - '0');
      auto it = o.index.find(p);
      if (it != o.index.end()) o.leq[it->second][w] = 1;
    }
  }
  // order of processing: by length
  std::vector<int> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return o.len[a] < o.len[b]; });
  o.p.assign(m, std::vector<std::vector<long long>>(m));
  auto get = [&](int x, int w) -> std::vector<long long> {
    if (x < 0 || !o.leq[x][w]) return {};
    return o.p[x][w];
  };
  auto addto = [](std::vector<long long>& a, const std::vector<long long>& b, int shift, long long c) {
    if (b.empty()) return;
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += c * b[k];
  };
  auto find = [&](const AffinePerm& p) {
    auto it = o.index.find(p);
    return it == o.index.end() ? -1 : it->second;
  };
  for (int w : order) {
    if (o.len[w] == 0) {
      o.p[w][w] = {1};
      continue;
    }
    int s = -1, v = -1;
    for (int t = 0; t < n && s < 0; ++t) {
      AffinePerm y = left_mul(t, o.elems[w]);
      if (length(y) < o.len[w]) {
        s = t;
        v = find(y);
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (!o.leq[x][w]) continue;
      AffinePerm sx_p = left_mul(s, o.elems[x]);
      const int sx = find(sx_p);
      const int c = length(sx_p) < o.len[x] ? 1 : 0;
      std::vector<long long> r;
      addto(r, get(sx, v), 1 - c, 1);
      addto(r, get(static_cast<int>(x), v), c, 1);
      for (std::size_t z = 0; z < m; ++z) {
        if (z == static_cast<std::size_t>(v) || !o.leq[z][v] || !o.leq[x][z]) continue;
        if (length(left_mul(s, o.elems[z])) > o.len[z]) continue;
        const long d = o.len[v] - o.len[z];
        if (d % 2 == 0) continue;
        const auto& pz = o.p[z][v];
        const std::size_t k = static_cast<std::size_t>((d - 1) / 2);
        const long long mu = k < pz.size() ? pz[k] : 0;
        if (!mu) continue;
        addto(r, o.p[x][z], static_cast<int>((o.len[w] - o.len[z]) / 2), -mu);
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
      o.p[x][w] = r;
    }
  }
  return o;
}

std::map<long, long long> sl2_weyl_character(long lambda) {
  std::map<long, long long> c;
  for (long i = 0; i <= lambda; ++i) c[lambda - 2 * i] += 1;
  return c;
}

std::map<long, long long> sl2_simple_character(long e, long lambda) {
  const long l0 = lambda % e, l1 = lambda / e;
  std::map<long, long long> c;
  for (long i = 0; i <= l0; ++i)
    for (long j = 0; j <= l1; ++j) c[l0 - 2 * i + e * (l1 - 2 * j)] += 1;
  return c;
}

long alcove_length_typeA(int rank, long e, const std::vector<long>& lambda) {
  const long h = rank + 1;
  long count = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      long pair = 0;
      for (int k = i; k <= j; ++k) pair += lambda[k] + 1;
      const long a = h * pair, b = -e * (j - i + 1);
      const long lo = std::min(a, b), hi = std::max(a, b);
      for (long m = floor_div(lo, e * h) - 1; m * e * h <= hi + e * h; ++m)
        if (lo < m * e * h && m * e * h < hi) ++count;
    }
  return count;
}

}  // namespace oracle
