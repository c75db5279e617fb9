#include "grkoszul/coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

constexpr const char* kDigits = "0123456789abcdefghij";

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

using QPoly = std::vector<long long>;  // coefficients of q^0, q^1, ...

void add_shifted(QPoly& acc, const QPoly& p, std::size_t shift, long long scale) {
  if (p.empty() || scale == 0) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += scale * p[k];
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

}  // namespace

CoxeterTable::CoxeterTable(const RootDatum& rd, long e, int max_length) : rd_(rd), e_(e), max_len_(max_length) {
  if (max_length < 0) throw InputError("max length must be non-negative");
  if (e < 2) throw InputError("e must be at least 2");
  const int r = rd.rank;
  if (r + 1 > 20) throw InputError("rank too large for the word alphabet");
  // affine wall: v -> s_{alpha_0}(v) - e alpha_0
  {
    const auto& a0 = rd.roots_w[rd.highest_short];
    const auto& c0 = rd.coroots[rd.highest_short];
    AffineMap s0{std::vector<long>(r * r, 0), Weight(r, 0)};
    for (int j = 0; j < r; ++j) {
      for (int c = 0; c < r; ++c) s0.m[j * r + c] = (j == c) - a0[j] * c0[c];
      s0.t[j] = -a0[j];
    }
    gens_.push_back(s0);
  }
  for (int i = 0; i < r; ++i) {
    AffineMap s{std::vector<long>(r * r, 0), Weight(r, 0)};
    for (int j = 0; j < r; ++j)
      for (int c = 0; c < r; ++c) s.m[j * r + c] = (j == c) - (i == c) * rd.cartan[i][j];
    gens_.push_back(s);
  }

  AffineMap id{std::vector<long>(r * r, 0), Weight(r, 0)};
  for (int j = 0; j < r; ++j) id.m[j * r + j] = 1;
  std::map<AffineMap, int> index;
  index[id] = 0;
  elems_.push_back(id);
  len_.push_back(0);
  word_.push_back("e");
  std::vector<int> layer{0};
  for (int l = 1; l <= max_length; ++l) {
    std::vector<int> next;
    for (int x : layer)
      for (int s = 0; s <= r; ++s) {
        AffineMap y = compose(elems_[x], gens_[s]);
        if (index.count(y)) continue;
        long ly = hyperplane_length(y);
        if (ly != l) continue;
        int id_y = static_cast<int>(elems_.size());
        index[y] = id_y;
        elems_.push_back(y);
        len_.push_back(l);
        word_.push_back((x == 0 ? std::string() : word_[x]) + kDigits[s]);
        next.push_back(id_y);
      }
    layer = std::move(next);
  }
  right_.assign(elems_.size(), std::vector<int>(r + 1, -1));
  for (std::size_t x = 0; x < elems_.size(); ++x)
    for (int s = 0; s <= r; ++s) {
      auto it = index.find(compose(elems_[x], gens_[s]));
      if (it != index.end()) right_[x][s] = it->second;
    }
  for (std::size_t x = 0; x < elems_.size(); ++x)
    check_invariant(hyperplane_length(elems_[x]) == len_[x], "stored length disagrees with hyperplane count");

  // {x <= w} = B u B s with B = {x <= ws} for a right descent s
  const std::size_t n = elems_.size();
  below_.assign(n, std::vector<char>(n, 0));
  below_[0][0] = 1;
  for (std::size_t w = 1; w < n; ++w) {
    auto ds = right_descents(static_cast<int>(w));
    check_invariant(!ds.empty(), "non-identity element without descent");
    int v = right_[w][ds[0]];
    for (std::size_t y = 0; y < n; ++y)
      if (below_[v][y]) {
        below_[w][y] = 1;
        int ys = right_[y][ds[0]];
        check_invariant(ys >= 0, "Bruhat interval leaves the table");
        below_[w][ys] = 1;
      }
  }
}

AffineMap CoxeterTable::compose(const AffineMap& a, const AffineMap& b) const {
  const int r = rd_.rank;
  AffineMap c{std::vector<long>(r * r, 0), a.t};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long s = 0;
      for (int k = 0; k < r; ++k) s += a.m[i * r + k] * b.m[k * r + j];
      c.m[i * r + j] = s;
      c.t[i] += a.m[i * r + j] * b.t[j];
    }
  return c;
}

long CoxeterTable::hyperplane_length(const AffineMap& a) const {
  // interior point -(e/h) rho of C^-, scaled by h to stay integral
  const int r = rd_.rank;
  const long h = rd_.h, he = h * e_;
  Weight base = scale(rd_.rho, -e_);
  Weight img(r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) img[i] += a.m[i * r + j] * base[j];
    img[i] += he * a.t[i];
  }
  long n = 0;
  for (std::size_t k = 0; k < rd_.num_positive(); ++k) {
    long x = rd_.pair(img, k), b = rd_.pair(base, k);
    check_invariant(x % he != 0, "alcove point on a wall");
    n += std::labs(floor_div(x, he) - floor_div(b, he));
  }
  return n;
}

int CoxeterTable::find(const AffineMap& a) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == a) return static_cast<int>(i);
  return -1;
}

int CoxeterTable::find_word(const std::string& w) const {
  if (w == "e" || w.empty()) return 0;
  AffineMap cur = elems_[0];
  for (char ch : w) {
    const char* p = std::find(kDigits, kDigits + generators(), ch);
    if (p == kDigits + generators()) throw InputError("bad generator '" + std::string(1, ch) + "' in word " + w);
    cur = compose(cur, gens_[p - kDigits]);
  }
  return find(cur);
}

std::vector<int> CoxeterTable::right_descents(int i) const {
  std::vector<int> out;
  for (int s = 0; s < generators(); ++s)
    if (right_[i][s] >= 0 && len_[right_[i][s]] < len_[i]) out.push_back(s);
  return out;
}

std::vector<int> CoxeterTable::left_descents(int i) const {
  std::vector<int> out;
  for (int s = 0; s < generators(); ++s)
    if (hyperplane_length(compose(gens_[s], elems_[i])) < len_[i]) out.push_back(s);
  return out;
}

std::vector<std::size_t> CoxeterTable::counts_by_length() const {
  std::vector<std::size_t> c(max_len_ + 1, 0);
  for (int l : len_) ++c[l];
  return c;
}

Weight CoxeterTable::apply(int i, const Weight& v) const {
  const int r = rd_.rank;
  const auto& a = elems_[i];
  Weight out(r, 0);
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) out[j] += a.m[j * r + k] * v[k];
    out[j] += e_ * a.t[j];
  }
  return out;
}

Weight CoxeterTable::dot(int i, const Weight& lambda) const {
  return sub(apply(i, add(lambda, rd_.rho)), rd_.rho);
}

KlTables kl_tables(const CoxeterTable& ct) {
  const std::size_t n = ct.size();
  std::vector<std::vector<QPoly>> p(n, std::vector<QPoly>(n));
  auto mu = [&](int z, int v) -> long long {
    int d = ct.length(v) - ct.length(z);
    if (d <= 0 || d % 2 == 0 || !ct.leq(z, v)) return 0;
    const auto& pz = p[z][v];
    std::size_t k = static_cast<std::size_t>((d - 1) / 2);
    return k < pz.size() ? pz[k] : 0;
  };
  p[0][0] = {1};
  for (std::size_t w = 1; w < n; ++w) {
    const int s = ct.right_descents(static_cast<int>(w))[0];
    const int v = ct.right(static_cast<int>(w), s);
    std::vector<std::pair<int, long long>> mus;
    for (std::size_t z = 0; z < n; ++z) {
      if (static_cast<int>(z) == v || !ct.leq(static_cast<int>(z), v)) continue;
      int zs = ct.right(static_cast<int>(z), s);
      if (zs < 0 || ct.length(zs) > ct.length(static_cast<int>(z))) continue;
      long long m = mu(static_cast<int>(z), v);
      if (m) mus.push_back({static_cast<int>(z), m});
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!ct.leq(static_cast<int>(x), static_cast<int>(w))) continue;
      int xs = ct.right(static_cast<int>(x), s);
      const bool c = ct.length(xs) < ct.length(static_cast<int>(x));
      QPoly acc;
      if (ct.leq(xs, v)) add_shifted(acc, p[xs][v], c ? 0 : 1, 1);
      if (ct.leq(static_cast<int>(x), v)) add_shifted(acc, p[x][v], c ? 1 : 0, 1);
      for (auto [z, m] : mus)
        if (ct.leq(static_cast<int>(x), z))
          add_shifted(acc, p[x][z], static_cast<std::size_t>((ct.length(static_cast<int>(w)) - ct.length(z)) / 2), -m);
      trim(acc);
      p[x][w] = acc;
    }
  }

  auto sign = [](int d) { return d % 2 ? -1LL : 1LL; };
  std::vector<std::vector<QPoly>> q(n, std::vector<QPoly>(n));
  for (std::size_t w = 0; w < n; ++w) {
    q[w][w] = {1};
    // decreasing length so that Q_{x,y} is known for x <= y < w
    std::vector<int> xs;
    for (std::size_t x = 0; x < n; ++x)
      if (x != w && ct.leq(static_cast<int>(x), static_cast<int>(w))) xs.push_back(static_cast<int>(x));
    for (int x : xs) {
      QPoly acc;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == w || !ct.leq(x, static_cast<int>(y)) || !ct.leq(static_cast<int>(y), static_cast<int>(w))) continue;
        QPoly t = mul(q[x][y], p[y][w]);
        add_shifted(acc, t, 0, -sign(ct.length(static_cast<int>(w)) - ct.length(static_cast<int>(y))));
      }
      trim(acc);
      q[x][w] = acc;
    }
  }

  KlTables out;
  out.p.assign(n, std::vector<Laurent>(n));
  out.q.assign(n, std::vector<Laurent>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < n; ++w) {
      out.p[x][w] = Laurent::in_q(p[x][w]);
      out.q[x][w] = Laurent::in_q(q[x][w]);
    }

  // the construction solves one triangular system; check the other product
  out.inversion_ok = out.parity_ok = out.degree_ok = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < n; ++w) {
      if (!ct.leq(static_cast<int>(x), static_cast<int>(w))) {
        if (!out.p[x][w].is_zero() || !out.q[x][w].is_zero()) {
          out.inversion_ok = false;
          out.failure = "nonzero polynomial outside the Bruhat order";
        }
        continue;
      }
      Laurent left, right;
      for (std::size_t y = 0; y < n; ++y) {
        if (!ct.leq(static_cast<int>(x), static_cast<int>(y)) || !ct.leq(static_cast<int>(y), static_cast<int>(w)))
          continue;
        left += out.q[x][y] * out.p[y][w] *
                Laurent::monomial(sign(ct.length(static_cast<int>(w)) - ct.length(static_cast<int>(y))), 0);
        right += out.p[x][y] * out.q[y][w] *
                 Laurent::monomial(sign(ct.length(static_cast<int>(y)) - ct.length(static_cast<int>(x))), 0);
      }
      Laurent want = x == w ? Laurent::one() : Laurent();
      if (left != want || right != want) {
        out.inversion_ok = false;
        if (out.failure.empty()) out.failure = "inversion fails at (" + ct.word(x) + ", " + ct.word(w) + ")";
      }
      if (!out.p[x][w].even() || !out.q[x][w].even()) {
        out.parity_ok = false;
        if (out.failure.empty()) out.failure = "odd power at (" + ct.word(x) + ", " + ct.word(w) + ")";
      }
      const Laurent& pw = out.p[x][w];
      int gap = ct.length(static_cast<int>(w)) - ct.length(static_cast<int>(x));
      bool ok = pw.coeff(0) == 1 && (x == w ? pw == Laurent::one() : pw.degree() <= gap - 1);
      if (!ok) {
        out.degree_ok = false;
        if (out.failure.empty()) out.failure = "degree bound fails at (" + ct.word(x) + ", " + ct.word(w) + ")";
      }
    }
  return out;
}

std::string dump_table(const CoxeterTable& ct, const std::vector<std::vector<Laurent>>& polys) {
  std::ostringstream os;
  for (std::size_t w = 0; w < ct.size(); ++w)
    for (std::size_t x = 0; x < ct.size(); ++x) {
      if (!ct.leq(static_cast<int>(x), static_cast<int>(w))) continue;
      os << "(" << ct.word(x) << "," << ct.word(w) << ")=";
      auto c = polys[x][w].q_coeffs();
      if (c.empty()) os << "0";
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
      os << "\n";
    }
  return os.str();
}

}  // namespace grk
