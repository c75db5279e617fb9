#include "grkoszul/weightpoly.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "grkoszul/errors.hpp"

namespace grk {

LinkageClass::LinkageClass(const RootDatum& rd, long e, const Weight& minus, int max_length)
    : ct_(rd, e, max_length), kl_(kl_tables(ct_)), minus_(minus) {
  for (std::size_t i = 0; i < ct_.size(); ++i) {
    Weight mu = ct_.dot(static_cast<int>(i), minus);
    // table order is by length, so the first hit is the shortest
    if (!w_of_.count(mu)) w_of_[mu] = static_cast<int>(i);
  }
}

int LinkageClass::element_of(const Weight& mu) const {
  auto it = w_of_.find(mu);
  return it == w_of_.end() ? -1 : it->second;
}

std::vector<Weight> LinkageClass::dominant() const {
  std::vector<std::pair<int, Weight>> v;
  for (const auto& [mu, i] : w_of_)
    if (is_dominant(mu)) v.push_back({i, mu});
  std::sort(v.begin(), v.end());
  std::vector<Weight> out;
  for (auto& [i, mu] : v) out.push_back(mu);
  return out;
}

namespace {

int checked_element(const LinkageClass& lc, const RootDatum& rd, long e, const Weight& mu) {
  int i = lc.element_of(mu);
  check_invariant(i >= 0, "weight not reached within its own length");
  check_invariant(lc.table().length(i) == alcove_length(rd, e, mu),
                  "hyperplane length of a weight differs from the length of w_lambda");
  return i;
}

// Inverse of the signed P-matrix restricted to the weights in s (sorted by
// length, top last): row for s.back().
std::map<Weight, Laurent> restricted_inverse(const LinkageClass& lc, const std::vector<Weight>& s) {
  const auto& ct = lc.table();
  const auto& p = lc.kl().p;
  std::vector<int> idx;
  for (const auto& w : s) idx.push_back(lc.element_of(w));
  const std::size_t n = s.size();
  auto sign = [](int d) { return Laurent::monomial(d % 2 ? -1 : 1, 0); };
  // q[a][b] for a <= b in s
  std::vector<std::vector<Laurent>> q(n, std::vector<Laurent>(n));
  for (std::size_t b = 0; b < n; ++b) {
    q[b][b] = Laurent::one();
    for (std::size_t a = b; a-- > 0;) {
      if (!ct.leq(idx[a], idx[b])) continue;
      Laurent acc;
      for (std::size_t c = a; c < b; ++c)
        if (ct.leq(idx[a], idx[c]) && ct.leq(idx[c], idx[b]))
          acc -= sign(ct.length(idx[b]) - ct.length(idx[c])) * q[a][c] * p[idx[c]][idx[b]];
      q[a][b] = acc;
    }
  }
  std::map<Weight, Laurent> out;
  for (std::size_t a = 0; a < n; ++a) out[s[a]] = q[a][n - 1];
  return out;
}

}  // namespace

WeightPolys weight_polynomials(const RootDatum& rd, long e, const Weight& nu, const Weight& lambda) {
  Linkage ln = linkage(rd, e, nu), ll = linkage(rd, e, lambda);
  WeightPolys out;
  out.l_nu = ln.length;
  out.l_lambda = ll.length;
  if (ln.minus != ll.minus) return out;
  out.linked = true;
  LinkageClass lc(rd, e, ll.minus, static_cast<int>(std::max(ln.length, ll.length)));
  int wn = checked_element(lc, rd, e, nu), wl = checked_element(lc, rd, e, lambda);
  out.p = lc.kl().p[wn][wl];
  out.q = lc.kl().q[wn][wl];
  if (is_dominant(nu) && is_dominant(lambda)) {
    std::vector<Weight> s;
    for (const auto& mu : lc.dominant()) {
      int i = lc.element_of(mu);
      if (lc.table().leq(wn, i) && lc.table().leq(i, wl)) s.push_back(mu);
    }
    if (std::find(s.begin(), s.end(), nu) != s.end())
      out.q_dominant = restricted_inverse(lc, s).at(nu);
    else
      out.q_dominant = Laurent();
  }
  return out;
}

std::vector<std::vector<std::pair<Weight, long long>>> LayerPrediction::layers() const {
  std::vector<std::vector<std::pair<Weight, long long>>> out;
  for (const auto& [key, m] : mult) {
    if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1);
    out[key.first].push_back({key.second, m});
  }
  return out;
}

LayerPrediction predict_layers(const RootDatum& rd, long e, const Weight& lambda, const WeightSet* gamma) {
  if (!is_dominant(lambda)) throw InputError("weight " + weight_str(lambda) + " is not dominant");
  if (gamma && !contains(*gamma, lambda)) throw InputError("the weight set does not contain lambda");
  Linkage ll = linkage(rd, e, lambda);
  LayerPrediction out;
  out.lambda = lambda;
  out.length = ll.length;
  out.semisimple_series = ll.singular;
  LinkageClass lc(rd, e, ll.minus, static_cast<int>(ll.length));
  int wl = checked_element(lc, rd, e, lambda);
  for (const auto& mu : lc.dominant()) {
    if (gamma && !contains(*gamma, mu)) continue;
    if (lc.table().leq(lc.element_of(mu), wl)) out.support.push_back(mu);
  }
  check_invariant(!out.support.empty() && out.support.back() == lambda, "lambda is not the top of its support");
  out.q = restricted_inverse(lc, out.support);
  for (const auto& [nu, qp] : out.q) {
    const long gap = ll.length - lc.table().length(lc.element_of(nu));
    for (const auto& [exp, c] : qp.terms()) {
      long n = gap - exp;
      check_invariant(n >= 0, "predicted layer index is negative");
      check_invariant(c > 0, "predicted multiplicity is negative");
      out.mult[{static_cast<int>(n), nu}] = c;
    }
  }
  // F rebuilt from the table must give back Q
  for (const auto& nu : out.support) {
    const long gap = ll.length - lc.table().length(lc.element_of(nu));
    Laurent f;
    for (const auto& [key, m] : out.mult)
      if (key.second == nu) f.add_term(m, static_cast<int>(gap - key.first));
    out.f[nu] = f;
    check_invariant(f == out.q.at(nu), "F and Q disagree");
  }
  auto l0 = out.layers();
  check_invariant(!l0.empty() && l0[0].size() == 1 && l0[0][0].first == lambda && l0[0][0].second == 1,
                  "layer 0 is not the head L(lambda)");
  return out;
}

Character weyl_character(const RootDatum& rd, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InputError("weight " + weight_str(lambda) + " is not dominant");
  WeightSet dom = ideal_closure(rd, {lambda});
  // process from the top: height of lambda - mu increasing
  std::vector<std::pair<Scalar, Weight>> order;
  for (const auto& mu : dom) {
    auto n = rd.root_coords(sub(lambda, mu));
    Scalar ht = 0;
    for (const auto& x : n) ht += x;
    order.push_back({ht, mu});
  }
  std::sort(order.begin(), order.end());
  std::map<Weight, long long> m;
  auto mult = [&](const Weight& v) -> long long {
    auto it = m.find(dominant_conjugate(rd, v));
    return it == m.end() ? 0 : it->second;
  };
  const Weight lr = add(lambda, rd.rho);
  const Scalar top = rd.form(lr, lr);
  for (const auto& [ht, mu] : order) {
    if (mu == lambda) {
      m[mu] = 1;
      continue;
    }
    Scalar num = 0;
    for (std::size_t k = 0; k < rd.num_positive(); ++k) {
      Weight x = mu;
      for (;;) {
        x = add(x, rd.roots_w[k]);
        long long c = mult(x);
        if (!c) break;
        num += Scalar(static_cast<long>(c)) * rd.form(x, rd.roots_w[k]);
      }
    }
    Weight mr = add(mu, rd.rho);
    Scalar den = top - rd.form(mr, mr);
    check_invariant(den > 0, "Freudenthal denominator is not positive");
    Scalar val = 2 * num / den;
    check_invariant(val.get_den() == 1, "Freudenthal multiplicity is not integral");
    if (val != 0) m[mu] = val.get_num().get_si();
  }
  Character ch;
  for (const auto& [mu, c] : m) {
    std::set<Weight> orbit{mu};
    std::deque<Weight> queue{mu};
    while (!queue.empty()) {
      Weight v = queue.front();
      queue.pop_front();
      for (int i = 0; i < rd.rank; ++i) {
        Weight r = rd.simple_reflect(v, i);
        if (orbit.insert(r).second) queue.push_back(r);
      }
    }
    for (const auto& v : orbit) ch[v] = c;
  }
  return ch;
}

long long weyl_dimension(const RootDatum& rd, const Weight& lambda) {
  Scalar d = 1;
  const Weight lr = add(lambda, rd.rho);
  for (std::size_t k = 0; k < rd.num_positive(); ++k) {
    Scalar f(rd.pair(lr, k), rd.pair(rd.rho, k));
    f.canonicalize();
    d *= f;
  }
  check_invariant(d.get_den() == 1, "Weyl dimension is not integral");
  return d.get_num().get_si();
}

long long character_dimension(const Character& c) {
  long long s = 0;
  for (const auto& [w, m] : c) s += m;
  return s;
}

bool w_invariant(const RootDatum& rd, const Character& c) {
  for (const auto& [w, m] : c)
    for (int i = 0; i < rd.rank; ++i) {
      auto it = c.find(rd.simple_reflect(w, i));
      if (it == c.end() || it->second != m) return false;
    }
  return true;
}

LcfResult lcf_character(const RootDatum& rd, long e, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InputError("weight " + weight_str(lambda) + " is not dominant");
  if (!is_regular(rd, e, lambda))
    throw HypothesisError("weight " + weight_str(lambda) + " is not " + std::to_string(e) + "-regular");
  Linkage ll = linkage(rd, e, lambda);
  LinkageClass lc(rd, e, ll.minus, static_cast<int>(ll.length));
  const auto& ct = lc.table();
  int w = checked_element(lc, rd, e, lambda);
  LcfResult out;
  out.lambda = lambda;
  std::map<Weight, long long> total;
  for (std::size_t y = 0; y < ct.size(); ++y) {
    if (!ct.leq(static_cast<int>(y), w)) continue;
    Weight mu = ct.dot(static_cast<int>(y), ll.minus);
    if (!is_dominant(mu)) continue;
    long long c = lc.kl().p[y][w].eval(1);
    if ((ct.length(w) - ct.length(static_cast<int>(y))) % 2) c = -c;
    if (!c) continue;
    out.terms.push_back({mu, c});
    for (const auto& [v, m] : weyl_character(rd, mu)) total[v] += c * m;
  }
  for (const auto& [v, m] : total) {
    if (m < 0 && out.nonnegative) {
      out.nonnegative = false;
      out.violation = "multiplicity " + std::to_string(m) + " at weight " + weight_str(v);
    }
    if (m) out.ch[v] = m;
  }
  out.dim = character_dimension(out.ch);
  out.weyl_dim = weyl_dimension(rd, lambda);
  check_invariant(w_invariant(rd, out.ch), "character is not W-invariant");
  return out;
}

}  // namespace grk
