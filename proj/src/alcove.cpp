#include "grkoszul/alcove.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
long ceil_div(long a, long b) { return -floor_div(-a, b); }

void require_rank(const RootDatum& rd, const Weight& w) {
  if (static_cast<int>(w.size()) != rd.rank)
    throw InputError("weight " + weight_str(w) + " has " + std::to_string(w.size()) + " coordinates, expected " +
                     std::to_string(rd.rank));
}

}  // namespace

bool is_dominant(const Weight& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
}

bool dominance_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  auto n = rd.root_coords(sub(mu, lambda));
  for (const auto& x : n)
    if (x.get_den() != 1 || x < 0) return false;
  return true;
}

bool is_regular(const RootDatum& rd, long e, const Weight& lambda) {
  Weight v = add(lambda, rd.rho);
  for (std::size_t k = 0; k < rd.num_positive(); ++k)
    if (rd.pair(v, k) % e == 0) return false;
  return true;
}

bool is_restricted(long e, const Weight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [e](long x) { return x >= 0 && x < e; });
}

std::pair<Weight, Weight> restricted_decomposition(long e, const Weight& lambda) {
  Weight l0(lambda.size()), l1(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    l1[i] = floor_div(lambda[i], e);
    l0[i] = lambda[i] - e * l1[i];
  }
  return {l0, l1};
}

Weight star(const RootDatum& rd, const Weight& lambda) { return scale(rd.apply_w0(lambda), -1); }

Weight dominant_conjugate(const RootDatum& rd, const Weight& v0) {
  Weight v = v0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rd.rank; ++i)
      if (v[i] < 0) {
        v = rd.simple_reflect(v, i);
        moved = true;
      }
  }
  return v;
}

long alcove_length(const RootDatum& rd, long e, const Weight& lambda) {
  Weight v = add(lambda, rd.rho);
  long n = 0;
  for (std::size_t k = 0; k < rd.num_positive(); ++k) {
    long a = rd.pair(v, k);
    if (a > 0)
      n += ceil_div(a, e);
    else if (a < -e)
      n += ceil_div(-a, e) - 1;
  }
  return n;
}

long d_value(const RootDatum& rd, long p, const Weight& lambda) {
  Weight v = add(lambda, rd.rho);
  long n = 0;
  for (std::size_t k = 0; k < rd.num_positive(); ++k) n += floor_div(rd.pair(v, k), p);
  return n;
}

Linkage linkage(const RootDatum& rd, long e, const Weight& lambda) {
  require_rank(rd, lambda);
  if (e < 2) throw InputError("e must be at least 2");
  Weight v = add(lambda, rd.rho);
  const auto& a0 = rd.roots_w[rd.highest_short];
  for (;;) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < rd.rank; ++i)
        if (v[i] > 0) {
          v = rd.simple_reflect(v, i);
          moved = true;
        }
    }
    long c = rd.pair_highest(v);
    if (c >= -e) break;
    // reflect in the wall (x, alpha_0^vee) = -e
    for (int j = 0; j < rd.rank; ++j) v[j] -= (c + e) * a0[j];
  }
  Linkage out;
  out.minus = sub(v, rd.rho);
  if (rd.pair_highest(v) == -e) out.facet.push_back(0);
  for (int i = 0; i < rd.rank; ++i)
    if (v[i] == 0) out.facet.push_back(i + 1);
  out.singular = !out.facet.empty();
  out.length = alcove_length(rd, e, lambda);
  out.d = d_value(rd, e, lambda);
  return out;
}

Weight fatten_weight(const RootDatum& rd, long e, const Weight& xi) {
  auto [x0, x1] = restricted_decomposition(e, xi);
  Weight f = add(scale(rd.rho, 2 * (e - 1)), rd.apply_w0(x0));
  return add(f, scale(x1, e));
}

bool contains(const WeightSet& s, const Weight& w) { return std::binary_search(s.begin(), s.end(), w); }

bool subset(const WeightSet& a, const WeightSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

WeightSet ideal_closure(const RootDatum& rd, const WeightSet& gens, long regular_e) {
  // Any two dominant weights mu <= lambda are joined by a chain of dominant
  // weights whose steps are positive roots, so a search that subtracts
  // positive roots and discards non-dominant results reaches everything.
  std::set<Weight> seen;
  std::deque<Weight> queue;
  for (const auto& g : gens) {
    require_rank(rd, g);
    if (!is_dominant(g)) throw InputError("generator " + weight_str(g) + " is not dominant");
    if (seen.insert(g).second) queue.push_back(g);
  }
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (const auto& r : rd.roots_w) {
      Weight x = sub(w, r);
      if (is_dominant(x) && seen.insert(x).second) queue.push_back(x);
    }
  }
  WeightSet out;
  for (const auto& w : seen)
    if (!regular_e || is_regular(rd, regular_e, w)) out.push_back(w);
  return out;
}

WeightSet restricted_weights(const RootDatum& rd, long e) {
  WeightSet out;
  Weight w(rd.rank, 0);
  for (;;) {
    out.push_back(w);
    int i = rd.rank - 1;
    while (i >= 0 && w[i] == e - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

WeightSet gamma_res(const RootDatum& rd, long e, bool regular_only) {
  return ideal_closure(rd, restricted_weights(rd, e), regular_only ? e : 0);
}

long a1(const RootDatum& rd, long p, const WeightSet& s) {
  long best = -1;
  for (const auto& w : s) best = std::max(best, rd.pair_highest(restricted_decomposition(p, w).second));
  return best;
}

FattenReport fatten(const RootDatum& rd, long e, const WeightSet& psi, int n, bool in_regular) {
  if (n < -1) throw InputError("fattening depth must be at least -1");
  if (psi.empty()) throw InputError("empty weight set");
  FattenReport rep;
  rep.in_regular = in_regular;
  const long reg = in_regular ? e : 0;
  if (in_regular)
    for (const auto& w : psi)
      if (!is_regular(rd, e, w)) throw InputError("weight " + weight_str(w) + " is not " + std::to_string(e) + "-regular");
  rep.levels.push_back(ideal_closure(rd, psi, reg));
  for (int k = 0; k <= n; ++k) {
    std::set<Weight> gens;
    for (const auto& xi : rep.levels.back()) {
      Weight f = fatten_weight(rd, e, xi);
      check_invariant(is_dominant(f), "f_e produced a non-dominant weight");
      if (is_regular(rd, e, xi)) check_invariant(is_regular(rd, e, f), "f_e does not preserve regularity");
      gens.insert(f);
    }
    rep.levels.push_back(ideal_closure(rd, WeightSet(gens.begin(), gens.end()), reg));
  }
  for (const auto& l : rep.levels) rep.a1.push_back(a1(rd, e, l));

  const WeightSet& top = rep.levels.back();
  rep.efat_literal = rep.efat_operational = true;
  for (const auto& lam : gamma_res(rd, e, true)) {
    Weight shifted = add(lam, scale(rd.rho, e - 1));
    if (rep.efat_literal && !contains(top, shifted)) {
      rep.efat_literal = false;
      rep.literal_missing = weight_str(shifted);
    }
    Weight f = fatten_weight(rd, e, lam);
    if (rep.efat_operational && !contains(top, f)) {
      rep.efat_operational = false;
      rep.operational_missing = weight_str(f);
    }
  }
  return rep;
}

BoundsReport bounds_report(const RootDatum& rd, long p, const WeightSet& gamma, int m_max, std::optional<long> n,
                           bool in_regular) {
  if (gamma.empty()) throw InputError("empty weight set");
  BoundsReport rep;
  rep.p = p;
  rep.h = rd.h;
  const long h = rd.h;
  rep.jantzen_bound = p * (p - h + 2);
  for (const auto& w : gamma) rep.jantzen.push_back({w, rd.pair_highest(add(w, rd.rho)) <= rep.jantzen_bound});

  FattenReport fr = fatten(rd, p, gamma, std::max(m_max, 0), in_regular);
  rep.a1_gamma = a1(rd, p, gamma);
  rep.a1_gamma0 = fr.a1[1];
  rep.lemma_a = rep.a1_gamma < p - h + 1;
  rep.lemma_b = rep.a1_gamma + rep.a1_gamma0 < 2 * p - 2 * h + 2;

  rep.all_regular = std::all_of(gamma.begin(), gamma.end(), [&](const Weight& w) { return is_regular(rd, p, w); });
  for (const auto& w : gamma) rep.max_d = std::max(rep.max_d, d_value(rd, p, w));
  rep.gldim_bound = 2 * rep.max_d;

  for (int m = -1; m <= m_max; ++m) {
    BoundRow r;
    r.m = m;
    r.lhs = fr.a1[m + 1];
    r.rhs = rep.a1_gamma + 2 * (m + 1) * (h - 1);
    r.holds = r.lhs <= r.rhs;
    r.strict = r.lhs < r.rhs;
    rep.growth.push_back(r);
  }

  rep.in_res = subset(gamma, gamma_res(rd, p, false));
  if (rep.in_res)
    for (int m = -1; m <= m_max; ++m) {
      CorollaryRow c;
      c.m = m;
      c.lhs = fr.a1[m + 1];
      c.bound = (2 * m + 3) * (h - 1);
      c.holds = c.lhs < c.bound;
      c.p_hypothesis = p >= c.bound;
      if (m >= 0) {
        c.pair_lhs = fr.a1[m] + fr.a1[m + 1];
        c.pair_holds = *c.pair_lhs < 2 * p - 2 * h + 2;
      }
      rep.corollary.push_back(c);
    }

  rep.threshold_2h2 = 2 * h - 2;
  rep.threshold_4h5 = 4 * h - 5;
  if (n) rep.threshold_n = 2 * *n * (h - 1) - 1;
  for (int m = -1; m <= m_max; ++m) rep.threshold_m.push_back({m, (2 * m + 3) * (h - 1)});
  return rep;
}

PartitionWeight partition_translate(int n, const std::vector<long>& partition, long e) {
  if (n < 2) throw InputError("n must be at least 2");
  if (static_cast<int>(partition.size()) > n)
    throw InputError("partition has more than " + std::to_string(n) + " parts");
  std::vector<long> lam(partition);
  lam.resize(n, 0);
  for (int i = 0; i < n; ++i) {
    if (lam[i] < 0) throw InputError("partition has a negative part");
    if (i && lam[i] > lam[i - 1]) throw InputError("partition parts must be non-increasing");
  }
  PartitionWeight out;
  for (int i = 0; i + 1 < n; ++i) out.weight.push_back(lam[i] - lam[i + 1]);
  out.chamber_regular = true;
  if (e > 0)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long a = lam[i] - (i + 1), b = lam[j] - (j + 1);
        if (((a - b) % e + e) % e == 0) out.chamber_regular = false;
      }
  return out;
}

WeightSet parse_weight_set(const std::string& text, int rank) {
  std::istringstream is(text);
  std::string line;
  std::set<Weight> s;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Weight w;
    try {
      w = parse_weight(line);
    } catch (const InputError& err) {
      throw InputError("line " + std::to_string(no) + ": " + err.what());
    }
    if (static_cast<int>(w.size()) != rank)
      throw InputError("line " + std::to_string(no) + ": expected " + std::to_string(rank) + " coordinates");
    s.insert(w);
  }
  return WeightSet(s.begin(), s.end());
}

std::string write_weight_set(const WeightSet& s) {
  std::ostringstream os;
  for (const auto& w : s) {
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace grk
