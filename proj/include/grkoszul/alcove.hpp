#pragma once
#include <optional>
#include <string>
#include <vector>

#include "grkoszul/roots.hpp"

namespace grk {

bool is_dominant(const Weight& v);
// lambda <= mu: mu - lambda is a non-negative integral sum of simple roots.
bool dominance_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu);
bool is_regular(const RootDatum& rd, long e, const Weight& lambda);
bool is_restricted(long e, const Weight& lambda);
// lambda = lambda0 + e lambda1 with lambda0 restricted (lambda dominant).
std::pair<Weight, Weight> restricted_decomposition(long e, const Weight& lambda);
Weight star(const RootDatum& rd, const Weight& lambda);
// The W-conjugate of v in the closed dominant chamber.
Weight dominant_conjugate(const RootDatum& rd, const Weight& v);

struct Linkage {
  Weight minus;        // lambda^- in the closed anti-dominant alcove
  long length = 0;     // affine hyperplanes strictly separating lambda from C^-
  long d = 0;          // sum of n_alpha, regular dominant weights only
  bool singular = false;
  std::vector<int> facet;  // walls of C^- containing lambda^- (0 = affine wall, i = alpha_i)
};
Linkage linkage(const RootDatum& rd, long e, const Weight& lambda);
// Number of affine hyperplanes (x+rho, alpha^vee) = e m strictly separating
// lambda from the open alcove C^-.
long alcove_length(const RootDatum& rd, long e, const Weight& lambda);
long d_value(const RootDatum& rd, long p, const Weight& lambda);

// f_e(xi) = 2(e-1)rho + w0 xi0 + e xi1
Weight fatten_weight(const RootDatum& rd, long e, const Weight& xi);

using WeightSet = std::vector<Weight>;  // sorted lexicographically, no repeats

// Dominant weights below some generator. With e > 0 only e-regular weights
// are kept (the ideal inside the regular weights).
WeightSet ideal_closure(const RootDatum& rd, const WeightSet& gens, long regular_e = 0);
WeightSet restricted_weights(const RootDatum& rd, long e);
WeightSet gamma_res(const RootDatum& rd, long e, bool regular_only);
bool contains(const WeightSet& s, const Weight& w);
bool subset(const WeightSet& a, const WeightSet& b);

// a_1 = max over xi in the set of (xi_1, alpha_0^vee); -1 for the empty set.
long a1(const RootDatum& rd, long p, const WeightSet& s);

struct FattenReport {
  std::vector<WeightSet> levels;  // Psi(-1), Psi(0), ..., Psi(n)
  std::vector<long> a1;
  bool in_regular = false;
  bool efat_literal = false;      // Gamma_res,reg + (e-1)rho inside Psi(n)
  bool efat_operational = false;  // all f_e of Gamma_res,reg inside Psi(n)
  std::string literal_missing, operational_missing;
};
// Rounds of fattening; in_regular keeps the ideals inside the e-regular weights.
FattenReport fatten(const RootDatum& rd, long e, const WeightSet& psi, int n, bool in_regular);

struct BoundRow {
  int m = 0;
  long lhs = 0, rhs = 0;
  bool holds = false, strict = false;
};
struct CorollaryRow {
  int m = 0;
  long lhs = 0, bound = 0;
  bool holds = false;
  bool p_hypothesis = false;   // p >= (2m+3)(h-1)
  std::optional<long> pair_lhs; // a1(m-1) + a1(m), m >= 0
  std::optional<bool> pair_holds;
};
struct BoundsReport {
  long p = 0, h = 0;
  std::vector<std::pair<Weight, bool>> jantzen;  // membership per weight
  long jantzen_bound = 0;                        // p(p-h+2)
  long a1_gamma = 0, a1_gamma0 = 0;
  bool lemma_a = false, lemma_b = false;         // a1 < p-h+1; a1 + a1(0) < 2p-2h+2
  bool all_regular = false;
  long max_d = 0, gldim_bound = 0;
  std::vector<BoundRow> growth;                  // a1(Gamma(m)) <= a1 + 2(m+1)(h-1)
  bool in_res = false;                           // Gamma inside Gamma_res
  std::vector<CorollaryRow> corollary;           // only when in_res
  long threshold_2h2 = 0, threshold_4h5 = 0;
  std::optional<long> threshold_n;               // 2N(h-1)-1
  std::vector<std::pair<int, long>> threshold_m; // (m, (2m+3)(h-1))
};
// Gamma is taken as given (it should be an ideal); fattening levels up to m_max.
BoundsReport bounds_report(const RootDatum& rd, long p, const WeightSet& gamma, int m_max,
                           std::optional<long> n = std::nullopt, bool in_regular = false);

struct PartitionWeight {
  Weight weight;
  bool chamber_regular = false;
};
PartitionWeight partition_translate(int n, const std::vector<long>& partition, long e);

// Whitespace separated coordinate tuples, one weight per line.
WeightSet parse_weight_set(const std::string& text, int rank);
std::string write_weight_set(const WeightSet& s);

}  // namespace grk
