#pragma once
#include <string>
#include <vector>

#include "grkoszul/laurent.hpp"
#include "grkoszul/roots.hpp"

namespace grk {

// Affine map v -> M v + e t on weight coordinates of x + rho, t in the root
// lattice. This is the dot action of W_e shifted by rho.
struct AffineMap {
  std::vector<long> m;  // rank x rank, row major
  Weight t;
  bool operator<(const AffineMap& o) const { return m != o.m ? m < o.m : t < o.t; }
  bool operator==(const AffineMap& o) const = default;
};

// Elements of W_e up to a length bound, generated by the reflections in the
// walls of the anti-dominant alcove C^-. Generator 0 is the affine wall,
// generator i the wall of alpha_i.
class CoxeterTable {
 public:
  CoxeterTable(const RootDatum& rd, long e, int max_length);

  const RootDatum& root_datum() const { return rd_; }
  long e() const { return e_; }
  int max_length() const { return max_len_; }
  int generators() const { return rd_.rank + 1; }
  std::size_t size() const { return elems_.size(); }
  const AffineMap& element(int i) const { return elems_[i]; }
  int length(int i) const { return len_[i]; }
  const std::string& word(int i) const { return word_[i]; }  // lexicographically first reduced word, "e" for 1
  // index of x*s, or -1 when it lies beyond the length bound
  int right(int i, int s) const { return right_[i][s]; }
  int find(const AffineMap& a) const;  // -1 when absent
  int find_word(const std::string& w) const;
  bool leq(int x, int w) const { return below_[w][x] != 0; }
  std::vector<int> right_descents(int i) const;
  std::vector<int> left_descents(int i) const;
  std::vector<std::size_t> counts_by_length() const;

  // Separating hyperplane count between C^- and its image.
  long hyperplane_length(const AffineMap& a) const;
  Weight apply(int i, const Weight& v) const;      // on x + rho coordinates
  Weight dot(int i, const Weight& lambda) const;   // w . lambda

 private:
  AffineMap compose(const AffineMap& a, const AffineMap& b) const;  // a after b

  RootDatum rd_;
  long e_;
  int max_len_;
  std::vector<AffineMap> gens_;
  std::vector<AffineMap> elems_;
  std::vector<int> len_;
  std::vector<std::string> word_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<char>> below_;
};

struct KlTables {
  // P[x][w] and Q[x][w] as polynomials in t (even powers), zero unless x <= w.
  std::vector<std::vector<Laurent>> p, q;
  // sum_{x<=y<=w} (-1)^{l(w)-l(y)} Q_{x,y} P_{y,w} = delta_{x,w} on every interval
  bool inversion_ok = false;
  bool parity_ok = false;
  bool degree_ok = false;  // P_{x,x} = 1, constant term 1, deg_q P_{x,w} <= (l(w)-l(x)-1)/2
  std::string failure;
};
KlTables kl_tables(const CoxeterTable& ct);

// One line per x <= w: words, then coefficients in ascending powers of t^2.
std::string dump_table(const CoxeterTable& ct, const std::vector<std::vector<Laurent>>& polys);

}  // namespace grk
