#pragma once
#include <string>
#include <vector>

#include "grkoszul/field.hpp"

namespace grk {

// Coordinates in the fundamental weight basis.
using Weight = std::vector<long>;

std::string weight_str(const Weight& w);  // "3" or "2,1"
Weight parse_weight(const std::string& text);

// Irreducible reduced root system with Bourbaki numbering.
struct RootDatum {
  char type = 'A';
  int rank = 1;
  std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<long> half_sq;              // (alpha_i, alpha_i)/2, shortest = 1
  std::vector<std::vector<long>> roots;   // positive roots, simple-root coordinates, by height
  std::vector<std::vector<long>> coroots; // matching coroots, simple-coroot coordinates
  std::vector<Weight> roots_w;            // positive roots in weight coordinates
  Weight rho;
  long h = 0;               // Coxeter number, (rho, alpha_0^vee) + 1
  int highest_short = 0;    // index of alpha_0 in roots
  std::vector<std::vector<long>> w0;      // longest element on weight coordinates

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  std::size_t num_positive() const { return roots.size(); }
  // (v, alpha^vee) for the k-th positive root
  long pair(const Weight& v, std::size_t k) const;
  long pair_highest(const Weight& v) const { return pair(v, highest_short); }
  Weight reflect(const Weight& v, std::size_t k) const;  // s_alpha(v)
  Weight simple_reflect(const Weight& v, int i) const;
  Weight apply_w0(const Weight& v) const;
  // Coordinates of v in the simple root basis (rational in general).
  std::vector<Scalar> root_coords(const Weight& v) const;
  // Symmetric invariant form on weights.
  Scalar form(const Weight& u, const Weight& v) const;

 private:
  friend RootDatum root_datum(char type, int rank);
  std::vector<std::vector<Scalar>> inv_;  // weight -> root coordinates
};

// Throws InputError for unsupported (type, rank).
RootDatum root_datum(char type, int rank);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(const Weight& a, long k);

}  // namespace grk
