#pragma once
// Reference computations that share no code with the library beyond its
// plain data types. They are slow and only meant for small inputs.
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "grkoszul/formats.hpp"
#include "grkoszul/quiver.hpp"

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

std::size_t rank(Mat m);

// Quiver representation with explicit matrices, arrow a: dims[tgt] x dims[src].
struct Rep {
  std::vector<std::size_t> dims;
  std::vector<Mat> arrows;
};
Rep from_library(const grk::QuiverRep& r);

// Hom and Ext^1 between representations satisfying the relations of q.
// Ext^1 is the space of upper triangular extension data (one map per arrow
// satisfying the linearized relations) modulo the coboundaries.
std::size_t hom_dim(const grk::QuiverPresentation& q, const Rep& m, const Rep& n);
std::size_t ext1_dim(const grk::QuiverPresentation& q, const Rep& m, const Rep& n);
Rep simple(const grk::QuiverPresentation& q, int v);

// Affine symmetric group of period n as window notation [f(1), ..., f(n)].
// Generator 0 is the affine one.
struct AffinePerm {
  std::vector<long> w;
  bool operator<(const AffinePerm& o) const { return w < o.w; }
  bool operator==(const AffinePerm& o) const { return w == o.w; }
};
AffinePerm identity(int n);
AffinePerm right_mul(const AffinePerm& x, int s);
AffinePerm left_mul(int s, const AffinePerm& x);
long length(const AffinePerm& x);
// product of generators given as digits, "e" for the empty word
AffinePerm from_word(int n, const std::string& word);

// Elements of length <= max_len, P polynomials (coefficients in q) through
// the left descent recursion, and Bruhat order through the subword property.
struct KlOracle {
  int n = 0;
  std::vector<AffinePerm> elems;
  std::map<AffinePerm, int> index;
  std::vector<long> len;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<std::vector<long long>>> p;  // p[x][w], empty when x is not below w
};
KlOracle kl_oracle(int n, int max_len);

// sl2 at level e: character of the simple module of highest weight
// lambda0 + e lambda1 as a weight -> multiplicity map.
std::map<long, long long> sl2_simple_character(long e, long lambda);
std::map<long, long long> sl2_weyl_character(long lambda);

// Hyperplanes (x + rho, alpha^vee) = m e separating lambda + rho from a
// generic point of the anti-dominant alcove. Weights in fundamental weight
// coordinates, type A only.
long alcove_length_typeA(int rank, long e, const std::vector<long>& lambda);

}  // namespace oracle
