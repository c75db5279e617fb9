#pragma once
#include <optional>
#include <string>
#include <vector>

#include "grkoszul/homology.hpp"

namespace grk {

struct SimpleKoszulData {
  int vertex = 0;
  bool linear = true;           // all generators of P_n found in grade n
  bool terminated = false;      // finite resolution found
  bool periodic = false;        // Omega_n ≅ Omega_m<n-m> detected
  std::size_t steps = 0;        // number of projective terms computed
  std::optional<std::size_t> pd;
  std::string witness;          // first nonlinear syzygy head
};

struct KoszulReport {
  bool koszul = false;
  bool exact = false;       // verdict is a theorem, not a bounded search
  int max_degree = 0;
  std::optional<std::size_t> gldim;  // set when every simple has finite pd
  std::string witness;
  std::string note;         // e.g. that gr A was used
  std::vector<SimpleKoszulData> simples;
  std::string summary() const;
};

// Linearity of the minimal graded resolutions of the simple modules. When A
// is not graded the check runs on gr A. jobs > 1 resolves simples in
// parallel.
KoszulReport koszul_check(const AlgebraPtr& a, int max_degree = 12, unsigned jobs = 1);

// Linear resolution test for one graded module generated in grade g0.
SimpleKoszulData linearity_check(const Module& m, int max_degree, int g0 = 0);

}  // namespace grk
