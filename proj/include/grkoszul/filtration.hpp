#pragma once
#include <vector>

#include "grkoszul/module.hpp"

namespace grk {

// rad^0 M ⊇ rad^1 M ⊇ ... ⊇ 0 (last entry is zero).
std::vector<Subspace> radical_series(const Module& m);
// 0 = soc^0 ⊆ soc^1 ⊆ ... ⊆ M (last entry is M).
std::vector<Subspace> socle_series(const Module& m);

// Vertex dimensions of successive quotients of a monotone chain of
// submodules. Works for both directions of inclusion.
std::vector<std::vector<std::size_t>> layer_dims(const Module& m, const std::vector<Subspace>& chain);
std::vector<std::vector<std::size_t>> radical_layers(const Module& m);
std::vector<std::vector<std::size_t>> socle_layers(const Module& m);

// Semisimple slices rad^r M / rad^(r+1) M for r <= k < s.
std::vector<std::vector<std::size_t>> filtration_slices(const Module& m, std::size_t r, std::size_t s);

// Associated graded module of a decreasing filtration F_0 ⊇ F_1 ⊇ ... ⊇ 0 of
// submodules. The target algebra acts through representatives: target basis
// element c acts by reps[c] (an element of m's algebra) of degree
// rep_grades[c], which must map F_k into F_(k+deg). Level k is placed in
// grade base + k.
struct GradedModule {
  Module module;
  std::vector<Vec> reps;  // M-coordinates of each graded basis vector
};
GradedModule associated_graded(const Module& m, const std::vector<Subspace>& filtration, const AlgebraPtr& target,
                               const std::vector<Vec>& reps, const std::vector<int>& rep_grades, int base = 0);

// gr M with respect to the radical filtration, as a module over gr A
// (given by gr_algebra) or, when A itself is tightly graded, over A.
GradedModule gr_module(const Module& m, const GradedAlgebra& ga);
GradedModule gr_module_tight(const Module& m);

// gr# of a submodule L of M: L filtered by L ∩ rad^s M, placed in grade s.
GradedModule gr_sharp(const Module& m, const Subspace& l, const GradedAlgebra& ga);

}  // namespace grk
