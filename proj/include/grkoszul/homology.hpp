#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grkoszul/module.hpp"

namespace grk {

struct ProjectiveCover {
  ProjectiveSum sum;
  Module projective;
  std::vector<Vec> generators;  // head generators in M
  Matrix pi;                    // M.dim x P.dim
  Module kernel;                // Omega M
  Matrix kernel_inclusion;      // P.dim x Omega.dim
};
ProjectiveCover projective_cover(const Module& m);

struct Resolution {
  std::vector<ProjectiveSum> terms;     // P_0, P_1, ...
  std::vector<Module> projectives;      // the same, as modules
  // images[n][k]: image of generator k of P_n inside P_(n-1), for n >= 1
  std::vector<std::vector<Vec>> images;
  std::vector<Module> syzygies;         // Omega_0 = M, Omega_1, ...
  bool terminated = false;              // the last syzygy computed is zero
  std::size_t length() const { return terms.size(); }
  // projective dimension when terminated
  std::optional<std::size_t> pd() const;
};

// Minimal projective resolution with at most max_terms terms. The optional
// callback sees each new syzygy and may stop the computation by returning
// false.
Resolution minimal_resolution(const Module& m, std::size_t max_terms,
                              const std::function<bool(const Resolution&)>& keep_going = {});

// dim Ext^n(M, N) for n = 0 .. upto (requires res.length() > upto or a
// terminated resolution).
std::vector<std::size_t> ext_dims(const Resolution& res, const Module& n, std::size_t upto);
// Graded: result[n][r] = dim Ext^n(M, N<r>) in degree 0, where N<r> is N
// moved up by r grades.
std::vector<std::map<int, std::size_t>> ext_graded(const Resolution& res, const Module& n, std::size_t upto);
// Convenience: resolves m far enough and returns dim Ext^k(M, N), k <= upto.
std::vector<std::size_t> ext_upto(const Module& m, const Module& n, std::size_t upto);

// Homomorphisms M -> N as matrices (N.dim x M.dim). For graded modules only
// degree preserving maps into N<shift>.
std::vector<Matrix> hom_basis(const Module& m, const Module& n, std::optional<int> shift = std::nullopt);
// Ungraded dimension; graded modules sum over every shift.
std::size_t hom_dim(const Module& m, const Module& n);

enum class IsoVerdict { isomorphic, not_isomorphic, undetermined };
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::string reason;
  std::optional<Matrix> witness;
  bool yes() const { return verdict == IsoVerdict::isomorphic; }
};
// Graded comparison when both modules are graded (N<shift> against M).
IsoResult isomorphic(const Module& m, const Module& n, int shift = 0);

std::string to_string(IsoVerdict v);

}  // namespace grk
