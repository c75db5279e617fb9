#include "grkoszul/koszul.hpp"

#include <sstream>

#include "grkoszul/errors.hpp"
#include "grkoszul/parallel.hpp"

namespace grk {

std::string KoszulReport::summary() const {
  std::ostringstream os;
  os << (koszul ? "true" : "false") << " (";
  if (exact) {
    os << "exact";
    if (koszul) {
      if (gldim)
        os << ", gldim " << *gldim;
      else
        os << ", infinite gldim";
    }
  } else {
    os << "up to degree " << max_degree;
  }
  if (!witness.empty()) os << ", " << witness;
  os << ")";
  return os.str();
}

SimpleKoszulData linearity_check(const Module& m, int max_degree, int g0) {
  SimpleKoszulData d;
  if (!m.graded()) throw HypothesisError("linearity check needs a graded module");
  std::vector<Module> seen;  // syzygies Omega_0 .. Omega_n
  Resolution res = minimal_resolution(m, static_cast<std::size_t>(max_degree) + 1, [&](const Resolution& r) {
    std::size_t n = r.terms.size() - 1;
    const ProjectiveSum& p = r.terms[n];
    for (std::size_t k = 0; k < p.rank(); ++k)
      if (p.shift[k] != g0 + static_cast<int>(n)) {
        d.linear = false;
        d.witness = "degree-" + std::to_string(n) + " syzygy head in grade " + std::to_string(p.shift[k]);
        return false;
      }
    // periodicity: the new syzygy Omega_(n+1) against earlier ones
    const Module& fresh = r.syzygies.back();
    for (std::size_t mm = 1; mm <= n; ++mm) {
      const Module& old = r.syzygies[mm];
      if (old.dim() != fresh.dim()) continue;
      int s = static_cast<int>(n + 1 - mm);
      // fresh should equal old moved up by s
      if (isomorphic(fresh, old, s).yes()) {
        d.periodic = true;
        return false;
      }
    }
    return true;
  });
  d.steps = res.terms.size();
  // the last computed term may not have been inspected when the resolution
  // stopped by termination
  if (d.linear) {
    std::size_t n = res.terms.size();
    if (n > 0) {
      const ProjectiveSum& p = res.terms[n - 1];
      for (std::size_t k = 0; k < p.rank(); ++k)
        if (p.shift[k] != g0 + static_cast<int>(n - 1)) {
          d.linear = false;
          d.witness = "degree-" + std::to_string(n - 1) + " syzygy head in grade " + std::to_string(p.shift[k]);
        }
    }
  }
  d.terminated = res.terminated;
  if (res.terminated) d.pd = res.pd();
  return d;
}

KoszulReport koszul_check(const AlgebraPtr& a0, int max_degree, unsigned jobs) {
  KoszulReport rep;
  rep.max_degree = max_degree;
  AlgebraPtr a = a0;
  if (!a->graded()) {
    a = gr_algebra(*a0).gr;
    rep.note = "algebra is not graded; checked gr A";
  }
  auto tight = tight_grading_check(*a);
  if (!tight.tight) {
    rep.koszul = false;
    rep.exact = true;
    rep.witness = "grading not tight: " + tight.failing_clause;
    return rep;
  }
  const std::size_t nv = a->num_vertices();
  rep.simples = parallel_map<SimpleKoszulData>(nv, jobs, [&](std::size_t v) {
    auto d = linearity_check(simple_module(a, static_cast<int>(v), 0), max_degree, 0);
    d.vertex = static_cast<int>(v);
    return d;
  });
  bool all_exact = true, all_term = true;
  std::size_t gl = 0;
  rep.koszul = true;
  for (const auto& d : rep.simples) {
    if (!d.linear) {
      rep.koszul = false;
      if (rep.witness.empty()) rep.witness = d.witness + " (simple " + a->vertex_label(d.vertex) + ")";
      continue;
    }
    if (!d.terminated && !d.periodic) all_exact = false;
    if (!d.terminated) all_term = false;
    if (d.pd) gl = std::max(gl, *d.pd);
  }
  if (!rep.koszul) {
    rep.exact = true;
    return rep;
  }
  rep.exact = all_exact;
  if (all_term) rep.gldim = gl;
  return rep;
}

}  // namespace grk
