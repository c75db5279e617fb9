#include <doctest.h>

#include "../oracles.hpp"
#include "grkoszul/filtration.hpp"
#include "grkoszul/homology.hpp"
#include "grkoszul/models.hpp"
#include "grkoszul/qha.hpp"

using namespace grk;

namespace {

std::vector<Module> test_modules(const AlgebraPtr& a) {
  std::vector<Module> out;
  auto h = standard_modules(a, poset_of(*a), duality_of(*a));
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    out.push_back(h.simple[v]);
    out.push_back(h.proj[v]);
    out.push_back(h.standard[v]);
    out.push_back(h.costandard[v]);
    out.push_back(h.injective[v]);
    const Module& p = h.proj[v];
    for (std::size_t r = 1; r < loewy_length(p); ++r) out.push_back(quotient(p, rad_power(p, r)).module);
  }
  return out;
}

}  // namespace

TEST_CASE("Hom and Ext^1 agree with extension classification") {
  for (const auto& name : {"b5", "b9", "cubic", "dual", "linear2"}) {
    CAPTURE(name);
    auto q = models::by_name(name);
    auto a = build_algebra(q);
    auto mods = test_modules(a);
    std::vector<oracle::Rep> reps;
    for (const auto& m : mods) reps.push_back(oracle::from_library(rep_from_module(m)));
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = 0; j < mods.size(); ++j) {
        CAPTURE(i);
        CAPTURE(j);
        auto d = ext_upto(mods[i], mods[j], 1);
        CHECK(d[0] == oracle::hom_dim(q, reps[i], reps[j]));
        CHECK(d[1] == oracle::ext1_dim(q, reps[i], reps[j]));
        CHECK(hom_dim(mods[i], mods[j]) == d[0]);
      }
  }
}

TEST_CASE("B5 resolutions match the hand computation") {
  auto a = build_algebra(models::b5());
  // L(1): 0 -> P(2)<1> -> P(1) ; L(2): 0 -> P(2)<2> -> P(1)<1> -> P(2)
  auto r1 = minimal_resolution(simple_module(a, 0), 6);
  REQUIRE(r1.pd());
  CHECK(*r1.pd() == 1);
  CHECK(r1.terms[1].vertex == std::vector<int>{1});
  CHECK(r1.terms[1].shift == std::vector<int>{1});
  auto r2 = minimal_resolution(simple_module(a, 1), 6);
  REQUIRE(r2.pd());
  CHECK(*r2.pd() == 2);
  CHECK(r2.terms[1].vertex == std::vector<int>{0});
  CHECK(r2.terms[2].vertex == std::vector<int>{1});
  CHECK(r2.terms[2].shift == std::vector<int>{2});
  CHECK(global_dimension(a) == std::size_t{2});
}

TEST_CASE("dual numbers have a periodic resolution") {
  auto a = build_algebra(models::dual_numbers());
  auto r = minimal_resolution(simple_module(a, 0), 5);
  CHECK_FALSE(r.terminated);
  CHECK(ext_upto(simple_module(a, 0), simple_module(a, 0), 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK_FALSE(global_dimension(a, 6));
}

TEST_CASE("radical and socle layers of B9 projectives") {
  auto a = build_algebra(models::b9());
  auto p5 = projective(a, a->vertex_index("5"));
  auto rad = radical_layers(p5);
  REQUIRE(rad.size() == 3);
  CHECK(rad[0] == std::vector<std::size_t>{0, 1, 0});
  CHECK(rad[1] == std::vector<std::size_t>{1, 0, 1});
  CHECK(rad[2] == std::vector<std::size_t>{0, 1, 0});
  CHECK(socle_layers(p5).size() == 3);
}

TEST_CASE("graded Ext of B5 simples sits on the diagonal") {
  auto a = build_algebra(models::b5());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto res = minimal_resolution(simple_module(a, i), 6);
      auto g = ext_graded(res, simple_module(a, j), 2);
      for (std::size_t n = 0; n < g.size(); ++n)
        for (const auto& [shift, d] : g[n])
          if (d) CHECK(static_cast<std::size_t>(shift) == n);
    }
}

TEST_CASE("graded isomorphism test") {
  auto a = build_algebra(models::b5());
  auto h = standard_modules(a, poset_of(*a), duality_of(*a));
  CHECK(isomorphic(h.standard[1], h.proj[1]).yes());
  CHECK_FALSE(isomorphic(h.standard[0], h.proj[0]).yes());
  CHECK_FALSE(isomorphic(h.simple[0], shift(h.simple[0], 1)).yes());
  CHECK(isomorphic(shift(h.simple[0], 1), h.simple[0], 1).yes());
}
