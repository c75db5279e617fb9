#include <doctest.h>

#include "grkoszul/errors.hpp"
#include "grkoszul/formats.hpp"
#include "grkoszul/grcompare.hpp"
#include "grkoszul/models.hpp"
#include "grkoszul/subalgebra.hpp"

using namespace grk;

TEST_CASE("B5 has the expected basis and projectives") {
  auto a = build_algebra(models::b5());
  a->verify();
  CHECK(a->dim() == 5);
  CHECK(a->graded_dims() == std::vector<std::size_t>{2, 2, 1});
  CHECK(a->loewy_length() == 3);
  CHECK(describe_dims(projective(a, 0)) == "(2,1)");
  CHECK(describe_dims(projective(a, 1)) == "(1,1)");
  CHECK(a->generators().size() == 2);
}

TEST_CASE("B9 and the local algebras have the expected dimensions") {
  CHECK(build_algebra(models::b9())->dim() == 9);
  CHECK(build_algebra(models::dual_numbers())->dim() == 2);
  CHECK(build_algebra(models::truncated_cubic())->dim() == 3);
  CHECK(build_algebra(models::linear2())->dim() == 3);
  CHECK(build_algebra(models::semisimple(4))->dim() == 4);
}

TEST_CASE("path products follow the convention x*y = y then x") {
  auto a = build_algebra(models::b5());
  // element text reads left to right like the file format
  Vec ab = parse_element(*a, "alpha*beta");  // 1 -> 2 -> 1
  Vec ba = parse_element(*a, "beta*alpha");  // 2 -> 1 -> 2, the relation
  CHECK_FALSE(is_zero(ab));
  CHECK(is_zero(ba));
  CHECK(a->mul(parse_element(*a, "beta"), parse_element(*a, "alpha")) == ab);
}

TEST_CASE("opposite algebra reverses products") {
  auto a = build_algebra(models::b9());
  auto op = opposite(*a);
  op->verify();
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      CHECK(op->mul(op->unit(static_cast<int>(i)), op->unit(static_cast<int>(j))) ==
            a->mul(a->unit(static_cast<int>(j)), a->unit(static_cast<int>(i))));
}

TEST_CASE("gr of a graded quiver algebra is isomorphic to it") {
  for (auto q : {models::b5(), models::b9(), models::truncated_cubic()}) {
    auto a = build_algebra(q);
    auto rep = gr_algebra_iso(a);
    CHECK(rep.verdict == IsoVerdict::isomorphic);
    CHECK(rep.graded_dims == a->graded_dims());
    CHECK(tight_grading_check(*a).tight);
  }
}

TEST_CASE("a non-homogeneous relation gives a non-graded algebra whose gr differs") {
  // x^2 = x^3 makes x^2 = x^4 = 0 only after reduction; gr is K[x]/(x^2)
  auto q = parse_qalg("vertex 1\narrow x 1 1\nrelation x*x - x*x*x\n");
  auto a = build_algebra(q);
  CHECK(a->dim() == 2);
  auto ga = gr_algebra(*a);
  CHECK(ga.gr->graded_dims() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("subalgebras, normality and radical generation") {
  auto a = build_algebra(models::b5());
  auto whole = subalgebra_from_generators(a, {parse_element(*a, "alpha"), parse_element(*a, "beta")});
  CHECK(whole.sub->dim() == 4);  // 1, alpha, beta, alpha*beta
  CHECK(whole.normal);
  CHECK(radical_generation_check(whole).holds);

  auto trivial = subalgebra_from_generators(a, {});
  CHECK(trivial.sub->dim() == 1);
  auto rg = radical_generation_check(trivial);
  CHECK_FALSE(rg.holds);
  CHECK(rg.dim_radical == 3);

  auto cubic = build_algebra(models::truncated_cubic());
  auto sq = subalgebra_from_generators(cubic, {parse_element(*cubic, "x*x")});
  CHECK(sq.sub->dim() == 2);
  CHECK_FALSE(radical_generation_check(sq).holds);
}

TEST_CASE("quotients by ideals") {
  auto a = build_algebra(models::b9());
  // kill vertex 13
  auto e13 = a->unit(a->idempotent(a->vertex_index("13")));
  auto q = quotient_algebra(a, two_sided_ideal(*a, {e13}));
  q.quotient->verify();
  CHECK(q.quotient->num_vertices() == 2);
  CHECK(q.vertex_map[a->vertex_index("13")] == -1);
  CHECK(q.quotient->dim() == 5);
}
