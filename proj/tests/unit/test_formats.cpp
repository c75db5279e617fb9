#include <doctest.h>

#include "grkoszul/errors.hpp"
#include "grkoszul/formats.hpp"
#include "grkoszul/models.hpp"

using namespace grk;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_qalg(text, "t.qalg");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every bundled presentation survives a write and re-parse") {
  for (const auto& name : models::names()) {
    CAPTURE(name);
    auto q = models::by_name(name);
    auto again = parse_qalg(write_qalg(q));
    CHECK(again == q);
    CHECK(write_qalg(again) == write_qalg(q));
  }
}

TEST_CASE("field, fractions and signed duality survive a round trip") {
  const std::string text =
      "field F 5\n"
      "vertex a length=2 weight=1,0\n"
      "vertex b\n"
      "arrow x a b\n"
      "arrow y b a\n"
      "relation 2*x*y - 3/2*x*y\n"
      "order a < b\n"
      "duality x:-y y:-x\n"
      "maxlength 7\n";
  auto q = parse_qalg(text);
  CHECK(q.field.characteristic() == 5);
  CHECK(q.duality.size() == 2);
  CHECK(q.duality[0].negate);
  CHECK(q.max_length == 7);
  CHECK(parse_qalg(write_qalg(q)) == q);
}

TEST_CASE("parse errors carry the source and line") {
  CHECK(error_of("field Q\nvertex 1\narrow a 1 2\n").rfind("t.qalg:3:", 0) == 0);
  CHECK(error_of("field Q\nvertex 1\nvertex 1\n").rfind("t.qalg:3:", 0) == 0);
  CHECK(error_of("field R\n").rfind("t.qalg:1:", 0) == 0);
  CHECK(error_of("vertex 1\narrow a 1 1\nrelation a*b\n").rfind("t.qalg:3:", 0) == 0);
  CHECK(error_of("vertex 1\nbogus\n").rfind("t.qalg:2:", 0) == 0);
  CHECK_FALSE(error_of("vertex 1\nvertex 2\norder 1 < 2\norder 2 < 1\n").empty());
}

TEST_CASE("qrep files round trip and are checked against the relations") {
  auto q = models::b5();
  auto a = build_algebra(q);
  const std::string text =
      "vertexdim 1 2\n"
      "vertexdim 2 1\n"
      "grades 1 0 2\n"
      "grades 2 1\n"
      "matrix alpha\n"
      "1 0\n"
      "matrix beta\n"
      "0\n"
      "1\n";
  auto r = parse_qrep(text, q);
  CHECK(parse_qrep(write_qrep(r, q), q) == r);
  Module m = module_from_rep(a, r);
  CHECK(m.dim() == 3);
  CHECK(rep_from_module(m) == r);

  // beta then alpha must vanish; this one does not
  const std::string bad =
      "vertexdim 1 1\n"
      "vertexdim 2 1\n"
      "matrix alpha\n"
      "1\n"
      "matrix beta\n"
      "1\n";
  CHECK_THROWS_AS(module_from_rep(a, parse_qrep(bad, q)), InputError);
  CHECK_THROWS_AS(parse_qrep("vertexdim 1 1\nmatrix alpha\n1 2\n", q), InputError);
}
