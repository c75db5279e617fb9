#include <doctest.h>

#include "../oracles.hpp"
#include "grkoszul/alcove.hpp"
#include "grkoszul/errors.hpp"
#include "grkoszul/weightpoly.hpp"

using namespace grk;

TEST_CASE("root data: counts, Coxeter numbers, rho") {
  struct Row {
    char t;
    int r;
    std::size_t npos;
    long h;
  };
  for (auto row : {Row{'A', 1, 1, 2}, Row{'A', 4, 10, 5}, Row{'B', 3, 9, 6}, Row{'C', 4, 16, 8}, Row{'D', 5, 20, 8},
                   Row{'E', 6, 36, 12}, Row{'E', 7, 63, 18}, Row{'E', 8, 120, 30}, Row{'F', 4, 24, 12},
                   Row{'G', 2, 6, 6}}) {
    CAPTURE(row.t);
    CAPTURE(row.r);
    auto rd = root_datum(row.t, row.r);
    CHECK(rd.num_positive() == row.npos);
    CHECK(rd.h == row.h);
    CHECK(rd.rho == Weight(row.r, 1));
    // w0 sends rho to -rho
    CHECK(rd.apply_w0(rd.rho) == scale(rd.rho, -1));
  }
  CHECK_THROWS_AS(root_datum('H', 3), InputError);
  CHECK_THROWS_AS(root_datum('D', 2), InputError);
}

TEST_CASE("A1 linkage classes and lengths") {
  auto rd = root_datum('A', 1);
  const long e = 5;
  for (long a = 0; a < 40; ++a)
    for (long b = 0; b < 40; ++b) {
      const bool linked = ((a - b) % (2 * e) == 0) || ((a + b + 2) % (2 * e) == 0);
      CHECK((linkage(rd, e, {a}).minus == linkage(rd, e, {b}).minus) == linked);
    }
  for (long a = 0; a < 40; ++a) {
    if ((a + 1) % e == 0) continue;
    CHECK(linkage(rd, e, {a}).length == (a + 1 + e - 1) / e);
  }
  CHECK(linkage(rd, e, {4}).singular);
  CHECK(linkage(rd, e, {13}).d == 2);
}

TEST_CASE("alcove lengths in types A2 and A3 match hyperplane counting") {
  for (int rank : {2, 3}) {
    auto rd = root_datum('A', rank);
    for (long e : {3L, 5L}) {
      Weight w(rank, 0);
      for (int t = 0; t < 150; ++t) {
        long v = t;
        for (int i = 0; i < rank; ++i) {
          w[i] = v % 6;
          v /= 6;
        }
        CHECK(alcove_length(rd, e, w) == oracle::alcove_length_typeA(rank, e, w));
        if (is_regular(rd, e, w)) CHECK(linkage(rd, e, w).length == alcove_length(rd, e, w));
      }
    }
  }
}

TEST_CASE("dominance ideals") {
  auto rd = root_datum('A', 2);
  auto s = ideal_closure(rd, {{2, 2}});
  // (2,2) dominates (3,0), (0,3), (1,1), (0,0)
  CHECK(s == WeightSet{{0, 0}, {0, 3}, {1, 1}, {2, 2}, {3, 0}});
  CHECK(dominance_leq(rd, {1, 1}, {2, 2}));
  CHECK_FALSE(dominance_leq(rd, {1, 0}, {2, 2}));
  auto a1 = ideal_closure(root_datum('A', 1), {{13}}, 5);
  CHECK(a1 == WeightSet{{1}, {3}, {5}, {7}, {11}, {13}});
  CHECK(restricted_weights(rd, 3).size() == 9);
}

TEST_CASE("fattening and the bound report") {
  auto rd = root_datum('A', 1);
  CHECK(fatten_weight(rd, 5, {3}) == Weight{5});
  CHECK(fatten_weight(rd, 5, {7}) == Weight{11});
  auto b = bounds_report(rd, 5, gamma_res(rd, 5, false), 1);
  CHECK(b.in_res);
  REQUIRE(b.growth.size() == 3);
  CHECK(b.growth[1].lhs == 1);
  CHECK(b.growth[1].rhs == 2);
  CHECK(b.growth[1].strict);
  for (const auto& c : b.corollary) CHECK(c.holds);
}

TEST_CASE("partitions become GL_n weights") {
  auto p = partition_translate(3, {4, 2, 1}, 0);
  CHECK(p.weight == Weight{2, 1});
  CHECK(p.chamber_regular);
  CHECK_THROWS_AS(partition_translate(3, {1, 2}, 5), InputError);
  CHECK_THROWS_AS(partition_translate(2, {3, 2, 1}, 5), InputError);
}

TEST_CASE("weight sets parse and write") {
  auto s = parse_weight_set("# comment\n1 2\n0 0\n1 2\n", 2);
  CHECK(s == WeightSet{{0, 0}, {1, 2}});
  CHECK(parse_weight_set(write_weight_set(s), 2) == s);
  CHECK_THROWS_AS(parse_weight_set("1 2 3\n", 2), InputError);
}

TEST_CASE("sl2 characters of simple modules") {
  auto rd = root_datum('A', 1);
  for (long e : {5L, 7L})
    for (long lam = 0; lam < e * e; ++lam) {
      if (!is_regular(rd, e, {lam})) continue;
      CAPTURE(e);
      CAPTURE(lam);
      auto r = lcf_character(rd, e, {lam});
      Character expect;
      for (auto [w, m] : oracle::sl2_simple_character(e, lam)) expect[{w}] = m;
      CHECK(r.ch == expect);
    }
}

TEST_CASE("Weyl dimensions agree with Freudenthal") {
  for (auto [t, r] : {std::pair{'A', 3}, std::pair{'B', 2}, std::pair{'C', 3}, std::pair{'G', 2}}) {
    auto rd = root_datum(t, r);
    Weight w(r, 0);
    for (int k = 0; k < 8; ++k) {
      w[k % r] += 1;
      auto ch = weyl_character(rd, w);
      CHECK(character_dimension(ch) == weyl_dimension(rd, w));
      CHECK(w_invariant(rd, ch));
    }
  }
  for (long l = 0; l < 10; ++l) {
    Character expect;
    for (auto [w, m] : oracle::sl2_weyl_character(l)) expect[{w}] = m;
    CHECK(weyl_character(root_datum('A', 1), {l}) == expect);
  }
}

TEST_CASE("lowest alcove simple modules have Weyl characters") {
  auto rd = root_datum('A', 2);
  const long e = 7;
  for (long a = 0; a < 6; ++a)
    for (long b = 0; a + b + 2 < e; ++b) {
      auto r = lcf_character(rd, e, {a, b});
      CHECK(r.ch == weyl_character(rd, {a, b}));
    }
}

TEST_CASE("layer predictions") {
  auto rd = root_datum('A', 1);
  auto p = predict_layers(rd, 5, {13});
  auto l = p.layers();
  REQUIRE(l.size() == 2);
  CHECK(l[1] == std::vector<std::pair<Weight, long long>>{{{5}, 1}});
  WeightSet gamma{{3}, {5}};
  CHECK_THROWS_AS(predict_layers(rd, 5, {13}, &gamma), InputError);
  CHECK_THROWS_AS(lcf_character(rd, 5, {9}), HypothesisError);
}
