#include <doctest.h>

#include "../oracles.hpp"
#include "grkoszul/coxeter.hpp"

using namespace grk;

namespace {

// Compares the library table with the affine permutation model of the same
// group. Generators are matched by index; the diagram of type A~ is a cycle
// through 0, so this is a diagram isomorphism.
void compare_with_oracle(int rank, long e, int len) {
  CoxeterTable ct(root_datum('A', rank), e, len);
  auto kl = kl_tables(ct);
  auto o = oracle::kl_oracle(rank + 1, len);
  REQUIRE(ct.size() == o.elems.size());
  std::vector<int> to_oracle(ct.size());
  for (std::size_t i = 0; i < ct.size(); ++i) {
    auto p = oracle::from_word(rank + 1, ct.word(static_cast<int>(i)));
    auto it = o.index.find(p);
    REQUIRE(it != o.index.end());
    to_oracle[i] = it->second;
    CHECK(o.len[it->second] == ct.length(static_cast<int>(i)));
  }
  for (std::size_t x = 0; x < ct.size(); ++x)
    for (std::size_t w = 0; w < ct.size(); ++w) {
      const int ox = to_oracle[x], ow = to_oracle[w];
      const bool below = ct.leq(static_cast<int>(x), static_cast<int>(w));
      CHECK(below == static_cast<bool>(o.leq[ox][ow]));
      if (!below) continue;
      CHECK(kl.p[x][w].q_coeffs() == o.p[ox][ow]);
    }
}

}  // namespace

TEST_CASE("affine A1: the infinite dihedral group has all P equal to 1") {
  CoxeterTable ct(root_datum('A', 1), 5, 8);
  CHECK(ct.counts_by_length() == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2, 2});
  auto kl = kl_tables(ct);
  CHECK(kl.inversion_ok);
  for (std::size_t x = 0; x < ct.size(); ++x)
    for (std::size_t w = 0; w < ct.size(); ++w) {
      const bool below = ct.length(static_cast<int>(x)) < ct.length(static_cast<int>(w)) || x == w;
      CHECK(ct.leq(static_cast<int>(x), static_cast<int>(w)) == below);
      if (below) CHECK(kl.p[x][w] == Laurent::one());
    }
  compare_with_oracle(1, 5, 8);
}

TEST_CASE("affine A2 agrees with the affine permutation oracle") {
  compare_with_oracle(2, 5, 6);
  // the level only rescales the alcoves
  CoxeterTable c3(root_datum('A', 2), 3, 4), c7(root_datum('A', 2), 7, 4);
  CHECK(c3.counts_by_length() == c7.counts_by_length());
}

TEST_CASE("affine A3 agrees with the oracle on short elements") { compare_with_oracle(3, 5, 4); }

TEST_CASE("other types pass the inversion, parity and degree checks") {
  for (auto [t, r, len] : {std::tuple{'B', 2, 6}, std::tuple{'C', 2, 5}, std::tuple{'G', 2, 5}}) {
    CAPTURE(t);
    CoxeterTable ct(root_datum(t, r), 7, len);
    auto kl = kl_tables(ct);
    CHECK(kl.inversion_ok);
    CHECK(kl.parity_ok);
    CHECK(kl.degree_ok);
    CHECK(ct.counts_by_length()[1] == static_cast<std::size_t>(r + 1));
  }
}

TEST_CASE("words, descents and the table dump") {
  CoxeterTable ct(root_datum('A', 2), 5, 3);
  CHECK(ct.word(0) == "e");
  int w = ct.find_word("010");
  REQUIRE(w >= 0);
  CHECK(ct.find_word("101") == w);  // braid relation
  CHECK(ct.find_word("00") == 0);
  CHECK(ct.find_word("0120") < 0);  // beyond the length bound
  CHECK(ct.right_descents(w).size() == 2);
  CHECK(ct.left_descents(w).size() == 2);
  auto kl = kl_tables(ct);
  auto dump = dump_table(ct, kl.p);
  CHECK(dump.find("(e,010)=1\n") != std::string::npos);
}

TEST_CASE("the hyperplane length equals the word length") {
  for (auto [t, r] : {std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'G', 2}}) {
    CoxeterTable ct(root_datum(t, r), 11, 4);
    for (std::size_t i = 0; i < ct.size(); ++i)
      CHECK(ct.hyperplane_length(ct.element(static_cast<int>(i))) == ct.length(static_cast<int>(i)));
  }
}
