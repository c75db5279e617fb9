#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "grkoszul/matrix.hpp"

using namespace grk;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Size of the row space over F_p by enumerating all combinations.
std::size_t brute_rank_fp(const Matrix& m, unsigned long p) {
  std::set<std::vector<long>> seen;
  std::vector<long> coef(m.rows(), 0);
  for (;;) {
    std::vector<long> v(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + coef[i] * m(i, j).get_num().get_si()) % static_cast<long>(p);
    seen.insert(v);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == static_cast<long>(p)) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  std::size_t r = 0, n = 1;
  while (n < seen.size()) n *= p, ++r;
  return r;
}

}  // namespace

TEST_CASE("rank over Q agrees with the reference elimination") {
  std::mt19937 rng(7);
  const Field q = Field::rational();
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c, -2, 2);
    oracle::Mat o(r, std::vector<mpq_class>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) o[i][j] = m(i, j);
    CHECK(rank(q, m) == oracle::rank(o));
    auto rk = rank_kernel(q, m);
    CHECK(rk.rank + rk.kernel.size() == c);
    for (const auto& v : rk.kernel) CHECK(is_zero(apply(q, m, v)));
  }
}

TEST_CASE("rank over F_p agrees with counting the row space") {
  std::mt19937 rng(11);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const Field f = Field::prime(p);
    for (int t = 0; t < 15; ++t) {
      Matrix m = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, 0, static_cast<int>(p) - 1);
      CHECK(rank(f, m) == brute_rank_fp(m, p));
    }
  }
}

TEST_CASE("fractions parse and reduce") {
  const Field q = Field::rational();
  CHECK(q.parse("6/4") == mpq_class(3, 2));
  CHECK(q.format(q.parse("-2/4")) == "-1/2");
  const Field f = Field::prime(7);
  CHECK(f.parse("3/2") == f.from_int(5));  // 2 * 5 = 10 = 3 mod 7
  CHECK(f.inv(f.from_int(3)) == f.from_int(5));
}

TEST_CASE("solve and subspace operations") {
  const Field q = Field::rational();
  Matrix m = Matrix::from_rows({{1, 2, 0}, {0, 1, 1}}, 3);
  auto x = solve(q, m, {3, 2});
  REQUIRE(x);
  CHECK(apply(q, m, *x) == Vec{3, 2});
  CHECK_FALSE(solve(q, Matrix::from_rows({{1, 1}, {1, 1}}, 2), {1, 2}));

  Subspace a = Subspace::span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace b = Subspace::span(q, 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(sum(a, b).dim() == 3);
  CHECK(intersect(a, b).dim() == 1);
  CHECK(intersect(a, b).contains(Vec{0, 5, 0}));
  CHECK_FALSE(a.contains(Vec{0, 0, 1}));
  auto k = kernel_of_rows(a);
  REQUIRE(k.size() == 1);
  CHECK(k[0][2] != 0);

  LinearSolver s(q, m);
  CHECK(s.rank() == 2);
  auto y = s.solve({1, 1});
  REQUIRE(y);
  CHECK(apply(q, m, *y) == Vec{1, 1});
}
