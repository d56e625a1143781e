#include <doctest.h>

#include <random>

#include "gridsat/boolmat.hpp"
#include "support.hpp"

using gridsat::BoolMatrix;
using testsupport::naive_product;
using testsupport::random_matrix;

namespace {
BoolMatrix from_rows(std::vector<std::vector<int>> rows) {
  BoolMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j] != 0);
  return m;
}
}  // namespace

TEST_CASE("product identity and zero cases") {
  std::mt19937_64 rng(7);
  BoolMatrix m = random_matrix(rng, 2, 5);
  CHECK(product(BoolMatrix::identity(2), m) == m);

  BoolMatrix zero(3, 3);
  BoolMatrix ones(3, 3, true);
  CHECK(product(zero, ones) == zero);
}

TEST_CASE("product matches the frozen permutation example") {
  BoolMatrix a = from_rows({{1, 0}, {0, 1}});
  BoolMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(product(a, b) == from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("product matches naive oracle on random matrices") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    std::size_t r = rng() % 7, k = rng() % 7, c = rng() % 7;
    BoolMatrix a = random_matrix(rng, r, k);
    BoolMatrix b = random_matrix(rng, k, c);
    CHECK(product(a, b) == naive_product(a, b));
  }
  // wider than one word, to cover the packed tail
  BoolMatrix a = random_matrix(rng, 5, 130);
  BoolMatrix b = random_matrix(rng, 130, 70);
  CHECK(product(a, b) == naive_product(a, b));
}

TEST_CASE("product is associative on conforming triples") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    BoolMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    BoolMatrix b = random_matrix(rng, a.cols(), 1 + rng() % 5);
    BoolMatrix c = random_matrix(rng, b.cols(), 1 + rng() % 5);
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }
}

TEST_CASE("transpose reverses products") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    BoolMatrix a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    BoolMatrix b = random_matrix(rng, a.cols(), 1 + rng() % 6);
    CHECK(transpose(product(a, b)) == product(transpose(b), transpose(a)));
  }
}

TEST_CASE("transpose examples") {
  std::mt19937_64 rng(17);
  BoolMatrix m = random_matrix(rng, 4, 9);
  CHECK(transpose(transpose(m)) == m);

  BoolMatrix row = random_matrix(rng, 1, 3);
  CHECK(transpose(row).rows() == 3);
  CHECK(transpose(row).cols() == 1);

  CHECK(transpose(from_rows({{1, 0}, {0, 0}})) == from_rows({{1, 0}, {0, 0}}));
}

TEST_CASE("conjoin examples and algebra") {
  BoolMatrix a = from_rows({{1, 0}, {1, 1}});
  BoolMatrix b = from_rows({{1, 1}, {0, 1}});
  CHECK(conjoin(a, b) == from_rows({{1, 0}, {0, 1}}));
  CHECK(conjoin(a, a) == a);
  CHECK(conjoin(a, BoolMatrix(2, 2, true)) == a);

  std::mt19937_64 rng(19);
  for (int round = 0; round < 50; ++round) {
    BoolMatrix x = random_matrix(rng, 3, 4);
    BoolMatrix y = random_matrix(rng, 3, 4);
    BoolMatrix z = random_matrix(rng, 3, 4);
    CHECK(conjoin(x, y) == conjoin(y, x));
    CHECK(conjoin(conjoin(x, y), z) == conjoin(x, conjoin(y, z)));
  }
}

TEST_CASE("product and conjoin are monotone under cell clearing") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    BoolMatrix a = random_matrix(rng, 4, 4);
    BoolMatrix b = random_matrix(rng, 4, 4);
    BoolMatrix lowered = a;
    // clear one random true cell, if any
    std::size_t i = rng() % 4, j = rng() % 4;
    lowered.set(i, j, false);
    auto leq = [](const BoolMatrix& x, const BoolMatrix& y) {
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
          if (x.get(r, c) && !y.get(r, c)) return false;
      return true;
    };
    CHECK(leq(product(lowered, b), product(a, b)));
    CHECK(leq(conjoin(lowered, b), conjoin(a, b)));
  }
}

TEST_CASE("is_all_false") {
  CHECK(is_all_false(BoolMatrix(4, 2)));
  BoolMatrix m(4, 2);
  m.set(2, 1, true);
  CHECK_FALSE(is_all_false(m));
  CHECK(is_all_false(BoolMatrix(0, 5)));
}

TEST_CASE("contract errors name both shapes") {
  BoolMatrix a(2, 3);
  BoolMatrix b(2, 3);
  CHECK_THROWS_WITH_AS(product(a, b), "product shape mismatch: 2x3 * 2x3",
                       std::invalid_argument);
  CHECK_THROWS_AS(conjoin(a, BoolMatrix(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(a.get(2, 0), std::out_of_range);
  CHECK_THROWS_AS(a.get(0, 3), std::out_of_range);
}

TEST_CASE("conjoin_in_place counts exact flips") {
  BoolMatrix a = from_rows({{1, 1}, {1, 1}});
  BoolMatrix b = from_rows({{1, 0}, {0, 1}});
  CHECK(a.conjoin_in_place(b) == 2);
  CHECK(a == b);
  CHECK(a.conjoin_in_place(b) == 0);
}
