#include <doctest.h>

#include <random>
#include <set>

#include "hallwb/error.hpp"
#include "hallwb/field.hpp"
#include "hallwb/laurent.hpp"
#include "hallwb/limits.hpp"
#include "hallwb/matrix.hpp"
#include "support.hpp"

using namespace hallwb;

TEST_CASE("prime field inverses") {
  for (int p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (int a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.neg(0) == 0);
  }
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(11), InputError);
  CHECK_FALSE(is_supported_prime(9));
}

TEST_CASE("matrix arithmetic reduces mod p") {
  Matrix a = Matrix::from_rows(3, {{1, 2}, {2, 2}});
  Matrix b = Matrix::from_rows(3, {{2, 0}, {1, 1}});
  CHECK(a * b == Matrix::from_rows(3, {{1, 2}, {0, 2}}));
  CHECK(a + b == Matrix::from_rows(3, {{0, 2}, {0, 0}}));
  CHECK(a - a == Matrix(2, 2, 3));
  CHECK(a.to_string() == "[[1,2],[2,2]]");
  Matrix c(1, 1, 5);
  c.set(0, 0, -3);
  CHECK(c(0, 0) == 2);
}

TEST_CASE("rank, inverse and kernel on random matrices") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
      Matrix m = testing::random_matrix(rng, rows, cols, p);
      const int rk = rank(m);
      CHECK(rk == rank(m.transpose()));
      Subspace ker = kernel_basis(m);
      CHECK(ker.dim() == cols - rk);
      for (int i = 0; i < ker.dim(); ++i) {
        auto image = m.apply(ker.basis_vector(i));
        CHECK(std::all_of(image.begin(), image.end(), [](int x) { return x == 0; }));
      }
      CHECK(column_space(m).dim() == rk);
      if (rows == cols) {
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rk == rows));
        if (inv) CHECK(m * *inv == Matrix::identity(rows, p));
      }
    }
  }
}

TEST_CASE("nilpotent matrices and powers") {
  Matrix j = Matrix::from_rows(2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(is_nilpotent(j));
  CHECK(power(j, 2) == Matrix::from_rows(2, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(power(j, 3).is_zero());
  CHECK_FALSE(is_nilpotent(Matrix::identity(2, 3)));
  CHECK(power(j, 0) == Matrix::identity(3, 2));
}

TEST_CASE("subspace sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(11);
  for (int p : {2, 3}) {
    for (int trial = 0; trial < 80; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 5);
      Subspace a = Subspace::span(testing::random_matrix(rng, static_cast<int>(rng() % 4), n, p));
      Subspace b = Subspace::span(testing::random_matrix(rng, static_cast<int>(rng() % 4), n, p));
      Subspace s = sum(a, b), i = intersect(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      CHECK(s.contains(a));
      CHECK(s.contains(b));
      CHECK(a.contains(i));
      CHECK(b.contains(i));
      for (int k = 0; k < a.dim(); ++k) {
        auto v = a.basis_vector(k);
        auto coords = a.coordinates(v);
        CHECK(coords.size() == static_cast<std::size_t>(a.dim()));
        CHECK(coords[k] == 1);
      }
    }
  }
}

TEST_CASE("subspace RREF is canonical") {
  Subspace a = Subspace::span(Matrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}}));
  Subspace b = Subspace::span(Matrix::from_rows(2, {{1, 0, 1}, {1, 1, 0}}));
  CHECK(a == b);
  CHECK(a.pivots() == std::vector<int>{0, 1});
  CHECK(a.free_columns() == std::vector<int>{2});
  CHECK(Subspace::full(3, 2).dim() == 3);
  CHECK(Subspace(3, 2).dim() == 0);
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(3, 0, 5) == 1);
  CHECK(gaussian_binomial(3, 4, 5) == 0);
}

TEST_CASE("subspace enumeration matches the gaussian binomial and is duplicate free") {
  for (int p : {2, 3}) {
    for (int n = 0; n <= 4; ++n) {
      for (int k = 0; k <= n; ++k) {
        auto all = enumerate_subspaces(n, k, p);
        CHECK(all.size() == gaussian_binomial(n, k, p));
        std::set<Subspace> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& s : all) CHECK(s.dim() == k);
      }
    }
  }
  Limits tiny;
  tiny.enum_cap = 10;
  CHECK_THROWS_AS(enumerate_subspaces(4, 2, 2, tiny), CapacityError);
}

TEST_CASE("laurent polynomials") {
  LaurentPoly three = 3;
  LaurentPoly v = LaurentPoly::monomial(1, 1);
  CHECK((three * v).to_string() == "3v^1");
  CHECK((three * v).coefficient(1) == 3);
  CHECK((v - v).is_zero());
  CHECK((v - v).terms().empty());
  CHECK(LaurentPoly(0).is_zero());
  LaurentPoly w = LaurentPoly::monomial(2, 0) + LaurentPoly::monomial(1, -1);
  CHECK(w.to_string() == "2 + v^-1");
  CHECK((w * v) == LaurentPoly::monomial(2, 1) + LaurentPoly(1));
  CHECK(LaurentPoly(3).to_string() == "3");
}

TEST_CASE("checked_pow saturates") {
  CHECK(checked_pow(2, 10) == 1024);
  CHECK(checked_pow(7, 0) == 1);
  CHECK(checked_pow(2, 80) == UINT64_MAX);
}
