#include "doctest.h"

#include <random>

#include "difflie/matrix.hpp"

using namespace difflie;

namespace {

// 2x2 determinant; rank oracle for 2x2 matrices independent of elimination.
int rank2x2_oracle(const Matrix& m) {
  Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (sgn(det) != 0) return 2;
  return m.is_zero() ? 0 : 1;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-2/1")) == "-2");
  CHECK(to_string(parse_scalar("0/5")) == "0");
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("x"));
  CHECK_THROWS(parse_scalar("1/"));
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
  Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK(rank2x2_oracle(m) == 1);
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
  auto k = kernel_basis(Matrix::from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(sgn(k[0][0]) != 0);
}

TEST_CASE("homology_dim examples") {
  CHECK(homology_dim(Matrix(3, 3), Matrix(3, 3)) == 3);
  CHECK(homology_dim(Matrix::identity(3), Matrix(3, 3)) == 0);
  CHECK(homology_dim(Matrix::from_rows({{0, 0}}), Matrix::from_rows({{1}, {0}})) == 1);
  CHECK_THROWS_AS(homology_dim(Matrix::identity(2), Matrix::identity(2)), CompositionNonzero);
}

TEST_CASE("solve examples") {
  Vector b{1, 2, 3};
  CHECK(*solve(Matrix::identity(3), b) == b);
  CHECK(!solve(Matrix(2, 2), Vector{1, 0}).has_value());
  auto x = solve(Matrix::from_rows({{2, 0}, {0, 3}}), Vector{4, 6});
  REQUIRE(x.has_value());
  CHECK(*x == Vector{2, 2});
}

TEST_CASE("rank-nullity and solve soundness on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    Matrix m = random_matrix(rng, r, c);
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    Vector b = m * random_matrix(rng, c, 1).column(0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
  }
}
