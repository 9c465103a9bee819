#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qha/matrix.hpp"

using namespace qha;

namespace {

Matrix from_rows(const std::vector<std::vector<long long>>& rows) {
  Matrix m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = Scalar(rows[r][c]);
  return m;
}

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = Scalar((long long)(rng() % (2 * bound + 1)) - bound);
  return m;
}

}  // namespace

TEST_CASE("rref and rank") {
  Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(m.rank() == 2);
  Matrix id = Matrix::identity(4);
  CHECK(id.rank() == 4);
  CHECK(Matrix(3, 5).rank() == 0);
}

TEST_CASE("nullspace solves the homogeneous system") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    int rows = 1 + (int)(rng() % 6), cols = 1 + (int)(rng() % 6);
    Matrix m = random_matrix(rng, rows, cols, 4);
    Matrix ns = m.nullspace();
    CHECK(ns.cols() == cols - m.rank());
    CHECK((m * ns).is_zero());
  }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
  Matrix m = from_rows({{1, 1}, {0, 1}, {1, 2}});
  auto x = m.solve({Scalar(3), Scalar(1), Scalar(4)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(2));
  CHECK((*x)[1] == Scalar(1));
  CHECK_FALSE(m.solve({Scalar(1), Scalar(0), Scalar(0)}).has_value());
}

TEST_CASE("inverse") {
  Matrix m = from_rows({{2, 1}, {1, 1}});
  Matrix inv = m.inverse();
  CHECK(m * inv == Matrix::identity(2));
  CHECK(inv * m == Matrix::identity(2));
  CHECK_FALSE(from_rows({{1, 2}, {2, 4}}).is_invertible());
}

TEST_CASE("column span") {
  ColumnSpan s(3);
  CHECK(s.add({Scalar(1), Scalar(0), Scalar(1)}));
  CHECK(s.add({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK_FALSE(s.add({Scalar(1), Scalar(1), Scalar(2)}));
  CHECK(s.size() == 2);
  CHECK(s.contains({Scalar(2), Scalar(-1), Scalar(1)}));
  CHECK_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(1)}));
  auto co = s.coords({Scalar(3), Scalar(2), Scalar(5)});
  std::vector<Scalar> rebuilt(3);
  for (size_t i = 0; i < co.size(); ++i)
    for (int k = 0; k < 3; ++k) rebuilt[k] += co[i] * s.basis_vector((int)i)[k];
  CHECK(rebuilt[0] == Scalar(3));
  CHECK(rebuilt[1] == Scalar(2));
  CHECK(rebuilt[2] == Scalar(5));
  CHECK_THROWS(s.coords({Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("prime field elimination") {
  // rank over F_2 differs from rank over Q for a parity matrix
  Matrix m(2, 2);
  m.at(0, 0) = Scalar::mod_p(1, 2);
  m.at(0, 1) = Scalar::mod_p(1, 2);
  m.at(1, 0) = Scalar::mod_p(1, 2);
  m.at(1, 1) = Scalar::mod_p(3, 2);  // = 1 mod 2
  CHECK(m.rank() == 1);
}
