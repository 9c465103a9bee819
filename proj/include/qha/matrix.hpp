#pragma once
#include <optional>
#include <vector>

#include "qha/scalar.hpp"

namespace qha {

// Dense matrix over an exact field. Vectors are columns; a linear map
// U -> V is stored as a (dim V) x (dim U) matrix acting on the left.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[(size_t)r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[(size_t)r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  Matrix transposed() const;
  bool is_zero() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::vector<Scalar> column(int c) const;
  void set_column(int c, const std::vector<Scalar>& v);

  // In-place reduced row echelon form; returns pivot column indices in order.
  std::vector<int> rref();
  int rank() const;
  // Columns form an echelonized basis of { x : Ax = 0 }.
  Matrix nullspace() const;
  // One solution of Ax = b, if consistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  bool is_invertible() const;
  Matrix inverse() const;

  // Stack blocks: [this | o] and [this ; o].
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  void paste(int r0, int c0, const Matrix& block);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Incrementally maintained echelonized column span; the engine's workhorse
// for submodule closures and quotient bases.
class ColumnSpan {
 public:
  explicit ColumnSpan(int dim) : dim_(dim) {}

  // Reduce v against the span; if independent, absorb it and return true.
  bool add(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  // Coordinates of v in the stored basis; throws if v is outside the span.
  std::vector<Scalar> coords(std::vector<Scalar> v) const;
  int size() const { return (int)basis_.size(); }
  int dim() const { return dim_; }
  const std::vector<Scalar>& basis_vector(int i) const { return basis_[i]; }
  // dim x size matrix whose columns are the basis.
  Matrix basis_matrix() const;

 private:
  void reduce(std::vector<Scalar>& v, std::vector<Scalar>* coeffs) const;

  int dim_;
  std::vector<std::vector<Scalar>> basis_;  // echelonized: distinct lead rows
  std::vector<int> lead_;
};

}  // namespace qha
