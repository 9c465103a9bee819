#include "qha/matrix.hpp"

#include "qha/error.hpp"

namespace qha {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix diff shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if ((int)v.size() != cols_) throw InternalError("apply shape mismatch");
  std::vector<Scalar> out(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r) {
      const Scalar& a = at(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

std::vector<Scalar> Matrix::column(int c) const {
  std::vector<Scalar> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::set_column(int c, const std::vector<Scalar>& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pr = -1;
    for (int r = row; r < rows_; ++r)
      if (!at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < cols_; ++c) std::swap(at(row, c), at(pr, c));
    Scalar inv = at(row, col).inverse();
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      Scalar f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return (int)copy.rref().size();
}

Matrix Matrix::nullspace() const {
  Matrix copy = *this;
  std::vector<int> piv = copy.rref();
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Matrix out(cols_, (int)free_cols.size());
  for (int k = 0; k < (int)free_cols.size(); ++k) {
    int f = free_cols[k];
    out.at(f, k) = Scalar(1);
    for (int i = 0; i < (int)piv.size(); ++i) out.at(piv[i], k) = -copy.at(i, f);
  }
  return out;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  if ((int)b.size() != rows_) throw InternalError("solve shape mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<int> piv = aug.rref();
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_);
  for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = aug.at(i, cols_);
  return x;
}

bool Matrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InternalError("inverse of non-square matrix");
  Matrix aug = hcat(identity(rows_));
  std::vector<int> piv = aug.rref();
  if ((int)piv.size() != rows_) throw InternalError("inverse of singular matrix");
  Matrix out(rows_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < rows_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
  return out;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw InternalError("hcat shape mismatch");
  Matrix out(rows_, cols_ + o.cols_);
  out.paste(0, 0, *this);
  out.paste(0, cols_, o);
  return out;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw InternalError("vcat shape mismatch");
  Matrix out(rows_ + o.rows_, cols_);
  out.paste(0, 0, *this);
  out.paste(rows_, 0, o);
  return out;
}

void Matrix::paste(int r0, int c0, const Matrix& block) {
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c) at(r0 + r, c0 + c) = block.at(r, c);
}

void ColumnSpan::reduce(std::vector<Scalar>& v, std::vector<Scalar>* coeffs) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& lead = v[lead_[i]];
    if (lead.is_zero()) continue;
    Scalar f = lead / basis_[i][lead_[i]];
    for (int k = 0; k < dim_; ++k)
      if (!basis_[i][k].is_zero()) v[k] -= f * basis_[i][k];
    if (coeffs) (*coeffs)[i] = f;
  }
}

bool ColumnSpan::add(std::vector<Scalar> v) {
  if ((int)v.size() != dim_) throw InternalError("span dim mismatch");
  reduce(v, nullptr);
  int lead = -1;
  for (int k = 0; k < dim_; ++k)
    if (!v[k].is_zero()) {
      lead = k;
      break;
    }
  if (lead < 0) return false;
  basis_.push_back(std::move(v));
  lead_.push_back(lead);
  return true;
}

bool ColumnSpan::contains(std::vector<Scalar> v) const {
  reduce(v, nullptr);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> ColumnSpan::coords(std::vector<Scalar> v) const {
  std::vector<Scalar> out(basis_.size());
  reduce(v, &out);
  for (const auto& x : v)
    if (!x.is_zero()) throw InternalError("vector outside span");
  return out;
}

Matrix ColumnSpan::basis_matrix() const {
  Matrix out(dim_, (int)basis_.size());
  for (int c = 0; c < (int)basis_.size(); ++c) out.set_column(c, basis_[c]);
  return out;
}

}  // namespace qha
