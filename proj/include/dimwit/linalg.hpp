#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dimwit/errors.hpp"

namespace dimwit {

using cplx = std::complex<double>;

// Dense row-major matrix. Everything in this project is small (at most
// 37x37), so no blocking, no views, just plain storage.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != m.cols()) throw StructuralError("ragged matrix literal");
      std::size_t j = 0;
      for (const auto& v : r) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T aij = a(i, l);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aij * b(l, j);
      }
    return c;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using Mat = Matrix<double>;
using CMat = Matrix<cplx>;

// Determinant by LU with partial pivoting (in-place on a copy).
double lu_det(Mat a);

// Determinant of the submatrix with two rows and two columns removed.
double minor2_det(const Mat& a, std::size_t r0, std::size_t r1, std::size_t c0,
                  std::size_t c1);

// Determinant of the submatrix with one row and one column removed.
double minor1_det(const Mat& a, std::size_t r, std::size_t c);

// Adjugate (transposed cofactor matrix), each cofactor by LU on the minor.
Mat adjugate_mat(const Mat& a);

// conj(a)^T
CMat dagger(const CMat& a);

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// ascending order. Used only for invariant validation of small operators.
std::vector<double> hermitian_eigenvalues(CMat a);

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);
double norm(const std::vector<cplx>& a);

// Modified Gram-Schmidt with a re-orthogonalization pass. Preserves the
// direction of the first vector; throws DegenerateInputError when a vector's
// residual norm falls below dep_tol before renormalization.
std::vector<std::vector<cplx>> gram_schmidt_vectors(
    std::vector<std::vector<cplx>> vs, double dep_tol = 1e-8);

}  // namespace dimwit
