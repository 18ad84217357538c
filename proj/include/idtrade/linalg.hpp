#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace idt {

using Complex = std::complex<double>;

/// Dense complex column vector. Used for one- and two-qubit kets.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  std::size_t dim() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }

  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  Complex& operator[](std::size_t i) { return entries_[i]; }

  double squared_norm() const;
  double norm() const;

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> entries_;
};

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Complex s, const ComplexVector& v);

/// <a|b>, antilinear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

/// Kronecker product of two kets, first factor most significant.
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// Dense row-major complex matrix.
///
/// Sizes in this library are 2x2 and 4x4, so storage is a plain vector and
/// every operation is a straightforward loop.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument unless entries.size() == rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  /// |a><b|
  static ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const Complex> entries() const { return entries_; }

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// Kronecker product; entry (i*b.rows+k, j*b.cols+l) = a(i,j) * b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);
/// Throws std::invalid_argument on dimension mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// True when the Hermitian part of m has no eigenvalue below -tol.
///
/// Decides by attempting a Cholesky factorization of m + tol*I, which
/// succeeds exactly when that shifted matrix is positive definite.
bool is_positive_semidefinite(const ComplexMatrix& m, double tol);

}  // namespace idt
