#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace nccsim {

using complexd = std::complex<double>;

// Dense row-major complex matrix. Sizes in this library are tiny (at most
// 4x4), so everything is stored inline and copied freely.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<complexd>> rows);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  complexd& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const complexd& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<complexd>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  complexd trace() const;
  double frobenius_norm() const;

  // Equality is always tolerance-based; there is no operator==.
  bool approx_equal(const ComplexMatrix& other, double tol) const;
  double max_abs_diff(const ComplexMatrix& other) const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

 private:
  int rows_;
  int cols_;
  std::vector<complexd> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);

// Kronecker product; the left argument is the most significant factor, so
// tensor(A, B) acts on basis states |a b> with a indexing A's space.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigResult {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // columns, same order as values
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Throws std::invalid_argument if the input is not Hermitian
// within 1e-10, std::runtime_error if 100 sweeps do not converge.
EigResult eig_hermitian(const ComplexMatrix& m);

// Sum of |eigenvalue| over a Hermitian matrix (the trace norm).
double trace_norm_hermitian(const ComplexMatrix& m);

}  // namespace nccsim
