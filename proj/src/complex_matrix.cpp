#include "nccsim/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nccsim {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  data_.assign(static_cast<size_t>(rows) * cols, complexd{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<complexd>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("ragged initializer rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

complexd ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  complexd t{0.0, 0.0};
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("size mismatch in matrix comparison");
  double m = 0.0;
  for (size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  return (adjoint() * (*this)).approx_equal(identity(rows_), tol);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("size mismatch in matrix addition");
  ComplexMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("size mismatch in matrix subtraction");
  ComplexMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("size mismatch in matrix product");
  ComplexMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const complexd arc = a(r, k);
      if (arc == complexd{0.0, 0.0}) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += arc * b(k, c);
    }
  return out;
}

ComplexMatrix operator*(complexd s, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) {
  return complexd{s, 0.0} * m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const complexd v = a(ar, ac);
      if (v == complexd{0.0, 0.0}) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
    }
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const ComplexMatrix& input) {
  if (!input.is_hermitian(1e-10))
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

  const int n = input.rows();
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double tol = 1e-12 * std::max(1.0, input.frobenius_norm());

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const complexd b = a(p, q);
        const double absb = std::abs(b);
        if (absb <= 1e-300) continue;

        // Unitary that zeroes the (p, q) entry: a phase on index q that
        // makes the pivot real, then a real Jacobi rotation.
        const complexd phase = b / absb;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * absb);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complexd upq{s, 0.0};
        const complexd uqp = -s * std::conj(phase);
        const complexd uqq = c * std::conj(phase);

        // Columns p, q of A and V (right-multiplication by U).
        for (int i = 0; i < n; ++i) {
          const complexd ap = a(i, p), aq = a(i, q);
          a(i, p) = c * ap + uqp * aq;
          a(i, q) = upq * ap + uqq * aq;
          const complexd vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp + uqp * vq;
          v(i, q) = upq * vp + uqq * vq;
        }
        // Rows p, q of A (left-multiplication by U^dag).
        for (int j = 0; j < n; ++j) {
          const complexd ap = a(p, j), aq = a(q, j);
          a(p, j) = c * ap + std::conj(uqp) * aq;
          a(q, j) = std::conj(upq) * ap + std::conj(uqq) * aq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > tol)
    throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  EigResult res;
  res.values.resize(n);
  res.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    res.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
  }
  return res;
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  const EigResult eig = eig_hermitian(m);
  double s = 0.0;
  for (double lambda : eig.values) s += std::abs(lambda);
  return s;
}

}  // namespace nccsim
