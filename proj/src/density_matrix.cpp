#include "nccsim/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nccsim {

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4))
    throw std::invalid_argument("density matrix must be 2x2 or 4x4");
  if (!m_.is_hermitian(kHermitianTol))
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m_.trace() - complexd{1.0, 0.0}) > kTraceTol)
    throw std::invalid_argument("density matrix trace is not 1");
  const EigResult eig = eig_hermitian(hermitian_part(m_));
  if (eig.values.back() < kEigenvalueFloor)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const std::vector<complexd>& amplitudes) {
  const int dim = static_cast<int>(amplitudes.size());
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("pure state must have 2 or 4 amplitudes");
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 <= 0.0) throw std::invalid_argument("zero state vector");
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
  return DensityMatrix(m);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4)
    throw std::invalid_argument("partial_trace needs a two-qubit state");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(2, 2);
  if (keep == Subsystem::A) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
  } else {
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        out(k, l) = m(0 + k, 0 + l) + m(2 + k, 2 + l);
  }
  return DensityMatrix(out);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigResult eig = eig_hermitian(rho.matrix());
  double s = 0.0;
  for (double lambda : eig.values) {
    const double p = std::clamp(lambda, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");

  // Nonzero eigenvalues of sqrt(rho) sigma sqrt(rho), computed inside the
  // range of rho: restricting to the rank-r subspace keeps the null space
  // from contributing eigenvalue noise, which sqrt would amplify
  // (sqrt(1e-15) is already 3e-8).
  const EigResult eig_rho = eig_hermitian(rho.matrix());
  const int n = rho.dim();
  const double rank_floor = 1e-12 * std::max(eig_rho.values[0], 0.0);
  int rank = 0;
  while (rank < n && eig_rho.values[rank] > rank_floor) ++rank;

  // Columns sqrt(lambda_k) v_k, so inner = W^dag sigma W below.
  ComplexMatrix w(n, rank);
  for (int k = 0; k < rank; ++k) {
    const double root = std::sqrt(eig_rho.values[k]);
    for (int i = 0; i < n; ++i) w(i, k) = root * eig_rho.vectors(i, k);
  }
  ComplexMatrix inner = w.adjoint() * sigma.matrix() * w;
  // Hermitize against roundoff before decomposing.
  for (int r = 0; r < rank; ++r)
    for (int c = r; c < rank; ++c) {
      const complexd avg = 0.5 * (inner(r, c) + std::conj(inner(c, r)));
      inner(r, c) = avg;
      inner(c, r) = std::conj(avg);
    }
  const EigResult eig = eig_hermitian(inner);
  const double noise_floor = 1e-14 * std::max(eig.values[0], 0.0);
  double tr = 0.0;
  for (double lambda : eig.values)
    if (lambda > noise_floor) tr += std::sqrt(lambda);
  return std::clamp(tr * tr, 0.0, 1.0);
}

}  // namespace nccsim
