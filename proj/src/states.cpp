#include "nccsim/states.hpp"

#include <cmath>
#include <stdexcept>

#include "nccsim/pauli.hpp"

namespace nccsim {

DensityMatrix sigma_ncc() {
  // Entries of 1/2 |00><00| + 1/2 |1+><1+| written out; they are exact
  // dyadics, which squaring sqrt(1/2) amplitudes would not give.
  ComplexMatrix m(4, 4);
  m(0, 0) = 0.5;
  m(2, 2) = 0.25;
  m(2, 3) = 0.25;
  m(3, 2) = 0.25;
  m(3, 3) = 0.25;
  return DensityMatrix(m);
}

DensityMatrix bell_phi_plus() {
  const double a = std::sqrt(0.5);
  return DensityMatrix::from_pure({a, 0.0, 0.0, a});
}

void PccSpec::validate() const {
  if (!basis_a.is_unitary(1e-10) || basis_a.rows() != 2)
    throw std::invalid_argument("pcc basis A is not a 2x2 unitary");
  if (!basis_b.is_unitary(1e-10) || basis_b.rows() != 2)
    throw std::invalid_argument("pcc basis B is not a 2x2 unitary");
  double sum = 0.0;
  for (const auto& row : probs)
    for (double p : row) {
      if (p < 0.0) throw std::invalid_argument("pcc probability is negative");
      sum += p;
    }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("pcc probabilities do not sum to 1");
}

DensityMatrix pcc_state(const PccSpec& spec) {
  spec.validate();
  ComplexMatrix m(4, 4);
  for (int i = 0; i < 2; ++i) {
    ComplexMatrix a(2, 1);
    a(0, 0) = spec.basis_a(0, i);
    a(1, 0) = spec.basis_a(1, i);
    const ComplexMatrix pa = projector(a);
    for (int j = 0; j < 2; ++j) {
      const double p = spec.probs[i][j];
      if (p == 0.0) continue;
      ComplexMatrix b(2, 1);
      b(0, 0) = spec.basis_b(0, j);
      b(1, 0) = spec.basis_b(1, j);
      m = m + p * tensor(pa, projector(b));
    }
  }
  return DensityMatrix(m);
}

DensityMatrix random_density(int dim, uint64_t seed) {
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("random_density: dim must be 2 or 4");
  SeededRng rng(seed);
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = rng.gaussian_complex();
  ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  return DensityMatrix((1.0 / tr) * m);
}

ComplexMatrix random_unitary(int dim, SeededRng& rng) {
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = rng.gaussian_complex();
  // Gram-Schmidt over columns with the diagonal phase fixed, which makes
  // the distribution Haar.
  for (int c = 0; c < dim; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      complexd overlap{0.0, 0.0};
      for (int r = 0; r < dim; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
      for (int r = 0; r < dim; ++r) g(r, c) -= overlap * g(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < dim; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw std::runtime_error("degenerate Gaussian matrix");
    for (int r = 0; r < dim; ++r) g(r, c) = g(r, c) * (1.0 / norm);
    const complexd diag = g(c, c);
    const double dabs = std::abs(diag);
    if (dabs > 1e-15) {
      const complexd phase = std::conj(diag) / dabs;
      for (int r = 0; r < dim; ++r) g(r, c) *= phase;
    }
  }
  return g;
}

std::pair<PccSpec, DensityMatrix> random_pcc(uint64_t seed) {
  SeededRng rng(seed);
  PccSpec spec;
  spec.basis_a = random_unitary(2, rng);
  spec.basis_b = random_unitary(2, rng);
  double weights[4];
  double sum = 0.0;
  for (double& w : weights) {
    const double u = std::max(1.0 - rng.uniform(), 0x1.0p-53);
    w = -std::log(u);
    sum += w;
  }
  spec.probs[0][0] = weights[0] / sum;
  spec.probs[0][1] = weights[1] / sum;
  spec.probs[1][0] = weights[2] / sum;
  spec.probs[1][1] = weights[3] / sum;
  // Absorb rounding so the table sums to 1 exactly.
  spec.probs[1][1] = 1.0 - spec.probs[0][0] - spec.probs[0][1] - spec.probs[1][0];
  return {spec, pcc_state(spec)};
}

}  // namespace nccsim
