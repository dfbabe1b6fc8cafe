#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "nccsim/complex_matrix.hpp"
#include "nccsim/density_matrix.hpp"
#include "nccsim/rng.hpp"

namespace nccsim {

// The nonclassically correlated two-qubit state
//   1/2 |00><00| + 1/2 |1+><1+|.
DensityMatrix sigma_ncc();

// (|00> + |11>)/sqrt(2) as a density matrix.
DensityMatrix bell_phi_plus();

// A state with purely classical correlations: a probability table over a
// product of local orthonormal bases,
//   rho = sum_ij p_ij |a_i><a_i| (x) |b_j><b_j|.
struct PccSpec {
  ComplexMatrix basis_a;               // columns |a_0>, |a_1>
  ComplexMatrix basis_b;               // columns |b_0>, |b_1>
  std::array<std::array<double, 2>, 2> probs{};

  // Throws std::invalid_argument unless both bases are 2x2 unitaries
  // (within 1e-10) and the table is nonnegative with sum 1 (within 1e-12).
  void validate() const;
};

DensityMatrix pcc_state(const PccSpec& spec);

// Random full-support state via the Ginibre construction G G^dag / Tr.
DensityMatrix random_density(int dim, uint64_t seed);

// Haar-like random unitary from Gram-Schmidt on a Gaussian matrix.
ComplexMatrix random_unitary(int dim, SeededRng& rng);

// Random classically correlated state: random local bases, probabilities
// uniform on the simplex (normalized exponentials).
std::pair<PccSpec, DensityMatrix> random_pcc(uint64_t seed);

}  // namespace nccsim
