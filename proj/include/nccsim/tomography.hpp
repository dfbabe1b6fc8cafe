#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nccsim/density_matrix.hpp"
#include "nccsim/witness.hpp"

namespace nccsim {

// The 15 two-qubit Pauli labels (identity excluded), fixed order.
const std::array<std::string, 15>& tomography_labels();

struct TomographyRecord {
  std::vector<std::string> labels;
  std::vector<double> values;  // expectations in [-1, 1]
  double noise_sigma = 0;
  uint64_t seed = 0;

  // Throws std::invalid_argument on unknown/duplicate labels, size
  // mismatch, out-of-range values or negative noise.
  void validate() const;
};

// Simulated tomography: Tr(rho P) per label plus seeded Gaussian noise of
// the given sigma, clamped to the physical range [-1, 1].
TomographyRecord measure_all(const DensityMatrix& rho, double noise_sigma,
                             uint64_t seed);

// Linear inversion I/4 + sum_i v_i P_i / 4 followed by projection to the
// nearest (Frobenius) unit-trace positive matrix: the eigenvalues are
// projected onto the probability simplex, eigenvectors kept.
DensityMatrix reconstruct(const TomographyRecord& record);

// Map value of the reconstructed state.
double mv_from_tomography(const TomographyRecord& record,
                          double c = kDefaultWitnessC);

}  // namespace nccsim
