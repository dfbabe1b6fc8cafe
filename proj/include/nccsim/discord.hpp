#pragma once

#include <stdexcept>
#include <utility>

#include "nccsim/complex_matrix.hpp"
#include "nccsim/density_matrix.hpp"

namespace nccsim {

// Local projective measurement {|v1><v1|, |v2><v2|} with
//   |v1> = cos(theta)|0> + e^{i phi} sin(theta)|1>,
//   |v2> = e^{-i phi} sin(theta)|0> - cos(theta)|1>.
// theta in [0, pi/2] and phi in [0, 2 pi) cover every such pair.
struct MeasurementBasis {
  double theta = 0;
  double phi = 0;

  ComplexMatrix projector(int outcome) const;  // outcome 1 or 2
};

struct ZeroProbabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const DensityMatrix& rho);

// Normalized (Pi (x) I) rho (Pi (x) I) / p and its probability p; the
// projector acts on the measured subsystem. Throws ZeroProbabilityError
// when p < 1e-12, which callers treat as a zero-weight branch.
std::pair<DensityMatrix, double> post_measurement_state(
    const DensityMatrix& rho, const MeasurementBasis& basis, int outcome,
    Subsystem measured);

// sum_j p_j S(unmeasured subsystem | outcome j), in bits.
double conditional_entropy(const DensityMatrix& rho,
                           const MeasurementBasis& basis, Subsystem measured);

struct DiscordResult {
  double discord = 0;
  MeasurementBasis optimal_basis;
  double mutual_information = 0;
  double classical_correlations = 0;
  double conditional_entropy_min = 0;
  Subsystem measured = Subsystem::A;
};

// Quantum discord with measurement on one subsystem: the entropic
// difference S(measured reduced) - S(joint) + min over bases of the
// conditional entropy. The minimization runs a coarse grid over
// (theta, phi) followed by simplex refinement from the best grid points.
DiscordResult discord(const DensityMatrix& rho,
                      Subsystem measured = Subsystem::A, int grid_points = 61);

}  // namespace nccsim
