#pragma once

#include <cstdint>
#include <vector>

#include "nccsim/circuit.hpp"
#include "nccsim/density_matrix.hpp"
#include "nccsim/states.hpp"

namespace nccsim {

// Published constant for the two-factor map below: the largest value the
// product Tr(rho |00><00|) * Tr(rho |1+><1+|) can reach on classically
// correlated states. A negative map value therefore certifies nonclassical
// correlations.
inline constexpr double kDefaultWitnessC = 0.182138;

struct WitnessReport {
  double map_value = 0;
  double factor_00 = 0;
  double factor_1plus = 0;
  DetectionReadout polarizations;
  double c_used = 0;
  bool ncc_detected = false;
};

// c - Tr(rho |00><00|) * Tr(rho |1+><1+|), evaluated from the operators.
WitnessReport map_value_direct(const DensityMatrix& rho,
                               double c = kDefaultWitnessC);

// The same map evaluated from detection polarizations:
//   c - (1/16) (1 + z1 + z2 + z2') (1 - z1 + z2 - z2').
double map_value_polarization(double z1, double z2, double z2prime,
                              double c = kDefaultWitnessC);

// General product form c - prod_i Tr(rho A_i) for Hermitian factors.
double map_value_general(const DensityMatrix& rho,
                         const std::vector<ComplexMatrix>& operators, double c);

struct COptResult {
  double c_opt = 0;
  PccSpec argmax_spec;
  bool converged = false;
  long evaluations = 0;
};

// Rederives the map constant: maximizes the two-factor product over
// classically correlated states by multi-start derivative-free ascent on
// (basis angles, probability logits).
COptResult optimize_c(uint64_t seed = 1, int restarts = 64);

}  // namespace nccsim
