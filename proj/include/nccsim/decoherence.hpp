#pragma once

#include <optional>
#include <vector>

#include "nccsim/density_matrix.hpp"
#include "nccsim/witness.hpp"

namespace nccsim {

// Relaxation parameters for the two qubits: longitudinal t1 and transverse
// t2 in seconds, plus an optional scalar coupling in Hz that is only
// applied when include_j is set.
struct ChannelSpec {
  double t1_q1 = 0;
  double t2_q1 = 0;
  double t1_q2 = 0;
  double t2_q2 = 0;
  double j_coupling = 0;  // Hz
  bool include_j = false;

  // All times must be positive and each qubit needs a nonnegative pure
  // dephasing rate 1/t2 - 1/(2 t1). Throws std::invalid_argument.
  void validate() const;
};

// The four Kraus operators of one qubit's channel for duration t:
// amplitude damping toward |0> at rate 1/t1 composed with pure dephasing
// at rate 1/t2 - 1/(2 t1).
std::vector<ComplexMatrix> single_qubit_kraus(const ChannelSpec& spec,
                                              int qubit, double t);

// Fixed order: J-coupling unitary (when enabled), then damping, then
// dephasing, qubits independent.
DensityMatrix evolve(const DensityMatrix& rho, const ChannelSpec& spec,
                     double t);

// First time the map value of the evolving nonclassical state becomes
// nonnegative, located by coarse scan plus bisection down to `resolution`;
// nullopt when the map stays negative over the scan horizon.
std::optional<double> mv_crossing_time(const ChannelSpec& spec, double c,
                                       double resolution);

struct DynamicsPoint {
  double time = 0;
  double map_value = 0;
  double discord = 0;  // bits
  double fidelity_vs_ideal = 0;
  DensityMatrix state;
};

// Evolution of the nonclassical state over the given times. The discord
// column measures the qubit whose conditional states are nonorthogonal
// (qubit 2 = B by default); measuring A gives identically zero for this
// family of states.
std::vector<DynamicsPoint> dynamics_sweep(const ChannelSpec& spec,
                                          const std::vector<double>& schedule,
                                          Subsystem discord_measured = Subsystem::B,
                                          double c = kDefaultWitnessC);

// The 16-point acquisition grid 2n/J for
// n in {0,1,3,5,7,9,11,13,15,20,25,30,35,40,45,50}.
std::vector<double> sampling_schedule(double j_coupling);

}  // namespace nccsim
