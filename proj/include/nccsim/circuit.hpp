#pragma once

#include <array>
#include <string>
#include <vector>

#include "nccsim/complex_matrix.hpp"
#include "nccsim/density_matrix.hpp"

namespace nccsim {

struct Gate {
  std::string name;
  ComplexMatrix unitary;
  int control = 0;  // qubit labels, 0 when not applicable
  int target = 0;

  // Throws std::invalid_argument unless unitary within 1e-10.
  Gate(std::string name, ComplexMatrix u, int control, int target);
};

// Controlled-Hadamard: Hadamard on qubit 2 when qubit 1 is |1>, identity
// when it is |0>.
Gate ch_gate();

// CNOT with control qubit 1, target qubit 2.
Gate cnot_gate();

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate);

// <Z> of the chosen qubit (1 or 2); |0> has polarization +1.
double polarization(const DensityMatrix& rho, int qubit);

enum class PauliAxis { I = 0, X = 1, Y = 2, Z = 3 };

// Deviation state expressed over the 16 operators t_a (x) t_b with
// t_I = identity and t_{x,y,z} = sigma/2 (spin operators I_kalpha).
// A single-spin term I_2z is coefficient 1 on (I, Z); a two-spin product
// term 2 I_1z I_2x with weight w shows up as coefficient 2w on (Z, X).
struct ProductOperatorState {
  std::array<double, 16> coeff{};  // index 4*axis_q1 + axis_q2

  double& at(PauliAxis q1, PauliAxis q2);
  double at(PauliAxis q1, PauliAxis q2) const;

  ComplexMatrix deviation_matrix() const;
  static ProductOperatorState from_deviation_matrix(const ComplexMatrix& m);

  bool approx_equal(const ProductOperatorState& other, double tol) const;
};

// Rotation pulse exp(-i angle I_axis) on one spin (NMR convention: a +90x
// pulse takes I_z to -I_y).
ProductOperatorState apply_pulse(const ProductOperatorState& s, int qubit,
                                 PauliAxis axis, double angle);

// Scalar-coupling evolution exp(-i 2 pi J t I_1z I_2z) for dimensionless
// j_times_t = J * t.
ProductOperatorState apply_j_evolution(const ProductOperatorState& s,
                                       double j_times_t);

// Pulsed-field-gradient spatial averaging: drops every term with a
// transverse (x or y) qubit-1 factor.
ProductOperatorState apply_crusher_q1(const ProductOperatorState& s);

struct PreparationStep {
  std::string label;
  ProductOperatorState state;
};

// The pulse sequence that turns the thermal deviation I_1z + I_2z into the
// deviation of the nonclassically correlated target state, one entry per
// stage starting from the thermal state.
std::vector<PreparationStep> ncc_preparation_chain();

ProductOperatorState prepare_ncc_product_operator();

struct DetectionReadout {
  double z1 = 0;
  double z2 = 0;
  double z2prime = 0;
};

// Single-sequence detection: apply CH and read both polarizations, then
// apply CNOT to that same evolved state and read qubit 2 again.
DetectionReadout detection_readout(const DensityMatrix& rho);

}  // namespace nccsim
