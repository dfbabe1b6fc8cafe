#include "nccsim/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "nccsim/pauli.hpp"

namespace nccsim {

namespace {
constexpr complexd kI{0.0, 1.0};
const double kInvSqrt2 = std::sqrt(0.5);
}  // namespace

Gate::Gate(std::string name_in, ComplexMatrix u, int control_in, int target_in)
    : name(std::move(name_in)),
      unitary(std::move(u)),
      control(control_in),
      target(target_in) {
  if (!unitary.is_unitary(1e-10))
    throw std::invalid_argument("gate matrix is not unitary: " + name);
}

Gate ch_gate() {
  ComplexMatrix u = ComplexMatrix::identity(4);
  u(2, 2) = kInvSqrt2;
  u(2, 3) = kInvSqrt2;
  u(3, 2) = kInvSqrt2;
  u(3, 3) = -kInvSqrt2;
  return Gate("CH", u, 1, 2);
}

Gate cnot_gate() {
  ComplexMatrix u = ComplexMatrix::identity(4);
  u(2, 2) = 0.0;
  u(3, 3) = 0.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return Gate("CNOT", u, 1, 2);
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  if (gate.unitary.rows() != rho.dim())
    throw std::invalid_argument("gate/state dimension mismatch");
  return DensityMatrix(gate.unitary * rho.matrix() * gate.unitary.adjoint());
}

double polarization(const DensityMatrix& rho, int qubit) {
  if (qubit != 1 && qubit != 2)
    throw std::invalid_argument("qubit label must be 1 or 2");
  const ComplexMatrix& m = rho.matrix();
  if (rho.dim() == 2) return (m(0, 0) - m(1, 1)).real();
  double value = 0.0;
  for (int idx = 0; idx < 4; ++idx) {
    const int bit = qubit == 1 ? (idx >> 1) : (idx & 1);
    value += (bit == 0 ? 1.0 : -1.0) * m(idx, idx).real();
  }
  return value;
}

namespace {

// t_I = identity, t_{x,y,z} = sigma/2.
const ComplexMatrix& spin_factor(PauliAxis axis) {
  static const ComplexMatrix ops[4] = {
      pauli_identity(), 0.5 * pauli_x(), 0.5 * pauli_y(), 0.5 * pauli_z()};
  return ops[static_cast<int>(axis)];
}

const ComplexMatrix& basis_op(int q1, int q2) {
  static ComplexMatrix cache[16];
  static bool ready = false;
  if (!ready) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        cache[4 * a + b] = tensor(spin_factor(static_cast<PauliAxis>(a)),
                                  spin_factor(static_cast<PauliAxis>(b)));
    ready = true;
  }
  return cache[4 * q1 + q2];
}

double basis_norm2(int q1, int q2) {
  // Tr(t_I t_I) = 2, Tr(t_a t_a) = 1/2 for a in {x, y, z}.
  const double n1 = q1 == 0 ? 2.0 : 0.5;
  const double n2 = q2 == 0 ? 2.0 : 0.5;
  return n1 * n2;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

}  // namespace

double& ProductOperatorState::at(PauliAxis q1, PauliAxis q2) {
  return coeff[4 * static_cast<int>(q1) + static_cast<int>(q2)];
}

double ProductOperatorState::at(PauliAxis q1, PauliAxis q2) const {
  return coeff[4 * static_cast<int>(q1) + static_cast<int>(q2)];
}

ComplexMatrix ProductOperatorState::deviation_matrix() const {
  ComplexMatrix m(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double c = coeff[4 * a + b];
      if (c != 0.0) m = m + c * basis_op(a, b);
    }
  return m;
}

ProductOperatorState ProductOperatorState::from_deviation_matrix(
    const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4 || !m.is_hermitian(1e-9))
    throw std::invalid_argument("deviation matrix must be 4x4 Hermitian");
  ProductOperatorState s;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      s.coeff[4 * a + b] =
          (basis_op(a, b) * m).trace().real() / basis_norm2(a, b);
  return s;
}

bool ProductOperatorState::approx_equal(const ProductOperatorState& other,
                                        double tol) const {
  for (int i = 0; i < 16; ++i)
    if (std::abs(coeff[i] - other.coeff[i]) > tol) return false;
  return true;
}

ProductOperatorState apply_pulse(const ProductOperatorState& s, int qubit,
                                 PauliAxis axis, double angle) {
  if (qubit != 1 && qubit != 2)
    throw std::invalid_argument("qubit label must be 1 or 2");
  if (axis == PauliAxis::I)
    throw std::invalid_argument("pulse axis must be X, Y or Z");
  // exp(-i angle sigma/2) on the addressed spin.
  const ComplexMatrix sigma = 2.0 * spin_factor(axis);
  const double half = 0.5 * angle;
  const ComplexMatrix u2 =
      std::cos(half) * pauli_identity() + (-kI * std::sin(half)) * sigma;
  const ComplexMatrix u = qubit == 1 ? tensor(u2, pauli_identity())
                                     : tensor(pauli_identity(), u2);
  return ProductOperatorState::from_deviation_matrix(
      conjugate(u, s.deviation_matrix()));
}

ProductOperatorState apply_j_evolution(const ProductOperatorState& s,
                                       double j_times_t) {
  // exp(-i 2 pi J t I_1z I_2z) is diagonal with phases -+ pi J t / 2.
  const double half = 0.5 * 3.14159265358979323846 * j_times_t;
  ComplexMatrix u(4, 4);
  const complexd same = std::exp(-kI * half);
  const complexd diff = std::exp(kI * half);
  u(0, 0) = same;
  u(1, 1) = diff;
  u(2, 2) = diff;
  u(3, 3) = same;
  return ProductOperatorState::from_deviation_matrix(
      conjugate(u, s.deviation_matrix()));
}

ProductOperatorState apply_crusher_q1(const ProductOperatorState& s) {
  ProductOperatorState out = s;
  for (int b = 0; b < 4; ++b) {
    out.coeff[4 * static_cast<int>(PauliAxis::X) + b] = 0.0;
    out.coeff[4 * static_cast<int>(PauliAxis::Y) + b] = 0.0;
  }
  return out;
}

std::vector<PreparationStep> ncc_preparation_chain() {
  const double pi = 3.14159265358979323846;
  std::vector<PreparationStep> steps;

  ProductOperatorState thermal;
  thermal.at(PauliAxis::Z, PauliAxis::I) = 1.0;
  thermal.at(PauliAxis::I, PauliAxis::Z) = 1.0;
  steps.push_back({"thermal", thermal});

  steps.push_back(
      {"90x_q1", apply_pulse(steps.back().state, 1, PauliAxis::X, pi / 2)});
  steps.push_back({"crusher", apply_crusher_q1(steps.back().state)});
  steps.push_back(
      {"90y_q2", apply_pulse(steps.back().state, 2, PauliAxis::Y, pi / 2)});
  steps.push_back({"j_quarter", apply_j_evolution(steps.back().state, 0.25)});
  steps.push_back(
      {"90x_q2", apply_pulse(steps.back().state, 2, PauliAxis::X, pi / 2)});
  steps.push_back(
      {"m45y_q2", apply_pulse(steps.back().state, 2, PauliAxis::Y, -pi / 4)});
  return steps;
}

ProductOperatorState prepare_ncc_product_operator() {
  return ncc_preparation_chain().back().state;
}

DetectionReadout detection_readout(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("detection readout needs a two-qubit state");
  const DensityMatrix after_ch = apply_gate(rho, ch_gate());
  DetectionReadout r;
  r.z1 = polarization(after_ch, 1);
  r.z2 = polarization(after_ch, 2);
  const DensityMatrix after_cnot = apply_gate(after_ch, cnot_gate());
  r.z2prime = polarization(after_cnot, 2);
  return r;
}

}  // namespace nccsim
