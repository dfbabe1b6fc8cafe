#include "nccsim/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace nccsim {

namespace {
constexpr complexd kI{0.0, 1.0};
const double kInvSqrt2 = std::sqrt(0.5);
}  // namespace

ComplexMatrix pauli_identity() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix pauli_by_letter(char letter) {
  switch (letter) {
    case 'I': return pauli_identity();
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
    default: throw std::invalid_argument("unknown Pauli letter");
  }
}

ComplexMatrix two_qubit_pauli(const std::string& label) {
  if (label.size() != 2)
    throw std::invalid_argument("Pauli label must have two letters");
  return tensor(pauli_by_letter(label[0]), pauli_by_letter(label[1]));
}

ComplexMatrix ket0() { return {{1.0}, {0.0}}; }

ComplexMatrix ket1() { return {{0.0}, {1.0}}; }

ComplexMatrix ket_plus() { return {{kInvSqrt2}, {kInvSqrt2}}; }

ComplexMatrix ket_minus() { return {{kInvSqrt2}, {-kInvSqrt2}}; }

ComplexMatrix projector(const ComplexMatrix& v) {
  if (v.cols() != 1) throw std::invalid_argument("projector needs a column vector");
  return v * v.adjoint();
}

ComplexMatrix basis_from_bloch_angles(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const complexd e_plus = std::exp(kI * phi);
  const complexd e_minus = std::exp(-kI * phi);
  ComplexMatrix b(2, 2);
  b(0, 0) = c;
  b(1, 0) = e_plus * s;
  b(0, 1) = e_minus * s;
  b(1, 1) = -c;
  return b;
}

}  // namespace nccsim
