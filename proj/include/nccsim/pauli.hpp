#pragma once

#include <string>

#include "nccsim/complex_matrix.hpp"

namespace nccsim {

ComplexMatrix pauli_identity();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// 'I', 'X', 'Y' or 'Z'.
ComplexMatrix pauli_by_letter(char letter);

// Two-letter label, first letter acts on qubit 1, e.g. "ZX" -> Z (x) X.
ComplexMatrix two_qubit_pauli(const std::string& label);

// Column vectors (n x 1 matrices).
ComplexMatrix ket0();
ComplexMatrix ket1();
ComplexMatrix ket_plus();
ComplexMatrix ket_minus();

// |v><v| for a column vector v (not renormalized).
ComplexMatrix projector(const ComplexMatrix& v);

// Orthonormal qubit basis as a 2x2 unitary with columns
//   cos(theta)|0> + e^{i phi} sin(theta)|1>,
//   e^{-i phi} sin(theta)|0> - cos(theta)|1>.
ComplexMatrix basis_from_bloch_angles(double theta, double phi);

}  // namespace nccsim
