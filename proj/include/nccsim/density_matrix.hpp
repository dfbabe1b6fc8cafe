#pragma once

#include <vector>

#include "nccsim/complex_matrix.hpp"

namespace nccsim {

// Tensor-factor label for a two-qubit state. Qubit 1 (A) is the left,
// most significant factor; basis order is |00>, |01>, |10>, |11>.
enum class Subsystem { A, B };

// Validated quantum state: Hermitian within 1e-10, unit trace within 1e-10,
// eigenvalues >= -1e-9. Dimension is 2 or 4.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix from_pure(const std::vector<complexd>& amplitudes);

  int dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigenvalueFloor = -1e-9;

 private:
  ComplexMatrix m_;
};

// Reduced state of the kept qubit. The input must be four-dimensional.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Base-2 von Neumann entropy; eigenvalues are clamped to [0, 1] and
// 0*log(0) contributes zero.
double von_neumann_entropy(const DensityMatrix& rho);

// Uhlmann-Jozsa fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace nccsim
