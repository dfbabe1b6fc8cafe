#include "nccsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nccsim/pauli.hpp"
#include "nccsim/rng.hpp"

namespace nccsim {

const std::array<std::string, 15>& tomography_labels() {
  static const std::array<std::string, 15> labels = {
      "IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI",
      "YX", "YY", "YZ", "ZI", "ZX", "ZY", "ZZ"};
  return labels;
}

void TomographyRecord::validate() const {
  if (labels.size() != 15 || values.size() != 15)
    throw std::invalid_argument("tomography record needs 15 labels and values");
  std::set<std::string> seen;
  const auto& known = tomography_labels();
  for (const std::string& label : labels) {
    if (std::find(known.begin(), known.end(), label) == known.end())
      throw std::invalid_argument("unknown Pauli label: " + label);
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate Pauli label: " + label);
  }
  for (double v : values)
    if (std::abs(v) > 1.0 + 1e-12)
      throw std::invalid_argument("expectation value outside [-1, 1]");
  if (noise_sigma < 0.0) throw std::invalid_argument("noise sigma is negative");
}

TomographyRecord measure_all(const DensityMatrix& rho, double noise_sigma,
                             uint64_t seed) {
  if (rho.dim() != 4)
    throw std::invalid_argument("tomography needs a two-qubit state");
  if (noise_sigma < 0.0) throw std::invalid_argument("noise sigma is negative");
  SeededRng rng(seed);
  TomographyRecord record;
  record.noise_sigma = noise_sigma;
  record.seed = seed;
  for (const std::string& label : tomography_labels()) {
    const ComplexMatrix op = two_qubit_pauli(label);
    complexd value{0.0, 0.0};
    const ComplexMatrix& m = rho.matrix();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) value += m(r, c) * op(c, r);
    double v = value.real();
    if (noise_sigma > 0.0) v += noise_sigma * rng.gaussian();
    record.labels.push_back(label);
    record.values.push_back(std::clamp(v, -1.0, 1.0));
  }
  return record;
}

namespace {

// Euclidean projection of a unit-sum vector onto the probability simplex:
// shift everything by a common threshold and clip at zero.
std::vector<double> project_to_simplex(std::vector<double> lambda) {
  std::vector<double> sorted = lambda;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  int support = 0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) {
      threshold = candidate;
      support = static_cast<int>(k + 1);
    }
  }
  if (support == 0) throw std::runtime_error("simplex projection failed");
  for (double& v : lambda) v = std::max(v - threshold, 0.0);
  return lambda;
}

}  // namespace

DensityMatrix reconstruct(const TomographyRecord& record) {
  record.validate();
  ComplexMatrix m = 0.25 * ComplexMatrix::identity(4);
  for (size_t i = 0; i < record.labels.size(); ++i)
    m = m + (0.25 * record.values[i]) * two_qubit_pauli(record.labels[i]);

  const EigResult eig = eig_hermitian(m);
  const std::vector<double> lambda = project_to_simplex(eig.values);
  ComplexMatrix out(4, 4);
  for (int k = 0; k < 4; ++k) {
    if (lambda[k] == 0.0) continue;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        out(r, c) += lambda[k] * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
  }
  return DensityMatrix(out);
}

double mv_from_tomography(const TomographyRecord& record, double c) {
  return map_value_direct(reconstruct(record), c).map_value;
}

}  // namespace nccsim
