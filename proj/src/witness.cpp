#include "nccsim/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nccsim/nelder_mead.hpp"
#include "nccsim/pauli.hpp"
#include "nccsim/rng.hpp"

namespace nccsim {

namespace {

double real_expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  const ComplexMatrix& m = rho.matrix();
  complexd value{0.0, 0.0};
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) value += m(r, c) * op(c, r);
  return value.real();
}

const ComplexMatrix& op_00() {
  static const ComplexMatrix op = projector(tensor(ket0(), ket0()));
  return op;
}

const ComplexMatrix& op_1plus() {
  // |1><1| (x) |+><+| with the 1/2 entries written out exactly.
  static const ComplexMatrix plus_proj{{0.5, 0.5}, {0.5, 0.5}};
  static const ComplexMatrix op = tensor(projector(ket1()), plus_proj);
  return op;
}

}  // namespace

WitnessReport map_value_direct(const DensityMatrix& rho, double c) {
  if (rho.dim() != 4)
    throw std::invalid_argument("witness map needs a two-qubit state");
  if (c < 0.0) throw std::invalid_argument("map constant must be nonnegative");
  WitnessReport report;
  report.factor_00 = std::clamp(real_expectation(rho, op_00()), 0.0, 1.0);
  report.factor_1plus = std::clamp(real_expectation(rho, op_1plus()), 0.0, 1.0);
  report.map_value = c - report.factor_00 * report.factor_1plus;
  report.polarizations = detection_readout(rho);
  report.c_used = c;
  report.ncc_detected = report.map_value < 0.0;
  return report;
}

double map_value_polarization(double z1, double z2, double z2prime, double c) {
  if (c < 0.0) throw std::invalid_argument("map constant must be nonnegative");
  for (double z : {z1, z2, z2prime})
    if (std::abs(z) > 1.0 + 1e-9)
      throw std::invalid_argument("polarization outside [-1, 1]");
  const double first = 1.0 + z1 + z2 + z2prime;
  const double second = 1.0 - z1 + z2 - z2prime;
  return c - first * second / 16.0;
}

double map_value_general(const DensityMatrix& rho,
                         const std::vector<ComplexMatrix>& operators,
                         double c) {
  if (c < 0.0) throw std::invalid_argument("map constant must be nonnegative");
  if (operators.empty())
    throw std::invalid_argument("map needs at least one operator");
  double product = 1.0;
  for (const ComplexMatrix& op : operators) {
    if (op.rows() != rho.dim() || op.cols() != rho.dim())
      throw std::invalid_argument("operator/state dimension mismatch");
    if (!op.is_hermitian(1e-10))
      throw std::invalid_argument("map operator is not Hermitian");
    product *= real_expectation(rho, op);
  }
  return c - product;
}

namespace {

PccSpec spec_from_params(const std::vector<double>& x) {
  PccSpec spec;
  spec.basis_a = basis_from_bloch_angles(x[0], x[1]);
  spec.basis_b = basis_from_bloch_angles(x[2], x[3]);
  // Softmax over four logits keeps the table strictly inside the simplex.
  double mx = std::max(std::max(x[4], x[5]), std::max(x[6], x[7]));
  double e[4];
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    e[i] = std::exp(x[4 + i] - mx);
    sum += e[i];
  }
  spec.probs[0][0] = e[0] / sum;
  spec.probs[0][1] = e[1] / sum;
  spec.probs[1][0] = e[2] / sum;
  spec.probs[1][1] = std::max(
      0.0, 1.0 - spec.probs[0][0] - spec.probs[0][1] - spec.probs[1][0]);
  return spec;
}

double product_term(const PccSpec& spec) {
  const DensityMatrix rho = pcc_state(spec);
  const double f00 = real_expectation(rho, op_00());
  const double f1p = real_expectation(rho, op_1plus());
  return f00 * f1p;
}

}  // namespace

COptResult optimize_c(uint64_t seed, int restarts) {
  if (restarts < 1) throw std::invalid_argument("restarts must be positive");
  SeededRng rng(seed);
  const double pi = 3.14159265358979323846;

  COptResult result;
  result.c_opt = -1.0;
  long evals = 0;

  auto objective = [&evals](const std::vector<double>& x) {
    ++evals;
    return -product_term(spec_from_params(x));
  };

  // Restarts run in rounds; the search has stabilized once a whole round
  // fails to improve the incumbent by 1e-9.
  const int round_size = 8;
  std::vector<double> best_x;
  bool stabilized = false;
  int used = 0;
  while (used < restarts && !stabilized) {
    const double before = result.c_opt;
    for (int k = 0; k < round_size && used < restarts; ++k, ++used) {
      std::vector<double> x0 = {rng.uniform() * pi / 2, rng.uniform() * 2 * pi,
                                rng.uniform() * pi / 2, rng.uniform() * 2 * pi,
                                rng.gaussian(), rng.gaussian(),
                                rng.gaussian(), rng.gaussian()};
      std::vector<double> step = {0.3, 0.5, 0.3, 0.5, 0.7, 0.7, 0.7, 0.7};
      NelderMeadOptions opt;
      opt.max_evals = 2000;
      opt.f_tol = 1e-12;
      const NelderMeadResult local = nelder_mead_minimize(
          [&](const std::vector<double>& x) { return objective(x); }, x0, step,
          opt);
      if (-local.value > result.c_opt) {
        result.c_opt = -local.value;
        best_x = local.x;
      }
    }
    if (before >= 0.0 && result.c_opt - before < 1e-9) stabilized = true;
  }

  result.argmax_spec = spec_from_params(best_x);
  result.converged = stabilized;
  result.evaluations = evals;
  return result;
}

}  // namespace nccsim
