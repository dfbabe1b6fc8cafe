#include "nccsim/discord.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nccsim/nelder_mead.hpp"
#include "nccsim/pauli.hpp"

namespace nccsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeroProbability = 1e-12;

// The 2x2 blocks of a two-qubit state grouped by the measured subsystem's
// indices: M(v) = sum_{b,c} conj(v_b) v_c Block_{bc} is the unnormalized
// conditional state of the other qubit for measurement vector v.
struct ConditionalBlocks {
  double d0_00, d0_11;  // Block_00 (Hermitian)
  complexd d0_01;
  double d1_00, d1_11;  // Block_11 (Hermitian)
  complexd d1_01;
  complexd o_00, o_01, o_10, o_11;  // Block_01; Block_10 is its adjoint
};

ConditionalBlocks make_blocks(const ComplexMatrix& m, Subsystem measured) {
  auto at = [&](int b, int c, int k, int l) -> complexd {
    return measured == Subsystem::A ? m(2 * b + k, 2 * c + l)
                                    : m(2 * k + b, 2 * l + c);
  };
  ConditionalBlocks bb;
  bb.d0_00 = at(0, 0, 0, 0).real();
  bb.d0_11 = at(0, 0, 1, 1).real();
  bb.d0_01 = at(0, 0, 0, 1);
  bb.d1_00 = at(1, 1, 0, 0).real();
  bb.d1_11 = at(1, 1, 1, 1).real();
  bb.d1_01 = at(1, 1, 0, 1);
  bb.o_00 = at(0, 1, 0, 0);
  bb.o_01 = at(0, 1, 0, 1);
  bb.o_10 = at(0, 1, 1, 0);
  bb.o_11 = at(0, 1, 1, 1);
  return bb;
}

double entropy_of_pair(double lp, double lm) {
  double h = 0.0;
  for (double lambda : {lp, lm}) {
    const double p = std::clamp(lambda, 0.0, 1.0);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

// Entropy of the conditional state for one outcome, weights (w0, w1) on the
// diagonal blocks and cross weight x = conj(v_0) v_1. Returns the branch
// probability through *prob; zero-probability branches contribute nothing.
double branch_entropy(const ConditionalBlocks& bb, double w0, double w1,
                      complexd x, double* prob) {
  const double m00 = w0 * bb.d0_00 + w1 * bb.d1_00 + 2.0 * (x * bb.o_00).real();
  const double m11 = w0 * bb.d0_11 + w1 * bb.d1_11 + 2.0 * (x * bb.o_11).real();
  const complexd m01 =
      w0 * bb.d0_01 + w1 * bb.d1_01 + x * bb.o_01 + std::conj(x * bb.o_10);
  const double p = m00 + m11;
  *prob = p;
  if (p < kZeroProbability) return 0.0;
  const double det = m00 * m11 - std::norm(m01);
  const double disc = std::sqrt(std::max(p * p - 4.0 * det, 0.0));
  return entropy_of_pair((p + disc) / (2.0 * p), (p - disc) / (2.0 * p));
}

double conditional_entropy_raw(const ConditionalBlocks& bb, double theta,
                               double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const complexd x = std::polar(c * s, phi);
  double p1 = 0.0, p2 = 0.0;
  const double h1 = branch_entropy(bb, c * c, s * s, x, &p1);
  const double h2 = branch_entropy(bb, s * s, c * c, -x, &p2);
  return p1 * h1 + p2 * h2;
}

// Maps (theta, phi) to the equivalent angles with theta in [0, pi/2] and
// phi in [0, 2 pi); the projector pair is unchanged.
void canonicalize_angles(double* theta, double* phi) {
  double t = std::fmod(*theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= kPi) t -= kPi;  // v -> -v
  if (t > kPi / 2.0) {     // theta -> pi - theta swaps the pair, phi shifts
    t = kPi - t;
    *phi += kPi;
  }
  double f = std::fmod(*phi, 2.0 * kPi);
  if (f < 0.0) f += 2.0 * kPi;
  *theta = t;
  *phi = f;
}

}  // namespace

ComplexMatrix MeasurementBasis::projector(int outcome) const {
  if (outcome != 1 && outcome != 2)
    throw std::invalid_argument("measurement outcome must be 1 or 2");
  const ComplexMatrix basis = basis_from_bloch_angles(theta, phi);
  ComplexMatrix v(2, 1);
  v(0, 0) = basis(0, outcome - 1);
  v(1, 0) = basis(1, outcome - 1);
  return nccsim::projector(v);
}

double mutual_information(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("mutual information needs a two-qubit state");
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
         von_neumann_entropy(partial_trace(rho, Subsystem::B)) -
         von_neumann_entropy(rho);
}

std::pair<DensityMatrix, double> post_measurement_state(
    const DensityMatrix& rho, const MeasurementBasis& basis, int outcome,
    Subsystem measured) {
  if (rho.dim() != 4)
    throw std::invalid_argument("measurement needs a two-qubit state");
  const ComplexMatrix pi2 = basis.projector(outcome);
  const ComplexMatrix op = measured == Subsystem::A
                               ? tensor(pi2, ComplexMatrix::identity(2))
                               : tensor(ComplexMatrix::identity(2), pi2);
  const ComplexMatrix m = op * rho.matrix() * op;
  const double p = m.trace().real();
  if (p < kZeroProbability)
    throw ZeroProbabilityError("measurement outcome has zero probability");
  return {DensityMatrix((1.0 / p) * m), p};
}

double conditional_entropy(const DensityMatrix& rho,
                           const MeasurementBasis& basis, Subsystem measured) {
  if (rho.dim() != 4)
    throw std::invalid_argument("conditional entropy needs a two-qubit state");
  const ConditionalBlocks bb = make_blocks(rho.matrix(), measured);
  return conditional_entropy_raw(bb, basis.theta, basis.phi);
}

DiscordResult discord(const DensityMatrix& rho, Subsystem measured,
                      int grid_points) {
  if (rho.dim() != 4)
    throw std::invalid_argument("discord needs a two-qubit state");
  if (grid_points < 2)
    throw std::invalid_argument("discord grid needs at least 2 points");

  const ConditionalBlocks bb = make_blocks(rho.matrix(), measured);
  const int n = grid_points;
  const double dtheta = (kPi / 2.0) / (n - 1);
  const double dphi = (2.0 * kPi) / n;

  std::vector<double> values(static_cast<size_t>(n) * n);
  double best_value = 0.0;
  double best_theta = 0.0, best_phi = 0.0;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    const double theta = i * dtheta;
    for (int j = 0; j < n; ++j) {
      const double phi = j * dphi;
      const double v = conditional_entropy_raw(bb, theta, phi);
      values[static_cast<size_t>(i) * n + j] = v;
      if (first || v < best_value) {
        first = false;
        best_value = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Refine from the best three mutually separated grid points.
  std::vector<size_t> order(values.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<std::pair<int, int>> starts;
  for (size_t k = 0; k < order.size() && starts.size() < 3; ++k) {
    const int i = static_cast<int>(order[k] / n);
    const int j = static_cast<int>(order[k] % n);
    bool separated = true;
    for (const auto& [pi_, pj_] : starts) {
      const int dj = std::min(std::abs(j - pj_), n - std::abs(j - pj_));
      if (std::abs(i - pi_) <= 3 && dj <= 3) {
        separated = false;
        break;
      }
    }
    if (separated) starts.emplace_back(i, j);
  }

  for (const auto& [i, j] : starts) {
    NelderMeadOptions opt;
    opt.max_evals = 500;
    opt.f_tol = 1e-9;
    const NelderMeadResult local = nelder_mead_minimize(
        [&](const std::vector<double>& x) {
          return conditional_entropy_raw(bb, x[0], x[1]);
        },
        {i * dtheta, j * dphi}, {dtheta / 2.0, dphi / 2.0}, opt);
    if (local.value < best_value) {
      best_value = local.value;
      best_theta = local.x[0];
      best_phi = local.x[1];
    }
  }
  canonicalize_angles(&best_theta, &best_phi);

  const double s_joint = von_neumann_entropy(rho);
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const double s_measured = measured == Subsystem::A ? s_a : s_b;
  const double s_other = measured == Subsystem::A ? s_b : s_a;

  DiscordResult result;
  result.conditional_entropy_min = best_value;
  result.optimal_basis = {best_theta, best_phi};
  result.discord = s_measured - s_joint + best_value;
  result.mutual_information = s_a + s_b - s_joint;
  result.classical_correlations = s_other - best_value;
  result.measured = measured;
  return result;
}

}  // namespace nccsim
