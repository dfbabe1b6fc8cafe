#include "nccsim/decoherence.hpp"

#include <cmath>
#include <stdexcept>

#include "nccsim/discord.hpp"
#include "nccsim/pauli.hpp"
#include "nccsim/states.hpp"

namespace nccsim {

namespace {
constexpr complexd kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void ChannelSpec::validate() const {
  for (double t : {t1_q1, t2_q1, t1_q2, t2_q2})
    if (!(t > 0.0)) throw std::invalid_argument("relaxation times must be positive");
  if (1.0 / t2_q1 - 0.5 / t1_q1 < 0.0 || 1.0 / t2_q2 - 0.5 / t1_q2 < 0.0)
    throw std::invalid_argument("pure dephasing rate 1/t2 - 1/(2 t1) is negative");
  if (j_coupling < 0.0) throw std::invalid_argument("coupling must be nonnegative");
}

std::vector<ComplexMatrix> single_qubit_kraus(const ChannelSpec& spec,
                                              int qubit, double t) {
  spec.validate();
  if (qubit != 1 && qubit != 2)
    throw std::invalid_argument("qubit label must be 1 or 2");
  if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
  const double t1 = qubit == 1 ? spec.t1_q1 : spec.t1_q2;
  const double t2 = qubit == 1 ? spec.t2_q1 : spec.t2_q2;

  const double gamma = 1.0 - std::exp(-t / t1);
  const double rate = std::max(1.0 / t2 - 0.5 / t1, 0.0);
  const double q = 0.5 * (1.0 - std::exp(-rate * t));

  ComplexMatrix a0(2, 2), a1(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - gamma);
  a1(0, 1) = std::sqrt(gamma);
  const double z0 = std::sqrt(1.0 - q);
  const double z1 = std::sqrt(q);
  // Dephasing composed after damping.
  return {z0 * a0, z0 * a1, z1 * (pauli_z() * a0), z1 * (pauli_z() * a1)};
}

DensityMatrix evolve(const DensityMatrix& rho, const ChannelSpec& spec,
                     double t) {
  spec.validate();
  if (rho.dim() != 4) throw std::invalid_argument("evolve needs a two-qubit state");
  if (t < 0.0) throw std::invalid_argument("time must be nonnegative");

  ComplexMatrix m = rho.matrix();
  if (spec.include_j) {
    // exp(-i 2 pi J t Z(x)Z / 4), a diagonal phase.
    const double half = 0.5 * kPi * spec.j_coupling * t;
    ComplexMatrix u(4, 4);
    const complexd same = std::exp(-kI * half);
    const complexd diff = std::exp(kI * half);
    u(0, 0) = same;
    u(1, 1) = diff;
    u(2, 2) = diff;
    u(3, 3) = same;
    m = u * m * u.adjoint();
  }

  const std::vector<ComplexMatrix> k1 = single_qubit_kraus(spec, 1, t);
  const std::vector<ComplexMatrix> k2 = single_qubit_kraus(spec, 2, t);
  ComplexMatrix out(4, 4);
  for (const ComplexMatrix& a : k1)
    for (const ComplexMatrix& b : k2) {
      const ComplexMatrix k = tensor(a, b);
      out = out + k * m * k.adjoint();
    }
  return DensityMatrix(out);
}

namespace {

double map_value_at(const DensityMatrix& sigma, const ChannelSpec& spec,
                    double c, double t) {
  return map_value_direct(evolve(sigma, spec, t), c).map_value;
}

}  // namespace

std::optional<double> mv_crossing_time(const ChannelSpec& spec, double c,
                                       double resolution) {
  spec.validate();
  if (!(resolution > 0.0))
    throw std::invalid_argument("resolution must be positive");
  const DensityMatrix sigma = sigma_ncc();

  if (map_value_at(sigma, spec, c, 0.0) >= 0.0) return 0.0;

  // Scan horizon: the acquisition window 100/J when a coupling is given,
  // otherwise long enough for the coherences to be fully gone.
  const double horizon = spec.j_coupling > 0.0
                             ? 100.0 / spec.j_coupling
                             : 20.0 * std::max(spec.t2_q1, spec.t2_q2);
  const int scan_points = 50;
  double lo = 0.0;
  double hi = -1.0;
  for (int k = 1; k <= scan_points; ++k) {
    const double t = horizon * k / scan_points;
    if (map_value_at(sigma, spec, c, t) >= 0.0) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi < 0.0) return std::nullopt;

  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (map_value_at(sigma, spec, c, mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<DynamicsPoint> dynamics_sweep(const ChannelSpec& spec,
                                          const std::vector<double>& schedule,
                                          Subsystem discord_measured, double c) {
  spec.validate();
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  double prev = 0.0;
  for (double t : schedule) {
    if (t < 0.0 || t < prev)
      throw std::invalid_argument("schedule times must be nondecreasing and nonnegative");
    prev = t;
  }

  const DensityMatrix ideal = sigma_ncc();
  std::vector<DynamicsPoint> points;
  points.reserve(schedule.size());
  for (double t : schedule) {
    DensityMatrix state = evolve(ideal, spec, t);
    DynamicsPoint point{t, map_value_direct(state, c).map_value,
                        discord(state, discord_measured).discord,
                        fidelity(state, ideal), std::move(state)};
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<double> sampling_schedule(double j_coupling) {
  if (!(j_coupling > 0.0))
    throw std::invalid_argument("coupling must be positive");
  static const int ns[] = {0, 1, 3, 5, 7, 9, 11, 13, 15, 20, 25, 30, 35, 40, 45, 50};
  std::vector<double> times;
  times.reserve(std::size(ns));
  for (int n : ns) times.push_back(2.0 * n / j_coupling);
  return times;
}

}  // namespace nccsim
