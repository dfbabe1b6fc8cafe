#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "nccsim/circuit.hpp"
#include "nccsim/density_matrix.hpp"
#include "nccsim/pauli.hpp"
#include "nccsim/states.hpp"
#include "nccsim/witness.hpp"

using namespace nccsim;

TEST_CASE("map value of the target state") {
  const WitnessReport report = map_value_direct(sigma_ncc(), kDefaultWitnessC);
  CHECK(report.map_value == doctest::Approx(-0.067862).epsilon(1e-9));
  CHECK(report.factor_00 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.factor_1plus == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.factor_00 * report.factor_1plus ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(report.ncc_detected);
  CHECK(report.c_used == kDefaultWitnessC);
}

TEST_CASE("map value of separable reference states") {
  const WitnessReport zero =
      map_value_direct(DensityMatrix::from_pure({1, 0, 0, 0}), kDefaultWitnessC);
  CHECK(zero.factor_1plus == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(zero.map_value == doctest::Approx(kDefaultWitnessC).epsilon(1e-12));
  CHECK_FALSE(zero.ncc_detected);

  const WitnessReport mixed = map_value_direct(
      DensityMatrix(0.25 * ComplexMatrix::identity(4)), kDefaultWitnessC);
  CHECK(mixed.factor_00 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mixed.factor_1plus == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mixed.map_value == doctest::Approx(0.119638).epsilon(1e-12));
}

TEST_CASE("report invariants hold on random states") {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const WitnessReport report =
        map_value_direct(random_density(4, seed), kDefaultWitnessC);
    CHECK(report.factor_00 >= 0.0);
    CHECK(report.factor_00 <= 1.0);
    CHECK(report.factor_1plus >= 0.0);
    CHECK(report.factor_1plus <= 1.0);
    CHECK(std::abs(report.map_value -
                   (report.c_used - report.factor_00 * report.factor_1plus)) <
          1e-12);
    CHECK(report.ncc_detected == (report.map_value < 0.0));
  }
}

TEST_CASE("polarization form reference values") {
  CHECK(map_value_polarization(0, 1, 0, kDefaultWitnessC) ==
        doctest::Approx(-0.067862).epsilon(1e-12));
  CHECK(map_value_polarization(0, 0, 0, kDefaultWitnessC) ==
        doctest::Approx(0.119638).epsilon(1e-12));
  CHECK(map_value_polarization(1, 1, 1, kDefaultWitnessC) ==
        doctest::Approx(kDefaultWitnessC).epsilon(1e-12));
}

TEST_CASE("polarization form rejects out-of-range inputs") {
  CHECK_THROWS_AS(map_value_polarization(1.5, 0, 0, kDefaultWitnessC),
                  std::invalid_argument);
}

TEST_CASE("direct and polarization forms agree on random states") {
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    const DensityMatrix rho = random_density(4, seed);
    const WitnessReport direct = map_value_direct(rho, kDefaultWitnessC);
    const DetectionReadout r = detection_readout(rho);
    const double via_polarizations =
        map_value_polarization(r.z1, r.z2, r.z2prime, kDefaultWitnessC);
    CHECK(std::abs(direct.map_value - via_polarizations) <= 1e-10);
  }
}

TEST_CASE("general product map matches the two-factor form") {
  const ComplexMatrix p00 = tensor(projector(ket0()), projector(ket0()));
  const ComplexMatrix p1plus = tensor(projector(ket1()), projector(ket_plus()));
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const DensityMatrix rho = random_density(4, seed);
    const double general = map_value_general(rho, {p00, p1plus}, kDefaultWitnessC);
    const double direct = map_value_direct(rho, kDefaultWitnessC).map_value;
    CHECK(general == doctest::Approx(direct).epsilon(1e-12));
  }

  // Single-factor map degenerates to c minus one expectation value.
  const double single =
      map_value_general(sigma_ncc(), {p00}, kDefaultWitnessC);
  CHECK(single == doctest::Approx(kDefaultWitnessC - 0.5).epsilon(1e-12));
}

TEST_CASE("map value is 2-Lipschitz in trace distance") {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const DensityMatrix rho = random_density(4, seed);
    const DensityMatrix tau = random_density(4, seed + 5000);
    const double lhs =
        std::abs(map_value_direct(rho, kDefaultWitnessC).map_value -
                 map_value_direct(tau, kDefaultWitnessC).map_value);
    const double dist = trace_norm_hermitian(rho.matrix() - tau.matrix());
    CHECK(lhs <= 2.0 * dist + 1e-12);
  }
}

TEST_CASE("witness is nonnegative on classically correlated states") {
  for (uint64_t seed = 1; seed <= 2000; ++seed) {
    const auto [spec, rho] = random_pcc(seed);
    CHECK(map_value_direct(rho, kDefaultWitnessC).map_value >= -1e-9);
  }
}

TEST_CASE("computational-basis restriction peaks at one eighth") {
  // With both bases computational, factor_00 = p00 and
  // factor_1plus = (p10 + p11)/2, so the product is maximized at 1/8.
  PccSpec spec;
  spec.basis_a = ComplexMatrix::identity(2);
  spec.basis_b = ComplexMatrix::identity(2);
  double best = 0.0;
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const double p00 = static_cast<double>(i) / n;
    spec.probs = {{{p00, 0.0}, {1.0 - p00, 0.0}}};
    const WitnessReport report = map_value_direct(pcc_state(spec), 0.0);
    best = std::max(best, report.factor_00 * report.factor_1plus);
  }
  CHECK(best == doctest::Approx(0.125).epsilon(1e-6));
}

TEST_CASE("optimizer recovers the published constant") {
  const COptResult result = optimize_c(1, 64);
  CHECK(result.c_opt == doctest::Approx(0.182138).epsilon(1e-3));
  CHECK(result.converged);
  CHECK(result.evaluations > 0);

  // The returned spec actually achieves the reported maximum.
  const WitnessReport at_argmax =
      map_value_direct(pcc_state(result.argmax_spec), 0.0);
  CHECK(at_argmax.factor_00 * at_argmax.factor_1plus ==
        doctest::Approx(result.c_opt).epsilon(1e-9));
}

TEST_CASE("default constant is the published value") {
  CHECK(kDefaultWitnessC == doctest::Approx(0.182138).epsilon(1e-15));
}
