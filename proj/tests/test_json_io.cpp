#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "nccsim/decoherence.hpp"
#include "nccsim/density_matrix.hpp"
#include "nccsim/discord.hpp"
#include "nccsim/json_io.hpp"
#include "nccsim/states.hpp"
#include "nccsim/tomography.hpp"
#include "nccsim/witness.hpp"

using namespace nccsim;

TEST_CASE("complex matrix json round trip") {
  const ComplexMatrix m = sigma_ncc().matrix();
  const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back.approx_equal(m, 0.0));

  ComplexMatrix rect(2, 3);
  rect(0, 2) = complexd(1.5, -2.5);
  rect(1, 0) = complexd(0.0, 3.0);
  const ComplexMatrix rect_back = matrix_from_json(matrix_to_json(rect));
  CHECK(rect_back.rows() == 2);
  CHECK(rect_back.cols() == 3);
  CHECK(rect_back.approx_equal(rect, 0.0));
}

TEST_CASE("matrix json rejects malformed payloads") {
  nlohmann::json j = matrix_to_json(ComplexMatrix::identity(2));
  j["re"] = std::vector<double>{1.0};
  CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);

  nlohmann::json missing;
  missing["rows"] = 2;
  missing["cols"] = 2;
  CHECK_THROWS(matrix_from_json(missing));
}

TEST_CASE("density matrix json round trip validates") {
  const DensityMatrix rho = random_density(4, 11);
  const nlohmann::json j = density_to_json(rho);
  CHECK(j.at("dim") == 4);
  const DensityMatrix back = density_from_json(j);
  CHECK(back.matrix().approx_equal(rho.matrix(), 0.0));

  nlohmann::json broken = j;
  broken["re"][0] = 100.0;
  CHECK_THROWS(density_from_json(broken));

  nlohmann::json wrong_dim = j;
  wrong_dim["dim"] = 2;
  CHECK_THROWS_AS(density_from_json(wrong_dim), std::invalid_argument);
}

TEST_CASE("channel spec json round trip") {
  ChannelSpec spec;
  spec.t1_q1 = 7.9;
  spec.t2_q1 = 0.12;
  spec.t1_q2 = 16.6;
  spec.t2_q2 = 0.2;
  spec.j_coupling = 215.0;
  spec.include_j = true;

  const ChannelSpec back = channel_spec_from_json(channel_spec_to_json(spec));
  CHECK(back.t1_q1 == spec.t1_q1);
  CHECK(back.t2_q1 == spec.t2_q1);
  CHECK(back.t1_q2 == spec.t1_q2);
  CHECK(back.t2_q2 == spec.t2_q2);
  CHECK(back.j_coupling == spec.j_coupling);
  CHECK(back.include_j == spec.include_j);

  nlohmann::json invalid = channel_spec_to_json(spec);
  invalid["t1_q1"] = -1.0;
  CHECK_THROWS_AS(channel_spec_from_json(invalid), std::invalid_argument);
}

TEST_CASE("tomography record json round trip") {
  const TomographyRecord record = measure_all(sigma_ncc(), 0.02, 99);
  const TomographyRecord back = record_from_json(record_to_json(record));
  CHECK(back.labels == record.labels);
  CHECK(back.values == record.values);
  CHECK(back.noise_sigma == record.noise_sigma);
  CHECK(back.seed == record.seed);
}

TEST_CASE("report serializers expose the documented fields") {
  const WitnessReport report = map_value_direct(sigma_ncc(), kDefaultWitnessC);
  const nlohmann::json wj = witness_report_to_json(report);
  CHECK(wj.at("map_value").get<double>() ==
        doctest::Approx(-0.067862).epsilon(1e-9));
  CHECK(wj.at("ncc_detected").get<bool>());
  CHECK(wj.at("polarizations").contains("z1"));
  CHECK(wj.at("polarizations").contains("z2"));
  CHECK(wj.at("polarizations").contains("z2p"));

  const DiscordResult d = discord(sigma_ncc(), Subsystem::B);
  const nlohmann::json dj = discord_result_to_json(d);
  CHECK(dj.at("measured") == "B");
  CHECK(dj.at("discord").get<double>() == doctest::Approx(0.201752).epsilon(1e-5));

  const auto [spec, rho] = random_pcc(5);
  const PccSpec back = pcc_spec_from_json(pcc_spec_to_json(spec));
  CHECK(back.basis_a.approx_equal(spec.basis_a, 0.0));
  CHECK(back.basis_b.approx_equal(spec.basis_b, 0.0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(back.probs[a][b] == spec.probs[a][b]);
}

TEST_CASE("file io reports the failing path") {
  try {
    read_json_file("/nonexistent/path.json");
    FAIL("expected an open failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/path.json") !=
          std::string::npos);
  }

  const std::string path = "/tmp/nccsim_test_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  try {
    read_json_file(path);
    FAIL("expected a parse failure");
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    CHECK(what.find(path) != std::string::npos);
  }
  std::remove(path.c_str());

  const std::string round_trip = "/tmp/nccsim_test_roundtrip.json";
  write_text_file(round_trip, density_to_json(sigma_ncc()).dump());
  const DensityMatrix back = density_from_json(read_json_file(round_trip));
  CHECK(back.matrix().approx_equal(sigma_ncc().matrix(), 0.0));
  std::remove(round_trip.c_str());
}
