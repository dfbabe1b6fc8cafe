#include "nccsim/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nccsim {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(static_cast<size_t>(m.rows()) * m.cols());
  im.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  return j;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("matrix dimensions must be positive");
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  const size_t n = static_cast<size_t>(rows) * cols;
  if (re.size() != n || im.size() != n)
    throw std::invalid_argument("matrix entry arrays do not match dimensions");
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const size_t k = static_cast<size_t>(r) * cols + c;
      m(r, c) = complexd(re[k], im[k]);
    }
  return m;
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  nlohmann::json j = matrix_to_json(rho.matrix());
  j["dim"] = rho.dim();
  return j;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  ComplexMatrix m = matrix_from_json(j);
  if (j.contains("dim") && j.at("dim").get<int>() != m.rows())
    throw std::invalid_argument("declared dim does not match matrix size");
  return DensityMatrix(m);
}

nlohmann::json channel_spec_to_json(const ChannelSpec& spec) {
  return nlohmann::json{{"t1_q1", spec.t1_q1},         {"t2_q1", spec.t2_q1},
                        {"t1_q2", spec.t1_q2},         {"t2_q2", spec.t2_q2},
                        {"j_coupling", spec.j_coupling},
                        {"include_j", spec.include_j}};
}

ChannelSpec channel_spec_from_json(const nlohmann::json& j) {
  ChannelSpec spec;
  spec.t1_q1 = j.at("t1_q1").get<double>();
  spec.t2_q1 = j.at("t2_q1").get<double>();
  spec.t1_q2 = j.at("t1_q2").get<double>();
  spec.t2_q2 = j.at("t2_q2").get<double>();
  if (j.contains("j_coupling")) spec.j_coupling = j.at("j_coupling").get<double>();
  if (j.contains("include_j")) spec.include_j = j.at("include_j").get<bool>();
  spec.validate();
  return spec;
}

nlohmann::json record_to_json(const TomographyRecord& record) {
  return nlohmann::json{{"labels", record.labels},
                        {"values", record.values},
                        {"noise_sigma", record.noise_sigma},
                        {"seed", record.seed}};
}

TomographyRecord record_from_json(const nlohmann::json& j) {
  TomographyRecord record;
  record.labels = j.at("labels").get<std::vector<std::string>>();
  record.values = j.at("values").get<std::vector<double>>();
  record.noise_sigma = j.at("noise_sigma").get<double>();
  if (j.contains("seed")) record.seed = j.at("seed").get<uint64_t>();
  record.validate();
  return record;
}

nlohmann::json readout_to_json(const DetectionReadout& readout) {
  return nlohmann::json{{"z1", readout.z1},
                        {"z2", readout.z2},
                        {"z2p", readout.z2prime}};
}

nlohmann::json witness_report_to_json(const WitnessReport& report) {
  return nlohmann::json{{"map_value", report.map_value},
                        {"factor_00", report.factor_00},
                        {"factor_1plus", report.factor_1plus},
                        {"polarizations", readout_to_json(report.polarizations)},
                        {"c_used", report.c_used},
                        {"ncc_detected", report.ncc_detected}};
}

nlohmann::json discord_result_to_json(const DiscordResult& result) {
  return nlohmann::json{
      {"discord", result.discord},
      {"optimal_theta", result.optimal_basis.theta},
      {"optimal_phi", result.optimal_basis.phi},
      {"mutual_information", result.mutual_information},
      {"classical_correlations", result.classical_correlations},
      {"conditional_entropy_min", result.conditional_entropy_min},
      {"measured", result.measured == Subsystem::A ? "A" : "B"}};
}

nlohmann::json pcc_spec_to_json(const PccSpec& spec) {
  return nlohmann::json{{"basis_a", matrix_to_json(spec.basis_a)},
                        {"basis_b", matrix_to_json(spec.basis_b)},
                        {"probs",
                         {{spec.probs[0][0], spec.probs[0][1]},
                          {spec.probs[1][0], spec.probs[1][1]}}}};
}

PccSpec pcc_spec_from_json(const nlohmann::json& j) {
  PccSpec spec;
  spec.basis_a = matrix_from_json(j.at("basis_a"));
  spec.basis_b = matrix_from_json(j.at("basis_b"));
  const auto probs = j.at("probs").get<std::vector<std::vector<double>>>();
  if (probs.size() != 2 || probs[0].size() != 2 || probs[1].size() != 2)
    throw std::invalid_argument("probs must be a 2x2 array");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) spec.probs[a][b] = probs[a][b];
  spec.validate();
  return spec;
}

nlohmann::json copt_result_to_json(const COptResult& result) {
  return nlohmann::json{{"c_opt", result.c_opt},
                        {"argmax", pcc_spec_to_json(result.argmax_spec)},
                        {"converged", result.converged},
                        {"evaluations", result.evaluations}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("failed to parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace nccsim
