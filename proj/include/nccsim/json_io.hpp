#pragma once

#include <string>

#include <json.hpp>

#include "nccsim/circuit.hpp"
#include "nccsim/complex_matrix.hpp"
#include "nccsim/decoherence.hpp"
#include "nccsim/density_matrix.hpp"
#include "nccsim/discord.hpp"
#include "nccsim/states.hpp"
#include "nccsim/tomography.hpp"
#include "nccsim/witness.hpp"

namespace nccsim {

// Wire formats. Matrices are {"rows", "cols", "re", "im"} with row-major
// coefficient arrays; density matrices additionally carry "dim".

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json channel_spec_to_json(const ChannelSpec& spec);
ChannelSpec channel_spec_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const TomographyRecord& record);
TomographyRecord record_from_json(const nlohmann::json& j);

nlohmann::json readout_to_json(const DetectionReadout& r);
nlohmann::json witness_report_to_json(const WitnessReport& report);
nlohmann::json discord_result_to_json(const DiscordResult& result);

nlohmann::json pcc_spec_to_json(const PccSpec& spec);
PccSpec pcc_spec_from_json(const nlohmann::json& j);

nlohmann::json copt_result_to_json(const COptResult& result);

// Reads and parses a JSON file; parse failures are reported with the file
// path and line number.
nlohmann::json read_json_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace nccsim
