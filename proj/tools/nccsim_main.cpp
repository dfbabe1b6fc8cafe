// Command-line front end for the two-qubit correlation toolkit.
//
// Subcommands: state, witness, readout, discord, dynamics, tomo-measure,
// tomo-reconstruct, optimize-c.  JSON goes to stdout unless --out is given;
// dynamics emits CSV.  Exit codes: 0 success, 1 computation error, 2 usage.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nccsim/circuit.hpp"
#include "nccsim/decoherence.hpp"
#include "nccsim/density_matrix.hpp"
#include "nccsim/discord.hpp"
#include "nccsim/json_io.hpp"
#include "nccsim/states.hpp"
#include "nccsim/tomography.hpp"
#include "nccsim/witness.hpp"

namespace {

using nccsim::DensityMatrix;

DensityMatrix resolve_state(const std::string& name_or_path) {
  if (name_or_path == "sigma") return nccsim::sigma_ncc();
  if (name_or_path == "bell") return nccsim::bell_phi_plus();
  if (name_or_path == "mixed")
    return DensityMatrix(0.25 * nccsim::ComplexMatrix::identity(4));
  if (name_or_path == "zero")
    return DensityMatrix::from_pure({1.0, 0.0, 0.0, 0.0});
  return nccsim::density_from_json(nccsim::read_json_file(name_or_path));
}

nccsim::Subsystem parse_subsystem(const std::string& s) {
  if (s == "A") return nccsim::Subsystem::A;
  if (s == "B") return nccsim::Subsystem::B;
  throw CLI::ValidationError("--measured", "expected A or B");
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    nccsim::write_text_file(out_path, text);
}

std::vector<double> parse_schedule(const std::string& schedule, double j_coupling) {
  if (schedule == "paper") return nccsim::sampling_schedule(j_coupling);
  std::vector<double> times;
  std::stringstream ss(schedule);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const double t = std::stod(item, &pos);
    if (pos != item.size())
      throw std::runtime_error("bad schedule entry: " + item);
    times.push_back(t);
  }
  if (times.empty()) throw std::runtime_error("empty schedule");
  return times;
}

std::string format_csv(const std::vector<nccsim::DynamicsPoint>& points) {
  std::string csv = "time_s,map_value,discord_bits,fidelity\n";
  char line[128];
  for (const auto& p : points) {
    std::snprintf(line, sizeof(line), "%.6f,%.6f,%.6f,%.6f\n", p.time,
                  p.map_value, p.discord, p.fidelity_vs_ideal);
    csv += line;
  }
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit nonclassical-correlation simulator"};
  app.require_subcommand(1);

  std::string state_name = "sigma";
  std::string out_path;
  std::string measured = "A";
  std::string spec_path;
  std::string schedule = "paper";
  std::string record_path;
  std::string states_dir;
  double c = nccsim::kDefaultWitnessC;
  double noise = 0.0;
  int grid = 61;
  int restarts = 64;
  uint64_t seed = 1;

  auto* cmd_state = app.add_subcommand("state", "Print a built-in state as JSON");
  cmd_state->add_option("--state", state_name, "Built-in name or JSON file")
      ->capture_default_str();
  cmd_state->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_witness =
      app.add_subcommand("witness", "Evaluate the witness map on a state");
  cmd_witness->add_option("--state", state_name, "Built-in name or JSON file")
      ->capture_default_str();
  cmd_witness->add_option("--c", c, "Witness constant")->capture_default_str();
  cmd_witness->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_readout =
      app.add_subcommand("readout", "Detection polarizations (z1, z2, z2p)");
  cmd_readout->add_option("--state", state_name, "Built-in name or JSON file")
      ->capture_default_str();
  cmd_readout->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_discord = app.add_subcommand("discord", "Quantum discord of a state");
  cmd_discord->add_option("--state", state_name, "Built-in name or JSON file")
      ->capture_default_str();
  cmd_discord->add_option("--measured", measured, "Measured subsystem: A or B")
      ->capture_default_str();
  cmd_discord->add_option("--grid", grid, "Coarse grid points per angle")
      ->capture_default_str();
  cmd_discord->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_dynamics =
      app.add_subcommand("dynamics", "Relaxation sweep of sigma; emits CSV");
  cmd_dynamics->add_option("--spec", spec_path, "ChannelSpec JSON file")
      ->required();
  cmd_dynamics
      ->add_option("--schedule", schedule,
                   "\"paper\" or comma-separated times in seconds")
      ->capture_default_str();
  cmd_dynamics->add_option("--measured", measured,
                           "Subsystem measured for the discord column");
  cmd_dynamics->add_option("--c", c, "Witness constant")->capture_default_str();
  cmd_dynamics->add_option("--seed", seed, "Seed (kept for config uniformity)")
      ->capture_default_str();
  cmd_dynamics->add_option("--out", out_path, "CSV output file (default stdout)");
  cmd_dynamics->add_option("--states-dir", states_dir,
                           "If set, write per-point state JSON files here");

  auto* cmd_tomo_measure =
      app.add_subcommand("tomo-measure", "Simulate Pauli tomography of a state");
  cmd_tomo_measure->add_option("--state", state_name, "Built-in name or JSON file")
      ->capture_default_str();
  cmd_tomo_measure->add_option("--noise", noise, "Gaussian noise sigma")
      ->capture_default_str();
  cmd_tomo_measure->add_option("--seed", seed, "RNG seed")->capture_default_str();
  cmd_tomo_measure->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_tomo_reconstruct = app.add_subcommand(
      "tomo-reconstruct", "Reconstruct a state from a tomography record");
  cmd_tomo_reconstruct
      ->add_option("--record", record_path, "TomographyRecord JSON file")
      ->required();
  cmd_tomo_reconstruct->add_option("--c", c, "Witness constant")
      ->capture_default_str();
  cmd_tomo_reconstruct->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_optimize =
      app.add_subcommand("optimize-c", "Re-derive the witness constant");
  cmd_optimize->add_option("--seed", seed, "RNG seed")->capture_default_str();
  cmd_optimize->add_option("--restarts", restarts, "Restarts per round")
      ->capture_default_str();
  cmd_optimize->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);

    if (cmd_state->parsed()) {
      emit(nccsim::density_to_json(resolve_state(state_name)), out_path);
    } else if (cmd_witness->parsed()) {
      const auto report = nccsim::map_value_direct(resolve_state(state_name), c);
      emit(nccsim::witness_report_to_json(report), out_path);
    } else if (cmd_readout->parsed()) {
      const auto readout = nccsim::detection_readout(resolve_state(state_name));
      emit(nccsim::readout_to_json(readout), out_path);
    } else if (cmd_discord->parsed()) {
      if (grid < 2) throw CLI::ValidationError("--grid", "needs at least 2 points");
      const auto result = nccsim::discord(resolve_state(state_name),
                                          parse_subsystem(measured), grid);
      emit(nccsim::discord_result_to_json(result), out_path);
    } else if (cmd_dynamics->parsed()) {
      const auto spec =
          nccsim::channel_spec_from_json(nccsim::read_json_file(spec_path));
      const auto times = parse_schedule(schedule, spec.j_coupling);
      const auto discord_side = cmd_dynamics->count("--measured")
                                    ? parse_subsystem(measured)
                                    : nccsim::Subsystem::B;
      const auto points = nccsim::dynamics_sweep(spec, times, discord_side, c);
      const std::string csv = format_csv(points);
      if (out_path.empty())
        std::cout << csv;
      else
        nccsim::write_text_file(out_path, csv);
      if (!states_dir.empty()) {
        for (size_t i = 0; i < points.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof(name), "/state_%03zu.json", i);
          nccsim::write_text_file(
              states_dir + name,
              nccsim::density_to_json(points[i].state).dump(2) + "\n");
        }
      }
    } else if (cmd_tomo_measure->parsed()) {
      const auto record =
          nccsim::measure_all(resolve_state(state_name), noise, seed);
      emit(nccsim::record_to_json(record), out_path);
    } else if (cmd_tomo_reconstruct->parsed()) {
      const auto record =
          nccsim::record_from_json(nccsim::read_json_file(record_path));
      const DensityMatrix rho = nccsim::reconstruct(record);
      nlohmann::json j;
      j["state"] = nccsim::density_to_json(rho);
      j["witness"] =
          nccsim::witness_report_to_json(nccsim::map_value_direct(rho, c));
      emit(j, out_path);
    } else if (cmd_optimize->parsed()) {
      if (restarts < 1)
        throw CLI::ValidationError("--restarts", "needs at least 1");
      const auto result = nccsim::optimize_c(seed, restarts);
      emit(nccsim::copt_result_to_json(result), out_path);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
