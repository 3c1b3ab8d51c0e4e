#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hs/explicit_engine.hpp"
#include "hs/presets.hpp"

namespace hs::cli {

// Exit statuses of the `hs` tool.
enum Status : int {
  kOk = 0,
  kCheckFailed = 1,    // a computed invariant missed its tolerance
  kBadConfig = 2,      // invalid flags, scenario or environment
  kBlowup = 3,         // request reaches past breaking / not admissible
};

// Scenario descriptor (JSON):
//   {"name": "...", "preset": "fig1c"}            or
//   {"name": "...", "fourier": {"u0x_cos": [...], "u0x_sin": [...],
//                               "rho0_mean": 0, "rho0_cos": [...],
//                               "rho0_sin": [...]}}
// plus optional "kappa" (-1 or 1), "n", "times" (ascending) and
// "outputs" (subset of ["csv", "json"]).
struct Scenario {
  std::string name;
  std::string preset;  // empty when Fourier data are given
  FourierData fourier;
  Kappa kappa = Kappa::kMinus;
  int n = 256;
  std::vector<double> times;
  bool write_csv = true;
  bool write_json = true;
};

// Throws std::invalid_argument on malformed descriptors.
Scenario parse_scenario(const std::string& json_text);

InitialData initial_data(const Scenario& s);

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int main(int argc, char** argv);

}  // namespace hs::cli
