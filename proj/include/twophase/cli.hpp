#pragma once

#include <string>

#include "twophase/grid.hpp"

namespace twophase {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::string mode;  // soliton, planewave, peregrine, theta, rhp-limit, verify
    SpectralConfig spectral;
    GridSpec grid;
    int quadrature_nodes = 64;  // Gauss-Chebyshev self-check recorded in the sidecar
    int theta_truncation = 0;   // 0 = per point from the tail bound
    std::string out;            // empty = <mode>.csv, or report.json for verify
    std::string suite;          // verify mode only
};

bool is_mode(const std::string& mode);

// JSON text -> validated RunConfig. ConfigError carries line/column for
// syntax errors and the key for type or value errors.
RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& cfg);
// Checks spectral invariants and mode-specific requirements.
void validate_run_config(const RunConfig& cfg);

// "x0:x1:nx,t0:t1:nt"
GridSpec parse_grid_spec(const std::string& text);

// Exit status: 0 pass, 1 numerical failure or failed criterion, 2 invalid
// configuration. Outputs are written to a temporary name and renamed; on any
// error nothing is left behind. Diagnostics go to err.
int run(const RunConfig& cfg, std::string& err);

// Paths run() writes for this config.
std::string output_path(const RunConfig& cfg);
std::string sidecar_path(const RunConfig& cfg);

}  // namespace twophase
