#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twophase/grid.hpp"

namespace twophase {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::pair<std::string, double>> measured;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

// The ten acceptance criteria, each self-contained with pinned inputs.
CriterionResult criterion_planewave_exactness();
CriterionResult criterion_soliton_residual();
CriterionResult criterion_route_equivalence();
CriterionResult criterion_alpha_hat_asymptotics();
CriterionResult criterion_residual_rhp();
CriterionResult criterion_jumps();
CriterionResult criterion_theta_invariants();
CriterionResult criterion_convergence();
CriterionResult criterion_peregrine();
CriterionResult criterion_quadrature_gate();

std::vector<CriterionResult> run_acceptance();

// Suites usable on an arbitrary configuration (cli verify mode).
//   pde     relative fNLS residual of the closed-form limit for cfg
//   routes  residual-RHP limit against the closed-form soliton (beta = pi)
//   theta   theta-data invariants and q_theta PDE residual
//   acceptance  the ten criteria above (cfg ignored)
std::vector<CriterionResult> run_suite(const std::string& name, const SpectralConfig& cfg, const GridSpec& grid);
std::vector<std::string> suite_names();

}  // namespace twophase
