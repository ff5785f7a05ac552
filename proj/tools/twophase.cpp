// twophase <mode> --config <path> [--out <path>] [--grid x0:x1:nx,t0:t1:nt] [--epsilon e] [--suite name]
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "twophase/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Two-phase fNLS solutions: closed-form limits, residual RHP, theta functions"};
    std::string mode, config_path, out, grid, suite;
    double epsilon = 0.0;
    app.add_option("mode", mode, "soliton | planewave | peregrine | theta | rhp-limit | verify")->required();
    app.add_option("--config", config_path, "JSON config file")->required();
    app.add_option("--out", out, "output file (CSV, or JSON report in verify mode)");
    app.add_option("--grid", grid, "x0:x1:nx,t0:t1:nt");
    auto* eps_opt = app.add_option("--epsilon", epsilon, "gap E2 - E3");
    app.add_option("--suite", suite, "verify suite: pde | routes | theta | acceptance");
    app.set_version_flag("--version", twophase::kVersion);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("TWOPHASE_THREADS")) {
        int n = std::atoi(env);
        if (n < 1) {
            std::cerr << "error: TWOPHASE_THREADS must be a positive integer\n";
            return 2;
        }
        omp_set_num_threads(n);
    }

    twophase::RunConfig cfg;
    try {
        std::ifstream in(config_path);
        if (!in) throw twophase::ConfigError("cannot read config file " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = twophase::parse_config(ss.str());
        cfg.mode = mode;
        if (!out.empty()) cfg.out = out;
        if (!grid.empty()) cfg.grid = twophase::parse_grid_spec(grid);
        if (*eps_opt) cfg.spectral.epsilon = epsilon;
        if (!suite.empty()) cfg.suite = suite;
    } catch (const twophase::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::string err;
    int rc = twophase::run(cfg, err);
    if (!err.empty()) std::cerr << "error: " << err << '\n';
    return rc;
}
