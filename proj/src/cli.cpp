#include "twophase/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "twophase/closed_form.hpp"
#include "twophase/finite_genus.hpp"
#include "twophase/normalization.hpp"
#include "twophase/quadrature.hpp"
#include "twophase/residual_rhp.hpp"
#include "twophase/suites.hpp"

namespace twophase {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kModes = {"soliton", "planewave", "peregrine", "theta", "rhp-limit", "verify"};

double number_at(const json& j, const std::string& key) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "pi") return kPi;
        if (s == "-pi") return -kPi;
    }
    if (!j.is_number()) throw ConfigError("config key '" + key + "': expected a number");
    return j.get<double>();
}

int int_at(const json& j, const std::string& key) {
    if (!j.is_number_integer()) throw ConfigError("config key '" + key + "': expected an integer");
    return j.get<int>();
}

cplx complex_at(const json& j, const std::string& key) {
    if (j.is_array() && j.size() == 2) return {number_at(j[0], key + "[0]"), number_at(j[1], key + "[1]")};
    if (!j.is_object()) throw ConfigError("config key '" + key + "': expected {\"re\": .., \"im\": ..}");
    for (const auto& [k, v] : j.items())
        if (k != "re" && k != "im") throw ConfigError("unknown config key '" + key + "." + k + "'");
    if (!j.contains("re") || !j.contains("im")) throw ConfigError("config key '" + key + "': needs re and im");
    return {number_at(j["re"], key + ".re"), number_at(j["im"], key + ".im")};
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

bool is_mode(const std::string& mode) { return kModes.count(mode) > 0; }

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec g;
    double x0, x1, t0, t1;
    int nx, nt, used = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d,%lf:%lf:%d%n", &x0, &x1, &nx, &t0, &t1, &nt, &used) != 6 ||
        used != int(text.size()))
        throw ConfigError("grid '" + text + "': expected x0:x1:nx,t0:t1:nt");
    g = {x0, x1, nx, t0, t1, nt};
    g.validate();
    return g;
}

void validate_run_config(const RunConfig& cfg) {
    if (!is_mode(cfg.mode)) throw ConfigError("unknown mode '" + cfg.mode + "'");
    cfg.spectral.validate();
    cfg.grid.validate();
    if (cfg.quadrature_nodes < 2 || cfg.quadrature_nodes > 4096)
        throw ConfigError("invalid config: 2 <= quadrature_nodes <= 4096 required");
    if (cfg.theta_truncation < 0 || cfg.theta_truncation > 200)
        throw ConfigError("invalid config: 0 <= theta_truncation <= 200 required");
    if ((cfg.mode == "soliton" || cfg.mode == "rhp-limit") && std::abs(std::abs(cfg.spectral.beta) - kPi) > 1e-12)
        throw ConfigError("invalid config: mode " + cfg.mode + " needs beta = pi");
    if (cfg.mode == "verify") {
        if (cfg.suite.empty()) throw ConfigError("invalid config: verify mode needs a suite");
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
            throw ConfigError("unknown suite '" + cfg.suite + "'");
    }
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.what() already carries "at line L, column C"
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");

    RunConfig cfg;
    for (const auto& [key, v] : j.items()) {
        if (key == "mode") {
            if (!v.is_string()) throw ConfigError("config key 'mode': expected a string");
            cfg.mode = v.get<std::string>();
        } else if (key == "e1") {
            cfg.spectral.e1 = complex_at(v, key);
        } else if (key == "e3") {
            cfg.spectral.e3 = complex_at(v, key);
        } else if (key == "epsilon") {
            cfg.spectral.epsilon = number_at(v, key);
        } else if (key == "alpha") {
            cfg.spectral.alpha = number_at(v, key);
        } else if (key == "beta") {
            cfg.spectral.beta = number_at(v, key);
        } else if (key == "grid") {
            if (v.is_string()) {
                cfg.grid = parse_grid_spec(v.get<std::string>());
                continue;
            }
            if (!v.is_object()) throw ConfigError("config key 'grid': expected an object or x0:x1:nx,t0:t1:nt");
            for (const auto& [gk, gv] : v.items()) {
                std::string path = "grid." + gk;
                if (gk == "x0") cfg.grid.x0 = number_at(gv, path);
                else if (gk == "x1") cfg.grid.x1 = number_at(gv, path);
                else if (gk == "nx") cfg.grid.nx = int_at(gv, path);
                else if (gk == "t0") cfg.grid.t0 = number_at(gv, path);
                else if (gk == "t1") cfg.grid.t1 = number_at(gv, path);
                else if (gk == "nt") cfg.grid.nt = int_at(gv, path);
                else throw ConfigError("unknown config key '" + path + "'");
            }
        } else if (key == "quadrature_nodes") {
            cfg.quadrature_nodes = int_at(v, key);
        } else if (key == "theta_truncation") {
            cfg.theta_truncation = int_at(v, key);
        } else if (key == "out") {
            if (!v.is_string()) throw ConfigError("config key 'out': expected a string");
            cfg.out = v.get<std::string>();
        } else if (key == "suite") {
            if (!v.is_string()) throw ConfigError("config key 'suite': expected a string");
            cfg.suite = v.get<std::string>();
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    // mode may come from the command line; everything else is checked now
    cfg.spectral.validate();
    cfg.grid.validate();
    if (!cfg.mode.empty()) validate_run_config(cfg);
    return cfg;
}

namespace {

json config_json(const RunConfig& cfg) {
    json j;
    j["mode"] = cfg.mode;
    j["e1"] = complex_json(cfg.spectral.e1);
    j["e3"] = complex_json(cfg.spectral.e3);
    j["epsilon"] = cfg.spectral.epsilon;
    j["alpha"] = cfg.spectral.alpha;
    j["beta"] = cfg.spectral.beta;
    j["grid"] = json{{"x0", cfg.grid.x0}, {"x1", cfg.grid.x1}, {"nx", cfg.grid.nx},
                     {"t0", cfg.grid.t0}, {"t1", cfg.grid.t1}, {"nt", cfg.grid.nt}};
    j["quadrature_nodes"] = cfg.quadrature_nodes;
    j["theta_truncation"] = cfg.theta_truncation;
    j["out"] = cfg.out;
    j["suite"] = cfg.suite;
    return j;
}

}  // namespace

std::string serialize_config(const RunConfig& cfg) { return config_json(cfg).dump(2) + "\n"; }

std::string output_path(const RunConfig& cfg) {
    if (!cfg.out.empty()) return cfg.out;
    return cfg.mode == "verify" ? "report.json" : cfg.mode + ".csv";
}

std::string sidecar_path(const RunConfig& cfg) {
    std::filesystem::path p(output_path(cfg));
    return p.replace_extension(".meta.json").string();
}

namespace {

// Files are staged as <name>.tmp and renamed only once everything succeeded.
class Staging {
public:
    std::ofstream open(const std::string& final_path) {
        std::string tmp = final_path + ".tmp";
        staged_.push_back({tmp, final_path});
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        return os;
    }
    void commit() {
        for (const auto& [tmp, fin] : staged_) std::filesystem::rename(tmp, fin);
        staged_.clear();
    }
    ~Staging() {
        std::error_code ec;
        for (const auto& [tmp, fin] : staged_) std::filesystem::remove(tmp, ec);
    }

private:
    std::vector<std::pair<std::string, std::string>> staged_;
};

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const GridSpec& g, const std::vector<cplx>& q) {
    os << "x,t,re_q,im_q,abs_q\n";
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) {
            cplx v = q[size_t(j) * g.nx + i];
            os << fmt12(g.x(i)) << ',' << fmt12(g.t(j)) << ',' << fmt12(v.real()) << ',' << fmt12(v.imag()) << ','
               << fmt12(std::abs(v)) << '\n';
        }
}

double quadrature_self_check(int n) {
    const double expect[3] = {kPi, kPi / 2.0, 3.0 * kPi / 8.0};
    double worst = 0.0;
    for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(gauss_chebyshev([k](double t) { return cplx(std::pow(t, k)); }, n) - expect[k]));
    return worst;
}

json criteria_json(const std::vector<CriterionResult>& rs, bool& all) {
    json arr = json::array();
    all = true;
    for (const auto& r : rs) {
        json m = json::object();
        for (const auto& [k, v] : r.measured) m[k] = std::isfinite(v) ? json(v) : json(nullptr);
        arr.push_back(json{{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"measured", m},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        all = all && r.passed;
    }
    return arr;
}

int run_checked(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    const SpectralConfig& sc = cfg.spectral;
    Staging stage;
    json tol = json::object();
    tol["quadrature_self_check"] = json{{"nodes", cfg.quadrature_nodes},
                                        {"moment_error", quadrature_self_check(cfg.quadrature_nodes)}};

    if (cfg.mode == "verify") {
        auto results = run_suite(cfg.suite, sc, cfg.grid);
        bool all = false;
        json rep;
        rep["suite"] = cfg.suite;
        rep["version"] = kVersion;
        rep["config"] = config_json(cfg);
        rep["criteria"] = criteria_json(results, all);
        rep["verdict"] = all ? "pass" : "fail";
        rep["timing"] = json{{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
        auto os = stage.open(output_path(cfg));
        os << rep.dump(2) << '\n';
        os.close();
        if (!os) throw std::runtime_error("write failed: " + output_path(cfg));
        stage.commit();
        return all ? 0 : 1;
    }

    FieldSampler field;
    LimitSolitonParams sp;
    ThetaSolutionData td;
    double dlim = 0.0;
    if (cfg.mode == "soliton") {
        sp = soliton_params(sc);
        tol["soliton"] = json{{"B", sp.B}, {"B_below_one", sp.b_below_one}};
        field = [&](double x, double t) { return q_soliton(x, t, sp); };
    } else if (cfg.mode == "planewave") {
        field = [&](double x, double t) { return q_planewave(x, t, sc); };
    } else if (cfg.mode == "peregrine") {
        field = [&](double x, double t) { return q_peregrine(x, t, sc.e1); };
    } else if (cfg.mode == "theta") {
        td = theta_solution_data(sc);
        tol["theta"] = json{{"normalization_residual", td.normalization_residual},
                            {"differential_a_residual", td.differential_a_residual},
                            {"symmetry_error", td.symmetry_error},
                            {"conjugation_error", td.conjugation_error},
                            {"reality_error", td.reality_error},
                            {"re_b_eigenvalues", {td.re_b_eigenvalues[0], td.re_b_eigenvalues[1]}},
                            {"omega0", td.omega0},
                            {"truncation", cfg.theta_truncation}};
        field = [&](double x, double t) { return q_theta(x, t, sc, td, cfg.theta_truncation); };
    } else if (cfg.mode == "rhp-limit") {
        dlim = d_infinity_limit(sc);
        NormalizationData nd = normalize(sc);
        ResidualSolution probe = solve_residual(0.5 * (cfg.grid.x0 + cfg.grid.x1), 0.5 * (cfg.grid.t0 + cfg.grid.t1), sc);
        tol["rhp"] = json{{"d_infinity_limit", dlim},
                          {"alpha_hat", complex_json(nd.alpha_hat)},
                          {"center_equation_residual", probe.residual},
                          {"center_condition", probe.condition}};
        field = [&](double x, double t) { return q_limit_rhp(x, t, sc, dlim); };
    }

    std::vector<cplx> q = evaluate_grid(field, cfg.grid);
    for (cplx v : q)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConvergenceError("non-finite field value on the grid");

    {
        auto os = stage.open(output_path(cfg));
        write_csv(os, cfg.grid, q);
        os.close();
        if (!os) throw std::runtime_error("write failed: " + output_path(cfg));
    }
    json meta;
    meta["version"] = kVersion;
    meta["config"] = config_json(cfg);
    meta["tolerances"] = tol;
    meta["timing"] = json{{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
                          {"threads", grid_threads()}};
    {
        auto os = stage.open(sidecar_path(cfg));
        os << meta.dump(2) << '\n';
        os.close();
        if (!os) throw std::runtime_error("write failed: " + sidecar_path(cfg));
    }
    stage.commit();
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::string& err) {
    try {
        validate_run_config(cfg);
    } catch (const ConfigError& e) {
        err = e.what();
        return 2;
    }
    try {
        return run_checked(cfg);
    } catch (const ConfigError& e) {
        err = e.what();
        return 2;
    } catch (const std::exception& e) {
        err = e.what();
        return 1;
    }
}

}  // namespace twophase
