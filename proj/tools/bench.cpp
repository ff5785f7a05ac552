// Serial reference kernel vs the OpenMP kernel on the three expensive fields.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "twophase/closed_form.hpp"
#include "twophase/finite_genus.hpp"
#include "twophase/grid.hpp"
#include "twophase/normalization.hpp"
#include "twophase/residual_rhp.hpp"

using namespace twophase;

namespace {

double seconds_of(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void compare(const char* name, const FieldSampler& f, const GridSpec& g) {
    std::vector<cplx> s, p;
    double ts = seconds_of([&] { s = evaluate_grid_serial(f, g, PointErrors::nan_on_domain); });
    double tp = seconds_of([&] { p = evaluate_grid(f, g, PointErrors::nan_on_domain); });
    bool same = std::memcmp(s.data(), p.data(), s.size() * sizeof(cplx)) == 0;
    std::printf("%-10s %6zu pts  serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", name, g.size(), ts, tp,
                ts / tp, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::stoi(argv[1]) : 1;
    SpectralConfig cfg{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    GridSpec g{-4, 4, 40 * scale + 1, -2, 2, 20 * scale + 1};
    std::printf("threads %d\n", grid_threads());

    LimitSolitonParams sp = soliton_params(cfg);
    compare("soliton", [&](double x, double t) { return q_soliton(x, t, sp); }, g);

    double dlim = d_infinity_limit(cfg);
    compare("rhp-limit", [&](double x, double t) { return q_limit_rhp(x, t, cfg, dlim); }, g);

    ThetaSolutionData data = theta_solution_data(cfg);
    compare("theta", [&](double x, double t) { return q_theta(x, t, cfg, data); }, g);
    return 0;
}
