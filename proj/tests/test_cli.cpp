#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "twophase/cli.hpp"

using namespace twophase;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("twophase_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
};

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

const char* kSoliton = R"({"mode": "soliton", "e1": [1, 1], "e3": [-1, 1.5], "epsilon": 1e-3,
  "alpha": 0.3, "beta": "pi", "grid": "-1:1:5,-0.5:0.5:3"})";

}  // namespace

TEST_CASE("config round trip") {
    RunConfig c = parse_config(kSoliton);
    CHECK(c.mode == "soliton");
    CHECK(c.spectral.beta == kPi);
    CHECK(c.grid.nx == 5);
    RunConfig back = parse_config(serialize_config(c));
    CHECK(back.spectral.e1 == c.spectral.e1);
    CHECK(back.grid.t1 == c.grid.t1);
    CHECK(serialize_config(back) == serialize_config(c));
}

TEST_CASE("config errors") {
    CHECK(error_of("{\"mode\": \"soliton\",\n  \"e1\": [1, 1,]}").find("line 2") != std::string::npos);
    CHECK(error_of(R"({"mode": "soliton", "colour": 1})").find("colour") != std::string::npos);
    CHECK(error_of(R"({"mode": "soliton", "e1": [-2, 1], "e3": [-1, 1.5]})").find("Re(E1) > Re(E3)") !=
          std::string::npos);
    CHECK(error_of(R"({"mode": "planewave", "beta": 4})").find("range error") != std::string::npos);
    CHECK(error_of(R"({"mode": "wave"})").find("mode") != std::string::npos);
    CHECK(error_of(R"({"mode": "soliton", "beta": 1.0})").find("beta") != std::string::npos);
    CHECK(error_of(R"({"mode": "verify", "suite": "nope"})").find("suite") != std::string::npos);
    CHECK_THROWS_AS(parse_grid_spec("0:1:5"), ConfigError);
    CHECK_THROWS_AS(parse_grid_spec("0:1:1,0:1:2"), ConfigError);
    GridSpec g = parse_grid_spec("-2:2:9,0:1:3");
    CHECK(g.x0 == -2.0);
    CHECK(g.nt == 3);
}

TEST_CASE("run writes deterministic CSV and a sidecar") {
    TempDir tmp;
    RunConfig c = parse_config(kSoliton);
    c.out = (tmp.dir / "a.csv").string();
    std::string err;
    REQUIRE(run(c, err) == 0);
    std::string first = slurp(c.out);
    CHECK(first.rfind("x,t,re_q,im_q,abs_q\n", 0) == 0);
    CHECK(std::count(first.begin(), first.end(), '\n') == 16);
    REQUIRE(run(c, err) == 0);
    CHECK(slurp(c.out) == first);

    auto meta = nlohmann::json::parse(slurp(sidecar_path(c)));
    CHECK(meta["version"] == kVersion);
    CHECK(meta.contains("tolerances"));
    CHECK(meta.contains("timing"));
    CHECK(meta["config"]["mode"] == "soliton");
}

TEST_CASE("plane wave modulus column") {
    TempDir tmp;
    RunConfig c = parse_config(R"({"mode": "planewave", "e1": [0.5, 1.25], "grid": "0:1:3,0:1:2"})");
    c.out = (tmp.dir / "p.csv").string();
    std::string err;
    REQUIRE(run(c, err) == 0);
    std::istringstream in(slurp(c.out));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) CHECK(line.substr(line.rfind(',') + 1) == "1.25");
}

TEST_CASE("failures leave no partial output") {
    TempDir tmp;
    RunConfig c = parse_config(kSoliton);
    c.out = (tmp.dir / "r.csv").string();
    c.spectral.epsilon = -1.0;
    std::string err;
    CHECK(run(c, err) == 2);
    CHECK(err.find("epsilon > 0") != std::string::npos);
    CHECK(fs::is_empty(tmp.dir));

    // a numerical failure midway through the grid
    c = parse_config(kSoliton);
    c.mode = "theta";
    c.theta_truncation = 1;
    c.out = (tmp.dir / "r.csv").string();
    err.clear();
    CHECK(run(c, err) == 1);
    CHECK(err.find("truncation") != std::string::npos);
    CHECK(fs::is_empty(tmp.dir));
}
