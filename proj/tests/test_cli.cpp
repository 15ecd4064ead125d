// End-to-end tests through the installed binary: exit codes, determinism of
// the written artifacts, and validity of the SVG output. The binary path
// comes from the HAWKES_BIN environment variable set by CTest.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string binary_path() {
    const char* p = std::getenv("HAWKES_BIN");
    REQUIRE_MESSAGE(p != nullptr, "HAWKES_BIN must point at the CLI binary");
    return p;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "hawkes_cli_tests";
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kTwoTypeBody = R"({
  "model": {
    "mu": [1.0, 1.0],
    "kernels": [
      [{"family": "exponential", "mass": 0.3, "rate": 1.0},
       {"family": "exponential", "mass": 0.2, "rate": 1.0}],
      [{"family": "exponential", "mass": 0.1, "rate": 1.0},
       {"family": "exponential", "mass": 0.4, "rate": 1.0}]
    ]
  },
  "window": {"a": 0.0, "b": 1.0},
  "burn_in": {"initial": 8.0},
  "n_reps": 1500,
  "u_grid": [0.5, 1.0],
  "seed": 42,
  "certificate": {"policy": "fixed", "r": 0.5}
})";

// Well-formedness scan: every open tag matches its close, one root element.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    int roots = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;  // declaration / comment
        const bool closing = tag[0] == '/';
        const bool self_closing = tag.back() == '/';
        std::string name = tag.substr(closing ? 1 : 0);
        if (const auto sp = name.find_first_of(" \t\n/"); sp != std::string::npos)
            name = name.substr(0, sp);
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            if (stack.empty()) ++roots;
        } else if (!self_closing) {
            stack.push_back(name);
        } else if (stack.empty()) {
            ++roots;
        }
    }
    return stack.empty() && roots == 1;
}

}  // namespace

TEST_CASE("analyze reports the certificate and exits zero") {
    const auto cfg = write_config("analyze.json", kTwoTypeBody);
    const auto dir = fs::temp_directory_path() / "hawkes_cli_tests" / "analyze_out";
    const RunResult r =
        run_cli("analyze --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("spectral radius") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(dir / "analyze.json"));
    CHECK(j["certificate"]["r"] == 0.5);
    CHECK(j["certificate"]["k"] == doctest::Approx(1.0));
    CHECK(j["xi"] == doctest::Approx(0.08109302162163288));
}

TEST_CASE("analyze exits 2 when the fixed ratio is below the spectral radius") {
    std::string body = kTwoTypeBody;
    const auto pos = body.find("\"r\": 0.5");
    body.replace(pos, 8, "\"r\": 0.4");
    const auto cfg = write_config("analyze_bad.json", body);
    const RunResult r = run_cli("analyze --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("spectral radius") != std::string::npos);
}

TEST_CASE("supercritical model exits 2 with the radius named") {
    const char* body = R"({
      "model": {"mu": [1.0],
                "kernels": [[{"family": "exponential", "mass": 1.2, "rate": 1.0}]]}
    })";
    const auto cfg = write_config("supercritical.json", body);
    const RunResult r = run_cli("simulate --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("1.2") != std::string::npos);
}

TEST_CASE("simulate writes a replayable CSV, byte for byte") {
    const auto cfg = write_config("sim.json", kTwoTypeBody);
    const auto d1 = fs::temp_directory_path() / "hawkes_cli_tests" / "sim1";
    const auto d2 = fs::temp_directory_path() / "hawkes_cli_tests" / "sim2";
    CHECK(run_cli("simulate --config " + cfg.string() + " --out " + d1.string()).exit_code == 0);
    CHECK(run_cli("simulate --config " + cfg.string() + " --out " + d2.string()).exit_code == 0);
    const std::string a = slurp(d1 / "events.csv");
    CHECK(a == slurp(d2 / "events.csv"));
    CHECK(a.rfind("time,type\n", 0) == 0);

    // A different seed changes the realization.
    const auto d3 = fs::temp_directory_path() / "hawkes_cli_tests" / "sim3";
    CHECK(run_cli("simulate --config " + cfg.string() + " --seed 43 --out " + d3.string())
              .exit_code == 0);
    CHECK(a != slurp(d3 / "events.csv"));

    // The thinning engine works through the same subcommand.
    std::string thin_body = kTwoTypeBody;
    thin_body.insert(thin_body.rfind('}'), R"(, "engine": "thinning")");
    const auto thin_cfg = write_config("sim_thin.json", thin_body);
    const auto d4 = fs::temp_directory_path() / "hawkes_cli_tests" / "sim4";
    CHECK(run_cli("simulate --config " + thin_cfg.string() + " --out " + d4.string())
              .exit_code == 0);
    CHECK(slurp(d4 / "events.csv").rfind("time,type\n", 0) == 0);
}

TEST_CASE("zero base rates produce a header-only CSV") {
    const char* body = R"({
      "model": {"mu": [0.0], "kernels": [[{"family": "null"}]]}
    })";
    const auto cfg = write_config("empty.json", body);
    const auto dir = fs::temp_directory_path() / "hawkes_cli_tests" / "empty_out";
    CHECK(run_cli("simulate --config " + cfg.string() + " --out " + dir.string()).exit_code == 0);
    CHECK(slurp(dir / "events.csv") == "time,type\n");
}

TEST_CASE("tiny node cap exits 3") {
    const char* body = R"({
      "model": {"mu": [1.0],
                "kernels": [[{"family": "exponential", "mass": 0.9, "rate": 1.0}]]},
      "window": {"a": 0.0, "b": 5.0},
      "burn_in": 5.0,
      "seed": 7,
      "caps": {"max_cluster_nodes": 2}
    })";
    const auto cfg = write_config("capped.json", body);
    const RunResult r = run_cli("simulate --config " + cfg.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify writes report artifacts and replays identically") {
    const auto cfg = write_config("verify.json", kTwoTypeBody);
    const auto d1 = fs::temp_directory_path() / "hawkes_cli_tests" / "ver1";
    const auto d2 = fs::temp_directory_path() / "hawkes_cli_tests" / "ver2";
    const RunResult r1 =
        run_cli("verify --config " + cfg.string() + " --svg --out " + d1.string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("PASS") != std::string::npos);

    const auto j = nlohmann::json::parse(slurp(d1 / "report.json"));
    CHECK(j["grid"].size() == 2);
    CHECK(j["seed"] == 42);

    // Re-running the same config reproduces the report byte for byte.
    const RunResult r2 =
        run_cli("verify --config " + cfg.string() + " --svg --out " + d2.string());
    CHECK(r2.exit_code == 0);
    CHECK(slurp(d1 / "report.json") == slurp(d2 / "report.json"));
    CHECK(slurp(d1 / "report.csv") == slurp(d2 / "report.csv"));

    // CSV: header plus one row per grid point.
    std::istringstream csv(slurp(d1 / "report.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "u,xi,bound,mgf_point,ci_lo,ci_hi,n,method,verdict");

    // SVG: self-contained well-formed XML.
    const std::string svg = slurp(d1 / "report.svg");
    CHECK(xml_well_formed(svg));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("http://") != std::string::npos);  // only the xmlns
    CHECK(svg.find("href") == std::string::npos);     // no external assets
}

TEST_CASE("absolute xi grids convert to fractions of the abscissa") {
    std::string body = kTwoTypeBody;
    const auto pos = body.find("\"u_grid\": [0.5, 1.0]");
    body.replace(pos, std::strlen("\"u_grid\": [0.5, 1.0]"),
                 "\"xi_grid\": [0.0405465108108164, 0.0810930216216328]");
    const auto cfg = write_config("xigrid.json", body);
    const auto dir = fs::temp_directory_path() / "hawkes_cli_tests" / "xigrid_out";
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    REQUIRE(j["grid"].size() == 2);
    CHECK(j["grid"][0]["u"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(j["grid"][1]["u"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j["grid"][1]["xi"].get<double>() ==
          doctest::Approx(0.08109302162163288).epsilon(1e-9));

    // Out-of-range xi is an error before any simulation.
    body.replace(body.find("0.0810930216216328"), std::strlen("0.0810930216216328"),
                 "0.2");
    const auto bad = write_config("xigrid_bad.json", body);
    CHECK(run_cli("verify --config " + bad.string()).exit_code != 0);
}

TEST_CASE("gw subcommand reports tree statistics and the recursion") {
    std::string body = R"({
      "model": {"mu": [1.0],
                "kernels": [[{"family": "exponential", "mass": 0.5, "rate": 1.0}]]},
      "seed": 5,
      "gw": {"root_type": 1, "t": 0.1, "generations": 30, "n_samples": 20000}
    })";
    const auto cfg = write_config("gw.json", body);
    const auto dir = fs::temp_directory_path() / "hawkes_cli_tests" / "gw_out";
    const RunResult r = run_cli("gw --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "gw.json"));
    CHECK(j["mean_size"].get<double>() == doctest::Approx(2.0).epsilon(0.05));
    CHECK(j["recursion"]["g_limit"][0].get<double>() ==
          doctest::Approx(0.22811470898405108).epsilon(1e-8));
    CHECK(j["univariate"]["xi_max"].get<double>() ==
          doctest::Approx(0.19314718055994531).epsilon(1e-12));
}

TEST_CASE("analyze flags the unbounded abscissa for zero interactions") {
    const char* body = R"({
      "model": {"mu": [1.0, 1.0],
                "kernels": [[{"family": "null"}, {"family": "null"}],
                            [{"family": "null"}, {"family": "null"}]]}
    })";
    const auto cfg = write_config("zero.json", body);
    const auto dir = fs::temp_directory_path() / "hawkes_cli_tests" / "zero_out";
    const RunResult r =
        run_cli("analyze --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "analyze.json"));
    CHECK(j["xi_unbounded"] == true);
    CHECK(j["certificate"]["k"] == 0.0);
    CHECK(j["spectral_radius"] == 0.0);
}

TEST_CASE("unknown config fields exit nonzero with a pointer to the field") {
    const char* body = R"({
      "model": {"mu": [1.0], "kernels": [[{"family": "null"}]]},
      "n_repz": 100
    })";
    const auto cfg = write_config("typo.json", body);
    const RunResult r = run_cli("analyze --config " + cfg.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("n_repz") != std::string::npos);
}
