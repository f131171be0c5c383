#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

// End-to-end tests of the built command-line binary (path injected by CMake).

namespace {

const std::string kCli = HINFSYN_CLI_PATH;
const std::string kExampleFlags =
    " --k 2 --a 3 --b 1 --h 0.5 --rho 0.5 --alpha 0.1 --beta 0.4";

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run(const std::string& args, const fs::path& dir) {
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hinfsyn_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static inline int counter = 0;
};

double parse_summary_value(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 3));
}

} // namespace

TEST_CASE("synthesize writes controller, scan and summary") {
    TempDir tmp;
    const RunResult r = run("synthesize" + kExampleFlags + " --out " + tmp.path.string(),
                            tmp.path);
    CHECK(r.code == 0);
    CHECK(fs::exists(tmp.path / "controller.json"));
    CHECK(fs::exists(tmp.path / "gamma_scan.csv"));
    CHECK(fs::exists(tmp.path / "summary.txt"));

    const double gamma = parse_summary_value(r.out, "gamma_opt");
    CHECK(std::abs(gamma - 0.5584) <= 1e-3);
    CHECK(slurp(tmp.path / "summary.txt") == r.out);

    std::ifstream scan(tmp.path / "gamma_scan.csv");
    std::string header;
    std::getline(scan, header);
    CHECK(header == "gamma,sigma_min_ratio");
}

TEST_CASE("synthesize rejects invalid parameters with exit 1") {
    TempDir tmp;
    const RunResult bad_k =
        run("synthesize --k 0.5 --a 3 --b 1 --h 0.5 --rho 0.5 --alpha 0.1 --beta 0.4 --out " +
                tmp.path.string(),
            tmp.path);
    CHECK(bad_k.code == 1);
    CHECK(bad_k.err.find("k > 1") != std::string::npos);

    const RunResult bad_w =
        run("synthesize --k 2 --a 3 --b 1 --h 0.5 --rho 0.5 --alpha 3 --beta 0.4 --out " +
                tmp.path.string(),
            tmp.path);
    CHECK(bad_w.code == 1);
}

TEST_CASE("verify round trip accepts the synthesized controller") {
    TempDir tmp;
    REQUIRE(run("synthesize" + kExampleFlags + " --out " + tmp.path.string(), tmp.path).code == 0);
    const std::string ctl = (tmp.path / "controller.json").string();

    const RunResult ok = run("verify --controller " + ctl + kExampleFlags + " --out " +
                                 tmp.path.string(),
                             tmp.path);
    CHECK(ok.code == 0);
    CHECK(fs::exists(tmp.path / "report.json"));
    CHECK(fs::exists(tmp.path / "stacked_response.csv"));
    CHECK(std::abs(parse_summary_value(ok.out, "achieved_norm") - 0.5584) < 1e-3);

    // corrupt the stored k_f: the closed loop no longer achieves gamma_opt
    nlohmann::json j;
    {
        std::ifstream is(ctl);
        is >> j;
    }
    j["k_f"] = j["k_f"].get<double>() + 0.5;
    {
        std::ofstream os(ctl);
        os << j.dump(2);
    }
    const RunResult corrupted = run("verify --controller " + ctl + kExampleFlags + " --out " +
                                        tmp.path.string(),
                                    tmp.path);
    CHECK(corrupted.code == 2);
}

TEST_CASE("verify reports missing controller file as I/O failure") {
    TempDir tmp;
    const RunResult r = run("verify --controller " + (tmp.path / "nope.json").string() +
                                kExampleFlags + " --out " + tmp.path.string(),
                            tmp.path);
    CHECK(r.code == 3);
}

TEST_CASE("impulse trace export") {
    TempDir tmp;
    REQUIRE(run("synthesize" + kExampleFlags + " --out " + tmp.path.string(), tmp.path).code == 0);
    const std::string ctl = (tmp.path / "controller.json").string();
    const std::string trace = (tmp.path / "impulse.csv").string();

    const RunResult r = run("impulse --controller " + ctl + " --t-max 1.5 --dt 0.001 --out " +
                                trace,
                            tmp.path);
    CHECK(r.code == 0);
    CHECK(r.out.find("finite_support_residual") != std::string::npos);

    // trace vanishes beyond the delay; delta comment carries the published weight
    std::ifstream is(trace);
    std::string line;
    std::getline(is, line);
    REQUIRE(line == "t,value");
    double peak = 0.0, tail = 0.0, delta_weight = 0.0, delta_t = -1.0;
    while (std::getline(is, line)) {
        if (line.rfind("# delta,t=", 0) == 0) {
            delta_t = std::stod(line.substr(10));
            delta_weight = std::stod(line.substr(line.find("weight=") + 7));
            continue;
        }
        const auto comma = line.find(',');
        const double t = std::stod(line.substr(0, comma));
        const double v = std::abs(std::stod(line.substr(comma + 1)));
        if (t < 0.5)
            peak = std::max(peak, v);
        else if (t > 0.5)
            tail = std::max(tail, v);
    }
    CHECK(delta_t == doctest::Approx(0.5));
    CHECK(std::abs(delta_weight + 2.037) < 2e-2);
    CHECK(tail < 1e-6 * peak);
}

TEST_CASE("impulse flag validation and windowing") {
    TempDir tmp;
    REQUIRE(run("synthesize" + kExampleFlags + " --out " + tmp.path.string(), tmp.path).code == 0);
    const std::string ctl = (tmp.path / "controller.json").string();
    const std::string trace = (tmp.path / "impulse.csv").string();

    CHECK(run("impulse --controller " + ctl + " --t-max 1.0 --dt 0 --out " + trace, tmp.path)
              .code == 1);

    // window ends before the delay: trace still written, atom omitted, warning
    const RunResult narrow =
        run("impulse --controller " + ctl + " --t-max 0.3 --dt 0.01 --out " + trace, tmp.path);
    CHECK(narrow.code == 0);
    CHECK(narrow.err.find("outside the trace window") != std::string::npos);
    CHECK(slurp(trace).find("# delta") == std::string::npos);

    CHECK(run("impulse --controller " + (tmp.path / "gone.json").string() +
                  " --t-max 1 --dt 0.01 --out " + trace,
              tmp.path)
              .code == 3);
}

TEST_CASE("identical configuration produces byte-identical controller JSON") {
    TempDir tmp;
    const fs::path d1 = tmp.path / "run1";
    const fs::path d2 = tmp.path / "run2";
    REQUIRE(run("synthesize" + kExampleFlags + " --out " + d1.string(), tmp.path).code == 0);
    REQUIRE(run("synthesize" + kExampleFlags + " --out " + d2.string(), tmp.path).code == 0);
    CHECK(slurp(d1 / "controller.json") == slurp(d2 / "controller.json"));
    CHECK_FALSE(slurp(d1 / "controller.json").empty());
}

TEST_CASE("config file supplies defaults, flags override") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "run.cfg";
    {
        std::ofstream os(cfg);
        os << "k = 2\na = 3\nb = 1\nh = 0.5\nrho = 0.9\nalpha = 0.1\nbeta = 0.4\n";
    }
    const fs::path d1 = tmp.path / "cfg_run";
    // --rho on the command line overrides the config file's 0.9
    const RunResult r = run("synthesize --config " + cfg.string() + " --rho 0.5 --out " +
                                d1.string(),
                            tmp.path);
    CHECK(r.code == 0);

    const fs::path d2 = tmp.path / "flag_run";
    REQUIRE(run("synthesize" + kExampleFlags + " --out " + d2.string(), tmp.path).code == 0);
    CHECK(slurp(d1 / "controller.json") == slurp(d2 / "controller.json"));
}

TEST_CASE("round trip holds across random admissible parameter sets") {
    TempDir tmp;
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uk(1.3, 4.0), ub(0.1, 1.5), uh(0.2, 0.9);
    std::uniform_real_distribution<double> ur(0.3, 0.9), ua(0.05, 0.25), ube(0.25, 0.7);
    for (int trial = 0; trial < 20; ++trial) {
        const double b = ub(rng);
        std::uniform_real_distribution<double> uz(b + 0.5, 5.0);
        std::ostringstream flags;
        flags << " --k " << uk(rng) << " --a " << uz(rng) << " --b " << b << " --h " << uh(rng)
              << " --rho " << ur(rng) << " --alpha " << ua(rng) << " --beta " << ube(rng);
        const fs::path dir = tmp.path / ("trial" + std::to_string(trial));
        // lighter scan/grid settings keep the 20-run sweep quick
        REQUIRE(run("synthesize" + flags.str() + " --scan-points 2000 --out " + dir.string(),
                    tmp.path)
                    .code == 0);
        CHECK(run("verify --controller " + (dir / "controller.json").string() + flags.str() +
                      " --grid-points 800 --out " + dir.string(),
                  tmp.path)
                  .code == 0);
    }
}
