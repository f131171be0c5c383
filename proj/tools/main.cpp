// Command-line front end: synthesize optimal mixed-sensitivity controllers for
// delayed-feedback plants, verify the achieved closed-loop norm against an
// independent frequency-domain sweep, and export impulse-response traces.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hinfsyn/bezout.hpp"
#include "hinfsyn/controller.hpp"
#include "hinfsyn/errors.hpp"
#include "hinfsyn/impulse.hpp"
#include "hinfsyn/verify.hpp"

namespace fs = std::filesystem;
using namespace hinfsyn;

namespace {

// Flat "key = value" config files fill in flags the user did not pass on the
// command line; command-line flags always win.
struct Binding {
    std::string key;
    CLI::Option* opt = nullptr;
    std::function<void(const std::string&)> apply;
    bool required = false;
};

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> parse_flat_config(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trimmed(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParams("config line is not 'key = value': " + line);
        out[trimmed(line.substr(0, eq))] = trimmed(line.substr(eq + 1));
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InvalidParams("bad numeric value for '" + key + "': " + value);
    }
}

struct FlagSet {
    std::vector<Binding> bindings;
    std::string config_path;

    void add_double(CLI::App* cmd, const std::string& flag, double& var,
                    const std::string& desc, bool required = false) {
        Binding b;
        b.key = flag.substr(2);
        b.opt = cmd->add_option(flag, var, desc);
        b.apply = [&var, key = b.key](const std::string& v) { var = parse_double(key, v); };
        b.required = required;
        bindings.push_back(std::move(b));
    }

    void add_int(CLI::App* cmd, const std::string& flag, int& var, const std::string& desc) {
        Binding b;
        b.key = flag.substr(2);
        b.opt = cmd->add_option(flag, var, desc);
        b.apply = [&var, key = b.key](const std::string& v) {
            var = static_cast<int>(parse_double(key, v));
        };
        bindings.push_back(std::move(b));
    }

    void add_string(CLI::App* cmd, const std::string& flag, std::string& var,
                    const std::string& desc) {
        Binding b;
        b.key = flag.substr(2);
        b.opt = cmd->add_option(flag, var, desc);
        b.apply = [&var](const std::string& v) { var = v; };
        bindings.push_back(std::move(b));
    }

    // Merge config-file values under the command-line flags and enforce
    // the required parameters afterwards.
    void finalize() {
        std::map<std::string, std::string> file_vals;
        if (!config_path.empty())
            file_vals = parse_flat_config(config_path);
        for (const Binding& b : bindings) {
            const bool given = b.opt->count() > 0;
            const auto it = file_vals.find(b.key);
            if (!given && it != file_vals.end())
                b.apply(it->second);
            if (b.required && !given && it == file_vals.end())
                throw InvalidParams("missing required parameter --" + b.key);
            if (it != file_vals.end())
                file_vals.erase(it);
        }
        if (!file_vals.empty())
            throw InvalidParams("unknown config key: " + file_vals.begin()->first);
    }
};

struct CommonArgs {
    PlantParams plant;
    WeightConfig weights;
    GridOptions grid;
    int threads = 1;
};

void add_common_flags(CLI::App* cmd, FlagSet& fl, CommonArgs& c) {
    cmd->set_help_flag("--help", "print help"); // frees -h/--h for the delay flag
    fl.add_double(cmd, "--k", c.plant.k, "plant gain (k > 1)", true);
    fl.add_double(cmd, "--a", c.plant.a, "plant zero location (a > b)", true);
    fl.add_double(cmd, "--b", c.plant.b, "plant pole parameter (b > 0)", true);
    fl.add_double(cmd, "--h", c.plant.h, "internal feedback delay, seconds (h > 0)", true);
    fl.add_double(cmd, "--rho", c.weights.rho, "sensitivity weight W1 = rho", true);
    fl.add_double(cmd, "--alpha", c.weights.alpha, "W2 numerator slope", true);
    fl.add_double(cmd, "--beta", c.weights.beta, "W2 denominator offset", true);
    fl.add_double(cmd, "--wmin", c.grid.w_min, "sweep grid lower angular frequency (rad/s)");
    fl.add_double(cmd, "--wmax", c.grid.w_max, "sweep grid upper angular frequency (rad/s)");
    fl.add_int(cmd, "--grid-points", c.grid.base_points, "sweep grid base density");
    fl.add_int(cmd, "--threads", c.threads, "threads for grid scans (<= 0 uses all cores)");
    cmd->add_option("--config", fl.config_path,
                    "key = value file supplying defaults; flags override");
}

std::string coeff_list(const Polynomial& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.9g", p.coeffs()[i]);
        os << (i ? ", " : "") << buf;
    }
    os << ']';
    return os.str();
}

std::string summary_text(const Controller& c, bool continuation) {
    std::ostringstream os;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", c.gamma_opt);
    os << "gamma_opt = " << buf << "\n";
    os << "search_branch = " << (continuation ? "continuation" : "primary") << "\n";
    std::snprintf(buf, sizeof buf, "%.6f", c.k_f);
    os << "k_f = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%g", c.h);
    os << "delay = " << buf << "\n";
    os << "K1.num = " << coeff_list(c.k1.num) << "\n";
    os << "K1.den = " << coeff_list(c.k1.den) << "\n";
    os << "A.num  = " << coeff_list(c.a.num) << "\n";
    os << "B.num  = " << coeff_list(c.b.num) << "\n";
    os << "shared_den = " << coeff_list(c.a.den) << "\n";
    return os.str();
}

int cmd_synthesize(const CommonArgs& c, const std::string& out_dir, int scan_points,
                   double accept_ratio) {
    c.plant.validate();
    c.weights.validate();
    const PlantFactorization fact = factor_plant(c.plant);
    GammaSearchOptions opts;
    opts.scan_points = scan_points;
    opts.accept_ratio = accept_ratio;
    opts.threads = c.threads;
    const GammaSearchResult res = find_gamma_opt(fact, c.weights, opts);
    if (res.l_im_residual > 1e-6)
        std::cerr << "warning: null vector imaginary residual " << res.l_im_residual
                  << " exceeds 1e-6; realified coefficients may be inaccurate\n";
    const Controller ctl = synthesize(fact, c.weights, res);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    save_controller(ctl, out_dir + "/controller.json");

    std::ofstream scan(out_dir + "/gamma_scan.csv");
    if (!scan)
        throw IoError("cannot open " + out_dir + "/gamma_scan.csv for writing");
    scan << "gamma,sigma_min_ratio\n";
    for (const auto& [g, r] : res.curve) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", g, r);
        scan << buf;
    }
    if (!scan)
        throw IoError("write failed: " + out_dir + "/gamma_scan.csv");

    const std::string text = summary_text(ctl, res.continuation);
    std::ofstream summary(out_dir + "/summary.txt");
    if (!summary)
        throw IoError("cannot open " + out_dir + "/summary.txt for writing");
    summary << text;
    std::cout << text;
    return 0;
}

int cmd_verify(const CommonArgs& c, const std::string& controller_path, double tol,
               const std::string& out_dir) {
    c.plant.validate();
    c.weights.validate();
    const PlantFactorization fact = factor_plant(c.plant);
    const Controller ctl = load_controller(controller_path);
    const ClosedLoopReport rep = verify_closed_loop(fact, c.weights, ctl, c.grid, c.threads);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    write_report_json(rep, out_dir + "/report.json");
    write_stacked_csv(fact, ctl, c.weights, default_grid(c.grid),
                      out_dir + "/stacked_response.csv", c.threads);

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "achieved_norm = %.6f\ngamma_opt = %.6f\nrelative_gap = %.3g\nq1_bound = %.4g\n",
                  rep.achieved_norm, rep.gamma_opt,
                  std::abs(rep.achieved_norm - rep.gamma_opt) / rep.gamma_opt, rep.q1_bound);
    std::cout << buf;
    const bool ok = std::abs(rep.achieved_norm - rep.gamma_opt) <= tol * rep.gamma_opt;
    if (!ok)
        std::cerr << "verification failed: achieved norm deviates from gamma_opt by more than "
                  << tol * 100 << "%\n";
    return ok ? 0 : 2;
}

int cmd_impulse(const std::string& controller_path, double t_max, double dt,
                const std::string& out_file) {
    if (!(dt > 0.0)) {
        std::cerr << "error: --dt must be positive\n";
        return 1;
    }
    if (!(t_max >= 0.0)) {
        std::cerr << "error: --t-max must be nonnegative\n";
        return 1;
    }
    const Controller ctl = load_controller(controller_path);
    const ImpulseExpansion e = expand(ctl);
    const bool atom_in_window = write_impulse_csv(e, t_max, dt, out_file);
    if (!atom_in_window)
        std::cerr << "warning: delta atom at t = " << e.h << " lies outside the trace window\n";
    std::cout << "finite_support_residual = " << finite_support_residual(e) << "\n";
    return 0;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const NoSingularGamma& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const PoleHit& e) {
        std::cerr << "error (closed-loop instability evidence): " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-sensitivity H-infinity synthesis for plants with delayed internal feedback"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CommonArgs syn_args;
    FlagSet syn_flags;
    std::string syn_out = ".";
    int scan_points = 4000;
    double accept_ratio = 1e-8;
    CLI::App* syn = app.add_subcommand("synthesize",
                                       "compute the optimal controller and write "
                                       "controller.json, gamma_scan.csv, summary.txt");
    add_common_flags(syn, syn_flags, syn_args);
    syn_flags.add_string(syn, "--out", syn_out, "output directory");
    syn_flags.add_int(syn, "--scan-points", scan_points, "gamma scan density");
    syn_flags.add_double(syn, "--accept-ratio", accept_ratio, "singularity acceptance threshold");

    CommonArgs ver_args;
    FlagSet ver_flags;
    std::string ver_out = ".";
    std::string ver_controller;
    double ver_tol = 0.01;
    CLI::App* ver = app.add_subcommand("verify",
                                       "evaluate the true closed loop and check the achieved "
                                       "norm against the stored gamma_opt");
    add_common_flags(ver, ver_flags, ver_args);
    ver->add_option("--controller", ver_controller, "controller JSON file")->required();
    ver_flags.add_double(ver, "--tol", ver_tol, "relative norm tolerance");
    ver_flags.add_string(ver, "--out", ver_out, "output directory");

    std::string imp_controller;
    std::string imp_out = "impulse.csv";
    double t_max = 0.0;
    double dt = 0.0;
    CLI::App* imp = app.add_subcommand("impulse",
                                       "export the FIR block impulse response as CSV");
    imp->set_help_flag("--help", "print help");
    imp->add_option("--controller", imp_controller, "controller JSON file")->required();
    imp->add_option("--t-max", t_max, "trace end time, seconds")->required();
    imp->add_option("--dt", dt, "sample step, seconds")->required();
    imp->add_option("--out", imp_out, "output CSV file");

    CLI11_PARSE(app, argc, argv);

    if (syn->parsed())
        return guarded([&] {
            syn_flags.finalize();
            return cmd_synthesize(syn_args, syn_out, scan_points, accept_ratio);
        });
    if (ver->parsed())
        return guarded([&] {
            ver_flags.finalize();
            return cmd_verify(ver_args, ver_controller, ver_tol, ver_out);
        });
    return guarded([&] { return cmd_impulse(imp_controller, t_max, dt, imp_out); });
}
