#include "hinfsyn/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

namespace {

Complex loop_sensitivity(const DelayRationalTF& plant, const TransferFn& c, Complex s) {
    const Complex loop = 1.0 + plant(s) * c(s);
    if (std::abs(loop) < 1e-12)
        throw PoleHit(s);
    return 1.0 / loop;
}

} // namespace

TransferFn weight_one(const WeightConfig& w) {
    const double rho = w.rho;
    return [rho](Complex) { return Complex(rho, 0.0); };
}

RationalTF weight_two(const WeightConfig& w) {
    return {Polynomial{1.0, w.alpha}, Polynomial{w.beta, 1.0}};
}

TransferFn weighted_sensitivity(const PlantFactorization& fact, const TransferFn& c,
                                const WeightConfig& w) {
    const DelayRationalTF plant = fact.plant;
    const double rho = w.rho;
    return [plant, c, rho](Complex s) { return rho * loop_sensitivity(plant, c, s); };
}

TransferFn weighted_complementary(const PlantFactorization& fact, const TransferFn& c,
                                  const WeightConfig& w) {
    const DelayRationalTF plant = fact.plant;
    const RationalTF w2 = weight_two(w);
    return [plant, c, w2](Complex s) {
        const Complex sens = loop_sensitivity(plant, c, s);
        return w2(s) * plant(s) * c(s) * sens;
    };
}

double mixed_sensitivity_norm(const PlantFactorization& fact, const Controller& c,
                              const WeightConfig& w, const GridOptions& opts, int threads) {
    const TransferFn cf = controller_fn(c);
    return hinf_norm_stacked(weighted_sensitivity(fact, cf, w),
                             weighted_complementary(fact, cf, w), opts, threads);
}

IdentityResiduals reduction_identities(const PlantFactorization& fact, const BezoutPair& bez,
                                       const TransferFn& c, const WeightConfig& w,
                                       const FrequencyGrid& grid) {
    const TransferFn q1 = recover_q1(fact, bez, c);
    const DelayRationalTF outer_inv = fact.outer.inverse();
    const RationalTF w2 = weight_two(w);
    IdentityResiduals r;
    for (double omega : grid.points()) {
        const Complex s(0.0, omega);
        const Complex sens = loop_sensitivity(fact.plant, c, s);
        const Complex comp = fact.plant(s) * c(s) * sens;
        const Complex n = fact.num_inner(s) * fact.outer(s);
        const Complex m = fact.den_inner(s);
        const Complex q1s = q1(s);
        const Complex param_sens = m * (bez.y(s) - fact.num_inner(s) * q1s);

        r.bezout = std::max(r.bezout, std::abs(n * bez.x(s) + m * bez.y(s) - 1.0));
        r.sensitivity = std::max(r.sensitivity, std::abs(sens - param_sens));
        r.complementary = std::max(
            r.complementary, std::abs(comp - n * (bez.x(s) + m * outer_inv(s) * q1s)));
        r.weighted = std::max(r.weighted, std::abs(w2(s) * comp - w2(s) * (1.0 - param_sens)));
    }
    return r;
}

ClosedLoopReport verify_closed_loop(const PlantFactorization& fact, const WeightConfig& w,
                                    const Controller& c, const GridOptions& opts, int threads) {
    ClosedLoopReport rep;
    rep.gamma_opt = c.gamma_opt;
    rep.achieved_norm = mixed_sensitivity_norm(fact, c, w, opts, threads);

    const FrequencyGrid base = default_grid(opts);
    const TransferFn cf = controller_fn(c);
    const auto stacked = stacked_magnitudes(weighted_sensitivity(fact, cf, w),
                                            weighted_complementary(fact, cf, w), base, threads);
    for (double v : stacked)
        rep.flatness_deviation =
            std::max(rep.flatness_deviation, std::abs(v - c.gamma_opt) / c.gamma_opt);

    const BezoutPair bez = solve_bezout(fact);
    rep.residuals = reduction_identities(fact, bez, cf, w, base);

    const TransferFn q1 = recover_q1(fact, bez, cf);
    for (double omega : base.points())
        rep.q1_bound = std::max(rep.q1_bound, std::abs(q1(Complex(0.0, omega))));
    return rep;
}

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void write_report_json(const ClosedLoopReport& r, const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open " + path + " for writing");
    os << "{\n";
    os << "  \"achieved_norm\": " << fmt17(r.achieved_norm) << ",\n";
    os << "  \"gamma_opt\": " << fmt17(r.gamma_opt) << ",\n";
    os << "  \"flatness_deviation\": " << fmt17(r.flatness_deviation) << ",\n";
    os << "  \"identity_residuals\": {\n";
    os << "    \"bezout\": " << fmt17(r.residuals.bezout) << ",\n";
    os << "    \"sensitivity\": " << fmt17(r.residuals.sensitivity) << ",\n";
    os << "    \"complementary\": " << fmt17(r.residuals.complementary) << ",\n";
    os << "    \"weighted\": " << fmt17(r.residuals.weighted) << "\n";
    os << "  },\n";
    os << "  \"q1_bound\": " << fmt17(r.q1_bound) << "\n";
    os << "}\n";
    if (!os)
        throw IoError("write failed: " + path);
}

void write_stacked_csv(const PlantFactorization& fact, const Controller& c,
                       const WeightConfig& w, const FrequencyGrid& grid,
                       const std::string& path, int threads) {
    const TransferFn cf = controller_fn(c);
    const auto mags = stacked_magnitudes(weighted_sensitivity(fact, cf, w),
                                         weighted_complementary(fact, cf, w), grid, threads);
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open " + path + " for writing");
    os << "omega,magnitude\n";
    char buf[96];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", grid[i], mags[i]);
        os << buf;
    }
    if (!os)
        throw IoError("write failed: " + path);
}

} // namespace hinfsyn
