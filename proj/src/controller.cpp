#include "hinfsyn/controller.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

Controller synthesize(const PlantFactorization& fact, const WeightConfig& w,
                      const GammaSearchResult& result) {
    const double g = result.gamma_opt;
    const GammaPoint gs = gamma_point(w, g);
    const double k = fact.params.k;
    const double a = fact.params.a;
    const double b = fact.params.b;

    std::array<double, 4> l = result.l;
    const double lnorm = std::sqrt(l[0] * l[0] + l[1] * l[1] + l[2] * l[2] + l[3] * l[3]);
    if (std::abs(l[2]) < 1e-12 * lnorm && std::abs(l[3]) < 1e-12 * lnorm)
        throw DegenerateL("null vector has l20 = l21 = 0; K1 would vanish identically");
    // The null direction's scale is free (the controller is homogeneous of
    // degree zero in l); fix the gauge so the K1 numerator leading coefficient
    // k*l21 equals 2, falling back to the unit-norm vector if l21 degenerates.
    if (std::abs(l[3]) > 1e-9 * lnorm) {
        const double scale = (2.0 / k) / l[3];
        for (double& c : l)
            c *= scale;
    }
    const double l10 = l[0], l11 = l[1];
    const double l20 = l[2], l21 = l[3];

    Controller c;
    c.gamma_opt = g;
    c.h = fact.params.h;
    c.k1 = {Polynomial{k * l20, k * l21}, Polynomial{g * w.beta, g}};
    c.k_f = (k * gs.b_gamma * l11 - g * l21) / (g * g - w.alpha * w.alpha);

    const Polynomial shared_den =
        Polynomial{1.0 - g * g * w.beta * w.beta, 0.0, g * g - w.alpha * w.alpha} *
        Polynomial{-a, 1.0};

    // k_f + A over the shared denominator; the cubic coefficient of the
    // difference cancels by the definition of k_f.
    const Polynomial num_kf_a =
        k * (Polynomial{a, 1.0} * Polynomial{gs.a_gamma, gs.b_gamma} * Polynomial{l10, l11}) +
        g * (Polynomial{w.beta, -1.0} * Polynomial{l20, l21} * Polynomial{b, 1.0});
    const Polynomial num_a = (num_kf_a - c.k_f * shared_den).truncated(2, 1e-7);

    const Polynomial num_b =
        Polynomial{-b, 1.0} * Polynomial{gs.a_gamma, gs.b_gamma} * Polynomial{l10, l11} +
        k * g * (Polynomial{w.beta, -1.0} * Polynomial{l20, l21} * Polynomial{-a, 1.0});

    c.a = {num_a, shared_den};
    c.b = {num_b, shared_den};
    return c;
}

std::array<Complex, 3> shared_denominator_roots(const Controller& c) {
    const Polynomial& d = c.a.den;
    if (d.degree() != 3 || d.coeff(3) == 0.0)
        throw Error("shared denominator is not the expected cubic");
    const double a = -d.coeff(2) / d.coeff(3);
    const double w2 = d.coeff(1) / d.coeff(3);
    if (w2 == 0.0)
        throw Error("shared denominator quadratic factor is degenerate");
    // Consistency of the factored form (c0 + c2 s^2)(s - a).
    if (std::abs(d.coeff(0) + a * d.coeff(1)) > 1e-6 * d.max_abs_coeff())
        throw Error("shared denominator does not factor as (c0 + c2 s^2)(s - a)");
    // w2 > 0: conjugate pair at +-j omega_gamma (primary branch);
    // w2 < 0: real pair at +-nu (continuation branch above 1/beta).
    if (w2 > 0.0) {
        const double w = std::sqrt(w2);
        return {Complex(a, 0.0), Complex(0.0, w), Complex(0.0, -w)};
    }
    const double nu = std::sqrt(-w2);
    return {Complex(a, 0.0), Complex(nu, 0.0), Complex(-nu, 0.0)};
}

namespace {

constexpr double kRemovableRadius = 1e-4;

Complex eval_raw(const Controller& c, Complex s) {
    const Complex k2 = c.a(s) + c.b(s) * std::exp(-c.h * s);
    const Complex k1 = c.k1(s);
    if (std::abs(k1) == 0.0)
        throw PoleHit(s);
    return (c.k_f + k2) / k1;
}

} // namespace

Complex eval_controller(const Controller& c, Complex s) {
    for (Complex p : shared_denominator_roots(c)) {
        if (std::abs(s - p) < kRemovableRadius)
            return 0.5 * (eval_raw(c, p + kRemovableRadius) + eval_raw(c, p - kRemovableRadius));
    }
    return eval_raw(c, s);
}

TransferFn controller_fn(const Controller& c) {
    return [c](Complex s) { return eval_controller(c, s); };
}

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_coeffs(std::ostream& os, const Polynomial& p) {
    os << '[';
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? ", " : "") << fmt17(c[i]);
    os << ']';
}

void write_block(std::ostream& os, const char* name, const RationalTF& tf, bool last = false) {
    os << "  \"" << name << "\": {\"num\": ";
    write_coeffs(os, tf.num);
    os << ", \"den\": ";
    write_coeffs(os, tf.den);
    os << '}' << (last ? "" : ",") << '\n';
}

Polynomial coeffs_from_json(const nlohmann::json& j) {
    std::vector<double> c;
    for (const auto& v : j)
        c.push_back(v.get<double>());
    return Polynomial(std::move(c));
}

} // namespace

void save_controller(const Controller& c, const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open " + path + " for writing");
    os << "{\n";
    os << "  \"gamma_opt\": " << fmt17(c.gamma_opt) << ",\n";
    os << "  \"k_f\": " << fmt17(c.k_f) << ",\n";
    os << "  \"h\": " << fmt17(c.h) << ",\n";
    write_block(os, "K1", c.k1);
    write_block(os, "A", c.a);
    write_block(os, "B", c.b, true);
    os << "}\n";
    if (!os)
        throw IoError("write failed: " + path);
}

Controller load_controller(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
        Controller c;
        c.gamma_opt = j.at("gamma_opt").get<double>();
        c.k_f = j.at("k_f").get<double>();
        c.h = j.at("h").get<double>();
        c.k1 = {coeffs_from_json(j.at("K1").at("num")), coeffs_from_json(j.at("K1").at("den"))};
        c.a = {coeffs_from_json(j.at("A").at("num")), coeffs_from_json(j.at("A").at("den"))};
        c.b = {coeffs_from_json(j.at("B").at("num")), coeffs_from_json(j.at("B").at("den"))};
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed controller file " + path + ": " + e.what());
    }
}

} // namespace hinfsyn
