#include "hinfsyn/impulse.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

ImpulseExpansion expand(const Controller& c) {
    ImpulseExpansion e;
    e.h = c.h;
    if (c.a.num.is_zero() && c.b.num.is_zero())
        return e;

    const auto roots = shared_denominator_roots(c);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-8)
                throw RepeatedDenominatorRoots("shared denominator roots closer than 1e-8");

    // Simple-pole residues: num(p) / den'(p).
    const Polynomial dden = c.a.den.derivative();
    for (Complex p : roots) {
        e.poles.push_back(p);
        e.res_a.push_back(c.a.num(p) / dden(p));
        e.res_b.push_back(c.b.num(p) / dden(p));
    }
    e.direct_b = c.b.num.degree() == c.b.den.degree()
                     ? c.b.num.leading() / c.b.den.leading()
                     : 0.0;
    return e;
}

double impulse_response(const ImpulseExpansion& e, double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < e.poles.size(); ++i) {
        Complex r = e.res_a[i];
        if (t >= e.h)
            r += e.res_b[i] * std::exp(-e.h * e.poles[i]);
        acc += (r * std::exp(e.poles[i] * t)).real();
    }
    return acc;
}

double finite_support_residual(const ImpulseExpansion& e) {
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < e.poles.size(); ++i) {
        worst = std::max(worst,
                         std::abs(e.res_a[i] + e.res_b[i] * std::exp(-e.h * e.poles[i])));
        scale = std::max(scale, std::abs(e.res_a[i]));
    }
    return scale == 0.0 ? 0.0 : worst / scale;
}

bool write_impulse_csv(const ImpulseExpansion& e, double t_max, double dt,
                       const std::string& path) {
    if (!(dt > 0.0) || !(t_max >= 0.0))
        throw InvalidParams("impulse trace needs dt > 0 and t_max >= 0");
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open " + path + " for writing");
    os << "t,value\n";
    char buf[96];
    for (double t = 0.0; t <= t_max + 0.5 * dt; t += dt) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", t, impulse_response(e, t));
        os << buf;
    }
    const bool atom_in_window = e.direct_b != 0.0 && e.h <= t_max;
    if (atom_in_window) {
        std::snprintf(buf, sizeof buf, "# delta,t=%.12g,weight=%.12g\n", e.h, e.direct_b);
        os << buf;
    }
    if (!os)
        throw IoError("write failed: " + path);
    return atom_in_window || e.direct_b == 0.0;
}

} // namespace hinfsyn
