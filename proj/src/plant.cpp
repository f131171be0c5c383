#include "hinfsyn/plant.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

void PlantParams::validate() const {
    if (!(k > 1.0))
        throw InvalidParams("plant gain must satisfy k > 1");
    if (!(b > 0.0))
        throw InvalidParams("plant parameter must satisfy b > 0");
    if (!(a > b))
        throw InvalidParams("plant zero must satisfy a > b");
    if (!(h > 0.0))
        throw InvalidParams("delay must satisfy h > 0");
}

PlantFactorization factor_plant(const PlantParams& p) {
    p.validate();
    PlantFactorization f;
    f.params = p;
    f.num_inner = {Polynomial{-p.a, 1.0}, Polynomial{p.a, 1.0}};
    // outer = k(s+a) / (k(s+a) + (s-b) e^{-hs})
    f.outer = {Polynomial{p.k * p.a, p.k}, Polynomial{},
               Polynomial{p.k * p.a, p.k}, Polynomial{-p.b, 1.0}, p.h};
    // den_inner = ((s+b) + k(s-a) e^{-hs}) / (k(s+a) + (s-b) e^{-hs})
    f.den_inner = {Polynomial{p.b, 1.0}, Polynomial{-p.k * p.a, p.k},
                   Polynomial{p.k * p.a, p.k}, Polynomial{-p.b, 1.0}, p.h};
    // plant = k(s-a) / ((s+b) + k(s-a) e^{-hs})
    f.plant = {Polynomial{-p.k * p.a, p.k}, Polynomial{},
               Polynomial{p.b, 1.0}, Polynomial{-p.k * p.a, p.k}, p.h};
    return f;
}

bool check_inner(const DelayRationalTF& f, const FrequencyGrid& grid, double tol, unsigned seed) {
    for (double w : grid.points()) {
        if (std::abs(std::abs(f(Complex(0.0, w))) - 1.0) > tol)
            return false;
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> re(-1.0, 1.0);
    std::uniform_real_distribution<double> im(-10.0, 10.0);
    for (int i = 0; i < 20; ++i) {
        const Complex s(re(rng), im(rng));
        if (std::abs(f(s) * f(-s) - 1.0) > tol)
            return false;
    }
    return true;
}

Complex refine_plant_pole(const PlantParams& p, int n, int iterations) {
    p.validate();
    const QuasiPolynomial den{Polynomial{p.b, 1.0}, Polynomial{-p.k * p.a, p.k}, p.h};
    Complex s(std::log(p.k) / p.h, (2 * n + 1) * std::numbers::pi / p.h);
    for (int i = 0; i < iterations; ++i) {
        const Complex d = den.derivative(s);
        if (std::abs(d) == 0.0)
            break;
        s -= den(s) / d;
    }
    return s;
}

} // namespace hinfsyn
