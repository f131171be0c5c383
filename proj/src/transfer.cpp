#include "hinfsyn/transfer.hpp"

#include <cmath>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

double pole_threshold(Complex s, int den_degree) {
    return 1e-12 * (1.0 + std::pow(std::abs(s), den_degree));
}

Complex RationalTF::operator()(Complex s) const {
    const Complex d = den(s);
    if (std::abs(d) < pole_threshold(s, den.degree()))
        throw PoleHit(s);
    return num(s) / d;
}

TransferFn RationalTF::fn() const {
    return [*this](Complex s) { return (*this)(s); };
}

Complex QuasiPolynomial::operator()(Complex s) const {
    return p0(s) + p1(s) * std::exp(-h * s);
}

Complex QuasiPolynomial::derivative(Complex s) const {
    return p0.derivative()(s) + (p1.derivative()(s) - h * p1(s)) * std::exp(-h * s);
}

Complex DelayRationalTF::operator()(Complex s) const {
    const Complex e = std::exp(-h * s);
    const Complex d = den0(s) + den1(s) * e;
    const int deg = std::max(den0.degree(), den1.degree());
    if (std::abs(d) < pole_threshold(s, deg))
        throw PoleHit(s);
    return (num0(s) + num1(s) * e) / d;
}

TransferFn DelayRationalTF::fn() const {
    return [*this](Complex s) { return (*this)(s); };
}

} // namespace hinfsyn
