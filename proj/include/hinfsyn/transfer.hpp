#pragma once

#include <functional>

#include "hinfsyn/polynomial.hpp"

namespace hinfsyn {

// Pointwise-evaluatable transfer function; closures built from the types below
// or assembled on the fly (X, Q1, closed loops).
using TransferFn = std::function<Complex(Complex)>;

// Degree-scaled threshold below which a denominator value counts as a pole hit.
double pole_threshold(Complex s, int den_degree);

// Ratio of two real polynomials.
struct RationalTF {
    Polynomial num;
    Polynomial den;

    Complex operator()(Complex s) const;

    static RationalTF constant(double c) { return {Polynomial{c}, Polynomial{1.0}}; }
    TransferFn fn() const;
};

// p0(s) + p1(s) e^{-hs}
struct QuasiPolynomial {
    Polynomial p0;
    Polynomial p1;
    double h = 0.0;

    Complex operator()(Complex s) const;
    Complex derivative(Complex s) const;
    int degree() const { return std::max(p0.degree(), p1.degree()); }
    bool is_zero() const { return p0.is_zero() && p1.is_zero(); }
};

// (num0(s) + num1(s) e^{-hs}) / (den0(s) + den1(s) e^{-hs})
struct DelayRationalTF {
    Polynomial num0;
    Polynomial num1;
    Polynomial den0;
    Polynomial den1;
    double h = 0.0;

    Complex operator()(Complex s) const;

    QuasiPolynomial numerator() const { return {num0, num1, h}; }
    QuasiPolynomial denominator() const { return {den0, den1, h}; }
    // Valid whenever the numerator quasi-polynomial has no right-half-plane zeros.
    DelayRationalTF inverse() const { return {den0, den1, num0, num1, h}; }
    TransferFn fn() const;
};

} // namespace hinfsyn
