#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace hinfsyn {

using Complex = std::complex<double>;

// Real-coefficient polynomial, dense ascending storage: c[0] + c[1] s + c[2] s^2 + ...
// Trailing zero coefficients are trimmed so the leading coefficient is nonzero
// unless this is the zero polynomial (stored as the single coefficient 0).
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> c) : coeffs_(c) { trim(); }
    explicit Polynomial(std::vector<double> c) : coeffs_(std::move(c)) { trim(); }

    static Polynomial constant(double c) { return Polynomial{c}; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.back(); }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(int i) const;
    double max_abs_coeff() const;

    double operator()(double s) const;
    Complex operator()(Complex s) const;

    Polynomial derivative() const;

    // Drops all coefficients above max_degree; throws if a dropped coefficient
    // is not negligible relative to the largest kept one.
    Polynomial truncated(int max_degree, double rel_tol = 1e-9) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(double c, const Polynomial& p);

private:
    void trim();
    std::vector<double> coeffs_;
};

// All complex roots, by Durand-Kerner iteration (degrees here are tiny).
std::vector<Complex> find_roots(const Polynomial& p);

} // namespace hinfsyn
