#include "hinfsyn/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0.0);
}

double Polynomial::coeff(int i) const {
    if (i < 0 || i > degree())
        return 0.0;
    return coeffs_[static_cast<std::size_t>(i)];
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::operator()(double s) const {
    double acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * s + *it;
    return acc;
}

Complex Polynomial::operator()(Complex s) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * s + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0)
        return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::truncated(int max_degree, double rel_tol) const {
    if (degree() <= max_degree)
        return *this;
    const double scale = max_abs_coeff();
    for (int i = max_degree + 1; i <= degree(); ++i) {
        if (std::abs(coeffs_[static_cast<std::size_t>(i)]) > rel_tol * scale)
            throw Error("truncation would drop a significant coefficient");
    }
    std::vector<double> kept(coeffs_.begin(), coeffs_.begin() + max_degree + 1);
    return Polynomial(std::move(kept));
}

Polynomial Polynomial::operator-() const {
    std::vector<double> c(coeffs_);
    for (double& x : c)
        x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<double> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i)
        c[i] += q.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return p + (-q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero())
        return Polynomial{};
    std::vector<double> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double c, const Polynomial& p) {
    std::vector<double> r(p.coeffs_);
    for (double& x : r)
        x *= c;
    return Polynomial(std::move(r));
}

std::vector<Complex> find_roots(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1 || p.is_zero())
        return {};
    const double lead = p.leading();
    std::vector<Complex> x(static_cast<std::size_t>(n));
    const Complex seed(0.4, 0.9);
    Complex pw = 1.0;
    for (auto& xi : x) {
        pw *= seed;
        xi = pw;
    }
    for (int iter = 0; iter < 500; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (j != i)
                    denom *= x[i] - x[j];
            const Complex delta = (p(x[i]) / lead) / denom;
            x[i] -= delta;
            if (std::abs(delta) > 1e-14 * (1.0 + std::abs(x[i])))
                converged = false;
        }
        if (converged)
            break;
    }
    return x;
}

} // namespace hinfsyn
