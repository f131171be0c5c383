#include "hinfsyn/bezout.hpp"

#include <algorithm>
#include <cmath>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

namespace {

constexpr double kRemovableRadius = 1e-4;

// Limit value at a removable singularity: symmetric average of two offset
// evaluations, cancelling the first-order term of the 0/0 cancellation error.
Complex offset_limit(const TransferFn& raw, Complex center) {
    return 0.5 * (raw(center + kRemovableRadius) + raw(center - kRemovableRadius));
}

} // namespace

BezoutPair solve_bezout(const PlantFactorization& fact) {
    const auto all = find_roots(fact.num_inner.num);
    std::vector<Complex> zeros;
    for (Complex z : all)
        if (z.real() > 0.0)
            zeros.push_back(z);
    if (zeros.empty())
        throw InvalidParams("inner numerator factor has no right-half-plane zeros");

    double scale = 0.0;
    for (Complex z : zeros)
        scale = std::max(scale, std::abs(z));
    for (std::size_t i = 0; i < zeros.size(); ++i)
        for (std::size_t j = i + 1; j < zeros.size(); ++j)
            if (std::abs(zeros[i] - zeros[j]) < 1e-8 * (1.0 + scale))
                throw RepeatedZeros("zeros of the inner numerator factor must be distinct");

    const std::size_t n = zeros.size();
    std::vector<Complex> values(n); // p(z_i) = (z_i+1)^{n-1} / M(z_i)
    for (std::size_t i = 0; i < n; ++i) {
        const Complex m = fact.den_inner(zeros[i]);
        if (std::abs(m) < 1e-12)
            throw DegenerateM("den_inner vanishes at a plant zero");
        values[i] = std::pow(zeros[i] + 1.0, static_cast<double>(n - 1)) / m;
    }

    // Lagrange interpolation of p in coefficient form. Conjugate-paired zeros
    // give real coefficients; any leftover imaginary part is a data error.
    std::vector<Complex> pc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Complex> basis{1.0};
        Complex denom = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            std::vector<Complex> next(basis.size() + 1, 0.0);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d] += basis[d] * (-zeros[j]);
                next[d + 1] += basis[d];
            }
            basis = std::move(next);
            denom *= zeros[i] - zeros[j];
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            pc[d] += values[i] * basis[d] / denom;
    }
    double im_max = 0.0, re_max = 0.0;
    std::vector<double> pr(n);
    for (std::size_t d = 0; d < n; ++d) {
        im_max = std::max(im_max, std::abs(pc[d].imag()));
        re_max = std::max(re_max, std::abs(pc[d].real()));
        pr[d] = pc[d].real();
    }
    if (im_max > 1e-9 * (1.0 + re_max))
        throw InvalidParams("interpolation data is not conjugate-closed; Y would be complex");

    Polynomial den{1.0};
    for (std::size_t i = 1; i < n; ++i)
        den = den * Polynomial{1.0, 1.0};
    RationalTF y{Polynomial(std::move(pr)), den};

    const RationalTF num_inner = fact.num_inner;
    const DelayRationalTF m = fact.den_inner;
    const DelayRationalTF outer_inv = fact.outer.inverse();
    const TransferFn raw = [num_inner, m, outer_inv, y](Complex s) {
        return (1.0 - m(s) * y(s)) / num_inner(s) * outer_inv(s);
    };
    TransferFn x = [raw, zeros](Complex s) {
        for (Complex z : zeros)
            if (std::abs(s - z) < kRemovableRadius)
                return offset_limit(raw, z);
        return raw(s);
    };
    return {std::move(y), std::move(x)};
}

double bezout_residual(const PlantFactorization& fact, const BezoutPair& bez,
                       const std::vector<Complex>& points) {
    double worst = 0.0;
    for (Complex s : points) {
        const Complex n = fact.num_inner(s) * fact.outer(s);
        const Complex r = n * bez.x(s) + fact.den_inner(s) * bez.y(s) - 1.0;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

TransferFn controller_from_q(const PlantFactorization& fact, const BezoutPair& bez,
                             const TransferFn& q1) {
    const RationalTF num_inner = fact.num_inner;
    const DelayRationalTF m = fact.den_inner;
    const DelayRationalTF outer_inv = fact.outer.inverse();
    const RationalTF y = bez.y;
    const TransferFn x = bez.x;
    return [num_inner, m, outer_inv, y, x, q1](Complex s) {
        const Complex q1s = q1(s);
        const Complex den = y(s) - num_inner(s) * q1s;
        if (std::abs(den) < 1e-12)
            throw DegenerateDenominator("Y - N Q vanishes at evaluation point");
        return (x(s) + m(s) * outer_inv(s) * q1s) / den;
    };
}

TransferFn recover_q1(const PlantFactorization& fact, const BezoutPair& bez, const TransferFn& c) {
    const RationalTF num_inner = fact.num_inner;
    const DelayRationalTF m = fact.den_inner;
    const DelayRationalTF plant = fact.plant;
    const RationalTF y = bez.y;
    const TransferFn raw = [num_inner, m, plant, y, c](Complex s) {
        const Complex loop = 1.0 + plant(s) * c(s);
        if (std::abs(loop) < 1e-12)
            throw PoleHit(s);
        const Complex sens = 1.0 / loop;
        return (y(s) - sens / m(s)) / num_inner(s);
    };
    const Complex zero(fact.params.a, 0.0);
    return [raw, zero](Complex s) {
        if (std::abs(s - zero) < kRemovableRadius)
            return offset_limit(raw, zero);
        return raw(s);
    };
}

} // namespace hinfsyn
