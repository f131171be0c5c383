#include "hinfsyn/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hinfsyn {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

namespace {

double column_norm_sq(const ComplexMatrix& a, int j) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i)
        s += std::norm(a(i, j));
    return s;
}

} // namespace

Svd jacobi_svd(const ComplexMatrix& input) {
    const int n = input.size();
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 60;

    double max_norm_sq = 0.0;
    for (int j = 0; j < n; ++j)
        max_norm_sq = std::max(max_norm_sq, column_norm_sq(a, j));
    const double dead = max_norm_sq * eps * eps; // columns this small are numerically zero

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                Complex apq = 0.0;
                for (int i = 0; i < n; ++i) {
                    app += std::norm(a(i, p));
                    aqq += std::norm(a(i, q));
                    apq += std::conj(a(i, p)) * a(i, q);
                }
                if (app <= dead || aqq <= dead)
                    continue;
                const double g = std::abs(apq);
                if (g <= 10.0 * eps * std::sqrt(app * aqq))
                    continue;
                rotated = true;
                // Factor out the phase so the 2x2 Gram block is real symmetric,
                // then apply the classic symmetric Jacobi rotation.
                const Complex phase = apq / g;
                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const Complex up = a(i, p);
                    const Complex uq = std::conj(phase) * a(i, q);
                    a(i, p) = c * up - s * uq;
                    a(i, q) = s * up + c * uq;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex up = v(i, p);
                    const Complex uq = std::conj(phase) * v(i, q);
                    v(i, p) = c * up - s * uq;
                    v(i, q) = s * up + c * uq;
                }
            }
        }
        if (!rotated)
            break;
    }

    std::vector<double> sigma(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        sigma[static_cast<std::size_t>(j)] = std::sqrt(column_norm_sq(a, j));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return sigma[static_cast<std::size_t>(i)] >
                                                sigma[static_cast<std::size_t>(j)]; });

    Svd out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
    for (int j = 0; j < n; ++j) {
        out.sigma[static_cast<std::size_t>(j)] = sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
        for (int i = 0; i < n; ++i)
            out.v(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

double sigma_min_ratio(const ComplexMatrix& a) {
    const Svd d = jacobi_svd(a);
    if (d.sigma.front() == 0.0)
        return 0.0;
    return d.sigma.back() / d.sigma.front();
}

} // namespace hinfsyn
