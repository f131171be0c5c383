#include "hinfsyn/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

void WeightConfig::validate() const {
    if (!(rho > 0.0))
        throw InvalidParams("weight level must satisfy rho > 0");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw InvalidParams("weights must satisfy alpha > 0 and beta > 0");
    if (!(alpha * beta < 1.0))
        throw InvalidParams("weights must satisfy alpha*beta < 1");
}

std::pair<double, double> admissible_interval(const WeightConfig& w) {
    w.validate();
    const double lower = std::max(w.alpha, w.rho / std::sqrt(1.0 + w.rho * w.rho * w.beta * w.beta));
    return {lower, 1.0 / w.beta};
}

GammaScalars gamma_scalars(const WeightConfig& w, double gamma) {
    w.validate();
    if (!(gamma > 0.0))
        throw OutOfInterval("gamma must be positive");
    const double rho2 = w.rho * w.rho;
    const double g2 = gamma * gamma;
    const double ra = 1.0 + rho2 * w.beta * w.beta - rho2 / g2;
    const double rb = (1.0 - rho2 / g2) * w.alpha * w.alpha + rho2;
    const double rw_num = 1.0 - g2 * w.beta * w.beta;
    const double rw_den = g2 - w.alpha * w.alpha;
    if (ra <= 0.0 || rb <= 0.0 || rw_den <= 0.0 || rw_num < 0.0)
        throw OutOfInterval("gamma outside the admissible interval");
    GammaScalars g;
    g.gamma = gamma;
    g.a_gamma = std::sqrt(ra);
    g.b_gamma = std::sqrt(rb);
    g.omega_gamma = std::sqrt(rw_num / rw_den);
    g.f_gamma = {Polynomial{gamma * w.beta, -gamma}, Polynomial{g.a_gamma, g.b_gamma}};
    return g;
}

GammaPoint gamma_point(const WeightConfig& w, double gamma) {
    w.validate();
    if (!(gamma > 0.0))
        throw OutOfInterval("gamma must be positive");
    const double rho2 = w.rho * w.rho;
    const double g2 = gamma * gamma;
    const double ra = 1.0 + rho2 * w.beta * w.beta - rho2 / g2;
    const double rb = (1.0 - rho2 / g2) * w.alpha * w.alpha + rho2;
    const double rw_num = 1.0 - g2 * w.beta * w.beta;
    const double rw_den = g2 - w.alpha * w.alpha;
    if (ra <= 0.0 || rb <= 0.0 || rw_den <= 0.0)
        throw OutOfInterval("gamma below the admissible interval");
    GammaPoint g;
    g.gamma = gamma;
    g.a_gamma = std::sqrt(ra);
    g.b_gamma = std::sqrt(rb);
    if (rw_num >= 0.0) {
        g.interp = Complex(0.0, std::sqrt(rw_num / rw_den));
    } else {
        g.interp = Complex(-std::sqrt(-rw_num / rw_den), 0.0);
        g.continuation = true;
    }
    return g;
}

ComplexMatrix interpolation_matrix(const PlantFactorization& fact, const WeightConfig& w,
                                   const GammaScalars& g) {
    GammaPoint p;
    p.gamma = g.gamma;
    p.a_gamma = g.a_gamma;
    p.b_gamma = g.b_gamma;
    p.interp = Complex(0.0, g.omega_gamma);
    return interpolation_matrix(fact, w, p);
}

ComplexMatrix interpolation_matrix(const PlantFactorization& fact, const WeightConfig& w,
                                   const GammaPoint& g) {
    const double a = fact.params.a;
    const Complex x = g.interp;
    const RationalTF f_gamma{Polynomial{g.gamma * w.beta, -g.gamma},
                             Polynomial{g.a_gamma, g.b_gamma}};
    const Complex mu_w = fact.den_inner(x) * f_gamma(x);
    const Complex mu_a = fact.den_inner(Complex(a, 0.0)) * f_gamma(Complex(a, 0.0));
    ComplexMatrix m(4);
    m(0, 0) = 1.0;  m(0, 1) = x;         m(0, 2) = mu_w; m(0, 3) = x * mu_w;
    m(1, 0) = 1.0;  m(1, 1) = a;         m(1, 2) = mu_a; m(1, 3) = a * mu_a;
    m(2, 0) = mu_w; m(2, 1) = -x * mu_w; m(2, 2) = 1.0;  m(2, 3) = -x;
    m(3, 0) = mu_a; m(3, 1) = -a * mu_a; m(3, 2) = 1.0;  m(3, 3) = -a;
    return m;
}

std::vector<double> scan_sigma_ratio_serial(const PlantFactorization& fact, const WeightConfig& w,
                                            const std::vector<double>& gammas) {
    std::vector<double> out(gammas.size());
    for (std::size_t i = 0; i < gammas.size(); ++i)
        out[i] = sigma_min_ratio(interpolation_matrix(fact, w, gamma_point(w, gammas[i])));
    return out;
}

std::vector<double> scan_sigma_ratio(const PlantFactorization& fact, const WeightConfig& w,
                                     const std::vector<double>& gammas, int threads) {
#ifdef _OPENMP
    if (threads != 1) {
        const int nt = threads <= 0 ? omp_get_max_threads() : threads;
        std::vector<double> out(gammas.size());
        std::exception_ptr err = nullptr;
#pragma omp parallel for num_threads(nt) schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(gammas.size()); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = sigma_min_ratio(
                    interpolation_matrix(fact, w, gamma_point(w, gammas[static_cast<std::size_t>(i)])));
            } catch (...) {
#pragma omp critical(hinfsyn_scan_err)
                if (!err)
                    err = std::current_exception();
            }
        }
        if (err)
            std::rethrow_exception(err);
        return out;
    }
#else
    (void)threads;
#endif
    return scan_sigma_ratio_serial(fact, w, gammas);
}

namespace {

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double width) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > width) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

namespace {

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

// Refines every sampled local minimum (plateau-tolerant, ends included) and
// keeps the refined gammas whose ratio clears the acceptance threshold.
std::vector<double> accept_candidates(const std::vector<double>& gammas,
                                      const std::vector<double>& ratios,
                                      const std::function<double(double)>& ratio_at,
                                      const GammaSearchOptions& opts) {
    std::vector<double> candidates;
    const std::size_t n = gammas.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool left_ok = i == 0 || ratios[i] <= ratios[i - 1];
        const bool right_ok = i + 1 == n || ratios[i] <= ratios[i + 1];
        if (!(left_ok && right_ok))
            continue;
        const double bl = gammas[i == 0 ? 0 : i - 1];
        const double br = gammas[i + 1 == n ? n - 1 : i + 1];
        const double g = golden_section_min(ratio_at, bl, br, opts.refine_width);
        if (ratio_at(g) < opts.accept_ratio) {
            bool dup = false;
            for (double c : candidates)
                dup = dup || std::abs(c - g) < 1e-9;
            if (!dup)
                candidates.push_back(g);
        }
    }
    return candidates;
}

} // namespace

GammaSearchResult find_gamma_opt(const PlantFactorization& fact, const WeightConfig& w,
                                 const GammaSearchOptions& opts) {
    const auto [lo, hi] = admissible_interval(w);
    const double margin = opts.relative_margin * (hi - lo);
    const auto ratio_at = [&](double g) {
        return sigma_min_ratio(interpolation_matrix(fact, w, gamma_point(w, g)));
    };

    GammaSearchResult res;
    const auto gammas = linear_grid(lo + margin, hi - margin, opts.scan_points);
    const auto ratios = scan_sigma_ratio(fact, w, gammas, opts.threads);
    for (std::size_t i = 0; i < gammas.size(); ++i)
        res.curve.emplace_back(gammas[i], ratios[i]);
    std::vector<double> candidates = accept_candidates(gammas, ratios, ratio_at, opts);

    if (candidates.empty()) {
        // No singular gamma below 1/beta. Continue the scan on the branch
        // above it, where the interpolation point is real; the margin keeps
        // the refinement away from the structural degeneracy at 1/beta itself.
        const auto ext = linear_grid(hi * 1.001, hi * opts.continuation_span, opts.scan_points);
        const auto ext_ratios = scan_sigma_ratio(fact, w, ext, opts.threads);
        for (std::size_t i = 0; i < ext.size(); ++i)
            res.curve.emplace_back(ext[i], ext_ratios[i]);
        candidates = accept_candidates(ext, ext_ratios, ratio_at, opts);
        res.continuation = true;
    }
    if (candidates.empty())
        throw NoSingularGamma(
            "no gamma makes the matrix singular (admissible interval and continuation)");

    res.gamma_opt = *std::max_element(candidates.begin(), candidates.end());

    const ComplexMatrix m = interpolation_matrix(fact, w, gamma_point(w, res.gamma_opt));
    const Svd svd = jacobi_svd(m);
    res.min_ratio = svd.sigma.front() == 0.0 ? 0.0 : svd.sigma.back() / svd.sigma.front();

    // Null direction: right singular vector of sigma_min, phase-rotated so the
    // largest-modulus entry is real positive, then realified.
    std::array<Complex, 4> v;
    int imax = 0;
    for (int i = 0; i < 4; ++i) {
        v[static_cast<std::size_t>(i)] = svd.v(i, 3);
        if (std::abs(v[static_cast<std::size_t>(i)]) > std::abs(v[static_cast<std::size_t>(imax)]))
            imax = i;
    }
    const Complex pivot = v[static_cast<std::size_t>(imax)];
    const Complex rot = std::conj(pivot) / std::abs(pivot);
    double norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        v[static_cast<std::size_t>(i)] *= rot;
        res.l_im_residual = std::max(res.l_im_residual, std::abs(v[static_cast<std::size_t>(i)].imag()));
        res.l[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)].real();
        norm2 += res.l[static_cast<std::size_t>(i)] * res.l[static_cast<std::size_t>(i)];
    }
    const double nrm = std::sqrt(norm2);
    for (double& c : res.l)
        c /= nrm;
    return res;
}

} // namespace hinfsyn
