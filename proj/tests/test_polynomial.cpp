#include <doctest.h>

#include "hinfsyn/errors.hpp"
#include "hinfsyn/polynomial.hpp"

using namespace hinfsyn;

TEST_CASE("polynomial basics") {
    const Polynomial p{1.0, 2.0, 3.0}; // 1 + 2s + 3s^2
    CHECK(p.degree() == 2);
    CHECK(p(2.0) == doctest::Approx(17.0));
    CHECK(p.coeff(5) == 0.0);
    CHECK(p.leading() == 3.0);

    const Polynomial z{};
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
    CHECK(Polynomial{0.0, 0.0, 0.0}.is_zero());

    // trailing zeros trimmed so leading() is the true leading coefficient
    const Polynomial t{1.0, 2.0, 0.0, 0.0};
    CHECK(t.degree() == 1);
    CHECK(t.leading() == 2.0);
}

TEST_CASE("polynomial complex Horner evaluation") {
    const Polynomial p{-3.0, 1.0}; // s - 3
    const Complex v = p(Complex(0.0, 2.0));
    CHECK(v.real() == doctest::Approx(-3.0));
    CHECK(v.imag() == doctest::Approx(2.0));
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial p{1.0, 1.0};
    const Polynomial q{-1.0, 1.0};
    const Polynomial prod = p * q; // s^2 - 1
    CHECK(prod.degree() == 2);
    CHECK(prod.coeff(0) == doctest::Approx(-1.0));
    CHECK(prod.coeff(1) == doctest::Approx(0.0));
    CHECK(prod.coeff(2) == doctest::Approx(1.0));

    const Polynomial sum = p + q;
    CHECK(sum.coeff(0) == doctest::Approx(0.0));
    CHECK(sum.coeff(1) == doctest::Approx(2.0));

    const Polynomial diff = p - p;
    CHECK(diff.is_zero());

    const Polynomial scaled = 3.0 * p;
    CHECK(scaled.coeff(1) == doctest::Approx(3.0));
}

TEST_CASE("polynomial derivative") {
    const Polynomial p{1.0, 2.0, 3.0, 4.0};
    const Polynomial d = p.derivative();
    CHECK(d.degree() == 2);
    CHECK(d.coeff(0) == doctest::Approx(2.0));
    CHECK(d.coeff(1) == doctest::Approx(6.0));
    CHECK(d.coeff(2) == doctest::Approx(12.0));
    CHECK(Polynomial{5.0}.derivative().is_zero());
}

TEST_CASE("truncation drops only negligible coefficients") {
    const Polynomial p{1.0, 2.0, 3.0, 1e-12};
    const Polynomial t = p.truncated(2, 1e-9);
    CHECK(t.degree() == 2);
    const Polynomial heavy_tail{1.0, 2.0, 3.0, 0.5};
    CHECK_THROWS_AS(heavy_tail.truncated(2, 1e-9), Error);
}

TEST_CASE("root finding on small polynomials") {
    // (s-1)(s-2)(s-3) = -6 + 11s - 6s^2 + s^3
    const auto roots = find_roots(Polynomial{-6.0, 11.0, -6.0, 1.0});
    REQUIRE(roots.size() == 3);
    double prod = 1.0;
    for (Complex r : roots) {
        CHECK(std::abs(r.imag()) < 1e-10);
        prod *= r.real();
    }
    CHECK(prod == doctest::Approx(6.0));

    // s^2 + 1 -> +-j
    const auto imag_pair = find_roots(Polynomial{1.0, 0.0, 1.0});
    REQUIRE(imag_pair.size() == 2);
    for (Complex r : imag_pair)
        CHECK(std::abs(std::abs(r.imag()) - 1.0) < 1e-12);
}
