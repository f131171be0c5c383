#include <doctest.h>

#include <cmath>
#include <random>

#include "hinfsyn/bezout.hpp"
#include "hinfsyn/errors.hpp"
#include "test_util.hpp"

using namespace hinfsyn;

namespace {

const PlantFactorization& example_fact() {
    static const PlantFactorization fact = factor_plant(testutil::example_plant());
    return fact;
}

// Random stable first-order q1 with |q1(jw)| small enough to keep Y - N q1
// bounded away from zero.
TransferFn random_stable_q1(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ug(-0.8, 0.8), un(0.5, 2.0), ud(1.0, 3.0);
    const double g = ug(rng), n0 = un(rng), d0 = ud(rng);
    return [g, n0, d0](Complex s) { return g * (s + n0) / (s + d0); };
}

} // namespace

TEST_CASE("Y interpolates 1/M at the plant zero") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);

    // constant Y for the single-zero family
    CHECK(bez.y.num.degree() == 0);
    CHECK(bez.y.den.degree() == 0);
    const double y0 = bez.y(Complex(0.0, 0.0)).real();
    CHECK(y0 == doctest::Approx(3.1116).epsilon(1e-4));
    CHECK(y0 == doctest::Approx((12.0 + 2.0 * std::exp(-1.5)) / 4.0));

    const Complex za(3.0, 0.0);
    CHECK(std::abs(1.0 - fact.den_inner(za) * bez.y(za)) < 1e-12);
}

TEST_CASE("Bezout residual vanishes on the axis and in the right half plane") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);
    CHECK(bezout_residual(fact, bez, testutil::random_axis_points(100, 3)) < 1e-9);
    CHECK(bezout_residual(fact, bez, testutil::random_rhp_points(100, 5)) < 1e-9);
}

TEST_CASE("X has a removable singularity at the plant zero") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);
    const Complex near1 = bez.x(Complex(3.0 + 2e-4, 0.0));
    const Complex near2 = bez.x(Complex(3.0 - 2e-4, 0.0));
    const Complex at = bez.x(Complex(3.0, 0.0));
    CHECK(std::isfinite(at.real()));
    CHECK(std::abs(near1 - near2) < 1e-3 * (1.0 + std::abs(at)));
    CHECK(std::abs(at - 0.5 * (near1 + near2)) < 1e-6 * (1.0 + std::abs(at)));
}

TEST_CASE("central controller: Q1 = 0 gives C = X/Y and S = M Y") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);
    const TransferFn zero = [](Complex) { return Complex(0.0, 0.0); };
    const TransferFn c = controller_from_q(fact, bez, zero);

    const Complex s(0.0, 1.0);
    CHECK(std::abs(c(s) - bez.x(s) / bez.y(s)) < 1e-12);

    const Complex sens = 1.0 / (1.0 + fact.plant(s) * c(s));
    CHECK(std::abs(sens - fact.den_inner(s) * bez.y(s)) < 1e-10);

    // recovering Q1 from the central controller gives zero back
    const TransferFn q1 = recover_q1(fact, bez, c);
    for (const Complex p : testutil::random_axis_points(50, 9))
        CHECK(std::abs(q1(p)) < 1e-9);
}

TEST_CASE("parameterization round trip over random stable Q1") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);
    for (unsigned seed = 1; seed <= 5; ++seed) {
        const TransferFn q1 = random_stable_q1(seed);
        const TransferFn c = controller_from_q(fact, bez, q1);
        const TransferFn q1_back = recover_q1(fact, bez, c);
        for (const Complex s : testutil::random_axis_points(40, 100 + seed))
            CHECK(std::abs(q1_back(s) - q1(s)) < 1e-8);
    }
}

TEST_CASE("recovered Q1 numerator vanishes at the plant zero for a stabilizing C") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);
    const TransferFn q1 = random_stable_q1(42);
    const TransferFn c = controller_from_q(fact, bez, q1);

    // numerator Y - S/M evaluated just off the zero, extrapolated to it
    const auto numerator = [&](Complex s) {
        const Complex sens = 1.0 / (1.0 + fact.plant(s) * c(s));
        return bez.y(s) - sens / fact.den_inner(s);
    };
    const Complex mid = 0.5 * (numerator(Complex(3.0 + 1e-4, 0.0)) +
                               numerator(Complex(3.0 - 1e-4, 0.0)));
    CHECK(std::abs(mid) < 1e-6);
}

TEST_CASE("degenerate denominator reported") {
    const auto& fact = example_fact();
    const BezoutPair bez = solve_bezout(fact);
    // q1 tuned so Y - N q1 = 0 at s = 0: q1(0) = Y/N(0), N(0) = num_inner(0) = -1
    const double y0 = bez.y(Complex(0.0, 0.0)).real();
    const TransferFn bad = [y0](Complex) { return Complex(-y0, 0.0); };
    const TransferFn c = controller_from_q(fact, bez, bad);
    CHECK_THROWS_AS(c(Complex(0.0, 0.0)), DegenerateDenominator);
}

TEST_CASE("two-zero synthetic factorization goes through Lagrange interpolation") {
    // same inner denominator factor as the worked example, but a numerator
    // inner factor with two right-half-plane zeros
    PlantFactorization fact = factor_plant(testutil::example_plant());
    fact.num_inner = {Polynomial{8.0, -6.0, 1.0}, Polynomial{8.0, 6.0, 1.0}}; // (s-2)(s-4)/((s+2)(s+4))
    const BezoutPair bez = solve_bezout(fact);

    CHECK(bez.y.den.degree() == 1); // (s+1)^{n-1}
    for (const double z : {2.0, 4.0}) {
        const Complex zc(z, 0.0);
        CHECK(std::abs(bez.y(zc) * fact.den_inner(zc) - 1.0) < 1e-12);
    }
    CHECK(bezout_residual(fact, bez, testutil::random_axis_points(50, 17)) < 1e-9);
}

TEST_CASE("repeated zeros rejected") {
    PlantFactorization fact = factor_plant(testutil::example_plant());
    fact.num_inner = {Polynomial{4.0, -4.0, 1.0}, Polynomial{4.0, 4.0, 1.0}}; // (s-2)^2/(s+2)^2
    CHECK_THROWS_AS(solve_bezout(fact), RepeatedZeros);
}

TEST_CASE("zero of M at an interpolation point rejected") {
    PlantFactorization fact = factor_plant(testutil::example_plant());
    // place the numerator-factor zeros on a conjugate pair of loop poles,
    // where den_inner vanishes
    const Complex pole = refine_plant_pole(testutil::example_plant(), 1);
    REQUIRE(std::abs(fact.den_inner.numerator()(pole)) < 1e-8);
    const double sr = 2.0 * pole.real();
    const double m2 = std::norm(pole);
    fact.num_inner = {Polynomial{m2, -sr, 1.0}, Polynomial{m2, sr, 1.0}};
    CHECK_THROWS_AS(solve_bezout(fact), DegenerateM);
}
