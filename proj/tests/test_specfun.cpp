#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diamonds/errors.hpp"
#include "diamonds/eulerian.hpp"
#include "diamonds/specfun.hpp"

using namespace diamonds;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

double alternating_oracle()
{
    // sum (-1)^k / k^2, averaged over consecutive partial sums to cancel the
    // oscillating tail.
    double s = 0.0;
    double prev = 0.0;
    for (int k = 1; k <= 200000; ++k) {
        prev = s;
        s += (k % 2 == 1 ? -1.0 : 1.0) / (static_cast<double>(k) * k);
    }
    return 0.5 * (s + prev);
}

double direct_series(double z)
{
    double s = 0.0;
    double p = z;
    for (int k = 1; k < 200; ++k) {
        s += p / (static_cast<double>(k) * k);
        p *= z;
    }
    return s;
}

bool near(ComplexVal a, ComplexVal b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

} // namespace

TEST_CASE("Bernoulli numbers and polynomials")
{
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == BigRational(-1, 2));
    CHECK(bernoulli_number(2) == BigRational(1, 6));
    CHECK(bernoulli_number(12) == BigRational(-691, 2730));
    for (int k = 1; 2 * k + 1 <= kBernoulliTableSize; ++k) {
        CHECK(bernoulli_number(2 * k + 1) == 0);
    }
    CHECK(bernoulli_poly(1, 1) == BigRational(1, 2));
    CHECK(bernoulli_poly(2, 0) == BigRational(1, 6));
    CHECK(bernoulli_poly(3, 1) == 0);
    for (int n = 2; n <= 40; ++n) {
        CHECK(bernoulli_poly(n, 1) == bernoulli_number(n));
    }
    CHECK(bernoulli_poly(2, BigRational(1, 2)) == BigRational(-1, 12));
    CHECK_THROWS_AS(bernoulli_number(65), PreconditionError);
    CHECK_THROWS_AS(bernoulli_poly(70, 1), PreconditionError);
}

TEST_CASE("dilogarithm: special values")
{
    CHECK(dilog(0.0) == ComplexVal(0.0));
    CHECK(dilog(-1.0).real() == doctest::Approx(alternating_oracle()).epsilon(1e-12));
    CHECK(dilog(-1.0).real() == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-14));
    const double half = kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
    CHECK(dilog(0.5).real() == doctest::Approx(direct_series(0.5)).epsilon(1e-14));
    CHECK(dilog(0.5).real() == doctest::Approx(half).epsilon(1e-14));
    CHECK(dilog(0.5).real() == doctest::Approx(0.5822405265).epsilon(1e-10));
    CHECK(dilog(0.3).real() == doctest::Approx(direct_series(0.3)).epsilon(1e-14));
    CHECK(dilog(-0.4).real() == doctest::Approx(direct_series(-0.4)).epsilon(1e-14));
    // Li_2(i) = -pi^2/48 + i G with Catalan's constant G.
    CHECK(near(dilog({0.0, 1.0}), {-kPi * kPi / 48.0, 0.915965594177219015}, 1e-13));
    // Li_2(-2) from the inversion formula evaluated independently.
    CHECK(dilog(-2.0).real() == doctest::Approx(-1.4367463668836809).epsilon(1e-13));
}

TEST_CASE("dilogarithm: domain")
{
    CHECK_THROWS_AS(dilog(1.0), BranchCutError);
    CHECK_THROWS_AS(dilog(3.5), BranchCutError);
    CHECK_THROWS_AS(dilog({NAN, 0.0}), PreconditionError);
    CHECK_NOTHROW(dilog({2.0, 1e-9}));
    CHECK_NOTHROW(dilog(0.9999999));
}

TEST_CASE("dilogarithm: reflection and inversion on random points")
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    int tested = 0;
    while (tested < 100) {
        const ComplexVal z(coord(rng), coord(rng));
        if (std::abs(z.imag()) < 1e-3 || std::abs(z) < 1e-3) {
            continue;
        }
        ++tested;
        CAPTURE(z);
        const ComplexVal refl = kZeta2 - std::log(z) * std::log(1.0 - z);
        CHECK(near(dilog(z) + dilog(1.0 - z), refl, 1e-11));
        const ComplexVal l = std::log(-z);
        CHECK(near(dilog(z) + dilog(1.0 / z), -kZeta2 - 0.5 * l * l, 1e-11));
        CHECK(near(dilog(std::conj(z)), std::conj(dilog(z)), 1e-13));
    }
}

TEST_CASE("polynomial roots")
{
    const auto linear = poly_roots(UniPoly{1, 1});
    REQUIRE(linear.size() == 1);
    CHECK(linear[0].real() == doctest::Approx(-1.0));
    CHECK(linear[0].imag() == 0.0);

    const auto quad = poly_roots(UniPoly{1, 4, 1});
    REQUIRE(quad.size() == 2);
    CHECK(quad[0].real() == doctest::Approx(-2.0 - std::sqrt(3.0)).epsilon(1e-14));
    CHECK(quad[1].real() == doctest::Approx(-2.0 + std::sqrt(3.0)).epsilon(1e-14));

    const auto with_zero = poly_roots(UniPoly{0, 0, 1, 1});
    CHECK(with_zero.size() == 3);

    const auto circle = poly_roots(UniPoly{1, 1, 1});
    REQUIRE(circle.size() == 2);
    CHECK(circle[0] == std::conj(circle[1]));

    CHECK_THROWS_AS(poly_roots(UniPoly{5}), PreconditionError);
}

TEST_CASE("roots reconstruct their polynomial")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-20, 20);
    std::vector<UniPoly> cases{eulerian_poly(6), eulerian_poly(10), eulerian_poly(12)};
    for (int trial = 0; trial < 60; ++trial) {
        const int degree = 1 + trial % 12;
        std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) {
            x = coef(rng);
        }
        if (c.back() == 0) {
            c.back() = 1;
        }
        cases.emplace_back(c);
    }
    for (const auto& p : cases) {
        CAPTURE(p.to_string());
        const auto roots = poly_roots(p);
        REQUIRE(static_cast<int>(roots.size()) == p.degree());
        std::vector<ComplexVal> rebuilt{p.coeff(p.degree()).get_d()};
        for (const auto& r : roots) {
            std::vector<ComplexVal> next(rebuilt.size() + 1, 0.0);
            for (std::size_t i = 0; i < rebuilt.size(); ++i) {
                next[i + 1] += rebuilt[i];
                next[i] -= r * rebuilt[i];
            }
            rebuilt = next;
        }
        double scale = 0.0;
        for (const auto& c : p.coeffs()) {
            scale = std::max(scale, std::abs(c.get_d()));
        }
        for (int i = 0; i <= p.degree(); ++i) {
            CHECK(std::abs(rebuilt[static_cast<std::size_t>(i)] - p.coeff(i).get_d()) <= 1e-9 * scale);
        }
        for (const auto& r : roots) {
            CHECK(root_residual(p, r) < 1e-10);
        }
    }
}

TEST_CASE("quadrature")
{
    CHECK(quad_smooth([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quad_smooth([](double u) { return u; }) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(quad_smooth([](double u) { return std::log1p(u) / u; }) ==
          doctest::Approx(kPi * kPi / 12.0).epsilon(1e-13));
    double closed = 0.0;
    auto poly = [](double u) { return 3.0 - 2.0 * u + 7.0 * std::pow(u, 5) + std::pow(u, 17); };
    closed = 3.0 - 1.0 + 7.0 / 6.0 + 1.0 / 18.0;
    CHECK(quad_smooth(poly) == doctest::Approx(closed).epsilon(1e-13));
    CHECK(quad_interval([](double x) { return std::exp(-x); }, 0.0, 30.0) ==
          doctest::Approx(1.0 - std::exp(-30.0)).epsilon(1e-13));
    CHECK_THROWS_AS(quad_smooth([](double u) { return 1.0 / u; }), ConvergenceError);
    CHECK_THROWS_AS(quad_interval([](double) { return 1.0; }, 1.0, 0.0), PreconditionError);
}
