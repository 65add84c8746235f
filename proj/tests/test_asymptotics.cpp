#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diamonds/asymptotics.hpp"
#include "diamonds/errors.hpp"
#include "diamonds/eulerian.hpp"
#include "diamonds/specfun.hpp"

using namespace diamonds;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// 30-digit values computed independently with mpmath (root sums of Li_2).
constexpr double kC3 = 2.512123117984544511;
constexpr double kC4 = 5.095022580075864;

bool has_root_in_unit_interval(const UniPoly& p)
{
    for (const auto& r : poly_roots(p)) {
        if (std::abs(r.imag()) < 1e-6 && r.real() > -1e-6 && r.real() < 1.0 + 1e-6) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("C_P values")
{
    CHECK(c_constant(UniPoly{1}).value_quadrature == 0.0);
    CHECK(c_constant(UniPoly{1}).value_dilog == 0.0);
    CHECK(c_constant(UniPoly{1, 1}).value_quadrature == doctest::Approx(kPi2 / 12.0).epsilon(1e-14));
    CHECK(c_constant(eulerian_poly(3)).value_quadrature == doctest::Approx(kC3).epsilon(1e-14));
    CHECK(c_constant(eulerian_poly(4)).value_dilog == doctest::Approx(kC4).epsilon(1e-14));
    for (int l : {2, 3, 5, 7, 11}) {
        const UniPoly phi(std::vector<BigInt>(static_cast<std::size_t>(l), BigInt(1)));
        const ConstantReport r = c_constant(phi);
        CHECK(r.value_quadrature == doctest::Approx(kPi2 * (l - 1) / (6.0 * l)).epsilon(1e-12));
        CHECK(r.agrees());
    }
}

TEST_CASE("C_P preconditions")
{
    CHECK_THROWS_AS(c_constant(UniPoly{2, 1}), PreconditionError);
    CHECK_THROWS_AS(c_constant(UniPoly{1, -2}), PreconditionError);
    CHECK_THROWS_AS(c_constant(UniPoly{1, -2, 1}), PreconditionError);
    CHECK_THROWS_AS(c_constant(UniPoly{1, -1}), PreconditionError);
}

TEST_CASE("dual route agreement")
{
    for (int d = 2; d <= 8; ++d) {
        CAPTURE(d);
        CHECK(c_constant(eulerian_poly(d)).abs_gap < 1e-9);
    }
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 6);
    int tested = 0;
    while (tested < 10) {
        std::vector<BigInt> c{1};
        const int degree = 2 + tested % 5;
        for (int i = 1; i <= degree; ++i) {
            c.push_back(coef(rng));
        }
        if (c.back() == 0) {
            c.back() = 1;
        }
        const UniPoly p(c);
        if (has_root_in_unit_interval(p)) {
            continue;
        }
        ++tested;
        CAPTURE(p.to_string());
        const ConstantReport r = c_constant(p);
        CHECK(r.abs_gap < 1e-9);
        double imag = 0.0;
        for (const auto& root : poly_roots(p)) {
            imag += dilog(1.0 / root).imag();
        }
        CHECK(std::abs(imag) < 1e-10);
    }
}

TEST_CASE("D_P")
{
    CHECK(d_constant(BiPoly::constant(1)) == 0.0);
    CHECK(d_constant(parse_bipoly("1+x*y")) == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
    for (int d = 2; d <= 5; ++d) {
        const double expected = -0.5 * d * std::lgamma(d + 1.0);
        CHECK(std::abs(d_constant(deformed_family(d).F) - expected) < 1e-9);
    }
    CHECK(d_constant(parse_bipoly("1+x")) == 0.0);
    CHECK_THROWS_AS(d_constant(parse_bipoly("1+y+x")), PreconditionError);
    CHECK_THROWS_AS(d_constant(parse_bipoly("1-2*x*y")), PreconditionError);
}

TEST_CASE("Schmidt and size parameters")
{
    const AsymParams s1 = schmidt_params(1);
    CHECK(s1.gamma == doctest::Approx(kPi2 / 3.0).epsilon(1e-14));
    CHECK(s1.beta == 1.0);
    CHECK(s1.lambda == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(schmidt_params(2).gamma == doctest::Approx(7.0 * kPi2 / 12.0).epsilon(1e-14));
    CHECK(schmidt_params(3).gamma == doctest::Approx(kC3 + 2.0 * kPi2 / 3.0).epsilon(1e-14));

    const AsymParams r1 = size_params(1);
    CHECK(r1.lambda == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
    CHECK(r1.beta == 0.5);
    CHECK(r1.gamma == doctest::Approx(kPi2 / 6.0).epsilon(1e-14));
    CHECK(size_params(2).gamma == doctest::Approx(7.0 * kPi2 / 36.0).epsilon(1e-14));
    CHECK(size_params(2).lambda == doctest::Approx(std::pow(2.0 * kPi, -0.5) * std::pow(2.0, -1.0 / 6.0)));
}

TEST_CASE("general parameters")
{
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        const AsymParams g = general_params(size_product_spec(d));
        const AsymParams s = size_params(d);
        CHECK(std::abs(g.lambda - s.lambda) < 1e-10);
        CHECK(std::abs(g.beta - s.beta) < 1e-10);
        CHECK(std::abs(g.gamma - s.gamma) < 1e-10);
    }

    ProductSpec distinct;
    distinct.P = parse_bipoly("1+x");
    const AsymParams q = general_params(distinct);
    CHECK(q.lambda == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(q.beta == 0.0);
    CHECK(q.gamma == doctest::Approx(kPi2 / 12.0).epsilon(1e-14));
    // q(n) ~ e^{pi sqrt(n/3)} / (4 3^{1/4} n^{3/4}).
    for (long n : {10L, 1000L}) {
        const double dn = static_cast<double>(n);
        const double expected = kPi * std::sqrt(dn / 3.0) - std::log(4.0 * std::pow(3.0, 0.25) * std::pow(dn, 0.75));
        CHECK(std::abs(ingham_eval(q, n) - expected) < 1e-12);
    }

    // Overpartitions prod (1+q^n)/(1-q^n): e^{pi sqrt n} / (8 n).
    ProductSpec over;
    over.P = parse_bipoly("1+x");
    over.Q = parse_bipoly("1-x");
    const AsymParams o = general_params(over);
    for (long n : {10L, 1000L}) {
        const double dn = static_cast<double>(n);
        CHECK(std::abs(ingham_eval(o, n) - (kPi * std::sqrt(dn) - std::log(8.0 * dn))) < 1e-12);
    }

    // (1 - q^n)^{-2}: two copies of the partition generating function.
    ProductSpec twice;
    twice.Q = parse_bipoly("(1-x)^2");
    const AsymParams t = general_params(twice);
    const AsymParams s1 = schmidt_params(1);
    CHECK(t.lambda == doctest::Approx(s1.lambda).epsilon(1e-13));
    CHECK(t.beta == doctest::Approx(s1.beta));
    CHECK(t.gamma == doctest::Approx(s1.gamma).epsilon(1e-14));
}

TEST_CASE("general parameters: hypothesis gate")
{
    ProductSpec bad;
    bad.Q = parse_bipoly("1+x");
    try {
        general_params(bad);
        FAIL("expected HypothesisViolation");
    } catch (const HypothesisViolation& e) {
        CHECK(std::string(e.what()).find("theorem hypothesis violated") != std::string::npos);
    }
    ProductSpec equal;
    equal.P = parse_bipoly("1+x");
    equal.Q = parse_bipoly("1+x");
    CHECK_THROWS_AS(general_params(equal), HypothesisViolation);
    ProductSpec zero_offset;
    zero_offset.Q = parse_bipoly("1-x");
    zero_offset.b = 0;
    CHECK_THROWS_AS(general_params(zero_offset), HypothesisViolation);
}

TEST_CASE("Ingham evaluation")
{
    CHECK(ingham_eval({1.0, 0.0, 1.0}, 1) == doctest::Approx(std::log(1.0 / (2.0 * std::sqrt(kPi))) + 2.0));
    for (long n : {10L, 100L, 1000L}) {
        const double dn = static_cast<double>(n);
        const double hr = kPi * std::sqrt(2.0 * dn / 3.0) - std::log(4.0 * dn * std::sqrt(3.0));
        CHECK(std::abs(ingham_eval(size_params(1), n) - hr) < 1e-12);
    }
    CHECK_THROWS_AS(ingham_eval(size_params(1), 0), PreconditionError);
    CHECK_THROWS_AS(ingham_eval({1.0, 0.0, -1.0}, 5), PreconditionError);
    CHECK_THROWS_AS(ingham_eval({0.0, 0.0, 1.0}, 5), PreconditionError);
}

TEST_CASE("exact versus asymptotic")
{
    const CompareResult s2 = compare_exact_vs_asym(schmidt_series(2, 1000), schmidt_params(2), {1000});
    REQUIRE(s2.rows.size() == 1);
    CHECK(std::abs(s2.rows[0].log_ratio) < 0.35);

    const CompareResult r1 = compare_exact_vs_asym(size_series(1, 4000), size_params(1), {500, 1000, 2000, 4000});
    REQUIRE(r1.rows.size() == 4);
    for (std::size_t i = 1; i < r1.rows.size(); ++i) {
        CHECK(std::abs(r1.rows[i].log_ratio) < std::abs(r1.rows[i - 1].log_ratio));
    }
    CHECK(r1.rows[0].exact_log == doctest::Approx(log_of(partition_numbers(500)[500])));

    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        for (const bool size : {false, true}) {
            const IntSeries s = size ? size_series(d, 1600) : schmidt_series(d, 1600);
            const CompareResult c =
                compare_exact_vs_asym(s, size ? size_params(d) : schmidt_params(d), {200, 400, 800, 1600});
            for (std::size_t i = 1; i < c.rows.size(); ++i) {
                CHECK(std::abs(c.rows[i].log_ratio) < std::abs(c.rows[i - 1].log_ratio));
            }
        }
    }

    const IntSeries gappy(std::vector<BigInt>{1, 0, 3});
    const CompareResult g = compare_exact_vs_asym(gappy, size_params(1), {1, 2});
    CHECK(g.rows.size() == 1);
    CHECK(g.notes.size() == 1);
    CHECK_THROWS_AS(compare_exact_vs_asym(gappy, size_params(1), {3}), PreconditionError);
    CHECK_THROWS_AS(compare_exact_vs_asym(gappy, size_params(1), {0}), PreconditionError);
}

TEST_CASE("Euler-Maclaurin expansion")
{
    const EmExpansion e3 = em_expansion_log_product(3, 12);
    CHECK(e3.terms[1] == BigRational(1, 12));
    CHECK(e3.constant.coeff == BigRational(-1, 2));
    CHECK(e3.constant.argument == 6);
    CHECK(e3.constant.value() == doctest::Approx(-0.5 * std::log(6.0)));
    CHECK(e3.leading == doctest::Approx(kC3).epsilon(1e-14));

    const EmExpansion e1 = em_expansion_log_product(1, 10);
    for (const auto& t : e1.terms) {
        CHECK(t == 0);
    }
    const EmExpansion e4 = em_expansion_log_product(4, 10);
    for (int n = 2; n <= 10; ++n) {
        CHECK(e4.terms[static_cast<std::size_t>(n)] == 0);
    }
    for (int d = 1; d <= 8; ++d) {
        CHECK_NOTHROW(em_expansion_log_product(d, 12));
        CHECK(shifted_log_is_even(d, 12));
    }
    CHECK(shifted_log_is_even(5, 24));
    CHECK_THROWS_AS(em_expansion_log_product(3, 25), PreconditionError);
    CHECK_THROWS_AS(em_expansion_log_product(3, 0), PreconditionError);
}

TEST_CASE("product asymptotics")
{
    const auto trivial = product_asym_check(1, {0.5, 0.1});
    for (const auto& row : trivial) {
        CHECK(std::isinf(row.f_log10_rel_error));
        CHECK(std::isinf(row.g_log10_rel_error));
    }

    const std::vector<double> grid{0.2, 0.1, 0.05, 0.025};
    for (int d = 2; d <= 4; ++d) {
        CAPTURE(d);
        const auto rows = product_asym_check(d, grid);
        REQUIRE(rows.size() == grid.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].w == grid[i]);
            CHECK(rows[i].g_nonpositive_factors == 0);
            CHECK(rows[i].g_min_factor > 0.0);
            if (i > 0) {
                CHECK(rows[i].f_log10_rel_error < rows[i - 1].f_log10_rel_error);
                CHECK(rows[i].g_log10_rel_error < rows[i - 1].g_log10_rel_error);
            }
        }
        CHECK(rows[2].f_log10_rel_error < -6.0);
    }
    CHECK_THROWS_AS(product_asym_check(2, {0.6}), PreconditionError);
    CHECK_THROWS_AS(product_asym_check(2, {0.0}), PreconditionError);
    CHECK_THROWS_AS(product_asym_check(0, {0.1}), PreconditionError);
}
