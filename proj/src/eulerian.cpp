#include "diamonds/eulerian.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "diamonds/errors.hpp"

namespace diamonds {

namespace {

void require_positive_d(int d)
{
    if (d < 1) {
        throw PreconditionError("d must be a positive integer, got " + std::to_string(d));
    }
}

// (1 - x)^n
UniPoly one_minus_x_pow(int n)
{
    UniPoly out{1};
    const UniPoly base{1, -1};
    for (int k = 0; k < n; ++k) {
        out = out * base;
    }
    return out;
}

} // namespace

BigInt factorial(int n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

UniPoly eulerian_poly(int d)
{
    require_positive_d(d);
    UniPoly a{1};
    const UniPoly x_times_one_minus_x{0, 1, -1};
    for (int k = 1; k <= d; ++k) {
        a = UniPoly{1, k - 1} * a + x_times_one_minus_x * a.derivative();
    }
    return a;
}

UniPoly eulerian_poly_via_definition(int d)
{
    require_positive_d(d);
    // Truncating the power series at degree M only perturbs degrees > M.
    const int m = 2 * d + 1;
    std::vector<BigInt> series(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        mpz_ui_pow_ui(series[static_cast<std::size_t>(j)].get_mpz_t(), static_cast<unsigned long>(j + 1),
                      static_cast<unsigned long>(d));
    }
    const UniPoly product = UniPoly(std::move(series)) * one_minus_x_pow(d + 1);
    std::vector<BigInt> low;
    for (int i = 0; i <= m; ++i) {
        const BigInt c = product.coeff(i);
        if (i < d) {
            low.push_back(c);
        } else if (c != 0) {
            throw IdentityViolation("Eulerian definition: coefficient of x^" + std::to_string(i) +
                                    " does not cancel for d=" + std::to_string(d));
        }
    }
    return UniPoly(std::move(low));
}

DeformedFamily deformed_poly(int d)
{
    require_positive_d(d);
    const BiPoly one = BiPoly::constant(1);
    const BiPoly one_minus_y = one - BiPoly::monomial(1, 0, 1);
    const BiPoly one_minus_x = one - BiPoly::monomial(1, 1, 0);
    const BiPoly y = BiPoly::monomial(1, 0, 1);

    DeformedFamily fam{1, one, one_minus_y};
    for (int k = 2; k <= d; ++k) {
        const BiPoly& prev = fam.F;
        BiPoly h = (one - BiPoly::monomial(1, 1, k)) * prev - y * one_minus_x * prev.substitute_x_scaled(1);
        BiPoly f = exact_divide(h, one_minus_y);
        fam = DeformedFamily{k, std::move(f), std::move(h)};
    }
    return fam;
}

BigInt eulerian_derivative_at_one(int d) { return eulerian_family(d).A.derivative()(BigInt(1)); }

const EulerianFamily& eulerian_family(int d)
{
    require_positive_d(d);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<EulerianFamily>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[d];
    if (!slot) {
        UniPoly a = eulerian_poly(d);
        if (!(a == eulerian_poly_via_definition(d))) {
            throw IdentityViolation("recursion and generating-function constructions of A_" + std::to_string(d) +
                                    " disagree");
        }
        slot = std::make_unique<EulerianFamily>(EulerianFamily{d, std::move(a)});
    }
    return *slot;
}

const DeformedFamily& deformed_family(int d)
{
    require_positive_d(d);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<DeformedFamily>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[d];
    if (!slot) {
        slot = std::make_unique<DeformedFamily>(deformed_poly(d));
    }
    return *slot;
}

std::vector<IdentityCheck> check_eulerian_identities(int d)
{
    const std::string tag = " (d=" + std::to_string(d) + ")";
    std::vector<IdentityCheck> out;
    auto add = [&](const std::string& name, bool ok) { out.push_back({name + tag, ok}); };

    const UniPoly a = eulerian_poly(d);
    add("A_d recursion == generating-function definition", a == eulerian_poly_via_definition(d));
    add("A_d(0) == 1", a(BigInt(0)) == 1);
    add("A_d(1) == d!", a(BigInt(1)) == factorial(d));
    add("A'_d(1) == (d-1) d!/2", a.derivative()(BigInt(1)) * 2 == BigInt(d - 1) * factorial(d));
    add("x^(d-1) A_d(1/x) == A_d(x)", a.reversed(d - 1) == a);

    bool positive = a.degree() == d - 1;
    for (const auto& c : a.coeffs()) {
        positive = positive && c > 0;
    }
    add("A_d coefficients positive (no zeros on [0,1])", positive);

    const DeformedFamily fam = deformed_poly(d);
    const BiPoly one_minus_y = BiPoly::constant(1) - BiPoly::monomial(1, 0, 1);
    add("(1-y) F_d == H_d", one_minus_y * fam.F == fam.H);
    add("F_d(x,1) == A_d(x)", fam.F.at_y(1) == a);
    add("F_d(0,y) == 1", fam.F.at_x(0) == UniPoly{1});
    add("F_d(1,1) == d!", fam.F(BigInt(1), BigInt(1)) == factorial(d));

    // F^{(0,1)}(x,1) * 2 == d x F^{(1,0)}(x,1)
    const UniPoly lhs = fam.F.partial_y().at_y(1) * UniPoly{2};
    const UniPoly rhs = UniPoly::monomial(d, 1) * fam.F.partial_x().at_y(1);
    add("F_d^(0,1)(x,1) == (d x/2) F_d^(1,0)(x,1)", lhs == rhs);
    return out;
}

} // namespace diamonds
