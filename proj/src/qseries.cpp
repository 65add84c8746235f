#include "diamonds/qseries.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "diamonds/errors.hpp"
#include "diamonds/eulerian.hpp"

namespace diamonds {

namespace {

void require_order(int order)
{
    if (order < 0) {
        throw PreconditionError("series order N must be non-negative");
    }
}

// c[k] += t * src for the common t = +-1 fast paths.
void add_scaled(BigInt& dst, const BigInt& src, const BigInt& t)
{
    if (t == 1) {
        dst += src;
    } else if (t == -1) {
        dst -= src;
    } else {
        mpz_addmul(dst.get_mpz_t(), t.get_mpz_t(), src.get_mpz_t());
    }
}

using SparseFactor = std::vector<std::pair<int, BigInt>>;

// Substitutes x -> q^shift, y -> q into p. Returns the nonconstant terms with
// exponents <= order, or nullopt when the lowest possible exponent already
// exceeds order. Throws DivergentFactor when the constant term is not 1.
std::optional<SparseFactor> substituted_factor(const BiPoly& p, long shift, int order, const char* which)
{
    std::map<long, BigInt> terms;
    long lowest = -1;
    p.for_each_term([&](int i, int j, const BigInt& c) {
        const long e = static_cast<long>(i) * shift + j;
        if (i > 0 && (lowest < 0 || e < lowest)) {
            lowest = e;
        }
        terms[e] += c;
    });
    if (terms[0] != 1) {
        throw DivergentFactor(std::string("divergent factor: ") + which + " substituted at q^" + std::to_string(shift) +
                              " has constant term " + terms[0].get_str() + " instead of 1");
    }
    if (lowest > order) {
        return std::nullopt;
    }
    SparseFactor out;
    for (const auto& [e, c] : terms) {
        if (e > 0 && e <= order && c != 0) {
            out.emplace_back(static_cast<int>(e), c);
        }
    }
    return out;
}

bool has_x_terms(const BiPoly& p) { return p.degree_x() >= 1; }

} // namespace

// ---------------------------------------------------------------------------
// IntSeries

IntSeries::IntSeries(int order)
{
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw PreconditionError("series needs at least one coefficient");
    }
}

IntSeries IntSeries::truncated(int order) const
{
    if (order < 0 || order > this->order()) {
        throw PreconditionError("truncation order out of range");
    }
    return IntSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void IntSeries::multiply_unit_factor(const std::vector<std::pair<int, BigInt>>& terms)
{
    // Descending k so that c[k - e] still holds the old value.
    for (int k = order(); k >= 1; --k) {
        BigInt& dst = coeffs_[static_cast<std::size_t>(k)];
        for (const auto& [e, t] : terms) {
            if (e <= k) {
                add_scaled(dst, coeffs_[static_cast<std::size_t>(k - e)], t);
            }
        }
    }
}

void IntSeries::divide_unit_factor(const std::vector<std::pair<int, BigInt>>& terms)
{
    // Ascending k: c[k - e] already holds the quotient coefficient.
    for (int k = 1; k <= order(); ++k) {
        BigInt& dst = coeffs_[static_cast<std::size_t>(k)];
        for (const auto& [e, t] : terms) {
            if (e <= k) {
                add_scaled(dst, coeffs_[static_cast<std::size_t>(k - e)], -t);
            }
        }
    }
}

IntSeries operator*(const IntSeries& a, const IntSeries& b)
{
    IntSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        BigInt& dst = out.coeffs_[static_cast<std::size_t>(k)];
        for (int j = 0; j <= k; ++j) {
            mpz_addmul(dst.get_mpz_t(), a[j].get_mpz_t(), b[k - j].get_mpz_t());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// ProductSpec

void ProductSpec::validate() const
{
    if (A < 1 || B < 1) {
        throw PreconditionError("product spec: A and B must be positive");
    }
    if (a < 0 || b < 0) {
        throw PreconditionError("product spec: a and b must be non-negative");
    }
    if (!(P.at_x(0) == UniPoly{1})) {
        throw PreconditionError("product spec: P(0,y) must equal 1");
    }
    if (!(Q.at_x(0) == UniPoly{1})) {
        throw PreconditionError("product spec: Q(0,y) must equal 1");
    }
}

ProductSpec parse_product_spec(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("product spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("product spec must be a JSON object");
    }
    auto get_int = [&](const char* key, int fallback, bool required) {
        if (!j.contains(key)) {
            if (required) {
                throw ParseError(std::string("product spec: missing field ") + key);
            }
            return fallback;
        }
        if (!j[key].is_number_integer()) {
            throw ParseError(std::string("product spec: field ") + key + " must be an integer");
        }
        return j[key].get<int>();
    };
    auto get_poly = [&](const char* key, bool required) {
        if (!j.contains(key)) {
            if (required) {
                throw ParseError(std::string("product spec: missing field ") + key);
            }
            return BiPoly::constant(1);
        }
        if (!j[key].is_string()) {
            throw ParseError(std::string("product spec: field ") + key + " must be polynomial text");
        }
        return parse_bipoly(j[key].get<std::string>());
    };
    ProductSpec spec;
    spec.P = get_poly("P", true);
    spec.Q = get_poly("Q", false);
    spec.A = get_int("A", 1, true);
    spec.a = get_int("a", 1, true);
    spec.B = get_int("B", 1, false);
    spec.b = get_int("b", 1, false);
    spec.validate();
    return spec;
}

ProductSpec load_product_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open product spec file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_product_spec(buf.str());
}

// ---------------------------------------------------------------------------
// Generating functions

IntSeries general_product_series(const ProductSpec& spec, int order)
{
    require_order(order);
    spec.validate();
    std::vector<BigInt> init(static_cast<std::size_t>(order) + 1, BigInt(0));
    init[0] = 1;
    IntSeries out(std::move(init));

    auto apply = [&](const BiPoly& p, int step, int offset, bool divide, const char* which) {
        if (!has_x_terms(p)) {
            return;
        }
        for (long n = 0;; ++n) {
            const long shift = step * n + offset;
            const auto factor = substituted_factor(p, shift, order, which);
            if (!factor) {
                if (shift > 0) {
                    break;
                }
                continue;
            }
            if (divide) {
                out.divide_unit_factor(*factor);
            } else {
                out.multiply_unit_factor(*factor);
            }
        }
    };
    apply(spec.P, spec.A, spec.a, false, "P");
    apply(spec.Q, spec.B, spec.b, true, "Q");
    return out;
}

ProductSpec size_product_spec(int d)
{
    ProductSpec spec;
    spec.P = deformed_family(d).F;
    spec.Q = BiPoly::constant(1) - BiPoly::monomial(1, 1, 0);
    spec.A = d + 1;
    spec.a = 1;
    spec.B = 1;
    spec.b = 1;
    return spec;
}

IntSeries size_series(int d, int order)
{
    require_order(order);
    return general_product_series(size_product_spec(d), order);
}

IntSeries schmidt_series(int d, int order)
{
    require_order(order);
    const UniPoly& a = eulerian_family(d).A;
    std::vector<BigInt> init(static_cast<std::size_t>(order) + 1, BigInt(0));
    init[0] = 1;
    IntSeries out(std::move(init));
    for (int n = 1; n <= order; ++n) {
        SparseFactor num;
        for (int i = 1; i <= a.degree(); ++i) {
            if (static_cast<long>(i) * n <= order) {
                num.emplace_back(i * n, a.coeffs()[static_cast<std::size_t>(i)]);
            }
        }
        out.multiply_unit_factor(num);
        const SparseFactor geometric{{n, BigInt(-1)}};
        for (int k = 0; k <= d; ++k) {
            out.divide_unit_factor(geometric);
        }
    }
    return out;
}

IntSeries partition_numbers(int order)
{
    require_order(order);
    std::vector<BigInt> p(static_cast<std::size_t>(order) + 1, BigInt(0));
    p[0] = 1;
    for (long n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const long g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                term += p[static_cast<std::size_t>(n - g2)];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return IntSeries(std::move(p));
}

std::optional<int> monotonicity_check(const IntSeries& s)
{
    for (int n = 0; n < s.order(); ++n) {
        if (s[n + 1] < s[n]) {
            return n + 1;
        }
    }
    return std::nullopt;
}

} // namespace diamonds
