#include "diamonds/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "diamonds/errors.hpp"
#include "diamonds/eulerian.hpp"
#include "diamonds/specfun.hpp"
#include "mpreal.hpp"

namespace diamonds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kQuadTolerance = 1e-13;
constexpr double kZeroTolerance = 1e-8;

double log_factorial(int d) { return std::lgamma(static_cast<double>(d) + 1.0); }

// Throws PreconditionError when p has a root in [0, 1].
void require_no_zeros_on_unit_interval(const UniPoly& p, const std::string& what)
{
    if (p.degree() < 1) {
        if (p.is_zero()) {
            throw PreconditionError(what + " is identically zero");
        }
        return;
    }
    for (const auto& root : poly_roots(p)) {
        if (std::abs(root.imag()) <= kZeroTolerance && root.real() >= -kZeroTolerance &&
            root.real() <= 1.0 + kZeroTolerance) {
            std::ostringstream msg;
            msg << what << " has a zero on [0,1] near " << root.real();
            throw PreconditionError(msg.str());
        }
    }
}

double c_constant_quadrature(const UniPoly& p)
{
    // log P(u)/u with P(u) - 1 summed directly so log1p keeps accuracy near u = 0.
    std::vector<double> c;
    for (int i = 1; i <= p.degree(); ++i) {
        c.push_back(p.coeff(i).get_d());
    }
    auto integrand = [&](double u) {
        double tail = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            tail = (tail + *it) * u;
        }
        return std::log1p(tail) / u;
    };
    return quad_smooth(integrand, kQuadTolerance);
}

double c_constant_dilog(const UniPoly& p)
{
    // P(u) = P(0) prod_j (1 - u/alpha_j), so no monic normalization is needed.
    std::complex<double> sum = 0.0;
    for (const auto& root : poly_roots(p)) {
        sum += dilog(1.0 / root);
    }
    return -sum.real();
}

// Q = (1-x)^k R with R not divisible by (1-x).
int split_one_minus_x(const BiPoly& q, BiPoly& rest)
{
    const BiPoly one_minus_x = BiPoly::constant(1) - BiPoly::monomial(1, 1, 0);
    rest = q;
    int k = 0;
    while (rest.degree_x() >= 1) {
        try {
            rest = exact_divide(rest, one_minus_x);
            ++k;
        } catch (const DivisionError&) {
            break;
        }
    }
    return k;
}

std::vector<BigRational> rational_terms(int order) { return std::vector<BigRational>(static_cast<std::size_t>(order) + 1); }

} // namespace

void AsymParams::validate() const
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw PreconditionError("asymptotic parameters: lambda must be positive");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw PreconditionError("asymptotic parameters: gamma must be positive");
    }
}

ConstantReport c_constant(const UniPoly& p)
{
    static std::mutex mutex;
    static std::map<std::string, ConstantReport> cache;
    const std::string key = p.to_string();
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    if (p(BigInt(0)) != 1) {
        throw PreconditionError("C_P requires P(0) = 1, got P = " + key);
    }
    require_no_zeros_on_unit_interval(p, "P = " + key);
    ConstantReport report;
    if (p.degree() >= 1) {
        report.value_quadrature = c_constant_quadrature(p);
        report.value_dilog = c_constant_dilog(p);
        report.abs_gap = std::abs(report.value_quadrature - report.value_dilog);
    }
    std::lock_guard lock(mutex);
    cache.emplace(key, report);
    return report;
}

double d_constant(const BiPoly& p)
{
    if (!(p.at_x(0) == UniPoly{1})) {
        throw PreconditionError("D_P requires P(0,y) = 1, got P = " + p.to_string());
    }
    const UniPoly at_one = p.at_y(1);
    require_no_zeros_on_unit_interval(at_one, "P(x,1) = " + at_one.to_string());
    const UniPoly py = p.partial_y().at_y(1);
    if (py.is_zero()) {
        return 0.0;
    }
    // P_y(0,1) = 0 because P(0,y) = 1, so P_y(u,1)/u stays finite at u = 0.
    auto integrand = [&](double u) { return py(u) / (u * at_one(u)); };
    return -quad_smooth(integrand, kQuadTolerance);
}

AsymParams schmidt_params(int d)
{
    const double c = c_constant(eulerian_family(d).A).value_quadrature;
    AsymParams params;
    params.lambda = std::exp(-0.5 * (d + 1) * std::log(2.0 * kPi) - 0.5 * log_factorial(d));
    params.beta = 0.5 * (d + 1);
    params.gamma = c + kPi2 * (d + 1) / 6.0;
    return params;
}

AsymParams size_params(int d)
{
    const double c = c_constant(eulerian_family(d).A).value_quadrature;
    AsymParams params;
    // G_d(e^{-w}) ~ e^{C_d/((d+1)w)} (d!)^{-1/(2(d+1))}; with 1/(q;q) this gives
    // lambda = (2 pi)^{-1/2} e^{(d-1) log(d!)/(2(d+1))} (d!)^{-d/(2(d+1))}.
    params.lambda = std::exp(-0.5 * std::log(2.0 * kPi) - log_factorial(d) / (2.0 * (d + 1)));
    params.beta = 0.5;
    params.gamma = c / (d + 1) + kPi2 / 6.0;
    return params;
}

AsymParams general_params(const ProductSpec& spec)
{
    spec.validate();
    const BigInt p11 = spec.P(BigInt(1), BigInt(1));
    if (p11 <= 0) {
        throw HypothesisViolation("theorem hypothesis violated: P(1,1) must be positive");
    }
    BiPoly rest;
    const int k = split_one_minus_x(spec.Q, rest);
    const BigInt r11 = rest(BigInt(1), BigInt(1));
    if (r11 <= 0) {
        throw HypothesisViolation("theorem hypothesis violated: Q(1,1) must be positive after removing (1-x) factors");
    }
    if (k > 0 && spec.b == 0) {
        throw HypothesisViolation("theorem hypothesis violated: (1-x) factor in Q with b = 0 vanishes at n = 0");
    }

    const double cp = c_constant(spec.P.at_y(1)).value_quadrature;
    const double cr = c_constant(rest.at_y(1)).value_quadrature;
    const double cq = cr - k * kPi2 / 6.0;
    const double gamma = cp / spec.A - cq / spec.B;
    if (!(gamma > 0.0)) {
        std::ostringstream msg;
        msg << "theorem hypothesis violated: C_P/A = " << cp / spec.A << " must exceed C_Q/B = " << cq / spec.B;
        throw HypothesisViolation(msg.str());
    }

    const double ratio_p = static_cast<double>(spec.a) / spec.A;
    const double ratio_q = static_cast<double>(spec.b) / spec.B;
    double log_lambda = (0.5 - ratio_p) * log_of(p11) + d_constant(spec.P) / spec.A;
    log_lambda -= (0.5 - ratio_q) * log_of(r11) + d_constant(rest) / spec.B;
    if (k > 0) {
        // prod_{n>=0} (1 - e^{-(Bn+b)w})^{-1} ~ Gamma(b/B) (Bw)^{b/B-1/2} (2 pi)^{-1/2} e^{pi^2/(6Bw)}
        log_lambda += k * (std::lgamma(ratio_q) + (ratio_q - 0.5) * std::log(static_cast<double>(spec.B)) -
                           0.5 * std::log(2.0 * kPi));
    }

    AsymParams params;
    params.lambda = std::exp(log_lambda);
    params.beta = k * (ratio_q - 0.5);
    params.gamma = gamma;
    return params;
}

double ingham_eval(const AsymParams& params, long n)
{
    params.validate();
    if (n < 1) {
        throw PreconditionError("ingham_eval requires n >= 1");
    }
    const double dn = static_cast<double>(n);
    return std::log(params.lambda) + (params.beta / 2.0 + 0.25) * std::log(params.gamma) -
           std::log(2.0 * std::sqrt(kPi)) - (params.beta / 2.0 + 0.75) * std::log(dn) +
           2.0 * std::sqrt(params.gamma * dn);
}

double TaggedLog::value() const { return coeff.get_d() * log_of(argument); }

EmExpansion em_expansion_log_product(int d, int order)
{
    if (order < 1 || order > 24) {
        throw PreconditionError("em_expansion_log_product: order must lie in 1..24");
    }
    const UniPoly& a = eulerian_family(d).A;
    const LogSeries f = log_series(exp_substitute(a, order));
    if (f.log_argument != BigRational(factorial(d))) {
        throw IdentityViolation("f_d(0) != log(d!)");
    }

    EmExpansion out;
    out.d = d;
    out.order = order;
    out.leading = c_constant(a).value_quadrature;
    out.constant = TaggedLog{-bernoulli_poly(1, 1), factorial(d)};
    out.terms = rational_terms(order);
    // f^{(n)}(0)/(n+1)! = tail_n n!/(n+1)! = tail_n/(n+1).
    for (int n = 1; n <= order; ++n) {
        out.terms[static_cast<std::size_t>(n)] = -bernoulli_poly(n + 1, 1) * f.tail[n] / BigRational(n + 1);
    }

    if (out.constant.coeff != BigRational(-1, 2)) {
        throw IdentityViolation("Euler-Maclaurin constant term is not -log(d!)/2");
    }
    if (out.terms[1] != make_rational(d - 1, 24)) {
        throw IdentityViolation("Euler-Maclaurin w-term is " + out.terms[1].get_str() + ", expected (d-1)/24");
    }
    for (int n = 2; n <= order; ++n) {
        if (out.terms[static_cast<std::size_t>(n)] != 0) {
            throw IdentityViolation("Euler-Maclaurin term w^" + std::to_string(n) + " = " +
                                    out.terms[static_cast<std::size_t>(n)].get_str() + " does not vanish for d=" +
                                    std::to_string(d));
        }
    }
    return out;
}

bool shifted_log_is_even(int d, int order)
{
    const LogSeries f = log_series(exp_substitute(eulerian_family(d).A, order));
    for (int n = 1; n <= order; n += 2) {
        BigRational c = f.tail[n];
        if (n == 1) {
            c += make_rational(d - 1, 2);
        }
        if (c != 0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// High-precision product check

namespace {

using detail::MpReal;

// C_P = -sum Li_2(1/alpha) for real-rooted P, roots Newton-polished in MPFR.
MpReal hp_c_constant(const UniPoly& p, mpfr_prec_t prec)
{
    MpReal total(prec);
    if (p.degree() < 1) {
        return total;
    }
    std::vector<MpReal> coeffs;
    for (const auto& c : p.coeffs()) {
        coeffs.emplace_back(c, prec);
    }
    const MpReal one(1.0, prec);
    for (const auto& approx : poly_roots(p)) {
        if (std::abs(approx.imag()) > 1e-9 * (1.0 + std::abs(approx))) {
            throw PreconditionError("high-precision C_P needs a real-rooted polynomial, got " + p.to_string());
        }
        MpReal x(approx.real(), prec);
        for (int iter = 0; iter < 200; ++iter) {
            MpReal value(prec);
            MpReal deriv(prec);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
                deriv = deriv * x + value;
                value = value * x + *it;
            }
            const MpReal step = value / deriv;
            x -= step;
            if (step.is_zero() || mpfr_get_exp(step.get()) < mpfr_get_exp(x.get()) - prec + 8) {
                break;
            }
        }
        total -= li2(one / x);
    }
    return total;
}

detail::MpReal hp_log_factorial(int d, mpfr_prec_t prec) { return log(MpReal(factorial(d), prec)); }

ProductAsymRow product_row(int d, double w, const MpReal& c_hp)
{
    ProductAsymRow row;
    row.w = w;
    row.precision_digits = 60 + static_cast<int>(std::ceil(9.0 / w));
    const auto prec = static_cast<mpfr_prec_t>(std::ceil(row.precision_digits * 3.3219280948873623));
    const double eps_log = prec * std::log(2.0);

    const UniPoly& a = eulerian_family(d).A;
    const BiPoly& f = deformed_family(d).F;
    const MpReal wr(w, prec);
    const MpReal q = exp(-wr);
    const MpReal log_dfact = hp_log_factorial(d, prec);
    const MpReal& c = c_hp;

    // F_d(e^{-w}): tail after n factors is at most d! q^{n+1} / (1 - q).
    const double log_fact = log_factorial(d);
    const double tail_slack = eps_log + log_fact - std::log(-std::expm1(-w));
    row.terms = static_cast<long>(std::ceil(tail_slack / w));
    {
        std::vector<MpReal> ac;
        for (int i = 1; i <= a.degree(); ++i) {
            ac.emplace_back(a.coeff(i), prec);
        }
        MpReal sum(prec);
        MpReal x = q;
        for (long n = 1; n <= row.terms; ++n) {
            MpReal tail(prec);
            for (auto it = ac.rbegin(); it != ac.rend(); ++it) {
                tail = (tail + *it) * x;
            }
            sum += log1p(tail);
            x *= q;
        }
        const MpReal closed = c / wr - log_dfact / MpReal(2.0, prec) + MpReal(static_cast<double>(d - 1), prec) * wr /
                                                                            MpReal(24.0, prec);
        row.f_log10_rel_error = detail::log10_abs(expm1(sum - closed));
    }

    // G_d(e^{-w}): |F_d(x,y) - 1| <= x sum|f_ij| on [0,1]^2, x shrinking by q^{d+1}.
    {
        BigInt abs_sum = 0;
        std::vector<std::vector<MpReal>> rows;
        for (int i = 1; i <= f.degree_x(); ++i) {
            std::vector<MpReal> r;
            for (int j = 0; j <= f.degree_y(); ++j) {
                r.emplace_back(f.coeff(i, j), prec);
                abs_sum += abs(f.coeff(i, j));
            }
            rows.push_back(std::move(r));
        }
        const double ratio_log = -(d + 1) * w;
        const double slack = eps_log + (abs_sum > 0 ? log_of(abs_sum) : 0.0) - std::log(-std::expm1(ratio_log));
        const long g_terms = static_cast<long>(std::ceil((slack - w) / ((d + 1) * w))) + 1;

        // Row polynomials in y evaluated once; F_d(x,q) - 1 = sum_i x^i row_i(q).
        std::vector<MpReal> row_at_q;
        for (const auto& r : rows) {
            MpReal acc(prec);
            for (auto it = r.rbegin(); it != r.rend(); ++it) {
                acc = acc * q + *it;
            }
            row_at_q.push_back(acc);
        }
        const MpReal step = exp(-MpReal(static_cast<double>(d + 1), prec) * wr);
        MpReal x = q;
        MpReal sum(prec);
        double min_factor = INFINITY;
        for (long n = 0; n < g_terms; ++n) {
            MpReal tail(prec);
            for (auto it = row_at_q.rbegin(); it != row_at_q.rend(); ++it) {
                tail = (tail + *it) * x;
            }
            const double factor = 1.0 + tail.to_double();
            min_factor = std::min(min_factor, factor);
            if (!(factor > 0.0)) {
                ++row.g_nonpositive_factors;
            } else {
                sum += log1p(tail);
            }
            x *= step;
        }
        row.g_min_factor = min_factor;
        const MpReal closed = c / (MpReal(static_cast<double>(d + 1), prec) * wr) -
                              log_dfact / MpReal(2.0 * (d + 1), prec);
        row.g_log10_rel_error =
            row.g_nonpositive_factors > 0 ? NAN : detail::log10_abs(expm1(sum - closed));
    }
    return row;
}

} // namespace

std::vector<ProductAsymRow> product_asym_check(int d, const std::vector<double>& grid)
{
    if (d < 1) {
        throw PreconditionError("d must be a positive integer");
    }
    double w_min = 0.5;
    for (double w : grid) {
        if (!(w > 0.0 && w <= 0.5)) {
            throw PreconditionError("product_asym_check: w must lie in (0, 0.5]");
        }
        w_min = std::min(w_min, w);
    }
    // One C_d at the finest precision serves every row.
    const int digits = 60 + static_cast<int>(std::ceil(9.0 / w_min));
    const auto prec = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623));
    const MpReal c_hp = hp_c_constant(eulerian_family(d).A, prec);
    const ConstantReport report = c_constant(eulerian_family(d).A);
    if (std::abs(c_hp.to_double() - report.value_quadrature) > ConstantReport::kAgreementTolerance) {
        throw IdentityViolation("high-precision C_d disagrees with quadrature");
    }
    eulerian_family(d);
    deformed_family(d);

    std::vector<std::future<ProductAsymRow>> jobs;
    for (double w : grid) {
        jobs.push_back(std::async(std::launch::async, [d, w, &c_hp] { return product_row(d, w, c_hp); }));
    }
    std::vector<ProductAsymRow> rows;
    for (auto& job : jobs) {
        rows.push_back(job.get());
    }
    return rows;
}

CompareResult compare_exact_vs_asym(const IntSeries& series, const AsymParams& params, const std::vector<long>& grid)
{
    params.validate();
    CompareResult out;
    for (long n : grid) {
        if (n < 1 || n > series.order()) {
            throw PreconditionError("compare grid point " + std::to_string(n) + " outside [1, " +
                                    std::to_string(series.order()) + "]");
        }
    }
    for (long n : grid) {
        const BigInt& c = series[static_cast<int>(n)];
        if (c <= 0) {
            out.notes.push_back("n=" + std::to_string(n) + ": coefficient " + c.get_str() + " skipped");
            continue;
        }
        CompareRow row;
        row.n = n;
        row.exact_log = log_of(c);
        row.asym_log = ingham_eval(params, n);
        row.log_ratio = row.exact_log - row.asym_log;
        out.rows.push_back(row);
    }
    return out;
}

} // namespace diamonds
