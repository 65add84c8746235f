#pragma once

// Growth constants, Ingham-type coefficient asymptotics, and numerical checks
// of the product asymptotics.

#include <string>
#include <vector>

#include "diamonds/polycore.hpp"
#include "diamonds/qseries.hpp"

namespace diamonds {

/// b(n) ~ lambda gamma^{beta/2+1/4} / (2 sqrt(pi) n^{beta/2+3/4}) e^{2 sqrt(gamma n)}
/// for a series with B(e^{-t}) ~ lambda t^beta e^{gamma/t}.
struct AsymParams {
    double lambda = 1.0;
    double beta = 0.0;
    double gamma = 1.0;

    /// Throws PreconditionError unless lambda > 0 and gamma > 0.
    void validate() const;
};

/// C_P = int_0^inf log P(e^{-x}) dx by quadrature and by -sum_j Li_2(1/alpha_j).
struct ConstantReport {
    double value_quadrature = 0.0;
    double value_dilog = 0.0;
    double abs_gap = 0.0;

    static constexpr double kAgreementTolerance = 1e-9;
    bool agrees() const { return abs_gap < kAgreementTolerance; }
};

/// Requires P(0) = 1 and no zeros of P on [0, 1] (within 1e-8). Memoized.
ConstantReport c_constant(const UniPoly& p);

/// D_P = -int_0^inf P^{(0,1)}(e^{-x},1) / P(e^{-x},1) dx. Requires P(0,y) = 1
/// and P(x,1) nonvanishing on [0, 1].
double d_constant(const BiPoly& p);

AsymParams schmidt_params(int d);
AsymParams size_params(int d);

/// Parameters for prod_{n>=0} P(q^{An+a},q)/Q(q^{Bn+b},q). Factors (1-x)^k of
/// Q are split off and handled through the Gamma-function asymptotic of
/// prod (1 - q^{Bn+b})^{-1}, which contributes beta = k(b/B - 1/2). Throws
/// HypothesisViolation when gamma <= 0 or a positivity condition fails.
AsymParams general_params(const ProductSpec& spec);

/// log of the predicted coefficient at n >= 1.
double ingham_eval(const AsymParams& params, long n);

/// coeff * log(argument), kept symbolic.
struct TaggedLog {
    BigRational coeff;
    BigInt argument;

    double value() const;
};

/// log prod_{m>=1} A_d(e^{-mw}) ~ leading/w + constant + sum_{n>=1} terms[n] w^n.
struct EmExpansion {
    int d = 0;
    int order = 0;
    double leading = 0.0;
    TaggedLog constant;
    /// terms[0] is unused (always 0); terms[n] for 1 <= n <= order.
    std::vector<BigRational> terms;
};

/// Exact Euler-Maclaurin coefficients -B_{n+1}(1) f_d^{(n)}(0)/(n+1)! with
/// f_d(z) = log A_d(e^{-z}). Throws IdentityViolation unless the constant is
/// -log(d!)/2, the w-term is (d-1)/24 and every higher term vanishes.
EmExpansion em_expansion_log_product(int d, int order);

/// f_d(z) + (d-1) z / 2 has no odd Taylor coefficients up to order.
bool shifted_log_is_even(int d, int order);

struct ProductAsymRow {
    double w = 0.0;
    long terms = 0;             // factors kept in the F_d product
    int precision_digits = 0;   // working precision
    double f_log10_rel_error = 0.0;
    double g_log10_rel_error = 0.0;
    double g_min_factor = 0.0;  // smallest F_d(e^{-tw}, e^{-w}) met in the G_d product
    int g_nonpositive_factors = 0;
};

/// Truncated products F_d(e^{-w}) = prod_{n>=1} A_d(e^{-nw}) and
/// G_d(e^{-w}) = prod_{n>=0} F_d(e^{-((d+1)n+1)w}, e^{-w}) against
/// e^{C_d/w + (d-1)w/24}/sqrt(d!) and e^{C_d/((d+1)w)} d!^{-1/(2(d+1))},
/// evaluated in MPFR so that errors far below double rounding are visible.
/// Grid points must lie in (0, 0.5]. Rows are computed concurrently.
std::vector<ProductAsymRow> product_asym_check(int d, const std::vector<double>& grid);

struct CompareRow {
    long n = 0;
    double exact_log = 0.0;
    double asym_log = 0.0;
    double log_ratio = 0.0;
};

struct CompareResult {
    std::vector<CompareRow> rows;
    std::vector<std::string> notes;
};

/// Rows (n, log c(n), log c_hat(n), difference); zero coefficients are
/// skipped with a note. Throws PreconditionError for n outside [1, order].
CompareResult compare_exact_vs_asym(const IntSeries& series, const AsymParams& params, const std::vector<long>& grid);

} // namespace diamonds
