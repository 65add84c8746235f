#include "diamonds/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diamonds/errors.hpp"

namespace diamonds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

const std::vector<BigRational>& bernoulli_table()
{
    static const std::vector<BigRational> table = [] {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
        std::vector<BigRational> b(kBernoulliTableSize + 1);
        b[0] = 1;
        for (int n = 1; n <= kBernoulliTableSize; ++n) {
            BigRational acc = 0;
            BigInt binom = 1; // C(n+1, 0)
            for (int k = 0; k < n; ++k) {
                acc += BigRational(binom) * b[static_cast<std::size_t>(k)];
                binom = binom * (n + 1 - k) / (k + 1);
            }
            b[static_cast<std::size_t>(n)] = -acc / BigRational(n + 1);
        }
        return b;
    }();
    return table;
}

// B_n / (n+1)! in double, for the series Li_2(z) = sum_n B_n u^{n+1}/(n+1)!.
const std::array<double, 40>& dilog_bernoulli_weights()
{
    static const std::array<double, 40> weights = [] {
        std::array<double, 40> w{};
        BigInt fact = 1;
        for (int n = 0; n < 40; ++n) {
            fact *= n + 1;
            w[static_cast<std::size_t>(n)] = BigRational(bernoulli_number(n) / BigRational(fact)).get_d();
        }
        return w;
    }();
    return weights;
}

ComplexVal dilog_power_series(ComplexVal z)
{
    ComplexVal sum = 0.0;
    ComplexVal power = z;
    for (int k = 1; k < 200; ++k) {
        const ComplexVal term = power / static_cast<double>(k * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
        power *= z;
    }
    return sum;
}

// Valid for |z| <= 1 with Re z <= 1/2, where |log(1 - z)| stays well below 2 pi.
ComplexVal dilog_bernoulli_series(ComplexVal z)
{
    const ComplexVal u = -std::log(1.0 - z);
    const auto& w = dilog_bernoulli_weights();
    ComplexVal sum = 0.0;
    ComplexVal power = u;
    for (std::size_t n = 0; n < w.size(); ++n) {
        if (w[n] != 0.0) {
            const ComplexVal term = w[n] * power;
            sum += term;
            if (n > 2 && std::abs(term) < 1e-18 * std::abs(sum)) {
                break;
            }
        }
        power *= u;
    }
    return sum;
}

ComplexVal dilog_unit_disk(ComplexVal z)
{
    if (std::abs(z) <= 0.5) {
        return dilog_power_series(z);
    }
    if (z.real() > 0.5) {
        // Reflection; 1 - z lands in the half plane Re <= 1/2 inside the disk.
        return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog_bernoulli_series(1.0 - z);
    }
    return dilog_bernoulli_series(z);
}

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_rule()
{
    static const GaussRule rule = [] {
        constexpr int n = 20;
        GaussRule r;
        for (int i = 1; i <= n; ++i) {
            double x = std::cos(kPi * (i - 0.25) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    break;
                }
            }
            r.nodes.push_back(x);
            r.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
        }
        return r;
    }();
    return rule;
}

double gauss_panel(const std::function<double(double)>& f, double lo, double hi)
{
    const auto& rule = gauss_rule();
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

struct QuadState {
    const std::function<double(double)>& f;
    double worst_error = 0.0;
    bool failed = false;
};

double adapt(QuadState& s, double lo, double hi, double whole, double tol, int depth)
{
    const double mid = 0.5 * (lo + hi);
    const double left = gauss_panel(s.f, lo, mid);
    const double right = gauss_panel(s.f, mid, hi);
    const double err = std::abs(left + right - whole);
    if (err <= tol || !std::isfinite(err)) {
        if (!std::isfinite(err)) {
            s.failed = true;
        }
        return left + right;
    }
    if (depth >= 48) {
        s.failed = true;
        s.worst_error = std::max(s.worst_error, err);
        return left + right;
    }
    return adapt(s, lo, mid, left, 0.5 * tol, depth + 1) + adapt(s, mid, hi, right, 0.5 * tol, depth + 1);
}

} // namespace

const BigRational& bernoulli_number(int n)
{
    if (n < 0 || n > kBernoulliTableSize) {
        throw PreconditionError("Bernoulli index " + std::to_string(n) + " outside table 0.." +
                                std::to_string(kBernoulliTableSize));
    }
    return bernoulli_table()[static_cast<std::size_t>(n)];
}

BigRational bernoulli_poly(int n, const BigRational& a)
{
    bernoulli_number(n);
    BigRational acc = 0;
    BigRational power = 1; // a^{n-k}, built from k = n downwards
    BigInt binom = 1;      // C(n, k)
    for (int k = n; k >= 0; --k) {
        acc += BigRational(binom) * bernoulli_number(k) * power;
        power *= a;
        binom = binom * k / (n - k + 1);
    }
    return acc;
}

ComplexVal dilog(ComplexVal z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw PreconditionError("dilog: non-finite argument");
    }
    if (z.imag() == 0.0 && z.real() >= 1.0) {
        std::ostringstream msg;
        msg << "dilog: argument " << z.real() << " lies on the branch cut [1, inf)";
        throw BranchCutError(msg.str());
    }
    if (z == 0.0) {
        return 0.0;
    }
    if (std::abs(z) > 1.0) {
        const ComplexVal l = std::log(-z);
        return -kZeta2 - 0.5 * l * l - dilog_unit_disk(1.0 / z);
    }
    return dilog_unit_disk(z);
}

double root_residual(const UniPoly& p, ComplexVal z)
{
    double scale = 0.0;
    const double mag = std::abs(z);
    double power = 1.0;
    for (const auto& c : p.coeffs()) {
        scale += std::abs(c.get_d()) * power;
        power *= mag;
    }
    return scale == 0.0 ? 0.0 : std::abs(p(z)) / scale;
}

std::vector<ComplexVal> poly_roots(const UniPoly& p)
{
    if (p.degree() < 1) {
        throw PreconditionError("poly_roots: degree must be at least 1");
    }
    // Exact zero roots first.
    int zeros = 0;
    while (p.coeff(zeros) == 0) {
        ++zeros;
    }
    std::vector<double> c;
    for (int i = zeros; i <= p.degree(); ++i) {
        c.push_back(p.coeff(i).get_d());
    }
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<ComplexVal> roots(static_cast<std::size_t>(zeros), ComplexVal(0.0));
    if (n == 0) {
        return roots;
    }

    auto eval = [&](ComplexVal z, ComplexVal& deriv) {
        ComplexVal v = c.back();
        deriv = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            deriv = deriv * z + v;
            v = v * z + c[static_cast<std::size_t>(i)];
        }
        return v;
    };

    const double radius = std::pow(std::abs(c.front() / c.back()), 1.0 / n);
    std::vector<ComplexVal> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * kPi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius * (1.0 + 0.01 * k / n), angle);
    }

    bool converged = false;
    for (int iter = 0; iter < 1000 && !converged; ++iter) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            ComplexVal& zk = z[static_cast<std::size_t>(k)];
            ComplexVal deriv;
            const ComplexVal value = eval(zk, deriv);
            if (value == 0.0) {
                continue;
            }
            const ComplexVal ratio = value / deriv;
            ComplexVal repulsion = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != k) {
                    repulsion += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
                }
            }
            const ComplexVal step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                continue;
            }
            zk -= step;
            if (std::abs(step) > 1e-15 * (1.0 + std::abs(zk))) {
                converged = false;
            }
        }
    }

    // Conjugate pairing: partner each upper-half-plane root with the nearest
    // conjugate, then snap the unpartnered ones onto the real axis.
    std::vector<bool> used(z.size(), false);
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (used[k] || z[k].imag() <= 0.0) {
            continue;
        }
        std::size_t best = z.size();
        double best_dist = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j == k || used[j] || z[j].imag() > 0.0) {
                continue;
            }
            const double dist = std::abs(z[j] - std::conj(z[k]));
            if (best == z.size() || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best != z.size() && best_dist < std::abs(z[k].imag())) {
            const ComplexVal mean = 0.5 * (z[k] + std::conj(z[best]));
            z[k] = mean;
            z[best] = std::conj(mean);
            used[k] = used[best] = true;
        }
    }
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (!used[k]) {
            z[k] = ComplexVal(z[k].real(), 0.0);
        }
    }

    double worst = 0.0;
    for (const auto& root : z) {
        worst = std::max(worst, root_residual(p, root));
    }
    if (worst > 1e-10) {
        std::ostringstream msg;
        msg << "poly_roots: no convergence for " << p.to_string() << ", worst backward error " << worst;
        throw ConvergenceError(msg.str());
    }
    roots.insert(roots.end(), z.begin(), z.end());
    std::sort(roots.begin(), roots.end(), [](ComplexVal a, ComplexVal b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

double quad_interval(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    if (!(hi > lo)) {
        throw PreconditionError("quadrature interval must satisfy lo < hi");
    }
    QuadState state{f};
    const double whole = gauss_panel(f, lo, hi);
    const double value = adapt(state, lo, hi, whole, tol, 0);
    if (state.failed || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "quadrature did not reach tolerance " << tol << "; achieved error estimate " << state.worst_error;
        throw ConvergenceError(msg.str());
    }
    return value;
}

double quad_smooth(const std::function<double(double)>& f, double tol) { return quad_interval(f, 0.0, 1.0, tol); }

} // namespace diamonds
