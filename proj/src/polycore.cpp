#include "diamonds/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "diamonds/errors.hpp"

namespace diamonds {

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw DivisionError("rational with zero denominator");
    }
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

double log_of(const BigInt& value)
{
    if (value <= 0) {
        throw DomainError("log of non-positive integer");
    }
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

namespace {

std::string monomial_text(const BigInt& c, int i, int j, bool first)
{
    std::string out;
    BigInt mag = abs(c);
    if (c < 0) {
        out += "-";
    } else if (!first) {
        out += "+";
    }
    std::vector<std::string> parts;
    if (mag != 1 || (i == 0 && j == 0)) {
        parts.push_back(mag.get_str());
    }
    if (i > 0) {
        parts.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    }
    if (j > 0) {
        parts.push_back(j == 1 ? "y" : "y^" + std::to_string(j));
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) {
            out += "*";
        }
        out += parts[k];
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

UniPoly UniPoly::constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }

UniPoly UniPoly::monomial(const BigInt& c, int degree)
{
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt UniPoly::coeff(int i) const
{
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::reversed(int n) const
{
    if (n < degree()) {
        throw PreconditionError("reversed: n below degree");
    }
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) {
        out[static_cast<std::size_t>(n - i)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return UniPoly(std::move(out));
}

BigInt UniPoly::operator()(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

BigRational UniPoly::operator()(const BigRational& x) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + BigRational(*it);
    }
    return acc;
}

double UniPoly::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

std::complex<double> UniPoly::operator()(std::complex<double> x) const
{
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

std::string UniPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c != 0) {
            out += monomial_text(c, i, 0, out.empty());
        }
    }
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        out[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        out[i] += b.coeffs_[i];
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a)
{
    std::vector<BigInt> out(a.coeffs_);
    for (auto& c : out) {
        c = -c;
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return UniPoly(std::move(out));
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) {
        throw DivisionError("division by the zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw DivisionError("inexact polynomial division: degree of divisor exceeds dividend");
    }
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const BigInt& lead = b.coeffs().back();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + db];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw DivisionError("inexact polynomial division: non-integral quotient");
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b.coeffs()[j].get_mpz_t());
        }
        quot[k] = q;
    }
    for (const auto& r : rem) {
        if (r != 0) {
            throw DivisionError("inexact polynomial division: nonzero remainder");
        }
    }
    return UniPoly(std::move(quot));
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::size_t nx, std::size_t ny, std::vector<BigInt> data)
    : nx_(nx), ny_(ny), data_(std::move(data))
{
    tighten();
}

BiPoly::BiPoly(const std::vector<std::vector<BigInt>>& rows)
{
    nx_ = rows.size();
    ny_ = 0;
    for (const auto& row : rows) {
        ny_ = std::max(ny_, row.size());
    }
    data_.assign(nx_ * ny_, BigInt(0));
    for (std::size_t i = 0; i < nx_; ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            data_[i * ny_ + j] = rows[i][j];
        }
    }
    tighten();
}

void BiPoly::tighten()
{
    std::size_t tx = 0;
    std::size_t ty = 0;
    for (std::size_t i = 0; i < nx_; ++i) {
        for (std::size_t j = 0; j < ny_; ++j) {
            if (at(i, j) != 0) {
                tx = std::max(tx, i + 1);
                ty = std::max(ty, j + 1);
            }
        }
    }
    if (tx == nx_ && ty == ny_) {
        return;
    }
    std::vector<BigInt> out(tx * ty);
    for (std::size_t i = 0; i < tx; ++i) {
        for (std::size_t j = 0; j < ty; ++j) {
            out[i * ty + j] = at(i, j);
        }
    }
    nx_ = tx;
    ny_ = ty;
    data_ = std::move(out);
}

BiPoly BiPoly::constant(const BigInt& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const BigInt& c, int i, int j)
{
    const auto nx = static_cast<std::size_t>(i) + 1;
    const auto ny = static_cast<std::size_t>(j) + 1;
    std::vector<BigInt> data(nx * ny);
    data.back() = c;
    return BiPoly(nx, ny, std::move(data));
}

BiPoly BiPoly::from_x(const UniPoly& p) { return BiPoly(p.coeffs().size(), 1, p.coeffs()); }

BiPoly BiPoly::from_y(const UniPoly& p)
{
    const std::size_t ny = p.coeffs().size();
    return BiPoly(ny == 0 ? 0 : 1, ny, p.coeffs());
}

BigInt BiPoly::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= nx_ || static_cast<std::size_t>(j) >= ny_) {
        return 0;
    }
    return at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

BiPoly BiPoly::partial_x() const
{
    if (nx_ <= 1) {
        return {};
    }
    std::vector<BigInt> out((nx_ - 1) * ny_);
    for (std::size_t i = 1; i < nx_; ++i) {
        for (std::size_t j = 0; j < ny_; ++j) {
            out[(i - 1) * ny_ + j] = at(i, j) * static_cast<unsigned long>(i);
        }
    }
    return BiPoly(nx_ - 1, ny_, std::move(out));
}

BiPoly BiPoly::partial_y() const
{
    if (ny_ <= 1) {
        return {};
    }
    std::vector<BigInt> out(nx_ * (ny_ - 1));
    for (std::size_t i = 0; i < nx_; ++i) {
        for (std::size_t j = 1; j < ny_; ++j) {
            out[i * (ny_ - 1) + j - 1] = at(i, j) * static_cast<unsigned long>(j);
        }
    }
    return BiPoly(nx_, ny_ - 1, std::move(out));
}

BiPoly BiPoly::substitute_x_scaled(int k) const
{
    if (k < 0) {
        throw PreconditionError("substitute_x_scaled: negative shift");
    }
    if (is_zero()) {
        return {};
    }
    const std::size_t ny = ny_ + (nx_ - 1) * static_cast<std::size_t>(k);
    std::vector<BigInt> out(nx_ * ny);
    for (std::size_t i = 0; i < nx_; ++i) {
        for (std::size_t j = 0; j < ny_; ++j) {
            out[i * ny + j + i * static_cast<std::size_t>(k)] = at(i, j);
        }
    }
    return BiPoly(nx_, ny, std::move(out));
}

UniPoly BiPoly::at_y(const BigInt& y0) const
{
    std::vector<BigInt> out(nx_);
    for (std::size_t i = 0; i < nx_; ++i) {
        BigInt acc = 0;
        for (std::size_t j = ny_; j-- > 0;) {
            acc = acc * y0 + at(i, j);
        }
        out[i] = acc;
    }
    return UniPoly(std::move(out));
}

UniPoly BiPoly::at_x(const BigInt& x0) const
{
    std::vector<BigInt> out(ny_);
    for (std::size_t j = 0; j < ny_; ++j) {
        BigInt acc = 0;
        for (std::size_t i = nx_; i-- > 0;) {
            acc = acc * x0 + at(i, j);
        }
        out[j] = acc;
    }
    return UniPoly(std::move(out));
}

BigInt BiPoly::operator()(const BigInt& x, const BigInt& y) const { return at_y(y)(x); }

double BiPoly::operator()(double x, double y) const
{
    double acc = 0.0;
    for (std::size_t i = nx_; i-- > 0;) {
        double row = 0.0;
        for (std::size_t j = ny_; j-- > 0;) {
            row = row * y + at(i, j).get_d();
        }
        acc = acc * x + row;
    }
    return acc;
}

std::complex<double> BiPoly::operator()(std::complex<double> x, std::complex<double> y) const
{
    std::complex<double> acc = 0.0;
    for (std::size_t i = nx_; i-- > 0;) {
        std::complex<double> row = 0.0;
        for (std::size_t j = ny_; j-- > 0;) {
            row = row * y + at(i, j).get_d();
        }
        acc = acc * x + row;
    }
    return acc;
}

std::string BiPoly::to_string() const
{
    std::string out;
    for_each_term([&](int i, int j, const BigInt& c) { out += monomial_text(c, i, j, out.empty()); });
    return out.empty() ? "0" : out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b)
{
    const std::size_t nx = std::max(a.nx_, b.nx_);
    const std::size_t ny = std::max(a.ny_, b.ny_);
    std::vector<BigInt> out(nx * ny);
    for (std::size_t i = 0; i < a.nx_; ++i) {
        for (std::size_t j = 0; j < a.ny_; ++j) {
            out[i * ny + j] += a.at(i, j);
        }
    }
    for (std::size_t i = 0; i < b.nx_; ++i) {
        for (std::size_t j = 0; j < b.ny_; ++j) {
            out[i * ny + j] += b.at(i, j);
        }
    }
    return BiPoly(nx, ny, std::move(out));
}

BiPoly operator-(const BiPoly& a)
{
    std::vector<BigInt> out(a.data_);
    for (auto& c : out) {
        c = -c;
    }
    return BiPoly(a.nx_, a.ny_, std::move(out));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const std::size_t nx = a.nx_ + b.nx_ - 1;
    const std::size_t ny = a.ny_ + b.ny_ - 1;
    std::vector<BigInt> out(nx * ny);
    a.for_each_term([&](int ai, int aj, const BigInt& ac) {
        b.for_each_term([&](int bi, int bj, const BigInt& bc) {
            const auto idx = static_cast<std::size_t>(ai + bi) * ny + static_cast<std::size_t>(aj + bj);
            mpz_addmul(out[idx].get_mpz_t(), ac.get_mpz_t(), bc.get_mpz_t());
        });
    });
    return BiPoly(nx, ny, std::move(out));
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b)
{
    if (b.is_zero()) {
        throw DivisionError("division by the zero polynomial");
    }
    // Leading term in lex order with x major.
    auto leading = [](const BiPoly& p, int& li, int& lj) {
        li = p.degree_x();
        for (lj = p.degree_y(); lj >= 0; --lj) {
            if (p.coeff(li, lj) != 0) {
                return;
            }
        }
    };
    int bi = 0;
    int bj = 0;
    leading(b, bi, bj);
    const BigInt blead = b.coeff(bi, bj);

    BiPoly rem = a;
    BiPoly quot;
    while (!rem.is_zero()) {
        int ri = 0;
        int rj = 0;
        leading(rem, ri, rj);
        const BigInt rlead = rem.coeff(ri, rj);
        if (ri < bi || rj < bj || !mpz_divisible_p(rlead.get_mpz_t(), blead.get_mpz_t())) {
            throw DivisionError("inexact bivariate division: leading term not divisible");
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), rlead.get_mpz_t(), blead.get_mpz_t());
        const BiPoly step = BiPoly::monomial(q, ri - bi, rj - bj);
        quot = quot + step;
        rem = rem - step * b;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BiPoly parse()
    {
        skip_ws();
        if (pos_ == text_.size()) {
            fail("empty polynomial");
        }
        BiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    static constexpr unsigned long kMaxExponent = 100000;

    [[noreturn]] void fail(const std::string& what) const
    {
        std::ostringstream msg;
        msg << "polynomial parse error at position " << pos_ << " in \"" << text_ << "\": " << what;
        throw ParseError(msg.str());
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BiPoly expr()
    {
        BiPoly acc;
        bool negate = false;
        if (char c = peek(); c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        acc = negate ? -term() : term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                return acc;
            }
            ++pos_;
            acc = c == '+' ? acc + term() : acc - term();
        }
    }

    BiPoly term()
    {
        BiPoly acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == 'x' || c == 'y' || c == '(') {
                acc = acc * factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
                fail("missing operator between factors");
            } else {
                return acc;
            }
        }
    }

    BiPoly factor()
    {
        BiPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::string digits = read_digits();
            if (digits.empty()) {
                fail("exponent must be a non-negative integer");
            }
            const BigInt e(digits);
            if (e > kMaxExponent) {
                fail("exponent too large");
            }
            BiPoly out = BiPoly::constant(1);
            for (unsigned long k = 0; k < e.get_ui(); ++k) {
                out = out * base;
            }
            return out;
        }
        return base;
    }

    BiPoly primary()
    {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return BiPoly::monomial(1, 1, 0);
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::monomial(1, 0, 1);
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::string digits = read_digits();
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/' || text_[pos_] == 'e')) {
                fail("coefficients must be integers");
            }
            return BiPoly::constant(BigInt(digits));
        }
        if (c == '.' || c == '/') {
            fail("coefficients must be integers");
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    std::string read_digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly parse_bipoly(std::string_view text) { return PolyParser(text).parse(); }

UniPoly parse_unipoly(std::string_view text)
{
    const BiPoly p = parse_bipoly(text);
    if (!p.is_univariate_x()) {
        throw ParseError("expected a polynomial in x only: \"" + std::string(text) + "\"");
    }
    return p.at_y(0);
}

// ---------------------------------------------------------------------------
// RatSeries

RatSeries::RatSeries(int order)
{
    if (order < 0) {
        throw PreconditionError("series order must be non-negative");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
}

RatSeries::RatSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw PreconditionError("series needs at least one coefficient");
    }
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

RatSeries RatSeries::truncated(int order) const
{
    if (order < 0 || order > this->order()) {
        throw PreconditionError("truncation order out of range");
    }
    return RatSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

RatSeries operator+(const RatSeries& a, const RatSeries& b)
{
    RatSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        out.coeffs_[static_cast<std::size_t>(k)] = a[k] + b[k];
    }
    return out;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b)
{
    RatSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        out.coeffs_[static_cast<std::size_t>(k)] = a[k] - b[k];
    }
    return out;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b)
{
    RatSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        BigRational acc = 0;
        for (int j = 0; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        out.coeffs_[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

double LogSeries::constant() const
{
    return log_of(log_argument.get_num()) - log_of(log_argument.get_den());
}

RatSeries exp_substitute(const UniPoly& p, int order)
{
    if (order < 0) {
        throw PreconditionError("series order must be non-negative");
    }
    // p(e^{-z}) = sum_k z^k / k! * sum_i p_i (-i)^k
    std::vector<BigRational> out(static_cast<std::size_t>(order) + 1);
    BigInt factorial = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            factorial *= k;
        }
        BigInt moment = 0;
        for (int i = 0; i <= p.degree(); ++i) {
            BigInt power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
            if (k % 2 == 1) {
                power = -power;
            }
            moment += p.coeffs()[static_cast<std::size_t>(i)] * power;
        }
        out[static_cast<std::size_t>(k)] = make_rational(moment, factorial);
    }
    return RatSeries(std::move(out));
}

LogSeries log_series(const RatSeries& s)
{
    const BigRational& c0 = s[0];
    if (c0 <= 0) {
        throw DomainError("log_series: constant term must be positive (principal branch)");
    }
    const int n = s.order();
    std::vector<BigRational> u(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        u[static_cast<std::size_t>(k)] = s[k] / c0;
    }
    // k u_k = sum_{j=1}^{k} j l_j u_{k-j}, with u_0 = 1.
    std::vector<BigRational> l(static_cast<std::size_t>(n) + 1, BigRational(0));
    for (int k = 1; k <= n; ++k) {
        BigRational acc = 0;
        for (int j = 1; j < k; ++j) {
            acc += BigRational(j) * l[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(k - j)];
        }
        l[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)] - acc / k;
    }
    return LogSeries{c0, RatSeries(std::move(l))};
}

RatSeries exp_series(const RatSeries& s)
{
    if (s[0] != 0) {
        throw PreconditionError("exp_series: constant term must be zero");
    }
    const int n = s.order();
    std::vector<BigRational> e(static_cast<std::size_t>(n) + 1, BigRational(0));
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigRational acc = 0;
        for (int j = 1; j <= k; ++j) {
            acc += BigRational(j) * s[j] * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    return RatSeries(std::move(e));
}

} // namespace diamonds
