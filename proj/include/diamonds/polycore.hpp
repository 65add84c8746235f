#pragma once

// Exact polynomial and truncated-series arithmetic.
//
// UniPoly and BiPoly are dense integer polynomials; RatSeries is a truncated
// power series with rational coefficients. All values are immutable after
// construction and every operation returns a fresh value.

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace diamonds {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Reduced fraction num/den. Throws DivisionError on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// log of a positive integer as a double, valid far outside double range.
double log_of(const BigInt& value);

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const BigInt& c);
    static UniPoly monomial(const BigInt& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int i) const;

    UniPoly derivative() const;
    /// x^n p(1/x); requires n >= degree().
    UniPoly reversed(int n) const;

    BigInt operator()(const BigInt& x) const;
    BigRational operator()(const BigRational& x) const;
    double operator()(double x) const;
    std::complex<double> operator()(std::complex<double> x) const;

    std::string to_string() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Quotient a/b; throws DivisionError unless b divides a over the integers.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

class BiPoly {
public:
    BiPoly() = default;
    /// rows[i][j] is the coefficient of x^i y^j; rows may be ragged.
    explicit BiPoly(const std::vector<std::vector<BigInt>>& rows);

    static BiPoly constant(const BigInt& c);
    static BiPoly monomial(const BigInt& c, int i, int j);
    static BiPoly from_x(const UniPoly& p);
    static BiPoly from_y(const UniPoly& p);

    int degree_x() const { return static_cast<int>(nx_) - 1; }
    int degree_y() const { return static_cast<int>(ny_) - 1; }
    bool is_zero() const { return nx_ == 0; }
    /// Zero outside the stored rectangle.
    BigInt coeff(int i, int j) const;

    BiPoly partial_x() const;
    BiPoly partial_y() const;
    /// p(x y^k, y).
    BiPoly substitute_x_scaled(int k) const;
    /// p(x, y0) as a polynomial in x.
    UniPoly at_y(const BigInt& y0) const;
    /// p(x0, y) as a polynomial in y.
    UniPoly at_x(const BigInt& x0) const;
    /// True when no monomial involves y.
    bool is_univariate_x() const { return ny_ <= 1; }

    BigInt operator()(const BigInt& x, const BigInt& y) const;
    double operator()(double x, double y) const;
    std::complex<double> operator()(std::complex<double> x, std::complex<double> y) const;

    /// Calls f(i, j, c) for every nonzero coefficient, x-degree major.
    template <class F>
    void for_each_term(F&& f) const
    {
        for (std::size_t i = 0; i < nx_; ++i) {
            for (std::size_t j = 0; j < ny_; ++j) {
                const BigInt& c = at(i, j);
                if (c != 0) {
                    f(static_cast<int>(i), static_cast<int>(j), c);
                }
            }
        }
    }

    std::string to_string() const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

private:
    BiPoly(std::size_t nx, std::size_t ny, std::vector<BigInt> data);
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * ny_ + j]; }
    void tighten();

    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::vector<BigInt> data_;
};

/// Quotient a/b by lex-order division (x major); throws DivisionError unless
/// b divides a over the integers.
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);

/// Parses integer-coefficient text such as "1+4x+x^2" or "(1-x)*(1+x*y^2)".
/// Rejects decimal points, division, and negative exponents.
BiPoly parse_bipoly(std::string_view text);
/// As parse_bipoly, but rejects any occurrence of y.
UniPoly parse_unipoly(std::string_view text);

/// sum_{k<=N} c_k z^k + O(z^{N+1}) with exact rational coefficients.
class RatSeries {
public:
    explicit RatSeries(int order);
    explicit RatSeries(std::vector<BigRational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    RatSeries truncated(int order) const;

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
    friend bool operator==(const RatSeries& a, const RatSeries& b) = default;

private:
    std::vector<BigRational> coeffs_;
};

/// log(s) = log(log_argument) + tail, with tail(0) = 0. The transcendental
/// constant is kept symbolic so the tail stays in Q.
struct LogSeries {
    BigRational log_argument;
    RatSeries tail;

    double constant() const;
};

/// Truncated Taylor series of p(e^{-z}) about z = 0.
RatSeries exp_substitute(const UniPoly& p, int order);

/// Throws DomainError if the constant term is not positive.
LogSeries log_series(const RatSeries& s);

/// exp(s); requires s(0) = 0.
RatSeries exp_series(const RatSeries& s);

} // namespace diamonds
