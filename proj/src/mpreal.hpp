#pragma once

// Minimal RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations produce the larger of the two operand precisions, so no
// global precision state is touched and threads may use it freely.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <utility>

#include "diamonds/polycore.hpp"

namespace diamonds::detail {

class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    MpReal(double x, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    MpReal(const BigInt& x, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    MpReal(const MpReal& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpReal(MpReal&& o) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    MpReal& operator=(const MpReal& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    MpReal& operator+=(const MpReal& o)
    {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator-=(const MpReal& o)
    {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator*=(const MpReal& o)
    {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator/=(const MpReal& o)
    {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend MpReal operator+(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_add); }
    friend MpReal operator-(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_sub); }
    friend MpReal operator*(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_mul); }
    friend MpReal operator/(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_div); }
    friend MpReal operator-(const MpReal& a)
    {
        MpReal out(a.prec());
        mpfr_neg(out.v_, a.v_, MPFR_RNDN);
        return out;
    }
    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    template <class Fn>
    friend MpReal unary(const MpReal& a, Fn fn)
    {
        MpReal out(a.prec());
        fn(out.v_, a.v_, MPFR_RNDN);
        return out;
    }

private:
    template <class Fn>
    static MpReal binary(const MpReal& a, const MpReal& b, Fn fn)
    {
        MpReal out(std::max(a.prec(), b.prec()));
        fn(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }

    mpfr_t v_;
};

inline MpReal log(const MpReal& a) { return unary(a, mpfr_log); }
inline MpReal log1p(const MpReal& a) { return unary(a, mpfr_log1p); }
inline MpReal exp(const MpReal& a) { return unary(a, mpfr_exp); }
inline MpReal expm1(const MpReal& a) { return unary(a, mpfr_expm1); }
inline MpReal li2(const MpReal& a) { return unary(a, mpfr_li2); }
inline MpReal abs(const MpReal& a) { return unary(a, mpfr_abs); }

/// log10|a|, -inf for zero, without underflowing through double.
inline double log10_abs(const MpReal& a)
{
    if (a.is_zero()) {
        return -INFINITY;
    }
    return unary(abs(a), mpfr_log10).to_double();
}

} // namespace diamonds::detail
