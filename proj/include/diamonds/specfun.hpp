#pragma once

// Bernoulli numbers, the complex dilogarithm, polynomial roots and adaptive
// quadrature. Everything here except the Bernoulli table works in double
// precision.

#include <complex>
#include <functional>
#include <vector>

#include "diamonds/polycore.hpp"

namespace diamonds {

using ComplexVal = std::complex<double>;

inline constexpr int kBernoulliTableSize = 64;

/// B_n with B_1 = -1/2. Throws PreconditionError for n > 64.
const BigRational& bernoulli_number(int n);

/// B_n(a) = sum_k C(n,k) B_k a^{n-k}.
BigRational bernoulli_poly(int n, const BigRational& a);

/// Li_2 on C \ [1, inf), principal branch. Throws BranchCutError for real
/// z >= 1.
ComplexVal dilog(ComplexVal z);

/// All complex roots with multiplicity (Aberth-Ehrlich iteration). For
/// real-coefficient input, roots come out in exact conjugate pairs.
std::vector<ComplexVal> poly_roots(const UniPoly& p);

/// Normwise backward error |p(z)| / sum_i |p_i| |z|^i.
double root_residual(const UniPoly& p, ComplexVal z);

/// Adaptive Gauss-Legendre quadrature of f over (0, 1]. f is never evaluated
/// at u = 0, so an integrand with a finite limit there needs no special case.
double quad_smooth(const std::function<double(double)>& f, double tol = 1e-12);

/// Same, over a finite interval [lo, hi].
double quad_interval(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

} // namespace diamonds
