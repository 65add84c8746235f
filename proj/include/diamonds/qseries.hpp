#pragma once

// Exact expansion of infinite-product generating functions to order N.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diamonds/polycore.hpp"

namespace diamonds {

/// c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}) over the integers.
class IntSeries {
public:
    explicit IntSeries(int order);
    explicit IntSeries(std::vector<BigInt> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntSeries truncated(int order) const;

    /// In place multiplication by 1 + sum_e t_e q^e (all e >= 1).
    void multiply_unit_factor(const std::vector<std::pair<int, BigInt>>& terms);
    /// In place division by 1 + sum_e t_e q^e (all e >= 1).
    void divide_unit_factor(const std::vector<std::pair<int, BigInt>>& terms);

    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
    friend bool operator==(const IntSeries& a, const IntSeries& b) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// prod_{n>=0} P(q^{An+a}, q) / Q(q^{Bn+b}, q).
struct ProductSpec {
    BiPoly P = BiPoly::constant(1);
    BiPoly Q = BiPoly::constant(1);
    int A = 1;
    int a = 1;
    int B = 1;
    int b = 1;

    /// Structural checks needed for a well-defined formal product: A, B >= 1,
    /// a, b >= 0 and P(0,y) = Q(0,y) = 1. Throws PreconditionError.
    void validate() const;
};

/// Reads {"P": "...", "Q": "...", "A": .., "a": .., "B": .., "b": ..}.
ProductSpec parse_product_spec(const std::string& json_text);
ProductSpec load_product_spec(const std::string& path);

/// prod_{n>=1} A_d(q^n) / (1 - q^n)^{d+1}.
IntSeries schmidt_series(int d, int order);

/// prod_{n>=1} F_d(q^{(d+1)(n-1)+1}, q) / (1 - q^n).
IntSeries size_series(int d, int order);

/// Throws DivergentFactor if a substituted factor does not have constant
/// term 1.
IntSeries general_product_series(const ProductSpec& spec, int order);

/// The spec whose product equals the size generating function at d.
ProductSpec size_product_spec(int d);

/// p(0..N) by Euler's pentagonal-number recurrence.
IntSeries partition_numbers(int order);

/// Index n+1 of the first c_{n+1} < c_n, if any.
std::optional<int> monotonicity_check(const IntSeries& s);

} // namespace diamonds
