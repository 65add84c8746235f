#pragma once

// Eulerian polynomials A_d(x) and their two-variable deformations F_d(x, y).

#include <string>
#include <vector>

#include "diamonds/polycore.hpp"

namespace diamonds {

struct EulerianFamily {
    int d = 0;
    UniPoly A;
};

/// F_d and H_d with F_d (1 - y) = H_d.
struct DeformedFamily {
    int d = 0;
    BiPoly F;
    BiPoly H;
};

/// A_d via A_d = (1 + (d-1)x) A_{d-1} + x(1-x) A'_{d-1}, A_0 = 1.
UniPoly eulerian_poly(int d);

/// A_d as the numerator of sum_j (j+1)^d x^j = A_d / (1-x)^{d+1}. Throws
/// IdentityViolation if the coefficients of x^d and above do not cancel.
UniPoly eulerian_poly_via_definition(int d);

/// Builds F_d, H_d by H_d = (1 - x y^d) F_{d-1}(x,y) - y(1-x) F_{d-1}(xy,y)
/// and F_d = H_d / (1-y) by exact division.
DeformedFamily deformed_poly(int d);

/// A'_d(1).
BigInt eulerian_derivative_at_one(int d);

/// Memoized, thread-safe. Constructs A_d by both routes and throws
/// IdentityViolation if they disagree.
const EulerianFamily& eulerian_family(int d);
const DeformedFamily& deformed_family(int d);

BigInt factorial(int n);

struct IdentityCheck {
    std::string name;
    bool passed = false;
};

/// Every exact identity known for A_d and F_d at this d.
std::vector<IdentityCheck> check_eulerian_identities(int d);

} // namespace diamonds
