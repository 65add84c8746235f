#pragma once

// Brute-force counters for d-fold partition diamonds. These are deliberately
// independent of the generating functions in qseries.hpp.
//
// A diamond is a list a_0 >= a_1 >= ... >= a_{L-1} > 0 (a_L := 0) together
// with rows b[j][k], 0 <= j < d, k < L, satisfying a_k >= b[j][k] >= a_{k+1}
// for every j. This is the all-j reading of the defining inequalities, the
// one drawn in the diamond graph; the "max_j" wording would only constrain
// the largest b[j][k] from below.

#include <functional>
#include <vector>

#include "diamonds/polycore.hpp"

namespace diamonds {

struct DiamondConfig {
    std::vector<int> a;
    std::vector<std::vector<int>> b;

    int size() const;
    int schmidt_size() const;
    /// Checks the inequalities and shapes.
    bool valid(int d) const;
};

enum class DiamondStat { size, schmidt };

/// Visits every d-fold diamond whose statistic equals n.
void enumerate_diamonds(int d, int n, DiamondStat stat, const std::function<void(const DiamondConfig&)>& visit);

std::vector<DiamondConfig> list_diamonds(int d, int n, DiamondStat stat);

/// Sum over partitions a of n of prod_k (a_k - a_{k+1} + 1)^d.
BigInt brute_schmidt_count(int d, int n);

/// Explicit enumeration of every diamond with Schmidt size n.
BigInt brute_schmidt_count_explicit(int d, int n);

/// Explicit enumeration of every diamond of size n.
BigInt brute_size_count(int d, int n);

} // namespace diamonds
