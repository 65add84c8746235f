#include "diamonds/oracle.hpp"

#include <numeric>

#include "diamonds/errors.hpp"

namespace diamonds {

namespace {

void check_args(int d, int n)
{
    if (d < 1) {
        throw PreconditionError("d must be a positive integer");
    }
    if (n < 0) {
        throw PreconditionError("n must be non-negative");
    }
}

class Enumerator {
public:
    Enumerator(int d, DiamondStat stat, const std::function<void(const DiamondConfig&)>& visit)
        : d_(d), stat_(stat), visit_(visit)
    {
        config_.b.assign(static_cast<std::size_t>(d), {});
    }

    void run(int n)
    {
        if (n == 0) {
            visit_(config_);
            return;
        }
        for (int a0 = 1; a0 <= n; ++a0) {
            config_.a.push_back(a0);
            descend(n - a0);
            config_.a.pop_back();
        }
    }

private:
    // config_.a ends with the current a_k > 0; choose a_{k+1} and the b column k.
    void descend(int remaining)
    {
        const int top = config_.a.back();
        const int b_weight = stat_ == DiamondStat::size ? 1 : 0;
        for (int next = 0; next <= top; ++next) {
            if (next + b_weight * d_ * next > remaining) {
                break;
            }
            choose_b(0, next, top, remaining);
        }
    }

    void choose_b(int j, int lo, int hi, int remaining)
    {
        if (j == d_) {
            if (lo == 0) {
                if (remaining == 0) {
                    visit_(config_);
                }
                return;
            }
            config_.a.push_back(lo);
            descend(remaining - lo);
            config_.a.pop_back();
            return;
        }
        const int b_weight = stat_ == DiamondStat::size ? 1 : 0;
        auto& row = config_.b[static_cast<std::size_t>(j)];
        for (int v = lo; v <= hi; ++v) {
            // Rows j+1.. need at least lo each, plus the next a itself.
            const int committed = b_weight * (v + (d_ - j - 1) * lo) + lo;
            if (committed > remaining) {
                break;
            }
            row.push_back(v);
            choose_b(j + 1, lo, hi, remaining - b_weight * v);
            row.pop_back();
        }
    }

    int d_;
    DiamondStat stat_;
    const std::function<void(const DiamondConfig&)>& visit_;
    DiamondConfig config_;
};

void partitions(int remaining, int max_part, std::vector<int>& parts, const std::function<void(const std::vector<int>&)>& f)
{
    if (remaining == 0) {
        f(parts);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        parts.push_back(part);
        partitions(remaining - part, part, parts, f);
        parts.pop_back();
    }
}

} // namespace

int DiamondConfig::size() const
{
    int total = schmidt_size();
    for (const auto& row : b) {
        total = std::accumulate(row.begin(), row.end(), total);
    }
    return total;
}

int DiamondConfig::schmidt_size() const { return std::accumulate(a.begin(), a.end(), 0); }

bool DiamondConfig::valid(int d) const
{
    if (static_cast<int>(b.size()) != d) {
        return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        const int next = k + 1 < a.size() ? a[k + 1] : 0;
        if (a[k] <= 0 || a[k] < next) {
            return false;
        }
        for (const auto& row : b) {
            if (row.size() != a.size() || row[k] > a[k] || row[k] < next) {
                return false;
            }
        }
    }
    return true;
}

void enumerate_diamonds(int d, int n, DiamondStat stat, const std::function<void(const DiamondConfig&)>& visit)
{
    check_args(d, n);
    Enumerator(d, stat, visit).run(n);
}

std::vector<DiamondConfig> list_diamonds(int d, int n, DiamondStat stat)
{
    std::vector<DiamondConfig> out;
    enumerate_diamonds(d, n, stat, [&](const DiamondConfig& c) { out.push_back(c); });
    return out;
}

BigInt brute_schmidt_count(int d, int n)
{
    check_args(d, n);
    BigInt total = 0;
    std::vector<int> parts;
    partitions(n, n, parts, [&](const std::vector<int>& a) {
        BigInt weight = 1;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const int next = k + 1 < a.size() ? a[k + 1] : 0;
            BigInt choices;
            mpz_ui_pow_ui(choices.get_mpz_t(), static_cast<unsigned long>(a[k] - next + 1), static_cast<unsigned long>(d));
            weight *= choices;
        }
        total += weight;
    });
    return total;
}

BigInt brute_schmidt_count_explicit(int d, int n)
{
    unsigned long count = 0;
    enumerate_diamonds(d, n, DiamondStat::schmidt, [&](const DiamondConfig&) { ++count; });
    return BigInt(count);
}

BigInt brute_size_count(int d, int n)
{
    unsigned long count = 0;
    enumerate_diamonds(d, n, DiamondStat::size, [&](const DiamondConfig&) { ++count; });
    return BigInt(count);
}

} // namespace diamonds
