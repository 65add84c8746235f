#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diamonds/errors.hpp"
#include "diamonds/oracle.hpp"
#include "diamonds/qseries.hpp"

using namespace diamonds;

TEST_CASE("small counts")
{
    CHECK(brute_schmidt_count(1, 2) == 5);
    CHECK(brute_schmidt_count_explicit(1, 2) == 5);
    CHECK(brute_size_count(1, 5) == 7);
    for (int d = 1; d <= 4; ++d) {
        CHECK(brute_schmidt_count(d, 0) == 1);
        CHECK(brute_size_count(d, 0) == 1);
    }
    CHECK_THROWS_AS(brute_size_count(0, 3), PreconditionError);
    CHECK_THROWS_AS(brute_schmidt_count(2, -1), PreconditionError);
}

TEST_CASE("two Schmidt oracles agree")
{
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n <= 10; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            CHECK(brute_schmidt_count(d, n) == brute_schmidt_count_explicit(d, n));
        }
    }
}

TEST_CASE("oracles equal generating functions")
{
    for (int d = 1; d <= 3; ++d) {
        const IntSeries schmidt = schmidt_series(d, 12);
        const IntSeries size = size_series(d, 12);
        for (int n = 0; n <= 12; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            CHECK(schmidt[n] == brute_schmidt_count(d, n));
            CHECK(size[n] == brute_size_count(d, n));
        }
    }
}

TEST_CASE("listed diamonds are valid, distinct and have the right statistic")
{
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n <= 7; ++n) {
            for (const DiamondStat stat : {DiamondStat::size, DiamondStat::schmidt}) {
                const auto all = list_diamonds(d, n, stat);
                std::set<std::pair<std::vector<int>, std::vector<std::vector<int>>>> seen;
                for (const auto& c : all) {
                    CHECK(c.valid(d));
                    CHECK((stat == DiamondStat::size ? c.size() : c.schmidt_size()) == n);
                    seen.emplace(c.a, c.b);
                }
                CHECK(seen.size() == all.size());
            }
        }
    }
}

TEST_CASE("inequalities are enforced for every row")
{
    // a = (2, 1): b rows must lie in [1, 2] at k = 0 and [0, 1] at k = 1.
    DiamondConfig good{{2, 1}, {{2, 0}, {1, 1}}};
    CHECK(good.valid(2));
    CHECK(good.size() == 7);
    CHECK(good.schmidt_size() == 3);

    // Only the largest b_{j,0} is at least a_1 under a max-only reading; the
    // all-rows reading rejects b_{1,0} = 0 < a_1.
    DiamondConfig max_only{{2, 1}, {{2, 0}, {0, 0}}};
    CHECK_FALSE(max_only.valid(2));

    DiamondConfig wrong_rows{{1}, {{1}}};
    CHECK_FALSE(wrong_rows.valid(2));
    DiamondConfig increasing{{1, 2}, {{1, 1}}};
    CHECK_FALSE(increasing.valid(1));
}
