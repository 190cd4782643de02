#include "support.hpp"

#include "loopcalc/error.hpp"
#include "loopcalc/series.hpp"

#include <random>

using namespace loopcalc;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int cap, int lo, int hi)
{
    std::uniform_int_distribution<int> coeff(lo, hi);
    TruncatedSeries s(cap);
    for (int d = 0; d <= cap; ++d)
        s[d] = coeff(rng);
    return s;
}

// Number of (i, j) >= 0 with d1*i + d2*j = k, by brute force.
long long count_pairs(int d1, int d2, int k)
{
    long long n = 0;
    for (int i = 0; d1 * i <= k; ++i)
        if ((k - d1 * i) % d2 == 0)
            ++n;
    return n;
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("sums and truncated products")
    {
        CHECK(mul(series_of(3, {1, 1}), series_of(3, {1, -1})) == series_of(3, {1, 0, -1}));
        CHECK(mul(series_of(3, {1, 1, 1, 1}), series_of(3, {1, 0, 1})) == series_of(3, {1, 1, 2, 2}));
        CHECK(add(series_of(2, {1, 2}), series_of(2, {0, 1, 5})) == series_of(2, {1, 3, 5}));
    }

    TEST_CASE("mismatched caps are a usage error")
    {
        try {
            (void)mul(TruncatedSeries(2), TruncatedSeries(3));
            FAIL("expected an error");
        }
        catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Usage);
        }
        CHECK_THROWS_AS((void)add(TruncatedSeries(2), TruncatedSeries(3)), Error);
    }

    TEST_CASE("inverse of 1 - t is the geometric series")
    {
        CHECK(invert(series_of(5, {1, -1})) == series_of(5, {1, 1, 1, 1, 1, 1}));
    }

    TEST_CASE("inverse of 1 - t - t^2 follows the Fibonacci recurrence")
    {
        const int cap = 40;
        const TruncatedSeries inv = invert(series_of(cap, {1, -1, -1}));
        long long a = 1;
        long long b = 1;
        CHECK(inv[0] == 1);
        CHECK(inv[1] == 1);
        for (int d = 2; d <= cap; ++d) {
            const long long c = a + b;
            CHECK(inv[d] == c);
            a = b;
            b = c;
        }
        CHECK(invert(series_of(6, {1, -1, -1})) == series_of(6, {1, 1, 2, 3, 5, 8, 13}));
    }

    TEST_CASE("non-unit constant term cannot be inverted")
    {
        try {
            (void)invert(series_of(3, {2, 1}));
            FAIL("expected an error");
        }
        catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Domain);
        }
        CHECK_NOTHROW((void)invert(series_of(3, {-1, 1})));
    }

    TEST_CASE("tensor algebra series")
    {
        CHECK(tensor_algebra_series(series_of(6, {0, 1, 1})) == series_of(6, {1, 1, 2, 3, 5, 8, 13}));
        CHECK(tensor_algebra_series(series_of(4, {0, 1})) == series_of(4, {1, 1, 1, 1, 1}));
        CHECK(tensor_algebra_series(TruncatedSeries(4)) == TruncatedSeries::one(4));
        CHECK_THROWS_AS((void)tensor_algebra_series(series_of(4, {1, 1})), Error);
    }

    TEST_CASE("tensor algebra satisfies T = 1 + g T")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            TruncatedSeries g = random_series(rng, 20, 0, 4);
            g[0] = 0;
            const TruncatedSeries t = tensor_algebra_series(g);
            CHECK(t == TruncatedSeries::one(20) + g * t);
        }
    }

    TEST_CASE("loop sphere series")
    {
        CHECK(loop_sphere_series(2, 4) == series_of(4, {1, 1, 1, 1, 1}));
        CHECK(loop_sphere_series(5, 8) == series_of(8, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
        CHECK_THROWS_AS((void)loop_sphere_series(1, 4), Error);
        for (int m = 2; m <= 9; ++m) {
            TruncatedSeries factor = TruncatedSeries::one(30);
            factor[m - 1] -= 1;
            CHECK(loop_sphere_series(m, 30) * factor == TruncatedSeries::one(30));
            TruncatedSeries g(30);
            g[m - 1] = 1;
            CHECK(loop_sphere_series(m, 30) == tensor_algebra_series(g));
        }
    }

    TEST_CASE("two-variable polynomial series counts monomials")
    {
        CHECK(polynomial_two_var_series(1, 2, 5) == series_of(5, {1, 1, 2, 2, 3, 3}));
        CHECK(polynomial_two_var_series(2, 4, 6) == series_of(6, {1, 0, 1, 0, 2, 0, 2}));
        CHECK(polynomial_two_var_series(1, 1, 3) == series_of(3, {1, 2, 3, 4}));
        for (int d1 = 1; d1 <= 6; ++d1)
            for (int d2 = 1; d2 <= 6; ++d2) {
                const TruncatedSeries s = polynomial_two_var_series(d1, d2, 25);
                for (int k = 0; k <= 25; ++k)
                    CHECK(s[k] == count_pairs(d1, d2, k));
            }
    }

    TEST_CASE("binomial powers")
    {
        // (1 + t^2)^3 = 1 + 3t^2 + 3t^4 + t^6
        CHECK(binomial_power(2, 3, 7) == series_of(7, {1, 0, 3, 0, 3, 0, 1}));
        // (1 - t)^-2 = sum (k+1) t^k
        CHECK(inverse_binomial_power(1, 2, 4) == series_of(4, {1, 2, 3, 4, 5}));
        // Repeated multiplication agrees for a large exponent.
        TruncatedSeries direct = TruncatedSeries::one(12);
        for (int i = 0; i < 40; ++i)
            direct = direct * series_of(12, {1, 0, 0, 1});
        CHECK(binomial_power(3, 40, 12) == direct);
        TruncatedSeries falling = TruncatedSeries::one(12);
        for (int i = 0; i < 40; ++i)
            falling = falling * series_of(12, {1, 0, 0, -1});
        CHECK(inverse_binomial_power(3, 40, 12) * falling == TruncatedSeries::one(12));
    }

    TEST_CASE("suspension shifts degrees")
    {
        CHECK(suspend(series_of(3, {0, 1, 2, 3})) == series_of(3, {0, 0, 1, 2}));
        CHECK(desuspend(series_of(3, {0, 1, 2, 3})) == series_of(3, {1, 2, 3, 0}));
        CHECK_THROWS_AS((void)desuspend(series_of(3, {1})), Error);
    }

    TEST_CASE("ring laws on random series")
    {
        std::mt19937_64 rng(5);
        const TruncatedSeries one = TruncatedSeries::one(30);
        for (int i = 0; i < 200; ++i) {
            TruncatedSeries a = random_series(rng, 30, -20, 20);
            a[0] = (i % 2) ? 1 : -1;
            const TruncatedSeries b = random_series(rng, 30, -20, 20);
            const TruncatedSeries c = random_series(rng, 30, -20, 20);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * invert(a) == one);
            CHECK(invert(a) * a == one);
        }
    }

    TEST_CASE("coefficients beyond 64 bits stay exact")
    {
        // (1 - t)^-200 at degree 40 is C(239, 40), far above 2^64.
        std::vector<BigInt> row{1};
        for (int n = 1; n <= 239; ++n) {
            std::vector<BigInt> next(row.size() + 1, 0);
            for (std::size_t k = 0; k < row.size(); ++k) {
                next[k] += row[k];
                next[k + 1] += row[k];
            }
            row = std::move(next);
        }
        const TruncatedSeries s = inverse_binomial_power(1, 200, 40);
        CHECK(s[40] == row[40]);
        CHECK_FALSE(fits_int64(s[40]));
    }
}
