#include "loopcalc/homotopy.hpp"

#include "loopcalc/error.hpp"
#include "loopcalc/series.hpp"

namespace loopcalc {

RankTable rational_ranks(const FactorList& f)
{
    RankTable t;
    t.subject = RankSubject::LoopSpace;
    t.cap = f.cap;
    t.truncated = f.truncated;
    auto add = [&](int degree, const BigInt& count) {
        if (degree <= f.cap)
            accumulate(t.ranks, degree, count);
        else
            t.truncated = true;
    };
    if (f.circles != 0)
        add(1, f.circles);
    for (const auto& [d, mult] : f.spheres) {
        require(d % 2 == 1, ErrorKind::Unsupported, "rational_ranks: plain even sphere factor");
        add(d, mult);
    }
    for (const auto& [d, mult] : f.loop_spheres) {
        add(d - 1, mult);
        if (d % 2 == 0)
            add(2 * d - 2, mult);
    }
    return t;
}

RankTable base_ranks(const RankTable& loop)
{
    require(loop.subject == RankSubject::LoopSpace, ErrorKind::Usage, "base_ranks: expects a loop-space table");
    RankTable t;
    t.subject = RankSubject::BaseSpace;
    t.cap = loop.cap;
    t.truncated = loop.truncated;
    for (const auto& [d, r] : loop.ranks) {
        if (d + 1 <= loop.cap)
            t.ranks[d + 1] = r;
        else
            t.truncated = true;
    }
    return t;
}

DimMultiset free_lie_ranks(const std::vector<int>& generator_degrees, int cap)
{
    require(cap >= 0, ErrorKind::Usage, "free_lie_ranks: cap must be >= 0");
    TruncatedSeries a(cap);
    for (int d : generator_degrees) {
        require(d >= 1, ErrorKind::Domain, "free_lie_ranks: generator degrees must be >= 1");
        if (d <= cap)
            a[d] += 1;
    }
    // R = 1/(1 - A); strip one degree at a time until only the constant is left.
    TruncatedSeries r = tensor_algebra_series(a);
    DimMultiset out;
    for (int j = 1; j <= cap; ++j) {
        const BigInt l = r[j];
        if (l == 0)
            continue;
        require(l > 0, ErrorKind::Oracle, "free_lie_ranks: negative rank in degree " + std::to_string(j));
        accumulate(out, j, l);
        if (j % 2 == 1)
            r = mul(r, invert(binomial_power(j, l, cap)));
        else
            r = mul(r, invert(inverse_binomial_power(j, l, cap)));
    }
    return out;
}

} // namespace loopcalc
