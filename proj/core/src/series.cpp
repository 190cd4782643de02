#include "loopcalc/series.hpp"

#include "loopcalc/error.hpp"

#include <string>

namespace loopcalc {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::ExcludedCase: return "excluded_case";
    case ErrorKind::OutOfScope: return "out_of_scope";
    case ErrorKind::HypothesisNotMet: return "hypothesis_not_met";
    case ErrorKind::Unsupported: return "unsupported_expression";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Oracle: return "oracle";
    }
    return "unknown";
}

BigInt binomial(const BigInt& n, unsigned k)
{
    if (n < 0 || BigInt(k) > n)
        return 0;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

TruncatedSeries::TruncatedSeries(int cap) : cap_(cap)
{
    require(cap >= 0, ErrorKind::Usage, "series cap must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(cap) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(int cap, std::vector<BigInt> coeffs) : TruncatedSeries(cap)
{
    require(coeffs.size() <= coeffs_.size(), ErrorKind::Usage,
            "series has " + std::to_string(coeffs.size()) + " coefficients but cap " + std::to_string(cap));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries::TruncatedSeries(int cap, std::initializer_list<long long> coeffs) : TruncatedSeries(cap)
{
    require(coeffs.size() <= coeffs_.size(), ErrorKind::Usage, "too many coefficients for cap");
    std::size_t i = 0;
    for (long long c : coeffs)
        coeffs_[i++] = c;
}

TruncatedSeries TruncatedSeries::one(int cap) { return monomial(0, cap); }

TruncatedSeries TruncatedSeries::monomial(int degree, int cap, const BigInt& coeff)
{
    TruncatedSeries s(cap);
    if (degree >= 0 && degree <= cap)
        s[degree] = coeff;
    return s;
}

bool TruncatedSeries::is_zero() const { return valuation() < 0; }

int TruncatedSeries::valuation() const
{
    for (int d = 0; d <= cap_; ++d)
        if (coeffs_[static_cast<std::size_t>(d)] != 0)
            return d;
    return -1;
}

TruncatedSeries TruncatedSeries::with_cap(int cap) const
{
    TruncatedSeries s(cap);
    for (int d = 0; d <= std::min(cap, cap_); ++d)
        s[d] = (*this)[d];
    return s;
}

namespace {

void check_caps(const TruncatedSeries& a, const TruncatedSeries& b, const char* op)
{
    if (a.cap() != b.cap())
        fail(ErrorKind::Usage, std::string(op) + ": cap mismatch (" + std::to_string(a.cap()) + " vs " +
                                   std::to_string(b.cap()) + ")");
}

} // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_caps(a, b, "add");
    TruncatedSeries r = a;
    for (int d = 0; d <= a.cap(); ++d)
        r[d] += b[d];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_caps(a, b, "sub");
    TruncatedSeries r = a;
    for (int d = 0; d <= a.cap(); ++d)
        r[d] -= b[d];
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_caps(a, b, "mul");
    const int cap = a.cap();
    TruncatedSeries r(cap);
    for (int i = 0; i <= cap; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= cap; ++j)
            if (b[j] != 0)
                r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncatedSeries scale(const TruncatedSeries& a, const BigInt& factor)
{
    TruncatedSeries r = a;
    for (int d = 0; d <= a.cap(); ++d)
        r[d] *= factor;
    return r;
}

TruncatedSeries invert(const TruncatedSeries& a)
{
    const BigInt& a0 = a[0];
    require(a0 == 1 || a0 == -1, ErrorKind::Domain,
            "invert: constant coefficient " + a0.str() + " is not a unit");
    const int cap = a.cap();
    TruncatedSeries r(cap);
    r[0] = a0; // 1/a0 == a0 for units
    for (int n = 1; n <= cap; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k)
            if (a[k] != 0)
                acc += a[k] * r[n - k];
        r[n] = -acc * a0;
    }
    return r;
}

TruncatedSeries suspend(const TruncatedSeries& a)
{
    TruncatedSeries r(a.cap());
    for (int d = 0; d < a.cap(); ++d)
        r[d + 1] = a[d];
    return r;
}

TruncatedSeries desuspend(const TruncatedSeries& a)
{
    require(a[0] == 0, ErrorKind::Domain, "desuspend: series has a nonzero constant term");
    TruncatedSeries r(a.cap());
    for (int d = 1; d <= a.cap(); ++d)
        r[d - 1] = a[d];
    return r;
}

TruncatedSeries binomial_power(int d, const BigInt& e, int cap)
{
    require(d >= 1, ErrorKind::Domain, "binomial_power: degree must be >= 1");
    require(e >= 0, ErrorKind::Domain, "binomial_power: exponent must be >= 0");
    TruncatedSeries r(cap);
    for (int k = 0; k * d <= cap; ++k) {
        BigInt c = binomial(e, static_cast<unsigned>(k));
        if (c == 0)
            break;
        r[k * d] = c;
    }
    return r;
}

TruncatedSeries inverse_binomial_power(int d, const BigInt& e, int cap)
{
    require(d >= 1, ErrorKind::Domain, "inverse_binomial_power: degree must be >= 1");
    require(e >= 0, ErrorKind::Domain, "inverse_binomial_power: exponent must be >= 0");
    TruncatedSeries r(cap);
    r[0] = 1;
    if (e == 0)
        return r;
    for (int k = 1; k * d <= cap; ++k)
        r[k * d] = binomial(e + k - 1, static_cast<unsigned>(k));
    return r;
}

TruncatedSeries tensor_algebra_series(const TruncatedSeries& g)
{
    require(g[0] == 0, ErrorKind::Domain, "tensor_algebra_series: generator series has a constant term");
    return invert(sub(TruncatedSeries::one(g.cap()), g));
}

TruncatedSeries loop_sphere_series(int m, int cap)
{
    require(m >= 2, ErrorKind::Domain, "loop_sphere_series: sphere dimension must be >= 2, got " + std::to_string(m));
    TruncatedSeries r(cap);
    for (int j = 0; j <= cap; j += m - 1)
        r[j] = 1;
    return r;
}

TruncatedSeries polynomial_two_var_series(int d1, int d2, int cap)
{
    require(d1 >= 1 && d2 >= 1, ErrorKind::Domain, "polynomial_two_var_series: generator degrees must be >= 1");
    TruncatedSeries r(cap);
    for (int i = 0; i * d1 <= cap; ++i)
        for (int j = 0; i * d1 + j * d2 <= cap; ++j)
            r[i * d1 + j * d2] += 1;
    return r;
}

} // namespace loopcalc
