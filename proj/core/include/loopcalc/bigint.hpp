#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <string>

namespace loopcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Multiset of positive integers (dimensions or degrees) with exact multiplicities.
/// Zero multiplicities are never stored.
using DimMultiset = std::map<int, BigInt>;

inline bool fits_int64(const BigInt& v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Adds `count` to `ms[key]`, erasing the entry if it drops to zero.
inline void accumulate(DimMultiset& ms, int key, const BigInt& count)
{
    if (count == 0)
        return;
    auto [it, inserted] = ms.try_emplace(key, count);
    if (!inserted) {
        it->second += count;
        if (it->second == 0)
            ms.erase(it);
    }
}

BigInt binomial(const BigInt& n, unsigned k);

} // namespace loopcalc
