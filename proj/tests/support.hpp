#pragma once

#include "loopcalc/bigint.hpp"
#include "loopcalc/expr.hpp"
#include "loopcalc/hilton.hpp"
#include "loopcalc/series.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

namespace loopcalc {

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    os << "[";
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        os << (i ? "," : "") << s.coeffs()[i];
    return os << "]";
}

inline std::string show(const DimMultiset& ms)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, m] : ms) {
        os << (first ? "" : ", ") << d << ":" << m;
        first = false;
    }
    os << "}";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const FactorList& f)
{
    return os << "circles=" << f.circles << " spheres=" << show(f.spheres) << " loop_spheres=" << show(f.loop_spheres)
              << " cap=" << f.cap << " truncated=" << f.truncated;
}

inline std::ostream& operator<<(std::ostream& os, const SpaceExpr& e) { return os << render(e); }

inline std::ostream& operator<<(std::ostream& os, const SphereWedge& w) { return os << show(w.dims()); }

} // namespace loopcalc

namespace doctest {
template <>
struct StringMaker<loopcalc::DimMultiset> {
    static String convert(const loopcalc::DimMultiset& ms) { return loopcalc::show(ms).c_str(); }
};
} // namespace doctest

// Coefficients of a series as a plain list, for terse expectations.
inline loopcalc::TruncatedSeries series_of(int cap, std::initializer_list<long long> coeffs)
{
    return loopcalc::TruncatedSeries(cap, coeffs);
}
