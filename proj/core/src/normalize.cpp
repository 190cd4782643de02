#include "loopcalc/normalize.hpp"

#include "loopcalc/error.hpp"

namespace loopcalc {

SphereWedge james_split(int s, int cap)
{
    require(s >= 2, ErrorKind::Domain, "james_split: sphere dimension must be >= 2, got " + std::to_string(s));
    require(cap >= 0, ErrorKind::Usage, "james_split: cap must be >= 0");
    SphereWedge w;
    for (int i = 1; (s - 1) * i + 1 <= cap + 1; ++i)
        w.add((s - 1) * i + 1);
    return w;
}

namespace {

SphereWedge wedge_from_series(const TruncatedSeries& s)
{
    require(s[0] == 0 && (s.cap() < 1 || s[1] == 0), ErrorKind::Domain,
            "series is not that of a simply-connected sphere wedge");
    SphereWedge w;
    for (int d = 2; d <= s.cap(); ++d) {
        require(s[d] >= 0, ErrorKind::Domain, "negative coefficient in a wedge series");
        if (s[d] != 0)
            w.add(d, s[d]);
    }
    return w;
}

[[noreturn]] void unsupported(const SpaceExpr& e, const std::string& why)
{
    fail(ErrorKind::Unsupported, "unsupported expression '" + render(e) + "': " + why);
}

// Reduced homology series of e up to cap, for spaces whose suspension splits
// as a wedge of spheres: sphere wedges, S^1, and anything normal_form accepts.
std::optional<TruncatedSeries> reduced_series(const SpaceExpr& e, int cap);

// Reduced series of e if e itself is a wedge of simply-connected spheres.
std::optional<TruncatedSeries> wedge_series(const SpaceExpr& e, int cap)
{
    switch (e.kind()) {
    case ExprKind::Point: return TruncatedSeries(cap);
    case ExprKind::Sphere:
        if (e.dim() < 2)
            return std::nullopt;
        return TruncatedSeries::monomial(e.dim(), cap);
    case ExprKind::Wedge: {
        TruncatedSeries sum(cap);
        for (const auto& c : e.children()) {
            auto s = wedge_series(c, cap);
            if (!s)
                return std::nullopt;
            sum = add(sum, *s);
        }
        return sum;
    }
    case ExprKind::Suspension: {
        auto inner = reduced_series(e.child(), cap);
        if (!inner)
            return std::nullopt;
        return suspend(*inner);
    }
    case ExprKind::Smash: {
        // Needs one suspension factor; the others may be any space whose
        // suspension splits, since Sigma A ^ X = A ^ Sigma X.
        bool has_suspension = false;
        TruncatedSeries acc = TruncatedSeries::one(cap);
        for (const auto& c : e.children()) {
            std::optional<TruncatedSeries> s;
            if (auto ws = wedge_series(c, cap)) {
                has_suspension = true;
                s = ws;
            }
            else {
                s = reduced_series(c, cap);
            }
            if (!s)
                return std::nullopt;
            acc = mul(acc, *s);
        }
        if (!has_suspension)
            return std::nullopt;
        return acc;
    }
    case ExprKind::Loop:
    case ExprKind::Product:
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<TruncatedSeries> reduced_series(const SpaceExpr& e, int cap)
{
    if (auto ws = wedge_series(e, cap))
        return ws;
    if (e.kind() == ExprKind::Sphere && e.dim() == 1)
        return TruncatedSeries::monomial(1, cap);
    if (e.kind() == ExprKind::Loop || e.kind() == ExprKind::Product) {
        TruncatedSeries s = factor_series(normal_form(e, cap));
        s[0] = 0;
        return s;
    }
    return std::nullopt;
}

FactorList loop_sphere_factor(int d, int cap)
{
    FactorList f;
    f.cap = cap;
    if (d - 1 <= cap)
        f.loop_spheres.emplace(d, 1);
    else
        f.truncated = true;
    return f;
}

FactorList normalize_canonical(const SpaceExpr& e, int cap)
{
    FactorList f;
    f.cap = cap;
    switch (e.kind()) {
    case ExprKind::Point:
        return f;
    case ExprKind::Sphere:
        if (e.dim() == 1) {
            f.circles = 1;
        }
        else if (e.dim() % 2 == 1) {
            if (e.dim() <= cap)
                f.spheres.emplace(e.dim(), 1);
            else
                f.truncated = true;
        }
        else {
            unsupported(e, "even-dimensional sphere as a product factor");
        }
        return f;
    case ExprKind::Product:
        for (const auto& c : e.children())
            f = product(f, normalize_canonical(c, cap));
        return f;
    case ExprKind::Loop: {
        const SpaceExpr& x = e.child();
        if (x.kind() == ExprKind::Sphere) {
            if (x.dim() == 1)
                unsupported(e, "loops on the circle are not connected");
            if (x.dim() == 4) {
                // Quaternionic Hopf fibration: OmegaS^4 = S^3 x OmegaS^7.
                f = normalize_canonical(SpaceExpr::sphere(3), cap);
                return product(f, loop_sphere_factor(7, cap));
            }
            return loop_sphere_factor(x.dim(), cap);
        }
        if (x.kind() == ExprKind::Product) {
            for (const auto& c : x.children())
                f = product(f, normalize_canonical(SpaceExpr::loop(c), cap));
            return f;
        }
        if (auto ws = wedge_series(x, cap + 1))
            return hilton_milnor(wedge_from_series(*ws), cap);
        unsupported(x, "cannot identify as a product or a wedge of simply-connected spheres");
    }
    case ExprKind::Wedge:
    case ExprKind::Smash:
    case ExprKind::Suspension:
        unsupported(e, "not a loop space or a product of supported factors");
    }
    unsupported(e, "unknown constructor");
}

} // namespace

SphereWedge smash_desuspendables(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require(a[0] == 0 && b[0] == 0, ErrorKind::Domain, "smash_desuspendables: expected reduced series");
    return wedge_from_series(mul(a, b));
}

SphereWedge half_smash_split(const FactorList& x_factors, const SphereWedge& j, int cap)
{
    require(x_factors.cap >= cap, ErrorKind::Usage, "half_smash_split: factor list cap below requested cap");
    TruncatedSeries x = factor_series(x_factors).with_cap(cap);
    x[0] = 0;
    return j.truncated(cap) + smash_desuspendables(reduced_homology_series(j, cap), x);
}

FactorList normal_form(const SpaceExpr& e, int cap)
{
    require(cap >= 0, ErrorKind::Usage, "normal_form: cap must be >= 0");
    return normalize_canonical(canonicalize(e), cap);
}

TruncatedSeries factor_series(const FactorList& f)
{
    const int cap = f.cap;
    TruncatedSeries s = binomial_power(1, f.circles, cap);
    for (const auto& [d, m] : f.spheres)
        s = mul(s, binomial_power(d, m, cap));
    for (const auto& [d, m] : f.loop_spheres)
        s = mul(s, inverse_binomial_power(d - 1, m, cap));
    return s;
}

std::optional<SphereWedge> as_sphere_wedge(const SpaceExpr& e, int max_dim)
{
    auto s = wedge_series(canonicalize(e), max_dim);
    if (!s)
        return std::nullopt;
    return wedge_from_series(*s);
}

} // namespace loopcalc
