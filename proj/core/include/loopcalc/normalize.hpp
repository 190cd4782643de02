#pragma once

#include "loopcalc/expr.hpp"
#include "loopcalc/hilton.hpp"
#include "loopcalc/series.hpp"

#include <optional>

namespace loopcalc {

/// James splitting of Sigma OmegaS^s: summands S^((s-1)i+1) of dimension <= cap + 1.
SphereWedge james_split(int s, int cap);

/// Smash of two spaces that desuspend to sphere wedges, given their reduced
/// homology series (equal caps): the wedge whose series is the product a*b.
SphereWedge smash_desuspendables(const TruncatedSeries& a, const TruncatedSeries& b);

/// J v (J ^ X) for the left half-smash X |x J with J a sphere wedge and X the
/// space factorized by `x_factors`; summands of dimension <= cap.
SphereWedge half_smash_split(const FactorList& x_factors, const SphereWedge& j, int cap);

/// Rewrites a decomposition expression to its canonical factorization, exact
/// in homological degrees <= cap. Throws ErrorKind::Unsupported naming the
/// first subterm outside the grammar.
FactorList normal_form(const SpaceExpr& e, int cap);

/// Loop-homology Poincare series of a factorization, exact up to f.cap.
TruncatedSeries factor_series(const FactorList& f);

/// If e is (homotopy equivalent to) a wedge of simply-connected spheres,
/// returns it with summands of dimension <= max_dim; otherwise nullopt.
std::optional<SphereWedge> as_sphere_wedge(const SpaceExpr& e, int max_dim);

} // namespace loopcalc
