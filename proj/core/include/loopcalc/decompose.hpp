#pragma once

#include "loopcalc/expr.hpp"
#include "loopcalc/manifold.hpp"

#include <vector>

namespace loopcalc {

/// OmegaP = Omega(S^m x S^(n-m)) x Omega(J v (J ^ Omega(S^m x S^(n-m)))), canonicalized.
/// The half-smash is kept symbolic; normal_form expands it at a cap.
SpaceExpr decompose_general(const PDSpec& p);

/// (n-1)-connected 2n-manifolds: the general case with m = n, dimension 2n
/// and J a wedge of k - 2 copies of S^n.
SpaceExpr decompose_wall(const WallSpec& w);

SpaceExpr decompose_conn_sum(const ConnSumSpec& c);

/// k = 0: OmegaS^4; k = 1: S^1 x OmegaS^5; k >= 2: S^1 x (general case for
/// the five-dimensional complex Z, m = 2, with J = (k-2) copies of S^2 v S^3).
/// The intersection form, if present, is validated but never consulted.
SpaceExpr decompose_four_manifold(const FourManifoldSpec& f);

SpaceExpr decompose_bundle(const BundleSpec& b);

/// Factors of OmegaF_k(M): OmegaM followed by Omega(M - Q_i) for i = 1..k,
/// where M - Q_i = (M - *) v S^m v S^(n-m) v (i-1 copies of S^(n-1)).
std::vector<SpaceExpr> decompose_config(const ConfigSpec& c);

/// Decomposition of any spec as a single expression (configuration spaces
/// become the product of their factors).
SpaceExpr decompose(const ManifoldSpec& spec);

/// Loop-space classification within one class of manifolds: four-manifolds
/// by k; Wall manifolds of equal n by k; connected sums of equal dimension by
/// the multiset of below-top cohomology degrees. Other pairings throw Usage.
bool loop_equivalent(const ManifoldSpec& a, const ManifoldSpec& b);

/// Below-top cohomology generators of M # (S^m x S^(n-m)): skeleton plus {m, n-m}.
SphereWedge below_top_cells(const ConnSumSpec& c);

} // namespace loopcalc
