#pragma once

#include "loopcalc/bigint.hpp"
#include "loopcalc/expr.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace loopcalc {

/// Symmetric unimodular integer matrix: the cup-product pairing on middle
/// cohomology, x_i x_j = c_ij z.
class IntersectionForm {
public:
    /// Throws ErrorKind::Validation unless square, symmetric and det = +-1.
    explicit IntersectionForm(std::vector<std::vector<BigInt>> entries);
    IntersectionForm(std::initializer_list<std::initializer_list<long long>> entries);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    const BigInt& operator()(int i, int j) const
    {
        return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<BigInt>>& entries() const noexcept { return entries_; }

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;

private:
    std::vector<std::vector<BigInt>> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Torsion-free complex in the general class: (m-1)-connected, dimension n,
/// with below-top skeleton J v S^m v S^(n-m). Requires 1 < m <= n - m and
/// every J dimension in [m, n-m].
struct PDSpec {
    int m = 0;
    int n = 0;
    SphereWedge J;

    void validate() const;
    /// Number of below-top generators a_1..a_l (l = 2 + |J|).
    BigInt ell() const { return J.size() + 2; }
    friend bool operator==(const PDSpec&, const PDSpec&) = default;
};

/// Simply-connected four-manifold with dim H^2 = k.
struct FourManifoldSpec {
    int k = 0;
    std::optional<IntersectionForm> form;

    void validate() const;
};

/// (n-1)-connected 2n-manifold with dim H^n = k.
struct WallSpec {
    int n = 0;
    int k = 0;

    void validate() const;
};

/// M # (S^m x S^(n-m)) with M - * a wedge of spheres.
struct ConnSumSpec {
    int m = 0;
    int n = 0;
    SphereWedge punctured_skeleton;

    void validate() const;
};

/// Principal G-bundle over a four-manifold; G modeled rationally by odd spheres.
struct BundleSpec {
    FourManifoldSpec base;
    std::vector<int> group_spheres;

    void validate() const;
};

/// Ordered configuration space of `points` points in a connected sum.
struct ConfigSpec {
    ConnSumSpec base;
    int points = 1;

    void validate() const;
};

using ManifoldSpec = std::variant<FourManifoldSpec, WallSpec, PDSpec, ConnSumSpec, BundleSpec, ConfigSpec>;

/// JSON "type" tag of a spec: four_manifold, wall, pd_complex, ...
const char* type_name(const ManifoldSpec& spec);

void validate(const ManifoldSpec& spec);

} // namespace loopcalc
