#pragma once

#include "loopcalc/bigint.hpp"
#include "loopcalc/manifold.hpp"
#include "loopcalc/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace loopcalc {

/// Ranks of a graded abelian group, with one label per basis element.
struct GradedModule {
    std::map<int, std::vector<std::string>> basis; // degree -> labels

    std::size_t rank(int degree) const;
    TruncatedSeries series(int cap) const;
};

/// Data the Serre spectral sequence of OmegaQ -> F -> P needs: the degrees
/// |a_1| <= ... <= |a_l| of the below-top generators and the two columns of
/// cup-product coefficients the differentials use (c_i1 and c_il, i = 1..l).
struct SSInput {
    std::vector<int> degrees;
    int m = 0;
    int n = 0;
    std::vector<BigInt> c_col1;
    std::vector<BigInt> c_colell;
    int cap = 0;

    int ell() const { return static_cast<int>(degrees.size()); }
    /// Throws ErrorKind::Validation unless the degree layout and the forced
    /// coefficients c_l1 = 1, c_1l = (-1)^(m(n-m)), c_11 = c_ll = 0 hold.
    void validate() const;
};

/// Rebuilds the SSInput of a PDSpec with the given cup-product columns
/// (middle entries supplied by the caller, forced entries filled in).
SSInput ss_input_for(const PDSpec& p, const std::vector<BigInt>& middle_col1,
                     const std::vector<BigInt>& middle_colell, int cap);

/// Path-loop spectral sequence of OmegaQ -> * -> Q with H_*(Q) = Z{1, x, y, e}:
/// derives the ranks of H_*(OmegaQ) from convergence to a point, then replays
/// the complex on the monomial basis u^i v^j and checks it is acyclic.
/// Throws ErrorKind::Oracle if the replay disagrees.
TruncatedSeries qhlgy_series_check(int m, int n, int cap);

/// E-infinity of the homology Serre spectral sequence of OmegaQ -> F -> P,
/// built from E^2 = Z{1, a_1..a_l, z} (x) Z[u,v] with the transgressions of
/// a_1, a_l and the d^m differential on z. Pages are exact subquotients over
/// Q; any differential the degree bookkeeping cannot rule out and that is not
/// accounted for raises ErrorKind::Oracle.
GradedModule p4_e_infinity(const SSInput& input);

/// Series predicted for H_*(F): 1 + (sum over middle a_i of t^|a_i|) * Z[u,v].
TruncatedSeries p4_prediction(const SSInput& input);

/// Integer vector w with <row_k(C), w> = 1 (the last row), by iterated
/// extended gcd. Exists for every unimodular form.
std::vector<BigInt> lpd_normalize(const IntersectionForm& c);

struct ZConstruction {
    std::map<int, int> ranks;          // total degree -> rank of H^*(Z), degrees 0..5
    std::vector<BigInt> witness;       // from lpd_normalize
    bool is_s5 = false;                // k = 1: Z = S^5
    std::optional<PDSpec> pd;          // k >= 2: m = 2, n = 5, J = (k-2)(S^2 v S^3)
};

/// Cohomology Serre spectral sequence of S^1 -> Z -> M for the circle bundle
/// classified by x_k. Asserts ranks (1, k-1, k-1, 0, 1) in degrees (0,2,3,4,5)
/// and torsion-freeness. A rank-0 form throws ErrorKind::OutOfScope.
ZConstruction z_construct(const IntersectionForm& c, int cap);

} // namespace loopcalc
