#pragma once

#include "loopcalc/manifold.hpp"
#include "loopcalc/ss_oracle.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace loopcalc {

/// Outcome of one property check over a battery of instances.
struct CheckReport {
    std::string check;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> counterexample; // first failing instance

    bool ok() const { return failures == 0 && instances > 0; }
};

enum class Suite { Series, HM, SS, Ranks, All };

/// Parses "series", "hm", "ss", "ranks" or "all"; throws Usage otherwise.
Suite parse_suite(const std::string& name);

std::vector<CheckReport> run_suite(Suite suite, std::uint64_t seed);

// Individual checks. Each one compares an engine result against an
// independently computed value and records the first disagreement.

/// Ring laws, inverses and the tensor-algebra identity on random series.
CheckReport check_series_laws(std::uint64_t seed, int count, int cap);
/// Reduced series of the James splitting equals t * (series(OmegaS^s) - 1).
CheckReport check_james(int cap);
/// Every sphere wedge with <= max_summands summands of dimension <= max_dim:
/// factor_series(hilton_milnor(W)) = 1/(1 - desuspended reduced series of W).
CheckReport check_hilton_milnor_series(int max_summands, int max_dim, int cap);
/// Every alphabet with <= max_letters letters of weight <= max_weight:
/// Lazard counting equals the Witt oracle, and explicit Duval enumeration on
/// the small alphabets.
CheckReport check_lyndon_witt(int max_letters, int max_weight, int cap);
/// Random alphabets of up to 10 letters with weights up to 8.
CheckReport check_lyndon_witt_random(std::uint64_t seed, int count, int cap);
/// Random P4 instances (alternating proof cases): E-infinity ranks equal the prediction.
CheckReport check_p4(std::uint64_t seed, int count, int cap);
/// The path-loop replay for every (m, n) with 1 < m <= n - m <= max_top.
CheckReport check_qhlgy(int max_top, int cap);
/// Random unimodular forms of each rank 1..max_k: z_construct agrees across
/// forms, and decompose_four_manifold never looks at the form.
CheckReport check_form_independence(std::uint64_t seed, int per_rank, int max_k);
/// Route A (normal form of the general decomposition) equals route B (OmegaQ
/// times the tensor algebra on the desuspended P4 homology of F) over the
/// PDSpec battery with |J| <= max_j and dims <= max_dim.
CheckReport check_two_route(int max_j, int max_dim, int cap);
/// Rational ranks of Hilton-Milnor factors equal free Lie algebra ranks for
/// every wedge with <= max_summands summands of dimension <= max_dim.
CheckReport check_rank_oracle(int max_summands, int max_dim, int cap);
/// CP^2 and S^2 x S^2 base tables, and base rank 2 = k for four-manifolds.
CheckReport check_rank_tables();
/// loop_equivalent agrees with equality of normal forms on random pairs.
CheckReport check_loop_equivalence(std::uint64_t seed, int pairs_per_class, int cap);
/// Configuration-space factor counts, skeleta and monotonicity in k.
CheckReport check_config(int max_points, int cap);

/// Sphere wedges with 1..max_summands summands of dimensions 2..max_dim.
std::vector<SphereWedge> wedge_battery(int max_summands, int max_dim);
/// PDSpecs with 1 < m <= n - m <= max_dim and J of size <= max_j in [m, n - m].
std::vector<PDSpec> pd_battery(int max_j, int max_dim);
/// Random symmetric unimodular form of rank k: P^T D P with D a block sum of
/// (1), (-1) and hyperbolic planes and P a product of elementary matrices.
IntersectionForm random_unimodular_form(int k, std::mt19937_64& rng);
/// Random valid SSInput; case2 selects m = n - m.
SSInput random_ss_input(bool case2, int cap, std::mt19937_64& rng);

/// Route B series for a PDSpec (see check_two_route).
TruncatedSeries route_b_series(const PDSpec& p, int cap);

} // namespace loopcalc
