#pragma once

#include "loopcalc/bigint.hpp"
#include "loopcalc/expr.hpp"

#include <functional>
#include <span>
#include <vector>

namespace loopcalc {

/// Letters with positive integer weights, stored as weight -> number of letters.
/// A wedge summand S^n contributes one letter of weight n - 1.
class WeightedAlphabet {
public:
    explicit WeightedAlphabet(const std::vector<int>& weights);
    explicit WeightedAlphabet(DimMultiset weight_counts);

    static WeightedAlphabet of_wedge(const SphereWedge& w);

    const DimMultiset& weight_counts() const noexcept { return counts_; }
    BigInt letter_count() const;
    /// One entry per letter, ascending. Throws Usage if the alphabet is too large to list.
    std::vector<int> letters() const;

private:
    DimMultiset counts_;
};

/// Normal form of a loop space: S^1^circles x prod S^d x prod OmegaS^d.
struct FactorList {
    BigInt circles = 0;
    DimMultiset spheres;      // plain factors S^d, d >= 2
    DimMultiset loop_spheres; // factors OmegaS^d, d >= 2, each with d - 1 <= cap
    int cap = 0;
    bool truncated = false;   // some factor affecting only degrees > cap was omitted

    bool empty() const { return circles == 0 && spheres.empty() && loop_spheres.empty(); }
    friend bool operator==(const FactorList&, const FactorList&) = default;
};

/// Cartesian product of two factorizations with equal caps.
FactorList product(const FactorList& a, const FactorList& b);

/// Visits every Lyndon word of total weight <= cap over the explicit letter list
/// (letters ordered by index), in lexicographic order. Duval's generation
/// bounded by length, then filtered by weight; intended for small alphabets.
void for_each_lyndon_word(std::span<const int> letter_weights, int cap,
                          const std::function<void(std::span<const int> word, int weight)>& visit);

/// Number of Lyndon words of each total weight <= cap.
///
/// Counted by Lazard elimination: with A the letters of least weight and B the
/// rest, Lyndon words over A u B are those over A plus those over the alphabet
/// A*B (words a_1..a_i b). Repeating on A*B terminates because its least
/// weight strictly grows. Lyndon words over a uniform class A are counted by
/// the necklace polynomial.
DimMultiset lyndon_multiplicities(const WeightedAlphabet& a, int cap);

/// Independent oracle: solves prod_d (1 - t^d)^(-L_d) = 1/(1 - sum_j t^(w_j))
/// degree by degree for L_d.
DimMultiset witt_counts(const WeightedAlphabet& a, int cap);

/// Hilton-Milnor: Omega(wedge) as a product of OmegaS^(d+1), one for each
/// Lyndon word of weight d <= cap.
FactorList hilton_milnor(const SphereWedge& w, int cap);

} // namespace loopcalc
