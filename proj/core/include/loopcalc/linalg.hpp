#pragma once

#include "loopcalc/bigint.hpp"

#include <map>
#include <vector>

namespace loopcalc {

/// Sparse vector over Q: index -> nonzero coefficient.
using SVector = std::map<std::size_t, Rational>;
/// Dense vector over Q.
using RVector = std::vector<Rational>;

/// v += f * w, dropping entries that cancel.
void axpy(SVector& v, const Rational& f, const SVector& w);
SVector sparse(const RVector& v);
RVector dense(const SVector& v, std::size_t n);

/// Subspace of Q^n kept in reduced row-echelon form: each basis row has a
/// leading 1 at its pivot. Exact rational arithmetic on sparse rows.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }

    /// Residual of v after eliminating every pivot; zero iff v is in the span.
    /// The map v -> reduce(v) is linear and vanishes exactly on the subspace.
    SVector reduce(SVector v) const;
    bool contains(const SVector& v) const { return reduce(v).empty(); }
    /// Adds v to the span; returns false if it was already there.
    bool insert(const SVector& v);

    const std::map<std::size_t, SVector>& rows() const noexcept { return rows_; }
    std::vector<SVector> basis() const;
    /// Pivot column of each basis row, ascending.
    std::vector<std::size_t> pivots() const;

private:
    std::size_t ambient_;
    std::map<std::size_t, SVector> rows_; // pivot -> row
};

/// Coefficient vectors x with sum_i x_i * images[i] = 0 (a basis of the left kernel).
std::vector<SVector> left_kernel(const std::vector<SVector>& images, std::size_t target_dim);

/// Rank over Q of the matrix with the given rows.
std::size_t rank(const std::vector<SVector>& rows, std::size_t cols);
std::size_t rank(const std::vector<RVector>& rows, std::size_t cols);

} // namespace loopcalc
