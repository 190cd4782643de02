#pragma once

#include "loopcalc/bigint.hpp"
#include "loopcalc/series.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace loopcalc {

/// Constructor tags, listed in the order used by the canonical total order.
enum class ExprKind { Point, Sphere, Loop, Suspension, Smash, Wedge, Product };

/// Immutable expression over spheres. Copies share structure.
///
/// The factory functions validate local invariants (no S^0, no empty smash);
/// they do not canonicalize. Use canonicalize() to obtain the unique
/// representative (flattened, Point-free, children sorted).
class SpaceExpr {
public:
    static SpaceExpr point();
    static SpaceExpr sphere(int dim);
    static SpaceExpr loop(SpaceExpr child);
    static SpaceExpr suspension(SpaceExpr child);
    static SpaceExpr wedge(std::vector<SpaceExpr> children);
    static SpaceExpr product(std::vector<SpaceExpr> children);
    static SpaceExpr smash(std::vector<SpaceExpr> children);

    SpaceExpr() : SpaceExpr(point()) {}

    ExprKind kind() const noexcept { return node_->kind; }
    /// Sphere dimension; 0 for other kinds.
    int dim() const noexcept { return node_->dim; }
    const std::vector<SpaceExpr>& children() const noexcept { return node_->children; }
    /// The single child of Loop / Suspension.
    const SpaceExpr& child() const;

    bool is_point() const noexcept { return kind() == ExprKind::Point; }

    friend std::strong_ordering operator<=>(const SpaceExpr& a, const SpaceExpr& b);
    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b) { return (a <=> b) == 0; }

private:
    struct Node {
        ExprKind kind;
        int dim = 0;
        std::vector<SpaceExpr> children;
    };

    explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static SpaceExpr make(ExprKind kind, int dim, std::vector<SpaceExpr> children);

    std::shared_ptr<const Node> node_;
};

/// Unique canonical representative; idempotent.
SpaceExpr canonicalize(const SpaceExpr& e);

enum class RenderStyle { Unicode, Ascii };

/// Stable text form, e.g. "Ω(S^2 × S^3)" or, in ASCII, "O(S^2 x S^3)".
/// Compound children are always parenthesized, so the output parses back.
std::string render(const SpaceExpr& e, RenderStyle style = RenderStyle::Unicode);

/// Parses either rendering style (they may be mixed). Mixing binary operators
/// at one level without parentheses is rejected. Throws ErrorKind::Parse.
SpaceExpr parse_expr(std::string_view text);

/// Finite wedge of simply-connected spheres: dimension -> multiplicity.
/// The empty wedge is the point.
class SphereWedge {
public:
    SphereWedge() = default;
    explicit SphereWedge(DimMultiset dims);
    SphereWedge(std::initializer_list<std::pair<const int, BigInt>> dims);

    const DimMultiset& dims() const noexcept { return dims_; }
    bool empty() const noexcept { return dims_.empty(); }
    /// Total number of summands.
    BigInt size() const;
    BigInt multiplicity(int dim) const;

    void add(int dim, const BigInt& count = 1);
    SphereWedge& operator+=(const SphereWedge& other);
    friend SphereWedge operator+(SphereWedge a, const SphereWedge& b) { return a += b; }

    /// Summands with dimension <= max_dim.
    SphereWedge truncated(int max_dim) const;

    /// Wedge of spheres as an expression (Point if empty). Throws Usage if the
    /// summand count is too large to spell out.
    SpaceExpr to_expr() const;

    friend bool operator==(const SphereWedge&, const SphereWedge&) = default;

private:
    DimMultiset dims_;
};

/// Coefficient of t^d is the number of S^d summands (d <= cap); t^0 coefficient is 0.
TruncatedSeries reduced_homology_series(const SphereWedge& w, int cap);

} // namespace loopcalc
