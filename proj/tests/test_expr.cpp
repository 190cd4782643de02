#include "support.hpp"

#include "loopcalc/error.hpp"
#include "loopcalc/expr.hpp"

#include <algorithm>
#include <random>

using namespace loopcalc;

namespace {

SpaceExpr S(int d) { return SpaceExpr::sphere(d); }

SpaceExpr random_expr(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> arity(0, 3);
    switch (pick(rng)) {
    case 0: return SpaceExpr::point();
    case 1: return S(dim(rng));
    case 2: return SpaceExpr::loop(random_expr(rng, depth - 1));
    case 3: return SpaceExpr::suspension(random_expr(rng, depth - 1));
    default: break;
    }
    std::vector<SpaceExpr> children;
    const int n = arity(rng) + (pick(rng) % 3 == 0 ? 1 : 0);
    for (int i = 0; i < n; ++i)
        children.push_back(random_expr(rng, depth - 1));
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return SpaceExpr::wedge(std::move(children));
    case 1: return SpaceExpr::product(std::move(children));
    default:
        if (children.empty())
            children.push_back(S(dim(rng)));
        return SpaceExpr::smash(std::move(children));
    }
}

// Same expression with every n-ary child list shuffled.
SpaceExpr shuffled(const SpaceExpr& e, std::mt19937_64& rng)
{
    switch (e.kind()) {
    case ExprKind::Point:
    case ExprKind::Sphere: return e;
    case ExprKind::Loop: return SpaceExpr::loop(shuffled(e.child(), rng));
    case ExprKind::Suspension: return SpaceExpr::suspension(shuffled(e.child(), rng));
    default: break;
    }
    std::vector<SpaceExpr> children;
    for (const auto& c : e.children())
        children.push_back(shuffled(c, rng));
    std::shuffle(children.begin(), children.end(), rng);
    if (e.kind() == ExprKind::Wedge)
        return SpaceExpr::wedge(std::move(children));
    if (e.kind() == ExprKind::Product)
        return SpaceExpr::product(std::move(children));
    return SpaceExpr::smash(std::move(children));
}

bool is_canonical(const SpaceExpr& e)
{
    if (e.kind() == ExprKind::Loop || e.kind() == ExprKind::Suspension)
        return !e.child().is_point() && is_canonical(e.child());
    if (e.kind() == ExprKind::Point || e.kind() == ExprKind::Sphere)
        return true;
    if (e.children().size() < 2 || !std::is_sorted(e.children().begin(), e.children().end()))
        return false;
    for (const auto& c : e.children())
        if (c.is_point() || c.kind() == e.kind() || !is_canonical(c))
            return false;
    return true;
}

} // namespace

TEST_SUITE("expr")
{
    TEST_CASE("canonical forms of small expressions")
    {
        CHECK(canonicalize(SpaceExpr::wedge({})) == SpaceExpr::point());
        CHECK(canonicalize(SpaceExpr::product({SpaceExpr::loop(S(2)), SpaceExpr::point()})) == SpaceExpr::loop(S(2)));
        CHECK(canonicalize(SpaceExpr::wedge({S(3), S(2), S(3)})) == SpaceExpr::wedge({S(2), S(3), S(3)}));
        CHECK(canonicalize(SpaceExpr::smash({S(2), SpaceExpr::point()})) == SpaceExpr::point());
        CHECK(canonicalize(SpaceExpr::loop(SpaceExpr::wedge({}))) == SpaceExpr::point());
        CHECK(canonicalize(SpaceExpr::suspension(SpaceExpr::point())) == SpaceExpr::point());
        CHECK(canonicalize(SpaceExpr::wedge({S(2), SpaceExpr::wedge({S(4), SpaceExpr::wedge({S(3)})})})) ==
              SpaceExpr::wedge({S(2), S(3), S(4)}));
    }

    TEST_CASE("constructor order")
    {
        CHECK(SpaceExpr::point() < S(1));
        CHECK(S(1) < S(2));
        CHECK(S(9) < SpaceExpr::loop(S(2)));
        CHECK(SpaceExpr::loop(S(9)) < SpaceExpr::suspension(S(2)));
        CHECK(SpaceExpr::suspension(S(2)) < SpaceExpr::smash({S(2)}));
        CHECK(SpaceExpr::smash({S(2), S(2)}) < SpaceExpr::wedge({S(2), S(2)}));
        CHECK(SpaceExpr::wedge({S(2), S(2)}) < SpaceExpr::product({S(2), S(2)}));
    }

    TEST_CASE("invalid constructors")
    {
        CHECK_THROWS_AS(S(0), Error);
        CHECK_THROWS_AS(SpaceExpr::smash({}), Error);
    }

    TEST_CASE("canonicalize is idempotent and order-blind on random expressions")
    {
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 500; ++i) {
            const SpaceExpr e = random_expr(rng, 5);
            const SpaceExpr c = canonicalize(e);
            CHECK(is_canonical(c));
            CHECK(canonicalize(c) == c);
            CHECK(canonicalize(shuffled(e, rng)) == c);
        }
    }

    TEST_CASE("rendering")
    {
        const SpaceExpr e = SpaceExpr::loop(SpaceExpr::product({S(2), S(3)}));
        CHECK(render(e) == "Ω(S^2 × S^3)");
        CHECK(render(e, RenderStyle::Ascii) == "O(S^2 x S^3)");
        CHECK(render(SpaceExpr::wedge({S(2), S(3)})) == "S^2 ∨ S^3");
        CHECK(render(SpaceExpr::point()) == "*");
    }

    TEST_CASE("parse round-trips both renderings")
    {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 300; ++i) {
            const SpaceExpr c = canonicalize(random_expr(rng, 4));
            CHECK(parse_expr(render(c)) == c);
            CHECK(parse_expr(render(c, RenderStyle::Ascii)) == c);
        }
        CHECK(parse_expr("S^2 v S^3") == SpaceExpr::wedge({S(2), S(3)}));
        CHECK(parse_expr("O(S^2 x S^3)") == SpaceExpr::loop(SpaceExpr::product({S(2), S(3)})));
        CHECK(parse_expr("S(S^2 ^ S^3)") == SpaceExpr::suspension(SpaceExpr::smash({S(2), S(3)})));
        CHECK(parse_expr("Σ S^4") == SpaceExpr::suspension(S(4)));
    }

    TEST_CASE("parse errors")
    {
        for (const char* bad : {"S^2 v S^3 x S^4", "S^", "O(", "S^2 v", "(S^2", "Q^2", "S^0"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_expr(bad), Error);
        }
    }

    TEST_CASE("sphere wedges")
    {
        SphereWedge w{{2, 2}, {3, 2}};
        CHECK(w.size() == 4);
        CHECK(w.multiplicity(3) == 2);
        CHECK(w.multiplicity(5) == 0);
        CHECK(reduced_homology_series(w, 5) == series_of(5, {0, 0, 2, 2}));
        CHECK(reduced_homology_series(SphereWedge{{2, 1}}, 5) == series_of(5, {0, 0, 1}));
        CHECK(reduced_homology_series(SphereWedge{}, 5) == TruncatedSeries(5));
        CHECK(w.truncated(2) == SphereWedge{{2, 2}});
        CHECK(w.to_expr() == SpaceExpr::wedge({S(2), S(2), S(3), S(3)}));
        CHECK(SphereWedge{}.to_expr() == SpaceExpr::point());
        CHECK_THROWS_AS((SphereWedge{{1, 1}}), Error);
    }

    TEST_CASE("reduced series is additive under wedge")
    {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> dim(2, 12);
        for (int i = 0; i < 100; ++i) {
            SphereWedge a;
            SphereWedge b;
            for (int j = 0; j < 4; ++j) {
                a.add(dim(rng));
                b.add(dim(rng));
            }
            CHECK(reduced_homology_series(a + b, 10) == reduced_homology_series(a, 10) + reduced_homology_series(b, 10));
        }
    }
}
