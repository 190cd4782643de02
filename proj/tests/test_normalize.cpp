#include "support.hpp"

#include "loopcalc/error.hpp"
#include "loopcalc/normalize.hpp"

#include <algorithm>
#include <random>

using namespace loopcalc;

namespace {

SpaceExpr S(int d) { return SpaceExpr::sphere(d); }
SpaceExpr L(SpaceExpr e) { return SpaceExpr::loop(std::move(e)); }

// S^a ^ OmegaS^s ^ OmegaS^t as a wedge, by splitting each loop factor with
// James: Sigma OmegaS^s = v S^((s-1)i+1), so S^a ^ OmegaS^s = v_i S^(a+(s-1)i).
SphereWedge iterated_james_smash(const SphereWedge& j, int s, int t, int cap)
{
    SphereWedge out;
    for (const auto& [a, mult] : j.dims())
        for (int i = 0; a + (s - 1) * i <= cap; ++i)
            for (int k = 0; a + (s - 1) * i + (t - 1) * k <= cap; ++k)
                if (i + k > 0)
                    out.add(a + (s - 1) * i + (t - 1) * k, mult);
    return out;
}

} // namespace

TEST_SUITE("normalize")
{
    TEST_CASE("James splitting")
    {
        CHECK(james_split(2, 4) == SphereWedge{{2, 1}, {3, 1}, {4, 1}, {5, 1}});
        CHECK(james_split(3, 8) == SphereWedge{{3, 1}, {5, 1}, {7, 1}, {9, 1}});
        CHECK(james_split(2, 0).empty());
        CHECK_THROWS_AS((void)james_split(1, 5), Error);
    }

    TEST_CASE("James splitting matches the suspended loop series")
    {
        for (int s = 2; s <= 6; ++s) {
            const TruncatedSeries lhs = reduced_homology_series(james_split(s, 25), 26);
            const TruncatedSeries rhs = suspend(loop_sphere_series(s, 26) - TruncatedSeries::one(26));
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("smash of desuspendable spaces")
    {
        const TruncatedSeries s2v3 = series_of(7, {0, 0, 1, 1});
        CHECK(smash_desuspendables(s2v3, series_of(7, {0, 0, 1})) == SphereWedge{{4, 1}, {5, 1}});
        const TruncatedSeries loop_q = series_of(7, {0, 1, 2, 2, 3, 3});
        CHECK(smash_desuspendables(s2v3, loop_q) == SphereWedge{{3, 1}, {4, 3}, {5, 4}, {6, 5}, {7, 6}});
        CHECK(smash_desuspendables(TruncatedSeries(7), loop_q).empty());
        CHECK_THROWS_AS((void)smash_desuspendables(series_of(7, {1}), loop_q), Error);
    }

    TEST_CASE("half-smash splitting")
    {
        const FactorList loop_s2s3 = normal_form(L(SpaceExpr::product({S(2), S(3)})), 7);
        CHECK(half_smash_split(loop_s2s3, SphereWedge{}, 7).empty());
        CHECK(half_smash_split(loop_s2s3, SphereWedge{{2, 1}, {3, 1}}, 7) ==
              SphereWedge{{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 6}});
        const FactorList loop_s3s3 = normal_form(L(SpaceExpr::product({S(3), S(3)})), 6);
        CHECK(half_smash_split(loop_s3s3, SphereWedge{{5, 2}}, 6) == SphereWedge{{5, 2}});
    }

    TEST_CASE("half-smash convolution agrees with iterated James splitting")
    {
        for (int s = 2; s <= 5; ++s)
            for (int t = s; t <= 6; ++t) {
                const FactorList loop_q = normal_form(L(SpaceExpr::product({S(s), S(t)})), 20);
                for (const SphereWedge& j : {SphereWedge{{s, 1}}, SphereWedge{{s, 1}, {t, 2}}, SphereWedge{{t, 3}}}) {
                    CAPTURE(s);
                    CAPTURE(t);
                    // OmegaS^4 is rewritten as S^3 x OmegaS^7 but has the same homology.
                    CHECK(half_smash_split(loop_q, j, 20) == j + iterated_james_smash(j, s, t, 20));
                }
            }
    }

    TEST_CASE("normal forms of basic expressions")
    {
        const FactorList a = normal_form(L(SpaceExpr::product({S(2), S(3)})), 10);
        CHECK(a.loop_spheres == DimMultiset{{2, 1}, {3, 1}});
        CHECK(a.circles == 0);

        const FactorList b = normal_form(SpaceExpr::product({S(1), L(S(5))}), 10);
        CHECK(b.circles == 1);
        CHECK(b.loop_spheres == DimMultiset{{5, 1}});

        const FactorList c = normal_form(L(S(4)), 10);
        CHECK(c.spheres == DimMultiset{{3, 1}});
        CHECK(c.loop_spheres == DimMultiset{{7, 1}});
        CHECK_FALSE(c.truncated);
    }

    TEST_CASE("unsupported expressions are named")
    {
        for (const SpaceExpr& e : {SpaceExpr::wedge({S(2), S(3)}), L(S(1)), S(2), L(L(S(3))),
                                   L(SpaceExpr::wedge({S(1), S(3)}))}) {
            CAPTURE(e);
            try {
                (void)normal_form(e, 10);
                FAIL("expected an error");
            }
            catch (const Error& err) {
                CHECK(err.kind() == ErrorKind::Unsupported);
                CHECK(std::string(err.what()).find("unsupported expression") != std::string::npos);
            }
        }
    }

    TEST_CASE("factor series")
    {
        FactorList f;
        f.cap = 8;
        f.circles = 1;
        f.loop_spheres = {{5, 1}};
        CHECK(factor_series(f) == series_of(8, {1, 1, 0, 0, 1, 1, 0, 0, 1}));
        FactorList g;
        g.cap = 4;
        g.loop_spheres = {{2, 2}};
        CHECK(factor_series(g) == series_of(4, {1, 2, 3, 4, 5}));
        FactorList e;
        e.cap = 4;
        CHECK(factor_series(e) == TruncatedSeries::one(4));
    }

    TEST_CASE("normal form of a loop on a wedge matches Bott-Samelson")
    {
        std::mt19937_64 rng(8);
        std::uniform_int_distribution<int> dim(2, 6);
        for (int i = 0; i < 60; ++i) {
            SphereWedge w;
            const int n = 1 + i % 5;
            for (int k = 0; k < n; ++k)
                w.add(dim(rng));
            const TruncatedSeries expected =
                tensor_algebra_series(desuspend(reduced_homology_series(w, 26))).with_cap(25);
            CHECK(factor_series(normal_form(L(w.to_expr()), 25)) == expected);
        }
    }

    TEST_CASE("normal form ignores the order and grouping of children")
    {
        const SpaceExpr a = SpaceExpr::product(
            {L(SpaceExpr::wedge({S(3), SpaceExpr::smash({S(2), L(SpaceExpr::product({S(2), S(3)}))}), S(2)})),
             S(1), L(SpaceExpr::product({S(3), S(2)}))});
        const SpaceExpr b = SpaceExpr::product(
            {SpaceExpr::product({L(SpaceExpr::product({S(2), S(3)})), S(1)}),
             L(SpaceExpr::wedge({SpaceExpr::wedge({S(2), S(3)}), SpaceExpr::smash({L(SpaceExpr::product({S(3), S(2)})), S(2)})}))});
        CHECK(normal_form(a, 20) == normal_form(b, 20));
    }

    TEST_CASE("recognizing sphere wedges")
    {
        CHECK(as_sphere_wedge(SpaceExpr::wedge({S(2), SpaceExpr::suspension(S(3))}), 10) == SphereWedge{{2, 1}, {4, 1}});
        CHECK(as_sphere_wedge(SpaceExpr::suspension(L(S(3))), 9) == SphereWedge{{3, 1}, {5, 1}, {7, 1}, {9, 1}});
        CHECK_FALSE(as_sphere_wedge(SpaceExpr::product({S(2), S(3)}), 10).has_value());
        CHECK_FALSE(as_sphere_wedge(S(1), 10).has_value());
    }
}
