#include "loopcalc/decompose.hpp"

#include "loopcalc/error.hpp"

namespace loopcalc {

namespace {

SpaceExpr sphere_product(int a, int b) { return SpaceExpr::product({SpaceExpr::sphere(a), SpaceExpr::sphere(b)}); }

} // namespace

SpaceExpr decompose_general(const PDSpec& p)
{
    p.validate();
    const SpaceExpr loop_q = SpaceExpr::loop(sphere_product(p.m, p.n - p.m));
    const SpaceExpr j = p.J.to_expr();
    const SpaceExpr w = SpaceExpr::wedge({j, SpaceExpr::smash({j, loop_q})});
    return canonicalize(SpaceExpr::product({loop_q, SpaceExpr::loop(w)}));
}

SpaceExpr decompose_wall(const WallSpec& w)
{
    w.validate();
    return decompose_general(PDSpec{w.n, 2 * w.n, SphereWedge{{w.n, w.k - 2}}});
}

SpaceExpr decompose_conn_sum(const ConnSumSpec& c)
{
    c.validate();
    return decompose_general(PDSpec{c.m, c.n, c.punctured_skeleton});
}

SpaceExpr decompose_four_manifold(const FourManifoldSpec& f)
{
    f.validate();
    if (f.k == 0)
        return SpaceExpr::loop(SpaceExpr::sphere(4));
    if (f.k == 1)
        return SpaceExpr::product({SpaceExpr::sphere(1), SpaceExpr::loop(SpaceExpr::sphere(5))});
    SphereWedge j{{2, f.k - 2}, {3, f.k - 2}};
    return canonicalize(SpaceExpr::product({SpaceExpr::sphere(1), decompose_general(PDSpec{2, 5, j})}));
}

SpaceExpr decompose_bundle(const BundleSpec& b)
{
    b.validate();
    std::vector<SpaceExpr> factors{decompose_four_manifold(b.base)};
    for (int d : b.group_spheres)
        factors.push_back(SpaceExpr::loop(SpaceExpr::sphere(d)));
    return canonicalize(SpaceExpr::product(std::move(factors)));
}

std::vector<SpaceExpr> decompose_config(const ConfigSpec& c)
{
    c.validate();
    const ConnSumSpec& base = c.base;
    std::vector<SpaceExpr> factors{decompose_conn_sum(base)};
    SphereWedge punctured = below_top_cells(base);
    for (int i = 1; i <= c.points; ++i) {
        factors.push_back(canonicalize(SpaceExpr::loop(punctured.to_expr())));
        punctured.add(base.n - 1);
    }
    return factors;
}

SpaceExpr decompose(const ManifoldSpec& spec)
{
    struct Visitor {
        SpaceExpr operator()(const FourManifoldSpec& s) const { return decompose_four_manifold(s); }
        SpaceExpr operator()(const WallSpec& s) const { return decompose_wall(s); }
        SpaceExpr operator()(const PDSpec& s) const { return decompose_general(s); }
        SpaceExpr operator()(const ConnSumSpec& s) const { return decompose_conn_sum(s); }
        SpaceExpr operator()(const BundleSpec& s) const { return decompose_bundle(s); }
        SpaceExpr operator()(const ConfigSpec& s) const
        {
            return canonicalize(SpaceExpr::product(decompose_config(s)));
        }
    };
    return std::visit(Visitor{}, spec);
}

SphereWedge below_top_cells(const ConnSumSpec& c)
{
    SphereWedge w = c.punctured_skeleton;
    w.add(c.m);
    w.add(c.n - c.m);
    return w;
}

bool loop_equivalent(const ManifoldSpec& a, const ManifoldSpec& b)
{
    validate(a);
    validate(b);
    if (const auto* fa = std::get_if<FourManifoldSpec>(&a)) {
        if (const auto* fb = std::get_if<FourManifoldSpec>(&b))
            return fa->k == fb->k;
    }
    else if (const auto* wa = std::get_if<WallSpec>(&a)) {
        if (const auto* wb = std::get_if<WallSpec>(&b)) {
            require(wa->n == wb->n, ErrorKind::Usage, "wall manifolds of different dimension are not comparable");
            return wa->k == wb->k;
        }
    }
    else if (const auto* ca = std::get_if<ConnSumSpec>(&a)) {
        if (const auto* cb = std::get_if<ConnSumSpec>(&b)) {
            require(ca->n == cb->n, ErrorKind::Usage, "connected sums of different dimension are not comparable");
            return below_top_cells(*ca) == below_top_cells(*cb);
        }
    }
    fail(ErrorKind::Usage, std::string("loop_equivalent: cannot compare ") + type_name(a) + " with " + type_name(b));
}

} // namespace loopcalc
