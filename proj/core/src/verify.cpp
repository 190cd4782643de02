#include "loopcalc/verify.hpp"

#include "loopcalc/decompose.hpp"
#include "loopcalc/error.hpp"
#include "loopcalc/hilton.hpp"
#include "loopcalc/homotopy.hpp"
#include "loopcalc/normalize.hpp"

#include <functional>
#include <sstream>

namespace loopcalc {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string describe(const SphereWedge& w)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, m] : w.dims()) {
        os << (first ? "" : ",") << d << ":" << m;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string describe(const PDSpec& p)
{
    return "PD(m=" + std::to_string(p.m) + ",n=" + std::to_string(p.n) + ",J=" + describe(p.J) + ")";
}

std::string describe(const std::vector<int>& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

std::string describe(const SSInput& in)
{
    std::ostringstream os;
    os << "SS(m=" << in.m << ",n=" << in.n << ",degrees=" << describe(in.degrees) << ",c1=[";
    for (std::size_t i = 0; i < in.c_col1.size(); ++i)
        os << (i ? "," : "") << in.c_col1[i];
    os << "],cl=[";
    for (std::size_t i = 0; i < in.c_colell.size(); ++i)
        os << (i ? "," : "") << in.c_colell[i];
    os << "],cap=" << in.cap << ")";
    return os.str();
}

std::string describe(const IntersectionForm& c)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < c.rank(); ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < c.rank(); ++j)
            os << (j ? "," : "") << c(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// Runs one instance; an engine exception counts as a failure of that instance.
class Tally {
public:
    Tally(std::string check, std::uint64_t seed) { report_.check = std::move(check), report_.seed = seed; }

    void run(const std::string& label, const std::function<bool()>& body)
    {
        ++report_.instances;
        std::string why;
        bool ok = false;
        try {
            ok = body();
        }
        catch (const Error& e) {
            why = std::string(" threw ") + to_string(e.kind()) + ": " + e.what();
        }
        if (!ok) {
            ++report_.failures;
            if (!report_.counterexample)
                report_.counterexample = label + why;
        }
    }

    CheckReport done() { return std::move(report_); }

private:
    CheckReport report_;
};

// All multisets of size lo..hi over [first, last], as ascending vectors.
void for_each_multiset(int first, int last, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) >= lo)
            visit(cur);
        if (static_cast<int>(cur.size()) == hi)
            return;
        for (int x = from; x <= last; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(first);
}

TruncatedSeries random_series(std::mt19937_64& rng, int cap, bool unit_constant)
{
    TruncatedSeries s(cap);
    for (int d = 0; d <= cap; ++d)
        s[d] = uniform(rng, -50, 50);
    if (unit_constant)
        s[0] = uniform(rng, 0, 1) ? 1 : -1;
    return s;
}

SphereWedge wedge_of(const std::vector<int>& dims)
{
    SphereWedge w;
    for (int d : dims)
        w.add(d);
    return w;
}

// Series of Omega(wedge) by Bott-Samelson: tensor algebra on the desuspension.
TruncatedSeries bott_samelson(const TruncatedSeries& reduced_one_higher, int cap)
{
    return tensor_algebra_series(desuspend(reduced_one_higher)).with_cap(cap);
}

bool coefficientwise_le(const TruncatedSeries& a, const TruncatedSeries& b)
{
    for (int d = 0; d <= a.cap(); ++d)
        if (a[d] > b[d])
            return false;
    return true;
}

} // namespace

Suite parse_suite(const std::string& name)
{
    if (name == "series")
        return Suite::Series;
    if (name == "hm")
        return Suite::HM;
    if (name == "ss")
        return Suite::SS;
    if (name == "ranks")
        return Suite::Ranks;
    if (name == "all")
        return Suite::All;
    fail(ErrorKind::Usage, "unknown suite '" + name + "' (expected series, hm, ss, ranks or all)");
}

std::vector<SphereWedge> wedge_battery(int max_summands, int max_dim)
{
    std::vector<SphereWedge> out;
    for_each_multiset(2, max_dim, 1, max_summands, [&](const std::vector<int>& dims) { out.push_back(wedge_of(dims)); });
    return out;
}

std::vector<PDSpec> pd_battery(int max_j, int max_dim)
{
    std::vector<PDSpec> out;
    for (int m = 2; m <= max_dim; ++m)
        for (int top = m; top <= max_dim; ++top)
            for_each_multiset(m, top, 0, max_j,
                              [&](const std::vector<int>& dims) { out.push_back(PDSpec{m, m + top, wedge_of(dims)}); });
    return out;
}

IntersectionForm random_unimodular_form(int k, std::mt19937_64& rng)
{
    require(k >= 1, ErrorKind::Usage, "random_unimodular_form: k must be >= 1");
    const auto K = static_cast<std::size_t>(k);
    using Matrix = std::vector<std::vector<BigInt>>;
    Matrix d(K, std::vector<BigInt>(K));
    const int planes = uniform(rng, 0, k / 2);
    std::size_t i = 0;
    for (int h = 0; h < planes; ++h, i += 2) {
        d[i][i + 1] = 1;
        d[i + 1][i] = 1;
    }
    for (; i < K; ++i)
        d[i][i] = uniform(rng, 0, 1) ? 1 : -1;

    Matrix p(K, std::vector<BigInt>(K));
    for (std::size_t r = 0; r < K; ++r)
        p[r][r] = 1;
    if (k >= 2) {
        for (int step = 0; step < 3 * k; ++step) {
            const auto a = static_cast<std::size_t>(uniform(rng, 0, k - 1));
            auto b = static_cast<std::size_t>(uniform(rng, 0, k - 2));
            if (b >= a)
                ++b;
            if (uniform(rng, 0, 3) == 0) {
                std::swap(p[a], p[b]);
            }
            else {
                const int f = uniform(rng, 0, 1) ? uniform(rng, 1, 2) : -uniform(rng, 1, 2);
                for (std::size_t c = 0; c < K; ++c)
                    p[a][c] += f * p[b][c];
            }
        }
    }
    Matrix c(K, std::vector<BigInt>(K));
    for (std::size_t r = 0; r < K; ++r)
        for (std::size_t s = 0; s < K; ++s) {
            BigInt acc = 0;
            for (std::size_t x = 0; x < K; ++x)
                for (std::size_t y = 0; y < K; ++y)
                    if (d[x][y] != 0)
                        acc += p[x][r] * d[x][y] * p[y][s];
            c[r][s] = acc;
        }
    return IntersectionForm(std::move(c));
}

SSInput random_ss_input(bool case2, int cap, std::mt19937_64& rng)
{
    const int m = uniform(rng, 2, 4);
    const int top = case2 ? m : m + uniform(rng, 1, 3);
    PDSpec p{m, m + top, {}};
    const int size = uniform(rng, 0, 8);
    std::vector<int> dims;
    for (int i = 0; i < size; ++i)
        dims.push_back(uniform(rng, m, top));
    p.J = wedge_of(dims);
    std::vector<BigInt> col1;
    std::vector<BigInt> colell;
    for (const auto& [d, mult] : p.J.dims())
        for (BigInt i = 0; i < mult; ++i) {
            col1.push_back(d == top ? BigInt(uniform(rng, -3, 3)) : BigInt(0));
            colell.push_back(d == m ? BigInt(uniform(rng, -3, 3)) : BigInt(0));
        }
    return ss_input_for(p, col1, colell, cap);
}

TruncatedSeries route_b_series(const PDSpec& p, int cap)
{
    const std::size_t middle = static_cast<std::size_t>(p.J.size());
    const SSInput in = ss_input_for(p, std::vector<BigInt>(middle), std::vector<BigInt>(middle), cap + 1);
    const TruncatedSeries h_f = p4_e_infinity(in).series(cap + 1);
    const TruncatedSeries s_q = loop_sphere_series(p.m, cap) * loop_sphere_series(p.n - p.m, cap);
    return s_q * bott_samelson(h_f - TruncatedSeries::one(cap + 1), cap);
}

CheckReport check_series_laws(std::uint64_t seed, int count, int cap)
{
    Tally t("series_ring_laws", seed);
    std::mt19937_64 rng(seed);
    const TruncatedSeries one = TruncatedSeries::one(cap);
    for (int i = 0; i < count; ++i) {
        const TruncatedSeries a = random_series(rng, cap, true);
        const TruncatedSeries b = random_series(rng, cap, false);
        const TruncatedSeries c = random_series(rng, cap, false);
        TruncatedSeries g = random_series(rng, cap, false);
        g[0] = 0;
        t.run("instance " + std::to_string(i), [&] {
            return a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                   (a - b) + b == a && a * invert(a) == one && invert(invert(a)) == a &&
                   tensor_algebra_series(g) * (one - g) == one && desuspend(suspend(g)) == g.with_cap(cap - 1).with_cap(cap);
        });
    }
    return t.done();
}

CheckReport check_james(int cap)
{
    Tally t("james_splitting", 0);
    for (int s = 2; s <= 6; ++s)
        t.run("s=" + std::to_string(s), [&] {
            const TruncatedSeries lhs = reduced_homology_series(james_split(s, cap), cap + 1);
            const TruncatedSeries rhs = suspend(loop_sphere_series(s, cap + 1) - TruncatedSeries::one(cap + 1));
            return lhs == rhs;
        });
    return t.done();
}

CheckReport check_hilton_milnor_series(int max_summands, int max_dim, int cap)
{
    Tally t("hilton_milnor_series", 0);
    for (const SphereWedge& w : wedge_battery(max_summands, max_dim))
        t.run("wedge " + describe(w), [&] {
            const FactorList f = hilton_milnor(w, cap);
            const TruncatedSeries expected = bott_samelson(reduced_homology_series(w, cap + 1), cap);
            // normal_form agrees with the factorization up to the OmegaS^4 rewrite.
            return factor_series(f) == expected &&
                   factor_series(normal_form(SpaceExpr::loop(w.to_expr()), cap)) == expected;
        });
    return t.done();
}

CheckReport check_lyndon_witt(int max_letters, int max_weight, int cap)
{
    Tally t("lyndon_vs_witt", 0);
    for_each_multiset(1, max_weight, 1, max_letters, [&](const std::vector<int>& weights) {
        t.run("weights " + describe(weights), [&] {
            const WeightedAlphabet a(weights);
            if (lyndon_multiplicities(a, cap) != witt_counts(a, cap))
                return false;
            if (weights.size() > 3)
                return true;
            // Small alphabets: enumerate the words themselves.
            const int small_cap = std::min(cap, 12);
            DimMultiset listed;
            for_each_lyndon_word(weights, small_cap,
                                 [&](std::span<const int>, int weight) { accumulate(listed, weight, 1); });
            return listed == lyndon_multiplicities(a, small_cap);
        });
    });
    return t.done();
}

CheckReport check_lyndon_witt_random(std::uint64_t seed, int count, int cap)
{
    Tally t("lyndon_vs_witt_random", seed);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        std::vector<int> weights(static_cast<std::size_t>(uniform(rng, 1, 10)));
        for (int& w : weights)
            w = uniform(rng, 1, 8);
        t.run("weights " + describe(weights), [&] {
            const WeightedAlphabet a(weights);
            return lyndon_multiplicities(a, cap) == witt_counts(a, cap);
        });
    }
    return t.done();
}

CheckReport check_p4(std::uint64_t seed, int count, int cap)
{
    Tally t("p4_e_infinity", seed);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const SSInput in = random_ss_input(i % 2 == 1, cap, rng);
        t.run(describe(in), [&] { return p4_e_infinity(in).series(cap) == p4_prediction(in); });
    }
    return t.done();
}

CheckReport check_qhlgy(int max_top, int cap)
{
    Tally t("path_loop_replay", 0);
    for (int m = 2; m <= max_top; ++m)
        for (int top = m; top <= max_top; ++top)
            t.run("m=" + std::to_string(m) + ",n=" + std::to_string(m + top), [&] {
                return qhlgy_series_check(m, m + top, cap) == polynomial_two_var_series(m - 1, top - 1, cap);
            });
    return t.done();
}

CheckReport check_form_independence(std::uint64_t seed, int per_rank, int max_k)
{
    Tally t("form_independence", seed);
    std::mt19937_64 rng(seed);
    for (int k = 1; k <= max_k; ++k) {
        const SpaceExpr formless = decompose_four_manifold(FourManifoldSpec{k, std::nullopt});
        std::optional<ZConstruction> reference;
        for (int i = 0; i < per_rank; ++i) {
            const IntersectionForm c = random_unimodular_form(k, rng);
            t.run("k=" + std::to_string(k) + " form " + describe(c), [&] {
                const ZConstruction z = z_construct(c, 5);
                if (!reference)
                    reference = z;
                const bool same_z = z.ranks == reference->ranks && z.is_s5 == reference->is_s5 && z.pd == reference->pd &&
                                    z.is_s5 == (k == 1) && z.pd.has_value() == (k >= 2);
                return same_z && decompose_four_manifold(FourManifoldSpec{k, c}) == formless;
            });
        }
    }
    return t.done();
}

CheckReport check_two_route(int max_j, int max_dim, int cap)
{
    Tally t("two_route_series", 0);
    for (const PDSpec& p : pd_battery(max_j, max_dim))
        t.run(describe(p), [&] {
            const TruncatedSeries route_a = factor_series(normal_form(decompose_general(p), cap));
            if (route_a != route_b_series(p, cap))
                return false;
            // Series of OmegaQ x F: s_Q (1 + g s_Q) with g the reduced series of J.
            const TruncatedSeries s_q = loop_sphere_series(p.m, cap) * loop_sphere_series(p.n - p.m, cap);
            const TruncatedSeries g = reduced_homology_series(p.J, cap);
            const std::size_t middle = static_cast<std::size_t>(p.J.size());
            const SSInput in = ss_input_for(p, std::vector<BigInt>(middle), std::vector<BigInt>(middle), cap);
            return s_q * (TruncatedSeries::one(cap) + g * s_q) == s_q * p4_e_infinity(in).series(cap);
        });
    return t.done();
}

CheckReport check_rank_oracle(int max_summands, int max_dim, int cap)
{
    Tally t("rational_rank_oracle", 0);
    for (const SphereWedge& w : wedge_battery(max_summands, max_dim))
        t.run("wedge " + describe(w), [&] {
            std::vector<int> degrees;
            for (const auto& [d, m] : w.dims())
                for (BigInt i = 0; i < m; ++i)
                    degrees.push_back(d - 1);
            const RankTable loop = rational_ranks(hilton_milnor(w, cap));
            const RankTable base = base_ranks(loop);
            for (const auto& [q, r] : loop.ranks)
                if (q + 1 <= cap && (!base.ranks.count(q + 1) || base.ranks.at(q + 1) != r))
                    return false;
            return loop.ranks == free_lie_ranks(degrees, cap);
        });
    return t.done();
}

CheckReport check_rank_tables()
{
    Tally t("rank_tables", 0);
    constexpr int cap = 20;
    auto base_of = [&](const SpaceExpr& e) { return base_ranks(rational_ranks(normal_form(e, cap))).ranks; };
    t.run("CP^2", [&] { return base_of(decompose_four_manifold({1, std::nullopt})) == DimMultiset{{2, 1}, {5, 1}}; });
    t.run("S^2 x S^2 via k=2", [&] {
        return base_of(decompose_four_manifold({2, std::nullopt})) == DimMultiset{{2, 2}, {3, 2}};
    });
    t.run("S^2 x S^2 directly", [&] {
        const SpaceExpr s2 = SpaceExpr::sphere(2);
        return base_of(SpaceExpr::loop(SpaceExpr::product({s2, s2}))) == DimMultiset{{2, 2}, {3, 2}};
    });
    t.run("S^4", [&] {
        const RankTable loop = rational_ranks(normal_form(decompose_four_manifold({0, std::nullopt}), cap));
        return loop.ranks == DimMultiset{{3, 1}, {6, 1}} && base_ranks(loop).ranks == DimMultiset{{4, 1}, {7, 1}};
    });
    for (int k = 0; k <= 8; ++k)
        t.run("four-manifold k=" + std::to_string(k), [&] {
            const DimMultiset ranks = base_of(decompose_four_manifold({k, std::nullopt}));
            const BigInt h2 = ranks.count(2) ? ranks.at(2) : BigInt(0);
            return h2 == k;
        });
    return t.done();
}

CheckReport check_loop_equivalence(std::uint64_t seed, int pairs_per_class, int cap)
{
    Tally t("loop_equivalence", seed);
    std::mt19937_64 rng(seed);
    auto agree = [&](const ManifoldSpec& a, const ManifoldSpec& b) {
        return loop_equivalent(a, b) == (normal_form(decompose(a), cap) == normal_form(decompose(b), cap));
    };
    for (int i = 0; i < pairs_per_class; ++i) {
        const int ka = uniform(rng, 0, 6);
        const int kb = uniform(rng, 0, 1) ? ka : uniform(rng, 0, 6);
        t.run("four-manifolds k=" + std::to_string(ka) + "," + std::to_string(kb),
              [&] { return agree(FourManifoldSpec{ka, std::nullopt}, FourManifoldSpec{kb, std::nullopt}); });
    }
    const int wall_dims[] = {3, 5, 6, 7};
    for (int i = 0; i < pairs_per_class; ++i) {
        const int n = wall_dims[uniform(rng, 0, 3)];
        const int ka = uniform(rng, 2, 5);
        const int kb = uniform(rng, 0, 1) ? ka : uniform(rng, 2, 5);
        t.run("wall n=" + std::to_string(n) + " k=" + std::to_string(ka) + "," + std::to_string(kb),
              [&] { return agree(WallSpec{n, ka}, WallSpec{n, kb}); });
    }
    auto random_conn_sum = [&](int n) {
        const int m = uniform(rng, 2, n / 2);
        std::vector<int> dims;
        const int size = uniform(rng, 0, 2);
        for (int j = 0; j < size; ++j)
            dims.push_back(uniform(rng, m, n - m));
        return ConnSumSpec{m, n, wedge_of(dims)};
    };
    for (int i = 0; i < pairs_per_class; ++i) {
        const int n = uniform(rng, 5, 7);
        const ConnSumSpec a = random_conn_sum(n);
        const ConnSumSpec b = uniform(rng, 0, 1) ? a : random_conn_sum(n);
        t.run("connected sums " + std::to_string(a.m) + describe(a.punctured_skeleton) + " vs " + std::to_string(b.m) +
                  describe(b.punctured_skeleton) + " n=" + std::to_string(n),
              [&] { return agree(a, b); });
    }
    return t.done();
}

CheckReport check_config(int max_points, int cap)
{
    Tally t("configuration_spaces", 0);
    const ConnSumSpec bases[] = {
        {3, 7, SphereWedge{{3, 1}, {4, 1}}},
        {2, 5, SphereWedge{}},
        {2, 5, SphereWedge{{2, 1}, {3, 1}}},
        {3, 9, SphereWedge{{4, 2}}},
    };
    for (const ConnSumSpec& base : bases) {
        std::optional<TruncatedSeries> previous;
        for (int k = 1; k <= max_points; ++k)
            t.run("n=" + std::to_string(base.n) + " skeleton " + describe(base.punctured_skeleton) +
                      " points=" + std::to_string(k),
                  [&] {
                      const std::vector<SpaceExpr> factors = decompose_config(ConfigSpec{base, k});
                      if (static_cast<int>(factors.size()) != k + 1 || factors[0] != decompose_conn_sum(base))
                          return false;
                      for (int i = 1; i <= k; ++i) {
                          // (M - *) v S^m v S^(n-m) v (i-1) S^(n-1), spelled out sphere by sphere.
                          std::vector<SpaceExpr> spheres;
                          for (const auto& [d, mult] : base.punctured_skeleton.dims())
                              for (BigInt j = 0; j < mult; ++j)
                                  spheres.push_back(SpaceExpr::sphere(d));
                          spheres.push_back(SpaceExpr::sphere(base.m));
                          spheres.push_back(SpaceExpr::sphere(base.n - base.m));
                          for (int j = 1; j < i; ++j)
                              spheres.push_back(SpaceExpr::sphere(base.n - 1));
                          const SpaceExpr expected = canonicalize(SpaceExpr::loop(SpaceExpr::wedge(spheres)));
                          if (factors[static_cast<std::size_t>(i)] != expected)
                              return false;
                      }
                      const TruncatedSeries s = factor_series(normal_form(decompose(ConfigSpec{base, k}), cap));
                      const bool monotone = !previous || coefficientwise_le(*previous, s);
                      previous = s;
                      return monotone;
                  });
    }
    return t.done();
}

std::vector<CheckReport> run_suite(Suite suite, std::uint64_t seed)
{
    std::vector<CheckReport> out;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Series) {
        out.push_back(check_series_laws(seed, 200, 30));
        out.push_back(check_james(25));
        out.push_back(check_loop_equivalence(seed, 50, 30));
        out.push_back(check_config(4, 20));
    }
    if (all || suite == Suite::HM) {
        out.push_back(check_lyndon_witt(6, 4, 20));
        out.push_back(check_lyndon_witt_random(seed, 100, 20));
        out.push_back(check_hilton_milnor_series(5, 6, 25));
    }
    if (all || suite == Suite::SS) {
        out.push_back(check_qhlgy(8, 25));
        out.push_back(check_p4(seed, 200, 25));
        out.push_back(check_form_independence(seed, 100, 8));
        out.push_back(check_two_route(4, 6, 25));
    }
    if (all || suite == Suite::Ranks) {
        out.push_back(check_rank_oracle(4, 5, 20));
        out.push_back(check_rank_tables());
    }
    return out;
}

} // namespace loopcalc
