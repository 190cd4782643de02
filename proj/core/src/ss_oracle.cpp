#include "loopcalc/ss_oracle.hpp"

#include "loopcalc/error.hpp"
#include "loopcalc/linalg.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace loopcalc {

std::size_t GradedModule::rank(int degree) const
{
    auto it = basis.find(degree);
    return it == basis.end() ? 0 : it->second.size();
}

TruncatedSeries GradedModule::series(int cap) const
{
    TruncatedSeries s(cap);
    for (const auto& [d, labels] : basis)
        if (d >= 0 && d <= cap)
            s[d] = static_cast<long long>(labels.size());
    return s;
}

namespace {

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

// Z<u,v>/(vu - eps uv) on the monomial basis u^i v^j, eps = (-1)^(|u||v|):
// the abelianization of the tensor algebra T(u,v).
struct LoopAlgebra {
    int du;
    int dv;
    int eps;

    LoopAlgebra(int du_, int dv_) : du(du_), dv(dv_), eps(sign_pow(static_cast<long long>(du_) * dv_)) {}

    struct Mono {
        int i;
        int j;
        auto operator<=>(const Mono&) const = default;
    };

    int degree(Mono g) const { return g.i * du + g.j * dv; }

    std::vector<Mono> monomials(int q) const
    {
        std::vector<Mono> out;
        if (q < 0)
            return out;
        for (int i = 0; i * du <= q; ++i)
            if ((q - i * du) % dv == 0)
                out.push_back({i, (q - i * du) / dv});
        return out;
    }

    // g * u = eps^j u^(i+1) v^j
    std::pair<int, Mono> times_u(Mono g) const { return {g.j % 2 == 0 ? 1 : eps, Mono{g.i + 1, g.j}}; }
    std::pair<int, Mono> times_v(Mono g) const { return {1, Mono{g.i, g.j + 1}}; }
};

std::string mono_label(LoopAlgebra::Mono g)
{
    std::ostringstream os;
    if (g.i == 0 && g.j == 0)
        return "1";
    if (g.i > 0)
        os << "u" << (g.i > 1 ? "^" + std::to_string(g.i) : "");
    if (g.j > 0)
        os << "v" << (g.j > 1 ? "^" + std::to_string(g.j) : "");
    return os.str();
}

// ---------------------------------------------------------------------------
// Homology Serre spectral sequence with E^2 = Z{base generators} (x) LoopAlgebra,
// differentials d^r: E_{p,q} -> E_{p-r, q+r-1} given on generators and extended
// by the left module action.

struct Term {
    int gen;
    LoopAlgebra::Mono mono;
    Rational coeff;
};

using GenRule = std::function<std::vector<Term>(LoopAlgebra::Mono)>;

class SerreSS {
public:
    SerreSS(LoopAlgebra ring, std::vector<int> gen_degrees, std::vector<std::string> gen_names, int max_total)
        : ring_(ring), degrees_(std::move(gen_degrees)), names_(std::move(gen_names)), max_total_(max_total)
    {
        std::set<int> columns(degrees_.begin(), degrees_.end());
        for (int p : columns)
            for (int q = 0; p + q <= max_total_; ++q) {
                Cell cell;
                for (int g = 0; g < static_cast<int>(degrees_.size()); ++g)
                    if (degrees_[static_cast<std::size_t>(g)] == p)
                        for (auto mono : ring_.monomials(q)) {
                            cell.index[{g, mono}] = cell.basis.size();
                            cell.basis.push_back({g, mono});
                        }
                if (cell.basis.empty())
                    continue;
                cell.Z = Subspace(cell.basis.size());
                for (std::size_t k = 0; k < cell.basis.size(); ++k)
                    cell.Z.insert(SVector{{k, 1}});
                cell.B = Subspace(cell.basis.size());
                cells_.emplace(std::pair{p, q}, std::move(cell));
            }
    }

    void set_rule(int page, int gen, GenRule rule) { rules_[page][gen] = std::move(rule); }

    // Generators whose page-r differential is accounted for without a rule.
    void set_coverage(std::function<bool(int page, int gen)> covered) { covered_ = std::move(covered); }

    void run(int last_page)
    {
        for (int r = 2; r <= last_page; ++r) {
            check_uncovered(r);
            if (rules_.count(r))
                turn_page(r);
        }
    }

    GradedModule e_infinity(int cap) const
    {
        GradedModule out;
        for (const auto& [pq, cell] : cells_) {
            const int total = pq.first + pq.second;
            if (total > cap)
                continue;
            Subspace quotient(cell.basis.size());
            for (const auto& z : cell.Z.basis())
                quotient.insert(cell.B.reduce(z));
            // Residues mod B have zeros on B's pivots, so their own pivots
            // name distinct basis elements.
            for (std::size_t piv : quotient.pivots()) {
                const auto& [g, mono] = cell.basis[piv];
                out.basis[total].push_back(names_[static_cast<std::size_t>(g)] + "⊗" + mono_label(mono));
            }
        }
        return out;
    }

private:
    struct Cell {
        std::vector<std::pair<int, LoopAlgebra::Mono>> basis;
        std::map<std::pair<int, LoopAlgebra::Mono>, std::size_t> index;
        Subspace Z;
        Subspace B;
    };

    using Key = std::pair<int, int>;

    std::size_t page_rank(const Cell& c) const { return c.Z.dim() - c.B.dim(); }

    const Cell* find(int p, int q) const
    {
        auto it = cells_.find({p, q});
        return it == cells_.end() ? nullptr : &it->second;
    }

    // d^r of one E^2 vector of cell (p, q), as a vector of the target cell.
    SVector apply(int r, int p, int q, const Cell& src, const SVector& v, const Cell& dst) const
    {
        SVector out;
        const auto& page_rules = rules_.at(r);
        for (const auto& [k, x] : v) {
            const auto& [g, mono] = src.basis[k];
            auto rule = page_rules.find(g);
            if (rule == page_rules.end())
                continue;
            for (const Term& t : rule->second(mono)) {
                auto it = dst.index.find({t.gen, t.mono});
                if (it == dst.index.end())
                    fail(ErrorKind::Oracle, "differential leaves E^2 at page " + std::to_string(r) + " from (" +
                                                std::to_string(p) + "," + std::to_string(q) + ")");
                axpy(out, x * t.coeff, SVector{{it->second, 1}});
            }
        }
        return out;
    }

    void turn_page(int r)
    {
        struct Update {
            Key src;
            Key dst;
            std::vector<SVector> new_z;
            std::vector<SVector> images;
        };
        std::vector<Update> updates;
        for (const auto& [pq, src] : cells_) {
            const auto [p, q] = pq;
            const Cell* dst = find(p - r, q + r - 1);
            std::vector<SVector> zs = src.Z.basis();
            if (!dst) {
                // No E^2 classes at the target, so every rule must vanish here.
                for (const auto& [g, mono] : src.basis) {
                    auto rule = rules_.at(r).find(g);
                    if (rule != rules_.at(r).end() && !rule->second(mono).empty())
                        fail(ErrorKind::Oracle, "differential into an empty cell at page " + std::to_string(r));
                }
                continue;
            }
            // Well-definedness on the subquotient E^r.
            for (const auto& b : src.B.basis())
                if (!dst->B.contains(apply(r, p, q, src, b, *dst)))
                    fail(ErrorKind::Oracle, "d^" + std::to_string(r) + " does not preserve boundaries at (" +
                                                std::to_string(p) + "," + std::to_string(q) + ")");
            Update u{pq, {p - r, q + r - 1}, {}, {}};
            std::vector<SVector> residues;
            for (const auto& z : zs) {
                SVector img = apply(r, p, q, src, z, *dst);
                if (!dst->Z.contains(img))
                    fail(ErrorKind::Oracle, "d^" + std::to_string(r) + " image is not a cycle at (" +
                                                std::to_string(p - r) + "," + std::to_string(q + r - 1) + ")");
                residues.push_back(dst->B.reduce(img));
                u.images.push_back(std::move(img));
            }
            for (const auto& x : left_kernel(residues, dst->basis.size())) {
                SVector z;
                for (const auto& [i, c] : x)
                    axpy(z, c, zs[i]);
                u.new_z.push_back(std::move(z));
            }
            updates.push_back(std::move(u));
        }
        for (auto& u : updates) {
            Cell& src = cells_.at(u.src);
            Subspace z(src.basis.size());
            for (const auto& v : u.new_z)
                z.insert(v);
            // Boundaries already inside Z stay; B_r is a subspace of Z_{r+1}.
            for (const auto& b : src.B.basis())
                z.insert(b);
            src.Z = std::move(z);
        }
        // d^r d^r = 0 on E^r: images must be cycles of the same page.
        for (auto& u : updates) {
            const Cell& dst = cells_.at(u.dst);
            for (const auto& img : u.images)
                if (!dst.Z.contains(img))
                    fail(ErrorKind::Oracle, "d^" + std::to_string(r) + " squares to a nonzero map at (" +
                                                std::to_string(u.dst.first) + "," + std::to_string(u.dst.second) +
                                                ")");
        }
        for (auto& u : updates) {
            Cell& dst = cells_.at(u.dst);
            for (const auto& img : u.images)
                dst.B.insert(img);
        }
    }

    void check_uncovered(int r)
    {
        for (const auto& [pq, src] : cells_) {
            const auto [p, q] = pq;
            // The top total degree only feeds boundaries into the one below.
            if (p + q >= max_total_)
                continue;
            const Cell* dst = find(p - r, q + r - 1);
            if (!dst || page_rank(src) == 0 || page_rank(*dst) == 0)
                continue;
            std::map<std::size_t, std::size_t> open; // basis index -> projected index
            for (std::size_t k = 0; k < src.basis.size(); ++k) {
                const int g = src.basis[k].first;
                const bool ruled = rules_.count(r) && rules_.at(r).count(g);
                if (!ruled && !(covered_ && covered_(r, g)))
                    open.emplace(k, open.size());
            }
            if (open.empty())
                continue;
            auto project = [&](const Subspace& s) {
                std::vector<SVector> rows;
                for (const auto& [pivot, v] : s.rows()) {
                    SVector w;
                    for (const auto& [k, x] : v)
                        if (auto it = open.find(k); it != open.end())
                            w.emplace(it->second, x);
                    rows.push_back(std::move(w));
                }
                return rank(rows, open.size());
            };
            if (project(src.Z) > project(src.B))
                fail(ErrorKind::Oracle, "possible d^" + std::to_string(r) + " from (" + std::to_string(p) + "," +
                                            std::to_string(q) + ") not accounted for");
        }
    }

    LoopAlgebra ring_;
    std::vector<int> degrees_;
    std::vector<std::string> names_;
    int max_total_;
    std::map<Key, Cell> cells_;
    std::map<int, std::map<int, GenRule>> rules_;
    std::function<bool(int, int)> covered_;
};

} // namespace

// ---------------------------------------------------------------------------

void SSInput::validate() const
{
    require(1 < m && m <= n - m, ErrorKind::Validation, "ss input: need 1 < m <= n - m");
    require(cap >= 0, ErrorKind::Validation, "ss input: cap must be >= 0");
    const int l = ell();
    require(l >= 2, ErrorKind::Validation, "ss input: need at least the generators a_1 and a_l");
    require(degrees.front() == m && degrees.back() == n - m, ErrorKind::Validation,
            "ss input: |a_1| must be m and |a_l| must be n - m");
    for (int i = 1; i < l; ++i)
        require(degrees[static_cast<std::size_t>(i - 1)] <= degrees[static_cast<std::size_t>(i)],
                ErrorKind::Validation, "ss input: degrees must be nondecreasing");
    require(static_cast<int>(c_col1.size()) == l && static_cast<int>(c_colell.size()) == l, ErrorKind::Validation,
            "ss input: coefficient columns must have length l");
    const auto L = static_cast<std::size_t>(l - 1);
    require(c_col1[L] == 1, ErrorKind::Validation, "ss input: c_l1 must be 1");
    require(c_colell[0] == sign_pow(static_cast<long long>(m) * (n - m)), ErrorKind::Validation,
            "ss input: c_1l must be (-1)^(m(n-m))");
    require(c_col1[0] == 0 && c_colell[L] == 0, ErrorKind::Validation, "ss input: c_11 and c_ll must vanish");
    for (int i = 0; i < l; ++i) {
        const int d = degrees[static_cast<std::size_t>(i)];
        if (d != n - m)
            require(c_col1[static_cast<std::size_t>(i)] == 0, ErrorKind::Validation,
                    "ss input: c_i1 must vanish unless |a_i| = n - m");
        if (d != m)
            require(c_colell[static_cast<std::size_t>(i)] == 0, ErrorKind::Validation,
                    "ss input: c_il must vanish unless |a_i| = m");
    }
}

SSInput ss_input_for(const PDSpec& p, const std::vector<BigInt>& middle_col1,
                     const std::vector<BigInt>& middle_colell, int cap)
{
    p.validate();
    SSInput in;
    in.m = p.m;
    in.n = p.n;
    in.cap = cap;
    in.degrees.push_back(p.m);
    for (const auto& [d, mult] : p.J.dims())
        for (BigInt i = 0; i < mult; ++i)
            in.degrees.push_back(d);
    in.degrees.push_back(p.n - p.m);
    const std::size_t middle = in.degrees.size() - 2;
    require(middle_col1.size() == middle && middle_colell.size() == middle, ErrorKind::Usage,
            "ss_input_for: one coefficient per J summand expected");
    in.c_col1.push_back(0);
    in.c_colell.push_back(sign_pow(static_cast<long long>(p.m) * (p.n - p.m)));
    for (std::size_t i = 0; i < middle; ++i) {
        in.c_col1.push_back(middle_col1[i]);
        in.c_colell.push_back(middle_colell[i]);
    }
    in.c_col1.push_back(1);
    in.c_colell.push_back(0);
    return in;
}

TruncatedSeries qhlgy_series_check(int m, int n, int cap)
{
    require(1 < m && m <= n - m, ErrorKind::Validation, "qhlgy: need 1 < m <= n - m");
    require(cap >= 0, ErrorKind::Validation, "qhlgy: cap must be >= 0");
    const int du = m - 1;
    const int dv = n - m - 1;

    // E^2 = Z{1, x, y, e} (x) H_*(OmegaQ) must converge to H_*(point). With x, y
    // transgressing to u, v and e hitting x (x) v -+ y (x) u, every strand
    //   e (x) H_{K-du-dv} -> x (x) H_{K-du} + y (x) H_{K-dv} -> 1 (x) H_K
    // is exact for K > 0, which pins down the ranks degree by degree.
    std::vector<long long> r(static_cast<std::size_t>(cap) + 1, 0);
    auto at = [&](int k) { return k < 0 ? 0LL : r[static_cast<std::size_t>(k)]; };
    r[0] = 1;
    for (int k = 1; k <= cap; ++k)
        r[static_cast<std::size_t>(k)] = at(k - du) + at(k - dv) - at(k - du - dv);

    // Replay: the total complex on the monomial basis must be acyclic above 0.
    LoopAlgebra ring(du, dv);
    const int eps = ring.eps;
    const int base[4] = {0, m, n - m, n}; // 1, x, y, e
    auto chains = [&](int total) {
        std::vector<std::pair<int, LoopAlgebra::Mono>> basis;
        for (int b = 0; b < 4; ++b)
            for (auto g : ring.monomials(total - base[b]))
                basis.push_back({b, g});
        return basis;
    };
    auto boundary = [&](int total) {
        auto src = chains(total);
        auto dst = chains(total - 1);
        std::map<std::pair<int, LoopAlgebra::Mono>, std::size_t> index;
        for (std::size_t k = 0; k < dst.size(); ++k)
            index[dst[k]] = k;
        std::vector<SVector> rows;
        for (const auto& [b, g] : src) {
            SVector row;
            auto put = [&](int gen, std::pair<int, LoopAlgebra::Mono> term, int sign) {
                auto it = index.find({gen, term.second});
                require(it != index.end(), ErrorKind::Oracle, "qhlgy: boundary leaves the complex");
                axpy(row, sign * term.first, SVector{{it->second, 1}});
            };
            if (b == 1)
                put(0, ring.times_u(g), 1);
            else if (b == 2)
                put(0, ring.times_v(g), 1);
            else if (b == 3) {
                put(1, ring.times_v(g), 1);
                put(2, ring.times_u(g), -eps);
            }
            rows.push_back(std::move(row));
        }
        return std::pair{rows, dst.size()};
    };
    for (int total = 0; total <= cap; ++total) {
        const std::size_t dim = chains(total).size();
        std::size_t rank_out = 0;
        auto [rows_in, cols_in] = boundary(total + 1);
        if (total > 0) {
            auto [rows, cols] = boundary(total);
            rank_out = rank(rows, cols);
            for (const auto& r : rows_in) {
                SVector dd;
                for (const auto& [j, x] : r)
                    axpy(dd, x, rows[j]);
                require(dd.empty(), ErrorKind::Oracle, "qhlgy: D^2 != 0 in degree " + std::to_string(total + 1));
            }
        }
        const std::size_t rank_in = rank(rows_in, cols_in);
        const std::size_t homology = dim - rank_out - rank_in;
        if (homology != (total == 0 ? 1u : 0u))
            fail(ErrorKind::Oracle, "qhlgy: path-loop complex not acyclic in degree " + std::to_string(total));
        // The monomial basis must realize the derived ranks.
        require(static_cast<long long>(ring.monomials(total).size()) == r[static_cast<std::size_t>(total)],
                ErrorKind::Oracle, "qhlgy: derived rank differs from monomial count in degree " + std::to_string(total));
    }

    TruncatedSeries s(cap);
    for (int k = 0; k <= cap; ++k)
        s[k] = r[static_cast<std::size_t>(k)];
    return s;
}

GradedModule p4_e_infinity(const SSInput& input)
{
    input.validate();
    const int m = input.m;
    const int n = input.n;
    const int l = input.ell();
    const bool case2 = (m == n - m);
    LoopAlgebra ring(m - 1, n - m - 1);

    // Generators: 0 = unit, 1..l = a_1..a_l, l+1 = z.
    std::vector<int> degrees{0};
    std::vector<std::string> names{"1"};
    for (int i = 0; i < l; ++i) {
        degrees.push_back(input.degrees[static_cast<std::size_t>(i)]);
        names.push_back("a" + std::to_string(i + 1));
    }
    degrees.push_back(n);
    names.push_back("z");
    const int a1 = 1;
    const int al = l;
    const int z = l + 1;

    SerreSS ss(ring, degrees, names, input.cap + 2);

    auto a_rule = [&](bool by_u) {
        return [&ring, by_u](LoopAlgebra::Mono g) {
            auto [sign, mono] = by_u ? ring.times_u(g) : ring.times_v(g);
            return std::vector<Term>{{0, mono, Rational(sign)}};
        };
    };
    ss.set_rule(m, a1, a_rule(true));
    ss.set_rule(n - m, al, a_rule(false));

    // d^m(z (x) g) = sum_i (-1)^|a_i| (c_i1 a_i (x) gu [+ c_il a_i (x) gv in Case 2]).
    ss.set_rule(m, z, [&input, &ring, l, case2, n, m](LoopAlgebra::Mono g) {
        std::vector<Term> out;
        auto [su, gu] = ring.times_u(g);
        auto [sv, gv] = ring.times_v(g);
        for (int i = 0; i < l; ++i) {
            const int d = input.degrees[static_cast<std::size_t>(i)];
            const int sgn = sign_pow(d);
            const BigInt& c1 = input.c_col1[static_cast<std::size_t>(i)];
            if (d == n - m && c1 != 0)
                out.push_back({i + 1, gu, Rational(c1 * sgn * su)});
            const BigInt& cl = input.c_colell[static_cast<std::size_t>(i)];
            if (case2 && cl != 0)
                out.push_back({i + 1, gv, Rational(cl * sgn * sv)});
        }
        return out;
    });

    // Accounted for without a rule: the middle generators survive (they lift
    // to F), and a_1, a_l are transgressive, so they carry no shorter
    // differential than their transgression.
    ss.set_coverage([=](int page, int gen) {
        if (gen == 0)
            return true;
        if (gen > a1 && gen < al)
            return true;
        if (gen == a1)
            return page < m;
        if (gen == al)
            return page < n - m;
        return false;
    });
    ss.run(n);
    return ss.e_infinity(input.cap);
}

TruncatedSeries p4_prediction(const SSInput& input)
{
    input.validate();
    const int cap = input.cap;
    TruncatedSeries middle(cap);
    for (int i = 1; i + 1 < input.ell(); ++i) {
        const int d = input.degrees[static_cast<std::size_t>(i)];
        if (d <= cap)
            middle[d] += 1;
    }
    return add(TruncatedSeries::one(cap), mul(middle, polynomial_two_var_series(input.m - 1, input.n - input.m - 1, cap)));
}

namespace {

// g = s*a + t*b
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t)
{
    if (b == 0) {
        s = 1;
        t = 0;
        return a;
    }
    BigInt s1;
    BigInt t1;
    const BigInt g = ext_gcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

} // namespace

std::vector<BigInt> lpd_normalize(const IntersectionForm& c)
{
    const int k = c.rank();
    require(k >= 1, ErrorKind::Validation, "lpd_normalize: empty form");
    const int last = k - 1;
    // Invariant: g = <row[0..i], w[0..i]>.
    std::vector<BigInt> w(static_cast<std::size_t>(k));
    BigInt g = c(last, 0);
    w[0] = 1;
    for (int i = 1; i < k; ++i) {
        BigInt s;
        BigInt t;
        g = ext_gcd(g, c(last, i), s, t);
        for (int j = 0; j < i; ++j)
            w[static_cast<std::size_t>(j)] *= s;
        w[static_cast<std::size_t>(i)] = t;
    }
    if (g == -1) {
        for (auto& x : w)
            x = -x;
        g = 1;
    }
    require(g == 1, ErrorKind::Validation, "lpd_normalize: last row is not unimodular");
    BigInt check = 0;
    for (int j = 0; j < k; ++j)
        check += c(last, j) * w[static_cast<std::size_t>(j)];
    require(check == 1, ErrorKind::Oracle, "lpd_normalize: witness does not pair to 1");
    return w;
}

ZConstruction z_construct(const IntersectionForm& c, int cap)
{
    require(cap >= 0, ErrorKind::Validation, "z_construct: cap must be >= 0");
    const int k = c.rank();
    if (k == 0)
        fail(ErrorKind::OutOfScope, "z_construct: k = 0 means M is a homotopy 4-sphere; no circle bundle to build");

    ZConstruction out;
    out.witness = lpd_normalize(c);
    const auto K = static_cast<std::size_t>(k);
    const int last = k - 1;

    // E_2 = H^*(M) (x) H^*(S^1); d_2(a) = x_k, d_2(a (x) x_j) = c_kj z.
    // Degree 1 -> 2: the 1 x k matrix e_k. Degree 3 -> 4: the k x 1 column row_k.
    std::vector<RVector> d_a{RVector(K)};
    d_a[0][K - 1] = 1;
    std::vector<RVector> d_ax;
    for (int j = 0; j < k; ++j)
        d_ax.push_back(RVector{Rational(c(last, j))});
    const std::size_t rank_a = rank(d_a, K);
    const std::size_t rank_ax = rank(d_ax, 1);

    out.ranks[0] = 1;
    out.ranks[1] = static_cast<int>(1 - rank_a);
    out.ranks[2] = static_cast<int>(K - rank_a);
    out.ranks[3] = static_cast<int>(K - rank_ax);
    out.ranks[4] = static_cast<int>(1 - rank_ax);
    out.ranks[5] = 1;

    // Explicit basis of ker d_2 in degree 3: a (x) (x_j - c_kj y), where
    // y = sum w_i x_i pairs with x_k to z. It must span a rank k-1 kernel.
    std::vector<RVector> kernel;
    for (int j = 0; j < k; ++j) {
        RVector v(K);
        v[static_cast<std::size_t>(j)] += 1;
        for (int i = 0; i < k; ++i)
            v[static_cast<std::size_t>(i)] -= Rational(c(last, j) * out.witness[static_cast<std::size_t>(i)]);
        Rational pairing = 0;
        for (int i = 0; i < k; ++i)
            pairing += v[static_cast<std::size_t>(i)] * Rational(c(last, i));
        require(pairing == 0, ErrorKind::Oracle, "z_construct: kernel vector does not pair to zero");
        kernel.push_back(std::move(v));
    }
    require(rank(kernel, K) == K - rank_ax, ErrorKind::Oracle, "z_construct: explicit kernel basis has wrong rank");

    // Torsion-free: the degree-2 image is a basis vector and the degree-4 image
    // is generated by gcd(row_k) = 1 (the witness pairs it to 1).
    const std::map<int, int> expected{{0, 1}, {1, 0}, {2, k - 1}, {3, k - 1}, {4, 0}, {5, 1}};
    require(out.ranks == expected, ErrorKind::Oracle, "z_construct: E_3 ranks differ from (1, k-1, k-1, 0, 1)");

    if (k == 1) {
        out.is_s5 = true;
    }
    else {
        out.pd = PDSpec{2, 5, SphereWedge{{2, k - 2}, {3, k - 2}}};
    }
    return out;
}

} // namespace loopcalc
