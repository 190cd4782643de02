#include "loopcalc/expr.hpp"

#include "loopcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace loopcalc {

SpaceExpr SpaceExpr::make(ExprKind kind, int dim, std::vector<SpaceExpr> children)
{
    return SpaceExpr(std::make_shared<const Node>(Node{kind, dim, std::move(children)}));
}

SpaceExpr SpaceExpr::point()
{
    static const SpaceExpr pt = make(ExprKind::Point, 0, {});
    return pt;
}

SpaceExpr SpaceExpr::sphere(int dim)
{
    require(dim >= 1, ErrorKind::Domain, "sphere dimension must be >= 1, got " + std::to_string(dim));
    return make(ExprKind::Sphere, dim, {});
}

SpaceExpr SpaceExpr::loop(SpaceExpr child) { return make(ExprKind::Loop, 0, {std::move(child)}); }

SpaceExpr SpaceExpr::suspension(SpaceExpr child) { return make(ExprKind::Suspension, 0, {std::move(child)}); }

SpaceExpr SpaceExpr::wedge(std::vector<SpaceExpr> children) { return make(ExprKind::Wedge, 0, std::move(children)); }

SpaceExpr SpaceExpr::product(std::vector<SpaceExpr> children)
{
    return make(ExprKind::Product, 0, std::move(children));
}

SpaceExpr SpaceExpr::smash(std::vector<SpaceExpr> children)
{
    require(!children.empty(), ErrorKind::Domain, "smash of an empty list is undefined");
    return make(ExprKind::Smash, 0, std::move(children));
}

const SpaceExpr& SpaceExpr::child() const
{
    require(kind() == ExprKind::Loop || kind() == ExprKind::Suspension, ErrorKind::Usage,
            "child() on a non-unary expression");
    return node_->children.front();
}

std::strong_ordering operator<=>(const SpaceExpr& a, const SpaceExpr& b)
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    if (auto c = a.dim() <=> b.dim(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.children().begin(), a.children().end(), b.children().begin(),
                                                  b.children().end());
}

namespace {

// Canonical children of an n-ary node: flattened, Points removed, sorted.
std::vector<SpaceExpr> canonical_children(const SpaceExpr& e)
{
    std::vector<SpaceExpr> out;
    for (const auto& c : e.children()) {
        SpaceExpr cc = canonicalize(c);
        if (cc.kind() == e.kind())
            out.insert(out.end(), cc.children().begin(), cc.children().end());
        else if (!cc.is_point())
            out.push_back(std::move(cc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SpaceExpr canonicalize(const SpaceExpr& e)
{
    switch (e.kind()) {
    case ExprKind::Point:
    case ExprKind::Sphere:
        return e;
    case ExprKind::Loop:
    case ExprKind::Suspension: {
        SpaceExpr c = canonicalize(e.child());
        if (c.is_point())
            return c;
        return e.kind() == ExprKind::Loop ? SpaceExpr::loop(std::move(c)) : SpaceExpr::suspension(std::move(c));
    }
    case ExprKind::Smash:
        for (const auto& c : e.children())
            if (canonicalize(c).is_point())
                return SpaceExpr::point();
        [[fallthrough]];
    case ExprKind::Wedge:
    case ExprKind::Product: {
        auto children = canonical_children(e);
        if (children.empty())
            return SpaceExpr::point();
        if (children.size() == 1)
            return children.front();
        switch (e.kind()) {
        case ExprKind::Wedge: return SpaceExpr::wedge(std::move(children));
        case ExprKind::Product: return SpaceExpr::product(std::move(children));
        default: return SpaceExpr::smash(std::move(children));
        }
    }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Glyphs {
    const char* loop;
    const char* susp;
    const char* wedge;
    const char* product;
    const char* smash;
};

constexpr Glyphs kUnicode{"Ω", "Σ", " ∨ ", " × ", " ∧ "};
constexpr Glyphs kAscii{"O", "S", " v ", " x ", " ^ "};

bool is_nary(const SpaceExpr& e)
{
    return e.kind() == ExprKind::Wedge || e.kind() == ExprKind::Product || e.kind() == ExprKind::Smash;
}

void render_to(std::string& out, const SpaceExpr& e, const Glyphs& g)
{
    switch (e.kind()) {
    case ExprKind::Point: out += "*"; return;
    case ExprKind::Sphere: out += "S^" + std::to_string(e.dim()); return;
    case ExprKind::Loop:
    case ExprKind::Suspension: {
        out += e.kind() == ExprKind::Loop ? g.loop : g.susp;
        const bool paren = is_nary(e.child());
        if (paren)
            out += '(';
        render_to(out, e.child(), g);
        if (paren)
            out += ')';
        return;
    }
    case ExprKind::Wedge:
    case ExprKind::Product:
    case ExprKind::Smash: {
        const char* sep = e.kind() == ExprKind::Wedge ? g.wedge : e.kind() == ExprKind::Product ? g.product : g.smash;
        if (e.children().empty()) {
            // Only reachable for non-canonical empty wedge/product.
            out += e.kind() == ExprKind::Wedge ? "(*)" : "(*)";
            return;
        }
        bool first = true;
        for (const auto& c : e.children()) {
            if (!first)
                out += sep;
            first = false;
            const bool paren = is_nary(c);
            if (paren)
                out += '(';
            render_to(out, c, g);
            if (paren)
                out += ')';
        }
        return;
    }
    }
}

} // namespace

std::string render(const SpaceExpr& e, RenderStyle style)
{
    std::string out;
    render_to(out, e, style == RenderStyle::Unicode ? kUnicode : kAscii);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SpaceExpr parse()
    {
        SpaceExpr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            error("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) const
    {
        fail(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(std::string_view tok)
    {
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    bool sphere_ahead() const { return text_.substr(pos_, 2) == "S^"; }

    // Returns the binary operator at the cursor, if any, and consumes it.
    std::optional<ExprKind> binop()
    {
        skip_ws();
        if (eat("∨") || eat("v"))
            return ExprKind::Wedge;
        if (eat("×") || eat("x"))
            return ExprKind::Product;
        if (eat("∧"))
            return ExprKind::Smash;
        if (!sphere_ahead() && eat("^"))
            return ExprKind::Smash;
        return std::nullopt;
    }

    SpaceExpr expr()
    {
        std::vector<SpaceExpr> items{unary()};
        std::optional<ExprKind> op;
        while (true) {
            const std::size_t save = pos_;
            auto next = binop();
            if (!next) {
                pos_ = save;
                break;
            }
            if (op && *op != *next)
                error("mixed binary operators need parentheses");
            op = next;
            items.push_back(unary());
        }
        if (!op)
            return items.front();
        switch (*op) {
        case ExprKind::Wedge: return SpaceExpr::wedge(std::move(items));
        case ExprKind::Product: return SpaceExpr::product(std::move(items));
        default: return SpaceExpr::smash(std::move(items));
        }
    }

    SpaceExpr unary()
    {
        skip_ws();
        if (eat("Ω") || eat("O"))
            return SpaceExpr::loop(unary());
        if (eat("Σ"))
            return SpaceExpr::suspension(unary());
        if (!sphere_ahead() && eat("S"))
            return SpaceExpr::suspension(unary());
        return atom();
    }

    SpaceExpr atom()
    {
        skip_ws();
        if (eat("*"))
            return SpaceExpr::point();
        if (eat("S^")) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                error("expected sphere dimension");
            const int dim = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (dim < 1)
                error("sphere dimension must be >= 1");
            return SpaceExpr::sphere(dim);
        }
        if (eat("(")) {
            SpaceExpr e = expr();
            skip_ws();
            if (!eat(")"))
                error("expected ')'");
            return e;
        }
        error("expected an expression");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SpaceExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// SphereWedge

SphereWedge::SphereWedge(DimMultiset dims)
{
    for (auto& [d, m] : dims)
        add(d, m);
}

SphereWedge::SphereWedge(std::initializer_list<std::pair<const int, BigInt>> dims)
{
    for (const auto& [d, m] : dims)
        add(d, m);
}

BigInt SphereWedge::size() const
{
    BigInt n = 0;
    for (const auto& [d, m] : dims_)
        n += m;
    return n;
}

BigInt SphereWedge::multiplicity(int dim) const
{
    auto it = dims_.find(dim);
    return it == dims_.end() ? BigInt(0) : it->second;
}

void SphereWedge::add(int dim, const BigInt& count)
{
    require(dim >= 2, ErrorKind::Domain, "sphere wedge summands must have dimension >= 2, got " + std::to_string(dim));
    require(count >= 0, ErrorKind::Domain, "negative sphere multiplicity");
    accumulate(dims_, dim, count);
}

SphereWedge& SphereWedge::operator+=(const SphereWedge& other)
{
    for (const auto& [d, m] : other.dims_)
        accumulate(dims_, d, m);
    return *this;
}

SphereWedge SphereWedge::truncated(int max_dim) const
{
    SphereWedge w;
    for (const auto& [d, m] : dims_)
        if (d <= max_dim)
            w.dims_.emplace(d, m);
    return w;
}

SpaceExpr SphereWedge::to_expr() const
{
    constexpr long kMaxSpelled = 100000;
    require(size() <= kMaxSpelled, ErrorKind::Usage, "sphere wedge too large to spell out as an expression");
    std::vector<SpaceExpr> spheres;
    for (const auto& [d, m] : dims_)
        for (long i = 0; i < m.convert_to<long>(); ++i)
            spheres.push_back(SpaceExpr::sphere(d));
    return canonicalize(SpaceExpr::wedge(std::move(spheres)));
}

TruncatedSeries reduced_homology_series(const SphereWedge& w, int cap)
{
    require(cap >= 0, ErrorKind::Usage, "cap must be >= 0");
    TruncatedSeries s(cap);
    for (const auto& [d, m] : w.dims())
        if (d <= cap)
            s[d] = m;
    return s;
}

} // namespace loopcalc
