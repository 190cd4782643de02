#include "json_io.hpp"

#include "loopcalc/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace loopcalc::io {

namespace {

void expect_keys(const json& j, const std::string& where, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {})
{
    require(j.is_object(), ErrorKind::Parse, where + ": expected an object");
    std::set<std::string> known;
    for (const char* k : required) {
        require(j.contains(k), ErrorKind::Parse, where + ": missing field '" + k + "'");
        known.insert(k);
    }
    for (const char* k : optional)
        known.insert(k);
    for (const auto& [k, v] : j.items())
        require(known.count(k) > 0, ErrorKind::Parse, where + ": unknown field '" + k + "'");
}

int small_int(const json& j, const std::string& where)
{
    require(j.is_number_integer(), ErrorKind::Parse, where + ": expected an integer");
    const auto v = j.get<long long>();
    require(v >= -1000000 && v <= 1000000, ErrorKind::Validation, where + ": integer out of range");
    return static_cast<int>(v);
}

int dim_key(const std::string& key, const std::string& where)
{
    std::size_t used = 0;
    int d = 0;
    try {
        d = std::stoi(key, &used);
    }
    catch (const std::exception&) {
        used = 0;
    }
    require(used == key.size() && !key.empty(), ErrorKind::Parse, where + ": key '" + key + "' is not an integer");
    return d;
}

json multiset_json(const DimMultiset& ms)
{
    json out = json::object();
    for (const auto& [d, m] : ms)
        out[std::to_string(d)] = big(m);
    return out;
}

FourManifoldSpec four_from_json(const json& j, const std::string& where)
{
    expect_keys(j, where, {"type", "k"}, {"intersection_form"});
    FourManifoldSpec f;
    f.k = small_int(j["k"], where + ".k");
    if (j.contains("intersection_form")) {
        const json& rows = j["intersection_form"];
        require(rows.is_array(), ErrorKind::Parse, where + ".intersection_form: expected an array of rows");
        std::vector<std::vector<BigInt>> entries;
        for (const auto& row : rows) {
            require(row.is_array(), ErrorKind::Parse, where + ".intersection_form: expected an array of rows");
            std::vector<BigInt> r;
            for (const auto& x : row)
                r.push_back(big_from(x, where + ".intersection_form"));
            entries.push_back(std::move(r));
        }
        f.form = IntersectionForm(std::move(entries));
    }
    return f;
}

ConnSumSpec conn_from_json(const json& j, const std::string& where)
{
    expect_keys(j, where, {"type", "m", "n", "punctured_skeleton"});
    return ConnSumSpec{small_int(j["m"], where + ".m"), small_int(j["n"], where + ".n"),
                       wedge_from_json(j["punctured_skeleton"], where + ".punctured_skeleton")};
}

std::string type_of(const json& j, const std::string& where)
{
    require(j.is_object() && j.contains("type") && j["type"].is_string(), ErrorKind::Parse,
            where + ": expected an object with a string 'type'");
    return j["type"].get<std::string>();
}

} // namespace

json big(const BigInt& v)
{
    if (fits_int64(v))
        return v.convert_to<std::int64_t>();
    return to_decimal(v);
}

BigInt big_from(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        require(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos, ErrorKind::Parse,
                where + ": '" + s + "' is not a decimal integer");
        return BigInt(s);
    }
    fail(ErrorKind::Parse, where + ": expected an integer");
}

json to_json(const TruncatedSeries& s)
{
    json out = json::array();
    for (const auto& c : s.coeffs())
        out.push_back(big(c));
    return out;
}

json to_json(const SphereWedge& w) { return multiset_json(w.dims()); }

json to_json(const FactorList& f)
{
    return json{{"circles", big(f.circles)},
                {"spheres", multiset_json(f.spheres)},
                {"loop_spheres", multiset_json(f.loop_spheres)},
                {"cap", f.cap},
                {"truncated", f.truncated}};
}

json to_json(const RankTable& t)
{
    return json{{"subject", t.subject == RankSubject::BaseSpace ? "base" : "loop"},
                {"cap", t.cap},
                {"ranks", multiset_json(t.ranks)},
                {"truncated", t.truncated}};
}

json to_json(const CheckReport& r)
{
    json out{{"check", r.check}, {"instances", r.instances}, {"failures", r.failures}, {"seed", r.seed}};
    if (r.counterexample)
        out["counterexample"] = *r.counterexample;
    return out;
}

json to_json(const ManifoldSpec& spec)
{
    struct Visitor {
        json operator()(const FourManifoldSpec& s) const
        {
            json out{{"type", "four_manifold"}, {"k", s.k}};
            if (s.form) {
                json rows = json::array();
                for (const auto& row : s.form->entries()) {
                    json r = json::array();
                    for (const auto& x : row)
                        r.push_back(big(x));
                    rows.push_back(r);
                }
                out["intersection_form"] = rows;
            }
            return out;
        }
        json operator()(const WallSpec& s) const { return {{"type", "wall"}, {"n", s.n}, {"k", s.k}}; }
        json operator()(const PDSpec& s) const
        {
            return {{"type", "pd_complex"}, {"m", s.m}, {"n", s.n}, {"J", to_json(s.J)}};
        }
        json operator()(const ConnSumSpec& s) const
        {
            return {{"type", "connected_sum"}, {"m", s.m}, {"n", s.n}, {"punctured_skeleton", to_json(s.punctured_skeleton)}};
        }
        json operator()(const BundleSpec& s) const
        {
            return {{"type", "bundle"}, {"base", (*this)(s.base)}, {"group_spheres", s.group_spheres}};
        }
        json operator()(const ConfigSpec& s) const
        {
            return {{"type", "config_space"}, {"base", (*this)(s.base)}, {"points", s.points}};
        }
    };
    return std::visit(Visitor{}, spec);
}

SphereWedge wedge_from_json(const json& j, const std::string& where)
{
    require(j.is_object(), ErrorKind::Parse, where + ": expected an object {\"dim\": multiplicity}");
    SphereWedge w;
    for (const auto& [k, v] : j.items()) {
        const int d = dim_key(k, where);
        const BigInt m = big_from(v, where + "." + k);
        require(m >= 0, ErrorKind::Validation, where + ": negative multiplicity");
        require(d >= 2, ErrorKind::Validation, where + ": sphere dimensions must be >= 2");
        w.add(d, m);
    }
    return w;
}

ManifoldSpec spec_from_json(const json& j)
{
    const std::string type = type_of(j, "spec");
    ManifoldSpec spec;
    if (type == "four_manifold") {
        spec = four_from_json(j, "four_manifold");
    }
    else if (type == "wall") {
        expect_keys(j, "wall", {"type", "n", "k"});
        spec = WallSpec{small_int(j["n"], "wall.n"), small_int(j["k"], "wall.k")};
    }
    else if (type == "pd_complex") {
        expect_keys(j, "pd_complex", {"type", "m", "n", "J"});
        spec = PDSpec{small_int(j["m"], "pd_complex.m"), small_int(j["n"], "pd_complex.n"),
                      wedge_from_json(j["J"], "pd_complex.J")};
    }
    else if (type == "connected_sum") {
        spec = conn_from_json(j, "connected_sum");
    }
    else if (type == "bundle") {
        expect_keys(j, "bundle", {"type", "base", "group_spheres"});
        require(type_of(j["base"], "bundle.base") == "four_manifold", ErrorKind::Validation,
                "bundle.base must be a four_manifold");
        BundleSpec b;
        b.base = four_from_json(j["base"], "bundle.base");
        require(j["group_spheres"].is_array(), ErrorKind::Parse, "bundle.group_spheres: expected an array");
        for (const auto& d : j["group_spheres"])
            b.group_spheres.push_back(small_int(d, "bundle.group_spheres"));
        spec = b;
    }
    else if (type == "config_space") {
        expect_keys(j, "config_space", {"type", "base", "points"});
        require(type_of(j["base"], "config_space.base") == "connected_sum", ErrorKind::Validation,
                "config_space.base must be a connected_sum");
        spec = ConfigSpec{conn_from_json(j["base"], "config_space.base"), small_int(j["points"], "config_space.points")};
    }
    else {
        fail(ErrorKind::Parse, "spec: unknown type '" + type + "'");
    }
    validate(spec);
    return spec;
}

json read_input(const std::string& arg)
{
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        require(static_cast<bool>(in), ErrorKind::Usage, "cannot read input file '" + arg.substr(1) + "'");
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

std::string render_factors(const FactorList& f)
{
    std::vector<std::string> parts;
    auto power = [](const std::string& base, const BigInt& m) {
        return m == 1 ? base : "(" + base + ")^" + to_decimal(m);
    };
    if (f.circles != 0)
        parts.push_back(power("S^1", f.circles));
    for (const auto& [d, m] : f.spheres)
        parts.push_back(power("S^" + std::to_string(d), m));
    for (const auto& [d, m] : f.loop_spheres)
        parts.push_back(power("ΩS^" + std::to_string(d), m));
    if (parts.empty())
        return "*";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " × " : "") + parts[i];
    return out;
}

} // namespace loopcalc::io
