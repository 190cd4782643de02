#include "loopcalc/manifold.hpp"

#include "loopcalc/error.hpp"

namespace loopcalc {

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntersectionForm::IntersectionForm(std::vector<std::vector<BigInt>> entries) : entries_(std::move(entries))
{
    const std::size_t k = entries_.size();
    for (const auto& row : entries_)
        require(row.size() == k, ErrorKind::Validation, "intersection form must be square");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            require(entries_[i][j] == entries_[j][i], ErrorKind::Validation, "intersection form must be symmetric");
    if (k > 0) {
        const BigInt det = determinant(entries_);
        require(det == 1 || det == -1, ErrorKind::Validation,
                "intersection form must be unimodular (determinant " + det.str() + ")");
    }
}

IntersectionForm::IntersectionForm(std::initializer_list<std::initializer_list<long long>> entries)
    : IntersectionForm([&] {
          std::vector<std::vector<BigInt>> rows;
          for (const auto& r : entries)
              rows.emplace_back(r.begin(), r.end());
          return rows;
      }())
{
}

namespace {

void validate_pair(int m, int n, const char* what)
{
    require(1 < m && m <= n - m, ErrorKind::Validation,
            std::string(what) + ": need 1 < m <= n - m, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
}

void validate_skeleton(const SphereWedge& w, int lo, int hi, const char* what)
{
    for (const auto& [d, mult] : w.dims())
        require(lo <= d && d <= hi, ErrorKind::Validation,
                std::string(what) + ": dimension " + std::to_string(d) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
}

} // namespace

void PDSpec::validate() const
{
    validate_pair(m, n, "pd_complex");
    validate_skeleton(J, m, n - m, "pd_complex J");
}

void FourManifoldSpec::validate() const
{
    require(k >= 0, ErrorKind::Validation, "four_manifold: k must be >= 0");
    if (form)
        require(form->rank() == k, ErrorKind::Validation,
                "four_manifold: intersection form has rank " + std::to_string(form->rank()) + " but k=" +
                    std::to_string(k));
}

void WallSpec::validate() const
{
    require(n >= 2, ErrorKind::Validation, "wall: n must be >= 2");
    if (n == 2 || n == 4 || n == 8)
        fail(ErrorKind::ExcludedCase, "excluded case n ∈ {2,4,8} (n=" + std::to_string(n) + ")");
    require(k >= 0, ErrorKind::Validation, "wall: k must be >= 0");
    if (k < 2)
        fail(ErrorKind::OutOfScope, "wall: only k >= 2 is covered (k=" + std::to_string(k) + ")");
}

void ConnSumSpec::validate() const
{
    validate_pair(m, n, "connected_sum");
    validate_skeleton(punctured_skeleton, m, n - m, "connected_sum punctured_skeleton");
}

void BundleSpec::validate() const
{
    base.validate();
    if (base.k < 2)
        fail(ErrorKind::HypothesisNotMet, "bundle: needs dim H^2(M) >= 2 (k=" + std::to_string(base.k) + ")");
    require(!group_spheres.empty(), ErrorKind::Validation, "bundle: group_spheres must be nonempty");
    for (int d : group_spheres)
        require(d >= 3 && d % 2 == 1, ErrorKind::Validation,
                "bundle: group spheres must be odd and >= 3, got " + std::to_string(d));
}

void ConfigSpec::validate() const
{
    base.validate();
    if (base.n % 2 == 0)
        fail(ErrorKind::HypothesisNotMet, "config_space: n must be odd (n=" + std::to_string(base.n) + ")");
    require(points >= 1, ErrorKind::Validation, "config_space: points must be >= 1");
}

const char* type_name(const ManifoldSpec& spec)
{
    struct Visitor {
        const char* operator()(const FourManifoldSpec&) const { return "four_manifold"; }
        const char* operator()(const WallSpec&) const { return "wall"; }
        const char* operator()(const PDSpec&) const { return "pd_complex"; }
        const char* operator()(const ConnSumSpec&) const { return "connected_sum"; }
        const char* operator()(const BundleSpec&) const { return "bundle"; }
        const char* operator()(const ConfigSpec&) const { return "config_space"; }
    };
    return std::visit(Visitor{}, spec);
}

void validate(const ManifoldSpec& spec)
{
    std::visit([](const auto& s) { s.validate(); }, spec);
}

} // namespace loopcalc
