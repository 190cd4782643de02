#include "loopcalc/linalg.hpp"

#include "loopcalc/error.hpp"

namespace loopcalc {

void axpy(SVector& v, const Rational& f, const SVector& w)
{
    if (f == 0)
        return;
    auto hint = v.begin();
    for (const auto& [i, x] : w) {
        hint = v.lower_bound(i);
        if (hint != v.end() && hint->first == i) {
            hint->second += f * x;
            if (hint->second == 0)
                hint = v.erase(hint);
        }
        else {
            hint = v.emplace_hint(hint, i, f * x);
        }
    }
}

SVector sparse(const RVector& v)
{
    SVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.emplace_hint(out.end(), i, v[i]);
    return out;
}

RVector dense(const SVector& v, std::size_t n)
{
    RVector out(n);
    for (const auto& [i, x] : v)
        out.at(i) = x;
    return out;
}

SVector Subspace::reduce(SVector v) const
{
    require(v.empty() || v.rbegin()->first < ambient_, ErrorKind::Usage, "vector index outside the ambient space");
    // Rows only touch indices >= their pivot, so one left-to-right sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const std::size_t at = it->first;
        const Rational f = it->second;
        axpy(v, -f, row->second);
        it = v.upper_bound(at);
    }
    return v;
}

bool Subspace::insert(const SVector& v)
{
    SVector r = reduce(v);
    if (r.empty())
        return false;
    const std::size_t pivot = r.begin()->first;
    const Rational lead = r.begin()->second;
    if (lead != 1)
        for (auto& [i, x] : r)
            x /= lead;
    // Keep the echelon reduced: clear the new pivot from older rows.
    for (auto& [p, row] : rows_) {
        if (p > pivot)
            break;
        auto hit = row.find(pivot);
        if (hit != row.end()) {
            const Rational f = hit->second;
            axpy(row, -f, r);
        }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<SVector> Subspace::basis() const
{
    std::vector<SVector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_)
        out.push_back(row);
    return out;
}

std::vector<std::size_t> Subspace::pivots() const
{
    std::vector<std::size_t> out;
    for (const auto& [pivot, row] : rows_)
        out.push_back(pivot);
    return out;
}

std::vector<SVector> left_kernel(const std::vector<SVector>& images, std::size_t target_dim)
{
    // Rows (image | e_i); after elimination the rows whose pivot lies in the
    // identity block have zero image part, and there are n - rank of them.
    const std::size_t n = images.size();
    Subspace s(target_dim + n);
    for (std::size_t i = 0; i < n; ++i) {
        require(images[i].empty() || images[i].rbegin()->first < target_dim, ErrorKind::Usage,
                "left_kernel: image outside the target");
        SVector row = images[i];
        row.emplace(target_dim + i, 1);
        s.insert(row);
    }
    std::vector<SVector> kernel;
    for (const auto& [pivot, row] : s.rows()) {
        if (pivot < target_dim)
            continue;
        SVector x;
        for (const auto& [i, v] : row)
            x.emplace_hint(x.end(), i - target_dim, v);
        kernel.push_back(std::move(x));
    }
    return kernel;
}

std::size_t rank(const std::vector<SVector>& rows, std::size_t cols)
{
    Subspace s(cols);
    for (const auto& r : rows)
        s.insert(r);
    return s.dim();
}

std::size_t rank(const std::vector<RVector>& rows, std::size_t cols)
{
    Subspace s(cols);
    for (const auto& r : rows) {
        require(r.size() == cols, ErrorKind::Usage, "rank: ragged input");
        s.insert(sparse(r));
    }
    return s.dim();
}

} // namespace loopcalc
