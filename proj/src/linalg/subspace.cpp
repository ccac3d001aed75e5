#include "polyfun/linalg/subspace.hpp"

#include <algorithm>

namespace polyfun {

void canonicalize(SparseVector& v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        Scalar acc = v[i].second;
        while (j < v.size() && v[j].first == v[i].first)
            acc += v[j++].second;
        if (!acc.is_zero())
            v[out++] = {v[i].first, std::move(acc)};
        i = j;
    }
    v.resize(out);
}

SparseVector axpy(const SparseVector& v, const Scalar& c, const SparseVector& w)
{
    SparseVector out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, c * w[j].second);
            ++j;
        } else {
            Scalar s = v[i].second + c * w[j].second;
            if (!s.is_zero())
                out.emplace_back(v[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Subspace::Subspace(const Field& f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim), pivot_row_(ambient_dim, -1)
{
    if (!f.is_field())
        throw std::invalid_argument("subspaces need field coefficients");
}

SparseVector Subspace::reduce(SparseVector v) const
{
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(v.size()) - 1;
    while (pos >= 0) {
        std::uint32_t col = v[pos].first;
        if (col >= ambient_)
            throw std::out_of_range("vector entry outside ambient space");
        std::int32_t r = pivot_row_[col];
        if (r < 0) {
            --pos;
            continue;
        }
        Scalar c = -v[pos].second;
        v = axpy(v, c, rows_[r]);
        auto it = std::lower_bound(v.begin(), v.end(), col,
                                   [](const auto& e, std::uint32_t k) { return e.first < k; });
        pos = (it - v.begin()) - 1;
    }
    return v;
}

bool Subspace::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    Scalar inv = v.back().second.inverse();
    if (!inv.is_one())
        for (auto& e : v)
            e.second *= inv;
    pivot_row_[v.back().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool Subspace::contains_all(const Subspace& other) const
{
    for (const auto& r : other.rows_)
        if (!contains(r))
            return false;
    return true;
}

} // namespace polyfun
