#include "polyfun/gradeds/ranks.hpp"

#include <stdexcept>

#include "polyfun/freegroup/word.hpp"

namespace polyfun::gradeds {

BigInt GradedRanks::at(int degree) const
{
    if (degree < 1 || degree > cap())
        return 0;
    return ranks[degree - 1];
}

std::string GradedRanks::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < ranks.size(); ++i)
        s += (i ? "," : "") + ranks[i].get_str();
    return s + "]";
}

GradedRanks free_nilpotent_lie_ranks(int n, int c)
{
    if (n < 1 || c < 1 || c == kInfinity)
        throw std::invalid_argument("free_nilpotent_lie_ranks needs n >= 1 and finite c >= 1");
    GradedRanks r;
    for (int i = 1; i <= c; ++i)
        r.ranks.push_back(freegroup::witt_rank(n, i));
    return r;
}

GradedRanks product_scale(const GradedRanks& r, long m)
{
    if (m < 1)
        throw std::invalid_argument("product_scale needs m >= 1");
    GradedRanks out = r;
    for (auto& x : out.ranks)
        x *= m;
    return out;
}

GradedRanks truncate(const GradedRanks& r, int c)
{
    GradedRanks out = r;
    if (c < out.cap())
        out.ranks.resize(std::max(c, 0));
    return out;
}

IntSeries symmetric_power_dims(const GradedRanks& r, int D)
{
    std::vector<std::pair<int, BigInt>> factors;
    for (int i = 1; i <= r.cap(); ++i)
        factors.emplace_back(i, r.at(i));
    return series_expand(factors, D);
}

IntSeries q_ranks_nilpotent(int n, int m, int c, int D)
{
    if (n < 1 || m < 1 || c < 1 || D < 0)
        throw std::invalid_argument("q_ranks_nilpotent: bad parameters");
    int cc = std::min(c, std::max(D, 1));
    return symmetric_power_dims(product_scale(free_nilpotent_lie_ranks(n, cc), m), D);
}

GradedRanks free_restricted_lie_dims(int n, std::uint32_t p, int D)
{
    if (!is_prime(p) || n < 1 || D < 0)
        throw std::invalid_argument("free_restricted_lie_dims: bad parameters");
    GradedRanks r;
    r.ranks.assign(D, 0);
    for (int i = 1; i <= D; ++i) {
        BigInt w = freegroup::witt_rank(n, i);
        for (long d = i; d <= D; d *= p)
            r.ranks[d - 1] += w;
    }
    return r;
}

IntSeries restricted_pbw_dims(const GradedRanks& r, std::uint32_t p, int D)
{
    if (p == 0)
        return symmetric_power_dims(r, D);
    if (!is_prime(p))
        throw std::invalid_argument("restricted_pbw_dims needs p prime or 0");
    std::vector<std::pair<int, BigInt>> factors;
    for (int i = 1; i <= r.cap(); ++i) {
        BigInt e = r.at(i);
        if (sgn(e) == 0)
            continue;
        factors.emplace_back(i, e);
        if ((long)i * p <= D)
            factors.emplace_back(static_cast<int>(i * p), -e);
    }
    return series_expand(factors, D);
}

IntSeries q_ranks_dimension(int n, int m, int c, std::uint32_t p, int D)
{
    if (p == 0)
        return q_ranks_nilpotent(n, m, c, D);
    if (n < 1 || m < 1 || c < 1 || D < 0)
        throw std::invalid_argument("q_ranks_dimension: bad parameters");
    GradedRanks lie = truncate(free_restricted_lie_dims(n, p, D), c);
    return restricted_pbw_dims(product_scale(lie, m), p, D);
}

} // namespace polyfun::gradeds
