#include "polyfun/finmonoid/groups.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "polyfun/finmonoid/algebra.hpp"

namespace polyfun::finmonoid {

namespace {

void require_group(const FiniteMonoid& g)
{
    if (!g.is_group())
        throw std::invalid_argument(g.name() + " is not a group");
}

} // namespace

Subgroup subgroup_closure(const FiniteMonoid& g, const std::vector<Elem>& gens)
{
    require_group(g);
    // finite: closure under multiplication is already a subgroup
    std::vector<bool> in(g.size(), false);
    std::vector<Elem> members = {g.identity()};
    in[g.identity()] = true;
    std::vector<Elem> distinct;
    for (Elem x : gens)
        if (std::find(distinct.begin(), distinct.end(), x) == distinct.end() && x != g.identity())
            distinct.push_back(x);
    std::deque<Elem> todo = {g.identity()};
    while (!todo.empty()) {
        Elem a = todo.front();
        todo.pop_front();
        for (Elem s : distinct) {
            Elem b = g.mul(a, s);
            if (!in[b]) {
                in[b] = true;
                members.push_back(b);
                todo.push_back(b);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

Subgroup commutator_subgroup(const FiniteMonoid& g, const Subgroup& a, const Subgroup& b)
{
    std::vector<Elem> gens;
    for (Elem x : a)
        for (Elem y : b)
            gens.push_back(g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y)));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(g, gens);
}

Subgroup power_subgroup(const FiniteMonoid& g, const Subgroup& a, std::uint64_t k)
{
    std::vector<Elem> gens;
    for (Elem x : a)
        gens.push_back(g.power(x, k));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(g, gens);
}

bool is_subset(const Subgroup& a, const Subgroup& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<Subgroup> lower_central_series(const FiniteMonoid& g)
{
    require_group(g);
    Subgroup all = subgroup_closure(g, g.generators());
    std::vector<Subgroup> out = {all};
    for (;;) {
        Subgroup next = commutator_subgroup(g, out.back(), all);
        if (next == out.back())
            break;
        out.push_back(std::move(next));
        if (out.back().size() == 1)
            break;
    }
    return out;
}

JenningsSeries jennings_series(const FiniteMonoid& g, std::uint32_t p)
{
    require_group(g);
    if (!is_prime(p))
        throw std::invalid_argument("jennings_series needs a prime");
    JenningsSeries out;
    const std::size_t order = g.size();
    if (order % p != 0) {
        // every element is a p-th power, so D_2 = D_1 = G and nothing moves
        Subgroup all = subgroup_closure(g, g.generators());
        out.terms = {all, all};
        out.degenerate = true;
        return out;
    }
    auto gamma = lower_central_series(g);
    auto gamma_at = [&](std::size_t i) -> const Subgroup& { return gamma[std::min(i, gamma.size()) - 1]; };

    // Past this index the generating family no longer changes.
    std::size_t e = 0;
    for (std::size_t q = 1; q < order; q *= p)
        ++e;
    std::size_t limit = (gamma.size() + 1);
    for (std::size_t i = 0; i <= e + 1; ++i)
        limit *= p;

    for (std::size_t c = 1; c <= limit; ++c) {
        std::vector<Elem> gens;
        for (std::size_t i = 1; i <= c; ++i) {
            std::uint64_t pj = 1;
            while (i * pj < c)
                pj *= p;
            for (Elem x : gamma_at(i))
                gens.push_back(g.power(x, pj));
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        Subgroup dc = subgroup_closure(g, gens);
        out.terms.push_back(std::move(dc));
        if (out.terms.back().size() == 1)
            break;
    }
    // keep a single repeat to mark a stable tail
    while (out.terms.size() >= 3 && out.terms.back() == out.terms[out.terms.size() - 2] &&
           out.terms.back() == out.terms[out.terms.size() - 3])
        out.terms.pop_back();

    bool p_group = true;
    for (std::size_t q = order; q > 1; q /= p)
        if (q % p) {
            p_group = false;
            break;
        }
    if (p_group) {
        for (std::size_t c = 0; c + 1 < out.terms.size(); ++c) {
            std::size_t ratio = out.terms[c].size() / out.terms[c + 1].size();
            long dim = 0;
            while (ratio > 1) {
                ratio /= p;
                ++dim;
            }
            out.factor_dims.ranks.emplace_back(dim);
        }
    }
    return out;
}

QuillenResult quillen_check(const FiniteMonoid& g, std::uint32_t p, int D)
{
    require_group(g);
    for (std::size_t q = g.size(); q > 1; q /= p)
        if (q % p)
            throw std::invalid_argument(g.name() + " is not a p-group for p = " + std::to_string(p));
    auto j = jennings_series(g, p);
    auto aug = aug_power_dims(g, Field::prime(p), D);
    auto pbw = gradeds::restricted_pbw_dims(j.factor_dims, p, D);
    return {aug == pbw, aug, pbw};
}

} // namespace polyfun::finmonoid
