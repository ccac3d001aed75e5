#include "polyfun/finmonoid/algebra.hpp"

#include <stdexcept>

#include "polyfun/linalg/matrix.hpp"

namespace polyfun::finmonoid {

std::size_t AlgebraFiltration::dim(int d) const
{
    if (d < 0)
        throw std::invalid_argument("negative power");
    if (d < (int)powers.size())
        return powers[d].dim();
    if (!stabilized)
        throw std::out_of_range("filtration not computed that far");
    return powers.back().dim();
}

SparseVector right_multiply(const MonoidView& m, const SparseVector& v, Elem x)
{
    SparseVector out;
    out.reserve(v.size());
    for (const auto& [g, c] : v)
        out.emplace_back(m.mul(g, x), c);
    canonicalize(out);
    return out;
}

SparseVector times_augmentation(const MonoidView& m, const SparseVector& v, Elem x)
{
    SparseVector out;
    out.reserve(2 * v.size());
    for (const auto& [g, c] : v) {
        out.emplace_back(m.mul(g, x), c);
        out.emplace_back(g, -c);
    }
    canonicalize(out);
    return out;
}

AlgebraFiltration aug_filtration(const MonoidView& m, const Field& f, int max_power)
{
    const std::size_t k = m.size();
    const Elem e = m.identity();
    AlgebraFiltration out{f, {}, false};

    Subspace full(f, k);
    for (Elem g = 0; g < k; ++g)
        full.insert({{g, Scalar::one(f)}});
    out.powers.push_back(std::move(full));
    if (max_power < 1)
        return out;

    Subspace aug(f, k);
    for (Elem g = 0; g < k; ++g)
        if (g != e)
            aug.insert(times_augmentation(m, {{e, Scalar::one(f)}}, g));
    out.powers.push_back(std::move(aug));

    // Aug^(d+1) is spanned by v (s - e) with v running over a basis of Aug^d
    // and s over generators of M: (xs - e) = (x - e)(s - e) + (x - e) + (s - e).
    const auto gens = m.generators();
    for (int d = 1; d < max_power; ++d) {
        const Subspace& prev = out.powers.back();
        if (prev.dim() == 0) {
            out.stabilized = true;
            break;
        }
        Subspace next(f, k);
        for (const auto& v : prev.basis())
            for (Elem s : gens)
                next.insert(times_augmentation(m, v, s));
        bool same = next.dim() == prev.dim();
        out.powers.push_back(std::move(next));
        if (same) {
            out.stabilized = true;
            break;
        }
    }
    return out;
}

Subspace aug_power(const MonoidView& m, const Field& f, int d)
{
    auto filt = aug_filtration(m, f, d);
    if (d < (int)filt.powers.size())
        return filt.powers[d];
    return filt.powers.back();
}

IntSeries aug_power_dims(const MonoidView& m, const Field& f, int D)
{
    auto filt = aug_filtration(m, f, D + 1);
    IntSeries out(D);
    for (int d = 0; d <= D; ++d)
        out[d] = static_cast<unsigned long>(filt.dim(d) - filt.dim(d + 1));
    return out;
}

int stabilization_index(const MonoidView& m, const Field& f)
{
    auto filt = aug_filtration(m, f, static_cast<int>(m.size()) + 1);
    for (int d = 0; d + 1 < (int)filt.powers.size(); ++d)
        if (filt.powers[d].dim() == filt.powers[d + 1].dim())
            return d;
    return static_cast<int>(filt.powers.size()) - 1;
}

namespace {

// Integer row echelon basis, leading column increasing.
class IntLattice {
public:
    explicit IntLattice(std::size_t n) : n_(n) {}

    void insert(std::vector<BigInt> v)
    {
        std::size_t r = 0;
        for (;;) {
            std::size_t lead = 0;
            while (lead < n_ && sgn(v[lead]) == 0)
                ++lead;
            if (lead == n_)
                return;
            while (r < rows_.size() && pivot(r) < lead)
                ++r;
            if (r == rows_.size() || pivot(r) > lead) {
                if (sgn(v[lead]) < 0)
                    for (auto& x : v)
                        x = -x;
                rows_.insert(rows_.begin() + r, std::move(v));
                return;
            }
            auto& row = rows_[r];
            if (sgn(v[lead] % row[lead]) == 0) {
                BigInt q = v[lead] / row[lead];
                for (std::size_t j = lead; j < n_; ++j)
                    v[j] -= q * row[j];
                continue;
            }
            // replace the row by the gcd combination and keep reducing
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[lead].get_mpz_t(), v[lead].get_mpz_t());
            BigInt a = row[lead] / g, b = v[lead] / g;
            std::vector<BigInt> fresh(n_), rest(n_);
            for (std::size_t j = 0; j < n_; ++j) {
                fresh[j] = s * row[j] + t * v[j];
                rest[j] = a * v[j] - b * row[j];
            }
            row = std::move(fresh);
            v = std::move(rest);
        }
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

    // Coordinates of a lattice vector in this basis.
    std::vector<BigInt> coordinates(std::vector<BigInt> v) const
    {
        std::vector<BigInt> c(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t p = pivot(r);
            if (sgn(v[p] % rows_[r][p]) != 0)
                throw std::logic_error("vector outside the lattice");
            c[r] = v[p] / rows_[r][p];
            for (std::size_t j = p; j < n_; ++j)
                v[j] -= c[r] * rows_[r][j];
        }
        for (const auto& x : v)
            if (sgn(x) != 0)
                throw std::logic_error("vector outside the lattice");
        return c;
    }

private:
    std::size_t pivot(std::size_t r) const
    {
        std::size_t j = 0;
        while (sgn(rows_[r][j]) == 0)
            ++j;
        return j;
    }
    std::size_t n_;
    std::vector<std::vector<BigInt>> rows_;
};

std::vector<BigInt> dense_times_augmentation(const MonoidView& m, const std::vector<BigInt>& v, Elem x)
{
    std::vector<BigInt> out(v.size());
    for (Elem g = 0; g < v.size(); ++g) {
        if (sgn(v[g]) == 0)
            continue;
        out[m.mul(g, x)] += v[g];
        out[g] -= v[g];
    }
    return out;
}

} // namespace

std::vector<BigInt> q_invariants_integral(const MonoidView& m, int d)
{
    if (d < 1)
        throw std::invalid_argument("q_invariants_integral needs d >= 1");
    const std::size_t k = m.size();
    const Elem e = m.identity();
    const auto gens = m.generators();

    IntLattice cur(k);
    for (Elem g = 0; g < k; ++g) {
        if (g == e)
            continue;
        std::vector<BigInt> v(k);
        v[g] = 1;
        v[e] = -1;
        cur.insert(std::move(v));
    }
    auto next_power = [&](const IntLattice& lat) {
        IntLattice nxt(k);
        for (const auto& v : lat.rows())
            for (Elem s : gens)
                nxt.insert(dense_times_augmentation(m, v, s));
        return nxt;
    };
    for (int i = 1; i < d; ++i)
        cur = next_power(cur);
    IntLattice nxt = next_power(cur);

    std::vector<BigInt> out;
    if (cur.rank() == 0)
        return out;
    ExactMatrix rel(Field::integers(), std::max<std::size_t>(nxt.rank(), 1), cur.rank());
    for (std::size_t i = 0; i < nxt.rank(); ++i) {
        auto c = cur.coordinates(nxt.rows()[i]);
        for (std::size_t j = 0; j < c.size(); ++j)
            rel(i, j) = Scalar(Field::integers(), c[j]);
    }
    auto inv = smith_invariants(rel);
    for (const auto& x : inv)
        if (x > 1)
            out.push_back(x);
    for (std::size_t i = inv.size(); i < cur.rank(); ++i)
        out.push_back(0);
    return out;
}

} // namespace polyfun::finmonoid
