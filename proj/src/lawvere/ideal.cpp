#include "polyfun/lawvere/ideal.hpp"

#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "polyfun/finmonoid/algebra.hpp"

namespace polyfun::lawvere {

namespace {

int pi_sign(int d, unsigned T)
{
    return (d + 1 - std::popcount(T)) % 2 == 0 ? 1 : -1;
}

std::string cell_name(int m, int n)
{
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

IdealCell empty_cell(const Theory& t, int m, int n, const Field& f)
{
    return IdealCell{m, n, Subspace(f, t.hom_size(n, m))};
}

} // namespace

Morphism diagonal_morphism(const Theory& t, int d, int n, unsigned T)
{
    const int N = n * (d + 1);
    t.size(N);
    const Elem e = t.unit(n);
    Morphism out{n, N, std::vector<Elem>(N)};
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i < n; ++i)
            out.comps[k * n + i] = (T >> k & 1) ? t.projection(n, i) : e;
    return out;
}

std::vector<std::pair<Morphism, int>> pi_terms(const Theory& t, int d, int n)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    std::vector<std::pair<Morphism, int>> out;
    for (unsigned T = 0; T < (1u << (d + 1)); ++T)
        out.emplace_back(diagonal_morphism(t, d, n, T), pi_sign(d, T));
    return out;
}

LinCombo pi_element(const Theory& t, int d, int n, const Field& f)
{
    LinCombo out{n * (d + 1), n, f, {}};
    for (const auto& [g, s] : pi_terms(t, d, n))
        out.terms.emplace_back(morphism_index(t, g), Scalar(f, s));
    canonicalize(out.terms);
    return out;
}

LinCombo left_compose(const Theory& t, const Morphism& g, const LinCombo& x)
{
    if (g.n != x.m)
        throw std::invalid_argument("left composition with mismatched arity");
    LinCombo out{g.m, x.n, x.field, {}};
    for (const auto& [col, c] : x.terms)
        out.terms.emplace_back(morphism_index(t, compose(t, g, morphism_at(t, x.n, x.m, col))), c);
    canonicalize(out.terms);
    return out;
}

LinCombo right_compose(const Theory& t, const LinCombo& x, const Morphism& h)
{
    if (h.m != x.n)
        throw std::invalid_argument("right composition with mismatched arity");
    LinCombo out{x.m, h.n, x.field, {}};
    for (const auto& [col, c] : x.terms)
        out.terms.emplace_back(morphism_index(t, compose(t, morphism_at(t, x.n, x.m, col), h)), c);
    canonicalize(out.terms);
    return out;
}

IdealCell polynomiality_ideal_cell(const Theory& t, int d, int m, int n, const Field& f)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    const int N = n * (d + 1);
    const std::size_t CN = t.size(N);
    const std::size_t base = t.size(n);
    const unsigned terms = 1u << (d + 1);
    IdealCell out = empty_cell(t, m, n, f);

    // g o pi^d_n depends on each component g_j only through its signature
    // (g_j o D^T)_T, and is multilinear in the vectors
    // Psi(g_j) = sum_T [T, g_j o D^T]. A basis of span Psi over the distinct
    // signatures therefore yields a spanning set of tuples.
    std::vector<Morphism> diag;
    for (unsigned T = 0; T < terms; ++T)
        diag.push_back(diagonal_morphism(t, d, n, T));
    std::set<std::vector<Elem>> distinct;
    for (Elem g = 0; g < CN; ++g) {
        std::vector<Elem> sig(terms);
        for (unsigned T = 0; T < terms; ++T)
            sig[T] = t.substitute(N, g, n, diag[T].comps);
        distinct.insert(std::move(sig));
    }
    Subspace psi(f, terms * base);
    std::vector<std::vector<Elem>> chosen;
    for (const auto& sig : distinct) {
        SparseVector v;
        for (unsigned T = 0; T < terms; ++T)
            v.emplace_back(static_cast<std::uint32_t>(T * base + sig[T]), Scalar::one(f));
        canonicalize(v);
        if (psi.insert(std::move(v)))
            chosen.push_back(sig);
    }

    std::uint64_t tuples = 1;
    for (int j = 0; j < m; ++j) {
        tuples *= chosen.size();
        if (tuples > kHomGuard)
            throw CapExceeded("polynomiality generators for cell " + cell_name(m, n) + " exceed 10^6");
    }
    std::vector<std::size_t> pick(m, 0);
    std::vector<Scalar> sign;
    for (unsigned T = 0; T < terms; ++T)
        sign.emplace_back(f, pi_sign(d, T));
    for (std::uint64_t s = 0; s < tuples; ++s) {
        SparseVector v;
        for (unsigned T = 0; T < terms; ++T) {
            std::uint64_t col = 0;
            for (int j = m; j-- > 0;)
                col = col * base + chosen[pick[j]][T];
            v.emplace_back(static_cast<std::uint32_t>(col), sign[T]);
        }
        canonicalize(v);
        out.space.insert(std::move(v));
        for (int j = 0; j < m; ++j) {
            if (++pick[j] < chosen.size())
                break;
            pick[j] = 0;
        }
    }
    return out;
}

PowerMonoid::PowerMonoid(Theory t, int n, int m)
    : t_(std::move(t)), n_(n), m_(m), size_(t_.hom_size(n, m)), base_(t_.size(n))
{
    const Elem e = t_.unit(n);
    for (int j = 0; j < m; ++j)
        identity_ = identity_ * static_cast<Elem>(base_) + e;
    if (base_ * base_ <= kHomGuard) {
        star_.resize(base_ * base_);
        for (Elem a = 0; a < base_; ++a)
            for (Elem b = 0; b < base_; ++b)
                star_[a * base_ + b] = t_.star(n, a, b);
    }
}

finmonoid::Elem PowerMonoid::mul(finmonoid::Elem a, finmonoid::Elem b) const
{
    finmonoid::Elem out = 0, scale = 1;
    for (int j = 0; j < m_; ++j, a /= base_, b /= base_, scale *= base_) {
        Elem x = a % base_, y = b % base_;
        Elem z = star_.empty() ? t_.star(n_, x, y) : star_[x * base_ + y];
        out += z * scale;
    }
    return out;
}

std::vector<finmonoid::Elem> PowerMonoid::generators() const
{
    const Elem e = t_.unit(n_);
    std::vector<finmonoid::Elem> out;
    finmonoid::Elem scale = 1;
    for (int j = 0; j < m_; ++j, scale *= base_)
        for (Elem s = 0; s < base_; ++s)
            if (s != e)
                out.push_back(identity_ - e * scale + s * scale);
    return out;
}

IdealCell aug_power_cell(const Theory& t, int d, int m, int n, const Field& f)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    PowerMonoid pm(t, n, m);
    return IdealCell{m, n, finmonoid::aug_power(pm, f, d + 1)};
}

IdealCell zero_ideal_cell(const Theory& t, int m, int n, const Field& f)
{
    IdealCell out = empty_cell(t, m, n, f);
    for (const auto& h : hom_elements(t, n, 0))
        for (const auto& g : hom_elements(t, 0, m))
            out.space.insert({{morphism_index(t, compose(t, g, h)), Scalar::one(f)}});
    return out;
}

IdealCell full_cell(const Theory& t, int m, int n, const Field& f)
{
    IdealCell out = empty_cell(t, m, n, f);
    for (std::uint32_t x = 0; x < out.ambient_dim(); ++x)
        out.space.insert({{x, Scalar::one(f)}});
    return out;
}

std::vector<std::pair<int, int>> ideal_cells(const Theory& t, int d, const CellCaps& caps,
                                             std::vector<SkippedCell>* skipped)
{
    std::vector<std::pair<int, int>> out;
    for (int m = 0; m <= caps.max_target; ++m)
        for (int n = 0; n <= caps.max_source; ++n) {
            std::string reason;
            if (n * (d + 1) > t.arity_cap())
                reason = "needs arity " + std::to_string(n * (d + 1)) + " > cap " + std::to_string(t.arity_cap());
            else {
                try {
                    t.hom_size(n, m);
                } catch (const CapExceeded& e) {
                    reason = e.what();
                }
            }
            if (reason.empty())
                out.emplace_back(m, n);
            else if (skipped)
                skipped->push_back({m, n, reason});
        }
    return out;
}

bool EqualityReport::all_equal() const
{
    for (const auto& c : cells)
        if (!c.equal)
            return false;
    return true;
}

EqualityReport ideal_equality_check(const Theory& t, int d, const CellCaps& caps, const Field& f)
{
    EqualityReport out;
    out.theory = t.name();
    out.d = d;
    for (auto [m, n] : ideal_cells(t, d, caps, &out.skipped)) {
        auto a = polynomiality_ideal_cell(t, d, m, n, f);
        auto b = aug_power_cell(t, d, m, n, f);
        out.cells.push_back({m, n, a.dim(), b.dim(), cells_equal(a, b)});
    }
    return out;
}

IdealFamily polynomiality_family(const Theory& t, int d, const CellCaps& caps, const Field& f)
{
    IdealFamily out;
    for (auto [m, n] : ideal_cells(t, d, caps))
        out.emplace(std::make_pair(m, n), polynomiality_ideal_cell(t, d, m, n, f));
    return out;
}

ClosureProbe right_closure_probes(const Theory& t, int d, const CellCaps& caps, const Field& f, int count,
                                  std::uint64_t seed)
{
    ClosureProbe out;
    auto family = polynomiality_family(t, d, caps, f);
    if (family.empty())
        return out;
    std::vector<std::pair<int, int>> keys;
    for (const auto& [key, cell] : family)
        keys.push_back(key);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int probe = 0; probe < count; ++probe) {
        auto [m, n] = keys[pick(rng)];
        std::vector<int> sources;
        for (const auto& [key, cell] : family)
            if (key.first == m)
                sources.push_back(key.second);
        int n2 = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
        Morphism g = random_morphism(t, n * (d + 1), m, rng);
        Morphism h = random_morphism(t, n2, n, rng);
        LinCombo x = right_compose(t, left_compose(t, g, pi_element(t, d, n, f)), h);
        ++out.probes;
        if (!family.at({m, n2}).space.contains(x.terms)) {
            ++out.failures;
            out.failed.push_back("cell " + cell_name(m, n) + " via source " + std::to_string(n2));
        }
    }
    return out;
}

TheoryMap TheoryMap::reduction(std::uint32_t r, std::uint32_t s, int arity_cap)
{
    if (s < 2 || r % s != 0)
        throw std::invalid_argument("reduction Z/r -> Z/s needs s | r");
    TheoryMap out{Theory::linear(r, arity_cap), Theory::linear(s, arity_cap), {}, {}};
    out.name = "mod" + std::to_string(r) + "->mod" + std::to_string(s);
    out.apply = [r, s](int n, Elem f) {
        Elem img = 0, scale = 1;
        for (int j = 0; j < n; ++j, f /= r, scale *= s)
            img += (f % r % s) * scale;
        return img;
    };
    return out;
}

TheoryMap TheoryMap::identity(const Theory& t)
{
    return TheoryMap{t, t, [](int, Elem f) { return f; }, "id_" + t.name()};
}

namespace {

std::string surjectivity_failure(const TheoryMap& xi, int n)
{
    std::vector<char> hit(xi.target.size(n), 0);
    for (Elem x = 0; x < xi.source.size(n); ++x) {
        Elem y = xi.apply(n, x);
        if (y >= hit.size())
            return "image outside D_" + std::to_string(n);
        hit[y] = 1;
    }
    for (char c : hit)
        if (!c)
            return "not surjective on C_" + std::to_string(n);
    return {};
}

} // namespace

std::string validate_theory_map(const TheoryMap& xi, int samples, std::uint64_t seed)
{
    const int cap = std::min(xi.source.arity_cap(), xi.target.arity_cap());
    for (int n = 0; n <= cap; ++n) {
        if (auto why = surjectivity_failure(xi, n); !why.empty())
            return why;
        for (int k = 0; k < n; ++k)
            if (xi.apply(n, xi.source.projection(n, k)) != xi.target.projection(n, k))
                return "projections not preserved";
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> arity(0, cap);
    for (int s = 0; s < samples; ++s) {
        int N = arity(rng), k = arity(rng);
        Morphism f = random_morphism(xi.source, N, 1, rng);
        Morphism g = random_morphism(xi.source, k, N, rng);
        std::vector<Elem> img(N);
        for (int i = 0; i < N; ++i)
            img[i] = xi.apply(k, g.comps[i]);
        Elem lhs = xi.apply(k, xi.source.substitute(N, f.comps[0], k, g.comps));
        Elem rhs = xi.target.substitute(N, xi.apply(N, f.comps[0]), k, img);
        if (lhs != rhs)
            return "substitution not preserved";
    }
    return {};
}

IdealCell kernel_ideal_cell(const TheoryMap& xi, int m, int n, const Field& f)
{
    if (auto why = surjectivity_failure(xi, n); !why.empty())
        throw std::invalid_argument("theory map is not full: " + why);
    IdealCell out = empty_cell(xi.source, m, n, f);
    const std::size_t hom = xi.source.hom_size(n, m);
    std::map<std::vector<Elem>, std::uint32_t> first;
    for (std::uint32_t x = 0; x < hom; ++x) {
        Morphism a = morphism_at(xi.source, n, m, x);
        for (auto& c : a.comps)
            c = xi.apply(n, c);
        auto [it, fresh] = first.emplace(a.comps, x);
        if (!fresh) {
            SparseVector v = {{it->second, Scalar(f, -1)}, {x, Scalar::one(f)}};
            out.space.insert(std::move(v));
        }
    }
    return out;
}

GammaMembership gamma_membership(const TheoryMap& xi, int d, const CellCaps& caps, const Field& f)
{
    GammaMembership out;
    out.d = d;
    for (auto [m, n] : ideal_cells(xi.source, d, caps, &out.skipped)) {
        auto K = kernel_ideal_cell(xi, m, n, f);
        auto I = polynomiality_ideal_cell(xi.source, d, m, n, f);
        auto J = polynomiality_ideal_cell(xi.target, d, m, n, f);
        GammaCell c{m, n, K.dim(), I.dim(), cell_contains(I, K), I.ambient_dim() - I.dim(),
                    J.ambient_dim() - J.dim()};
        out.member = out.member && c.contained;
        out.cells.push_back(c);
    }
    return out;
}

bool cell_contains(const IdealCell& big, const IdealCell& small)
{
    return big.m == small.m && big.n == small.n && big.space.contains_all(small.space);
}

bool cells_equal(const IdealCell& a, const IdealCell& b)
{
    return a.m == b.m && a.n == b.n && a.space == b.space;
}

} // namespace polyfun::lawvere
