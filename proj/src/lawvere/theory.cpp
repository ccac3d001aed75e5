#include "polyfun/lawvere/theory.hpp"

#include <map>
#include <stdexcept>

#include "polyfun/finmonoid/monoid.hpp"
#include "polyfun/linalg/scalar.hpp"

namespace polyfun::lawvere {

Elem TheoryModel::star(int n, Elem f, Elem g) const
{
    const Elem args[2] = {f, g};
    return substitute(2, nabla(), n, args);
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int e)
{
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && out > kHomGuard / base)
            return kHomGuard + 1;
        out *= base;
    }
    return out;
}

class LinearModel : public TheoryModel {
public:
    LinearModel(std::uint32_t r, int cap) : r_(r), cap_(cap)
    {
        if (r < 2)
            throw std::invalid_argument("linear theory needs r >= 2");
        if (cap < 2 || checked_pow(r, cap) > kHomGuard)
            throw CapExceeded("arity cap out of range for Z/" + std::to_string(r));
        for (int n = 0; n <= cap; ++n)
            pow_.push_back(static_cast<Elem>(checked_pow(r, n)));
    }

    std::string name() const override { return "mod" + std::to_string(r_); }
    int arity_cap() const override { return cap_; }
    std::size_t size(int n) const override { return pow_[n]; }
    Elem projection(int, int k) const override { return pow_[k]; }

    Elem substitute(int N, Elem f, int k, const Elem* args) const override
    {
        std::vector<std::uint32_t> acc(k, 0);
        for (int i = 0; i < N; ++i, f /= r_) {
            std::uint32_t a = f % r_;
            if (a == 0)
                continue;
            Elem g = args[i];
            for (int j = 0; j < k; ++j, g /= r_)
                acc[j] = (acc[j] + a * (g % r_)) % r_;
        }
        return encode(acc);
    }

    Elem nabla() const override { return 1 + r_; }
    Elem eta() const override { return 0; }

    Elem star(int n, Elem f, Elem g) const override
    {
        std::vector<std::uint32_t> acc(n);
        for (int j = 0; j < n; ++j, f /= r_, g /= r_)
            acc[j] = (f % r_ + g % r_) % r_;
        return encode(acc);
    }

    std::string describe(int n, Elem f) const override
    {
        std::string s = "(";
        for (int j = 0; j < n; ++j, f /= r_)
            s += (j ? "," : "") + std::to_string(f % r_);
        return s + ")";
    }

private:
    std::uint32_t r_;
    int cap_;
    std::vector<Elem> pow_;

    Elem encode(const std::vector<std::uint32_t>& a) const
    {
        Elem out = 0;
        for (std::size_t j = a.size(); j-- > 0;)
            out = out * r_ + a[j];
        return out;
    }
};

class CommBandModel : public TheoryModel {
public:
    explicit CommBandModel(int cap) : cap_(cap)
    {
        if (cap < 2 || checked_pow(2, cap) > kHomGuard)
            throw CapExceeded("arity cap out of range for commutative bands");
    }

    std::string name() const override { return "cband"; }
    int arity_cap() const override { return cap_; }
    std::size_t size(int n) const override { return std::size_t{1} << n; }
    Elem projection(int, int k) const override { return Elem{1} << k; }

    Elem substitute(int N, Elem f, int, const Elem* args) const override
    {
        Elem out = 0;
        for (int i = 0; i < N; ++i)
            if (f >> i & 1)
                out |= args[i];
        return out;
    }

    Elem nabla() const override { return 3; }
    Elem eta() const override { return 0; }
    Elem star(int, Elem f, Elem g) const override { return f | g; }

    std::string describe(int n, Elem f) const override
    {
        std::string s = "{";
        bool first = true;
        for (int j = 0; j < n; ++j)
            if (f >> j & 1) {
                s += (first ? "" : ",") + std::to_string(j + 1);
                first = false;
            }
        return s + "}";
    }

private:
    int cap_;
};

class BandModel : public TheoryModel {
public:
    explicit BandModel(int cap) : cap_(cap)
    {
        if (cap < 2 || cap > 3)
            throw CapExceeded("free band theory supports arity caps 2 and 3");
        for (int n = 0; n <= cap; ++n) {
            words_.push_back(finmonoid::free_band_words(n));
            std::map<std::string, Elem> idx;
            for (Elem a = 0; a < words_[n].size(); ++a)
                idx.emplace(finmonoid::free_band_key(words_[n][a]), a);
            index_.push_back(std::move(idx));
            tables_.push_back(finmonoid::FiniteMonoid::free_band(n));
        }
    }

    std::string name() const override { return "band"; }
    int arity_cap() const override { return cap_; }
    std::size_t size(int n) const override { return words_[n].size(); }
    Elem projection(int n, int k) const override { return index_[n].at(finmonoid::free_band_key({k})); }

    Elem substitute(int N, Elem f, int k, const Elem* args) const override
    {
        std::vector<int> w;
        for (int letter : words_[N][f]) {
            const auto& piece = words_[k][args[letter]];
            w.insert(w.end(), piece.begin(), piece.end());
        }
        return index_[k].at(finmonoid::free_band_key(w));
    }

    Elem nabla() const override { return index_[2].at(finmonoid::free_band_key({0, 1})); }
    Elem eta() const override { return 0; }
    Elem star(int n, Elem f, Elem g) const override { return tables_[n].mul(f, g); }

    std::string describe(int n, Elem f) const override
    {
        const auto& w = words_[n][f];
        if (w.empty())
            return "1";
        std::string s;
        for (int letter : w)
            s += static_cast<char>('a' + letter);
        return s;
    }

private:
    int cap_;
    std::vector<std::vector<std::vector<int>>> words_;
    std::vector<std::map<std::string, Elem>> index_;
    std::vector<finmonoid::FiniteMonoid> tables_;
};

} // namespace

Theory::Theory(std::shared_ptr<const TheoryModel> model) : model_(std::move(model))
{
    if (!model_)
        throw std::invalid_argument("null theory model");
}

Theory Theory::linear(std::uint32_t r, int arity_cap)
{
    return Theory(std::make_shared<LinearModel>(r, arity_cap));
}

Theory Theory::free_comm_band(int arity_cap)
{
    return Theory(std::make_shared<CommBandModel>(arity_cap));
}

Theory Theory::free_band(int arity_cap)
{
    return Theory(std::make_shared<BandModel>(arity_cap));
}

Theory Theory::from_name(const std::string& text)
{
    std::string name = text;
    int cap = 3;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        try {
            cap = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad arity cap in theory name: " + text);
        }
    }
    if (name == "cband")
        return free_comm_band(cap);
    if (name == "band")
        return free_band(cap);
    if (name.rfind("mod", 0) == 0 && name.size() > 3) {
        try {
            std::size_t used = 0;
            unsigned long r = std::stoul(name.substr(3), &used);
            if (used == name.size() - 3)
                return linear(static_cast<std::uint32_t>(r), cap);
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw std::invalid_argument("unknown theory: " + text);
}

void Theory::check_arity(int n) const
{
    if (n < 0 || n > arity_cap())
        throw CapExceeded("arity " + std::to_string(n) + " exceeds the cap " + std::to_string(arity_cap()) +
                          " of " + name());
}

std::size_t Theory::size(int n) const
{
    check_arity(n);
    return model_->size(n);
}

Elem Theory::substitute(int N, Elem f, int k, const std::vector<Elem>& args) const
{
    check_arity(N);
    check_arity(k);
    if ((int)args.size() != N)
        throw std::invalid_argument("substitution needs one argument per variable");
    return model_->substitute(N, f, k, args.data());
}

Elem Theory::unit(int n) const
{
    check_arity(n);
    return model_->substitute(0, model_->eta(), n, nullptr);
}

std::size_t Theory::hom_size(int n, int m) const
{
    if (m < 0)
        throw std::invalid_argument("negative arity");
    std::uint64_t s = checked_pow(size(n), m);
    if (s > kHomGuard)
        throw CapExceeded("hom-set C(" + std::to_string(n) + "," + std::to_string(m) + ") of " + name() +
                          " exceeds 10^6 elements");
    return static_cast<std::size_t>(s);
}

std::uint32_t morphism_index(const Theory& t, const Morphism& f)
{
    const std::uint32_t base = static_cast<std::uint32_t>(t.size(f.n));
    std::uint32_t out = 0;
    for (std::size_t j = f.comps.size(); j-- > 0;)
        out = out * base + f.comps[j];
    return out;
}

Morphism morphism_at(const Theory& t, int n, int m, std::uint32_t index)
{
    const std::uint32_t base = static_cast<std::uint32_t>(t.size(n));
    Morphism f{n, m, std::vector<Elem>(m)};
    for (int j = 0; j < m; ++j, index /= base)
        f.comps[j] = index % base;
    return f;
}

std::vector<Morphism> hom_elements(const Theory& t, int n, int m)
{
    const std::size_t k = t.hom_size(n, m);
    std::vector<Morphism> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(morphism_at(t, n, m, static_cast<std::uint32_t>(i)));
    return out;
}

Morphism identity_morphism(const Theory& t, int n)
{
    Morphism f{n, n, std::vector<Elem>(n)};
    for (int k = 0; k < n; ++k)
        f.comps[k] = t.projection(n, k);
    return f;
}

Morphism compose(const Theory& t, const Morphism& g, const Morphism& f)
{
    if (g.n != f.m)
        throw std::invalid_argument("composing morphisms with mismatched arities");
    Morphism out{f.n, g.m, std::vector<Elem>(g.m)};
    for (int j = 0; j < g.m; ++j)
        out.comps[j] = t.substitute(g.n, g.comps[j], f.n, f.comps);
    return out;
}

Elem star_product(const Theory& t, int n, Elem f, Elem g)
{
    const std::size_t k = t.size(n);
    if (f >= k || g >= k)
        throw std::out_of_range("element outside C_n");
    return t.star(n, f, g);
}

Morphism random_morphism(const Theory& t, int n, int m, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(t.size(n) - 1));
    Morphism f{n, m, std::vector<Elem>(m)};
    for (auto& c : f.comps)
        c = pick(rng);
    return f;
}

TheoryValidation validate_theory(const Theory& t, int samples, std::uint64_t seed)
{
    TheoryValidation out;
    std::mt19937_64 rng(seed);
    const int cap = t.arity_cap();
    std::uniform_int_distribution<int> arity(0, cap);
    auto fail = [&](bool& flag, const std::string& why) {
        if (flag)
            out.failure += (out.failure.empty() ? "" : "; ") + why;
        flag = false;
    };

    if (t.size(0) != 1)
        fail(out.zero_object, "C_0 has " + std::to_string(t.size(0)) + " elements");

    for (int s = 0; s < samples; ++s) {
        int a = arity(rng), b = arity(rng), c = arity(rng);
        Morphism f = random_morphism(t, b, 1 + s % cap, rng);
        Morphism g = random_morphism(t, a, b, rng);
        Morphism h = random_morphism(t, c, a, rng);
        if (compose(t, compose(t, f, g), h) != compose(t, f, compose(t, g, h)))
            fail(out.lawvere_axioms, "substitution not associative");
        if (compose(t, f, identity_morphism(t, b)) != f || compose(t, identity_morphism(t, f.m), f) != f)
            fail(out.lawvere_axioms, "projections are not units");
    }

    for (int n = 0; n <= cap; ++n) {
        const std::size_t k = t.size(n);
        const Elem e = t.unit(n);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(k - 1));
        for (int s = 0; s < samples; ++s) {
            Elem x = pick(rng), y = pick(rng), z = pick(rng);
            if (t.star(n, t.star(n, x, y), z) != t.star(n, x, t.star(n, y, z)))
                fail(out.star_monoid, "star product not associative on C_" + std::to_string(n));
            if (t.star(n, x, e) != x || t.star(n, e, x) != x)
                fail(out.star_monoid, "unit law fails on C_" + std::to_string(n));
        }
        // closure of the pulled-back unary operations under the star product
        std::vector<Elem> gens;
        for (int i = 0; i < n; ++i)
            for (Elem c = 0; c < t.size(1); ++c)
                gens.push_back(t.substitute(1, c, n, {t.projection(n, i)}));
        std::vector<char> seen(k, 0);
        std::vector<Elem> queue = {e};
        seen[e] = 1;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (Elem g : gens) {
                Elem x = t.star(n, queue[q], g);
                if (!seen[x]) {
                    seen[x] = 1;
                    queue.push_back(x);
                }
            }
        if (queue.size() != k)
            fail(out.generated, "projected unary operations generate " + std::to_string(queue.size()) + " of " +
                                    std::to_string(k) + " elements of C_" + std::to_string(n));
    }
    return out;
}

} // namespace polyfun::lawvere
