#include "polyfun/finmonoid/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "polyfun/linalg/scalar.hpp"

namespace polyfun::finmonoid {

std::vector<Elem> MonoidView::generators() const
{
    std::vector<Elem> all(size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<Elem>(i);
    return all;
}

FiniteMonoid::FiniteMonoid(const std::vector<std::vector<Elem>>& table, Elem identity, std::string name)
    : k_(table.size()), e_(identity), name_(std::move(name))
{
    if (k_ == 0)
        throw std::invalid_argument("empty monoid");
    if (identity >= k_)
        throw std::invalid_argument("identity index out of range");
    table_.reserve(k_ * k_);
    for (const auto& row : table) {
        if (row.size() != k_)
            throw std::invalid_argument("multiplication table is not square");
        for (Elem x : row) {
            if (x >= k_)
                throw std::invalid_argument("multiplication table entry out of range");
            table_.push_back(x);
        }
    }
    for (Elem a = 0; a < k_; ++a)
        if (mul(e_, a) != a || mul(a, e_) != a)
            throw std::invalid_argument("identity law fails at element " + std::to_string(a));
    auto assoc = [&](Elem a, Elem b, Elem c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (k_ <= 256) {
        for (Elem a = 0; a < k_; ++a)
            for (Elem b = 0; b < k_; ++b)
                for (Elem c = 0; c < k_; ++c)
                    assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(k_ - 1));
        for (int t = 0; t < 200000; ++t)
            assoc(pick(rng), pick(rng), pick(rng));
    }
    std::vector<Elem> inv(k_, static_cast<Elem>(k_));
    bool group = true;
    for (Elem a = 0; a < k_ && group; ++a) {
        for (Elem b = 0; b < k_; ++b)
            if (mul(a, b) == e_ && mul(b, a) == e_) {
                inv[a] = b;
                break;
            }
        group = inv[a] < k_;
    }
    if (group)
        inverse_ = std::move(inv);
    compute_generators();
}

void FiniteMonoid::compute_generators()
{
    std::vector<bool> reached(k_, false);
    std::vector<Elem> members = {e_};
    reached[e_] = true;
    for (Elem x = 0; x < k_; ++x) {
        if (reached[x])
            continue;
        gens_.push_back(x);
        // close the submonoid under right multiplication by all generators
        std::deque<Elem> todo(members.begin(), members.end());
        while (!todo.empty()) {
            Elem a = todo.front();
            todo.pop_front();
            for (Elem g : gens_) {
                Elem b = mul(a, g);
                if (!reached[b]) {
                    reached[b] = true;
                    members.push_back(b);
                    todo.push_back(b);
                }
            }
        }
    }
}

Elem FiniteMonoid::inverse(Elem a) const
{
    if (!inverse_)
        throw std::logic_error("monoid " + name_ + " is not a group");
    return (*inverse_)[a];
}

Elem FiniteMonoid::power(Elem a, std::uint64_t k) const
{
    Elem r = e_, b = a;
    while (k) {
        if (k & 1)
            r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

FiniteMonoid FiniteMonoid::cyclic(std::uint32_t r)
{
    if (r < 1)
        throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<Elem>> t(r, std::vector<Elem>(r));
    for (Elem a = 0; a < r; ++a)
        for (Elem b = 0; b < r; ++b)
            t[a][b] = (a + b) % r;
    return FiniteMonoid(t, 0, "Z/" + std::to_string(r));
}

FiniteMonoid FiniteMonoid::elementary_abelian(std::uint32_t p, std::uint32_t k)
{
    if (!is_prime(p))
        throw std::invalid_argument("elementary abelian group needs a prime");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i)
        if ((size *= p) > 4096)
            throw CapExceeded("elementary abelian group larger than 4096");
    std::vector<std::vector<Elem>> t(size, std::vector<Elem>(size));
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b) {
            Elem x = a, y = b, out = 0, place = 1;
            for (std::uint32_t i = 0; i < k; ++i, place *= p, x /= p, y /= p)
                out += ((x % p + y % p) % p) * place;
            t[a][b] = out;
        }
    return FiniteMonoid(t, 0, "(Z/" + std::to_string(p) + ")^" + std::to_string(k));
}

namespace {

std::string word_label(const std::vector<int>& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (int x : w)
        s += static_cast<char>('a' + x);
    return s;
}

} // namespace

std::string free_band_key(const std::vector<int>& w)
{
    if (w.empty())
        return "1";
    unsigned content = 0;
    for (int x : w)
        content |= 1u << x;
    const int k = __builtin_popcount(content);
    // longest prefix missing one letter of the content, and the letter after it
    unsigned seen = 0;
    std::size_t i = 0;
    for (; i < w.size(); ++i) {
        seen |= 1u << w[i];
        if (__builtin_popcount(seen) == k)
            break;
    }
    seen = 0;
    std::size_t j = w.size();
    while (j-- > 0) {
        seen |= 1u << w[j];
        if (__builtin_popcount(seen) == k)
            break;
    }
    std::vector<int> prefix(w.begin(), w.begin() + i), suffix(w.begin() + j + 1, w.end());
    return "[" + std::to_string(content) + ":" + free_band_key(prefix) + "," +
           static_cast<char>('a' + w[i]) + static_cast<char>('a' + w[j]) + "," + free_band_key(suffix) + "]";
}

std::vector<std::vector<int>> free_band_words(int n)
{
    if (n < 0 || n > 3)
        throw std::invalid_argument("free_band supports 0 <= n <= 3");
    // breadth-first enumeration by right multiplication with letters keeps
    // shortest representatives
    std::map<std::string, Elem> index;
    std::vector<std::vector<int>> reps = {{}};
    index.emplace(free_band_key({}), 0);
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (int x = 0; x < n; ++x) {
            auto w = reps[a];
            w.push_back(x);
            if (index.emplace(free_band_key(w), static_cast<Elem>(reps.size())).second)
                reps.push_back(w);
        }
    return reps;
}

FiniteMonoid FiniteMonoid::free_band(int n)
{
    auto reps = free_band_words(n);
    std::map<std::string, Elem> index;
    for (Elem a = 0; a < reps.size(); ++a)
        index.emplace(free_band_key(reps[a]), a);
    std::vector<std::vector<Elem>> t(reps.size(), std::vector<Elem>(reps.size()));
    for (Elem a = 0; a < reps.size(); ++a)
        for (Elem b = 0; b < reps.size(); ++b) {
            auto w = reps[a];
            w.insert(w.end(), reps[b].begin(), reps[b].end());
            t[a][b] = index.at(free_band_key(w));
        }
    FiniteMonoid m(t, 0, "FreeBand(" + std::to_string(n) + ")");
    for (const auto& w : reps)
        m.labels_.push_back(word_label(w));
    return m;
}

FiniteMonoid FiniteMonoid::free_comm_band(int n)
{
    if (n < 0 || n > 12)
        throw std::invalid_argument("free_comm_band supports 0 <= n <= 12");
    Elem size = 1u << n;
    std::vector<std::vector<Elem>> t(size, std::vector<Elem>(size));
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            t[a][b] = a | b;
    return FiniteMonoid(t, 0, "FreeCommBand(" + std::to_string(n) + ")");
}

FiniteMonoid FiniteMonoid::unitriangular3(std::uint32_t p)
{
    if (!is_prime(p) || p > 13)
        throw std::invalid_argument("unitriangular3 needs a prime <= 13");
    // (a, b, c) is [[1, a, b], [0, 1, c], [0, 0, 1]]
    Elem size = p * p * p;
    auto idx = [p](Elem a, Elem b, Elem c) { return (a * p + b) * p + c; };
    std::vector<std::vector<Elem>> t(size, std::vector<Elem>(size));
    for (Elem x = 0; x < size; ++x)
        for (Elem y = 0; y < size; ++y) {
            Elem a = x / (p * p), b = (x / p) % p, c = x % p;
            Elem a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
            t[x][y] = idx((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
        }
    return FiniteMonoid(t, 0, "UT3(F" + std::to_string(p) + ")");
}

FiniteMonoid FiniteMonoid::direct_product(const FiniteMonoid& a, const FiniteMonoid& b)
{
    const Elem ka = static_cast<Elem>(a.size()), kb = static_cast<Elem>(b.size());
    if (std::uint64_t(ka) * kb > 4096)
        throw CapExceeded("direct product larger than 4096");
    std::vector<std::vector<Elem>> t(ka * kb, std::vector<Elem>(ka * kb));
    for (Elem x = 0; x < ka * kb; ++x)
        for (Elem y = 0; y < ka * kb; ++y)
            t[x][y] = a.mul(x / kb, y / kb) * kb + b.mul(x % kb, y % kb);
    return FiniteMonoid(t, a.identity() * kb + b.identity(), a.name() + "x" + b.name());
}

FiniteMonoid FiniteMonoid::from_spec(const std::string& spec)
{
    auto star = spec.find('*');
    if (star != std::string::npos)
        return direct_product(from_spec(spec.substr(0, star)), from_spec(spec.substr(star + 1)));
    std::vector<std::string> parts;
    std::stringstream in(spec);
    for (std::string tok; std::getline(in, tok, ':');)
        parts.push_back(tok);
    auto num = [&](std::size_t i) -> std::uint32_t {
        if (i >= parts.size())
            throw std::invalid_argument("monoid spec missing a parameter: " + spec);
        return static_cast<std::uint32_t>(std::stoul(parts[i]));
    };
    const std::string& kind = parts.empty() ? spec : parts[0];
    if (kind == "cyclic")
        return cyclic(num(1));
    if (kind == "elab")
        return elementary_abelian(num(1), num(2));
    if (kind == "band")
        return free_band(static_cast<int>(num(1)));
    if (kind == "cband")
        return free_comm_band(static_cast<int>(num(1)));
    if (kind == "ut3")
        return unitriangular3(num(1));
    throw std::invalid_argument("unknown monoid kind: " + spec);
}

FiniteMonoid FiniteMonoid::parse(const std::string& text)
{
    std::istringstream in(text);
    std::size_t k;
    Elem e;
    if (!(in >> k >> e))
        throw std::invalid_argument("monoid table: expected header 'k identity'");
    std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
    for (auto& row : t)
        for (auto& x : row)
            if (!(in >> x))
                throw std::invalid_argument("monoid table: too few entries");
    std::string extra;
    if (in >> extra)
        throw std::invalid_argument("monoid table: trailing data");
    return FiniteMonoid(t, e, "table");
}

std::string FiniteMonoid::to_text() const
{
    std::ostringstream out;
    out << k_ << ' ' << e_ << '\n';
    for (Elem a = 0; a < k_; ++a) {
        for (Elem b = 0; b < k_; ++b)
            out << (b ? " " : "") << mul(a, b);
        out << '\n';
    }
    return out.str();
}

} // namespace polyfun::finmonoid
