#include "polyfun/magnus/series.hpp"

#include <stdexcept>

namespace polyfun::magnus {

using freegroup::Letter;
using freegroup::Word;

GroupModel GroupModel::nilpotent(int n, int c)
{
    if (n < 0 || c < 1)
        throw std::invalid_argument("nilpotent model needs n >= 0 and c >= 1");
    return {Kind::Nilpotent, n, c, 0};
}

GroupModel GroupModel::dimension(int n, int c, std::uint32_t p)
{
    if (n < 0 || c < 1)
        throw std::invalid_argument("dimension model needs n >= 0 and c >= 1");
    if (!is_prime(p))
        throw std::invalid_argument("dimension model needs a prime");
    return {Kind::Dimension, n, c, p};
}

Field GroupModel::field() const { return kind == Kind::Nilpotent ? Field::integers() : Field::prime(p); }

TruncatedSeries::TruncatedSeries(int n, int D, const Field& f) : n_(n), D_(D), field_(f)
{
    if (n < 0 || n > 255 || D < 0)
        throw std::invalid_argument("bad truncated series shape");
}

TruncatedSeries TruncatedSeries::one(int n, int D, const Field& f)
{
    TruncatedSeries s(n, D, f);
    s.terms_.emplace(Monomial{}, Scalar::one(f));
    return s;
}

Scalar TruncatedSeries::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Scalar& c)
{
    if ((int)m.size() > D_)
        return;
    for (auto g : m)
        if (g >= n_)
            throw std::out_of_range("monomial index outside generator range");
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh)
        it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool TruncatedSeries::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

std::optional<int> TruncatedSeries::least_nonconstant_degree() const
{
    for (const auto& [m, c] : terms_)
        if (!m.empty())
            return static_cast<int>(m.size());
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int D) const
{
    TruncatedSeries out(n_, std::min(D, D_), field_);
    for (const auto& [m, c] : terms_)
        if ((int)m.size() <= out.D_)
            out.terms_.emplace(m, c);
    return out;
}

TruncatedSeries TruncatedSeries::times_letter(const Letter& l) const
{
    if (l.gen < 1 || l.gen > n_)
        throw std::out_of_range("letter outside generator range");
    const auto x = static_cast<std::uint8_t>(l.gen - 1);
    TruncatedSeries out = *this;
    if (l.sign > 0) {
        for (const auto& [m, c] : terms_) {
            if ((int)m.size() >= D_)
                continue;
            Monomial mm = m;
            mm.push_back(x);
            out.add_term(mm, c);
        }
        return out;
    }
    // (1 + X)^-1 = sum_k (-X)^k
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        Scalar cc = c;
        while ((int)mm.size() < D_) {
            mm.push_back(x);
            cc = -cc;
            out.add_term(mm, cc);
        }
    }
    return out;
}

std::string TruncatedSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty())
            s += ' ';
        if (m.empty()) {
            s += '1';
        } else {
            for (auto g : m)
                s += "X" + std::to_string(g + 1);
        }
        s += ':' + c.to_string();
    }
    return s;
}

TruncatedSeries truncated_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.generators() != b.generators() || a.cap() != b.cap() || !(a.field() == b.field()))
        throw std::invalid_argument("truncated_mul: series of different kinds");
    TruncatedSeries out(a.generators(), a.cap(), a.field());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if ((int)(ma.size() + mb.size()) > a.cap())
                break; // shortlex order: later terms of b are no shorter
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(m, ca * cb);
        }
    return out;
}

TruncatedSeries truncated_inverse(const TruncatedSeries& a)
{
    if (!a.coefficient({}).is_one())
        throw std::invalid_argument("truncated_inverse needs constant term 1");
    // a = 1 - y, a^-1 = sum_k y^k
    const Field& f = a.field();
    TruncatedSeries y(a.generators(), a.cap(), f);
    for (const auto& [m, c] : a.terms())
        if (!m.empty())
            y.add_term(m, -c);
    TruncatedSeries out = TruncatedSeries::one(a.generators(), a.cap(), f);
    TruncatedSeries pw = out;
    for (int k = 1; k <= a.cap(); ++k) {
        pw = truncated_mul(pw, y);
        for (const auto& [m, c] : pw.terms())
            out.add_term(m, c);
    }
    return out;
}

TruncatedSeries magnus_embed(const Word& w, const GroupModel& model)
{
    if (w.rank() != model.n)
        throw std::invalid_argument("word and model have different generator counts");
    TruncatedSeries s = TruncatedSeries::one(model.n, model.cap(), model.field());
    for (const auto& l : w.letters())
        s = s.times_letter(l);
    return s;
}

bool same_element(const Word& u, const Word& v, const GroupModel& model)
{
    return magnus_embed(u, model) == magnus_embed(v, model);
}

std::optional<int> gamma_weight(const Word& w, int c_max)
{
    if (c_max < 1)
        throw std::invalid_argument("gamma_weight needs c_max >= 1");
    return magnus_embed(w, GroupModel::nilpotent(w.rank(), c_max)).least_nonconstant_degree();
}

bool dim_subgroup_member(const Word& w, int c, std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("dim_subgroup_member needs a prime");
    if (c <= 1)
        return true;
    return magnus_embed(w, GroupModel::dimension(w.rank(), c - 1, p)).is_one();
}

Word substitute(const Word& w, const std::vector<Word>& images)
{
    if ((int)images.size() != w.rank())
        throw std::invalid_argument("substitution arity mismatch");
    int m = images.empty() ? 0 : images.front().rank();
    Word out(m);
    for (const auto& im : images)
        if (im.rank() != m)
            throw std::invalid_argument("substitution images over different generator counts");
    for (const auto& l : w.letters())
        out = out * (l.sign > 0 ? images[l.gen - 1] : images[l.gen - 1].inverse());
    return out;
}

TruncatedSeries apply_substitution(const Word& w, const std::vector<Word>& images, const GroupModel& model)
{
    Word s = substitute(w, images);
    if (s.rank() != model.n)
        throw std::invalid_argument("substitution images do not match the model");
    return magnus_embed(s, model);
}

} // namespace polyfun::magnus
