#include "polyfun/freegroup/word.hpp"

#include <sstream>
#include <stdexcept>

namespace polyfun::freegroup {

Word::Word(int rank) : rank_(rank)
{
    if (rank < 0)
        throw std::invalid_argument("negative generator count");
}

Word Word::generator(int rank, int i) { return free_reduce(rank, {{i, 1}}); }

Word Word::parse(int rank, std::string_view text)
{
    std::vector<Letter> raw;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "1" || tok == "e")
            continue;
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
            throw std::invalid_argument("bad letter: " + tok);
        int idx = 0;
        for (std::size_t k = 1; k < tok.size(); ++k) {
            if (tok[k] < '0' || tok[k] > '9')
                throw std::invalid_argument("bad letter: " + tok);
            idx = idx * 10 + (tok[k] - '0');
        }
        raw.push_back({idx, tok[0] == 'x' ? 1 : -1});
    }
    return free_reduce(rank, raw);
}

Word free_reduce(int rank, const std::vector<Letter>& raw)
{
    Word w(rank);
    for (const Letter& l : raw) {
        if (l.gen < 1 || l.gen > rank)
            throw std::out_of_range("generator index " + std::to_string(l.gen) + " outside 1.." +
                                    std::to_string(rank));
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter exponent must be +1 or -1");
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen && w.letters_.back().sign == -l.sign)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

Word Word::inverse() const
{
    Word out(rank_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back({it->gen, -it->sign});
    return out;
}

Word Word::power(long k) const
{
    Word base = k < 0 ? inverse() : *this;
    Word out(rank_);
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        out = out * base;
    return out;
}

Word Word::operator*(const Word& o) const
{
    if (rank_ != o.rank_)
        throw std::invalid_argument("words over different generator counts");
    std::vector<Letter> raw = letters_;
    raw.insert(raw.end(), o.letters_.begin(), o.letters_.end());
    return free_reduce(rank_, raw);
}

std::string Word::to_string() const
{
    if (letters_.empty())
        return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty())
            s += ' ';
        s += (l.sign > 0 ? 'x' : 'X');
        s += std::to_string(l.gen);
    }
    return s;
}

Word word_commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word left_normed(const std::vector<Word>& ws)
{
    if (ws.empty())
        throw std::invalid_argument("empty commutator");
    Word acc = ws.front();
    for (std::size_t i = 1; i < ws.size(); ++i)
        acc = word_commutator(acc, ws[i]);
    return acc;
}

int mobius(long d)
{
    if (d < 1)
        throw std::invalid_argument("mobius of non-positive integer");
    int r = 1;
    for (long q = 2; q * q <= d; ++q) {
        if (d % q)
            continue;
        d /= q;
        if (d % q == 0)
            return 0;
        r = -r;
    }
    return d > 1 ? -r : r;
}

BigInt witt_rank(long n, long d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("witt_rank needs n >= 1 and d >= 1");
    BigInt sum = 0;
    for (long e = 1; e <= d; ++e) {
        if (d % e)
            continue;
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), n, d / e);
        sum += mobius(e) * pw;
    }
    return sum / d;
}

std::vector<std::vector<int>> lyndon_words(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("lyndon_words needs n >= 1 and d >= 1");
    // Duval's generation: every prefix visited is a Lyndon word of its length
    std::vector<std::vector<int>> out;
    std::vector<int> w = {0};
    while (!w.empty()) {
        if ((int)w.size() == d) {
            std::vector<int> word;
            for (int x : w)
                word.push_back(x + 1);
            out.push_back(std::move(word));
        }
        std::size_t m = w.size();
        while ((int)w.size() < d)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1)
            w.pop_back();
        if (!w.empty())
            ++w.back();
    }
    return out;
}

} // namespace polyfun::freegroup
