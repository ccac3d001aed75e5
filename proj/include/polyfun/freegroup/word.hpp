#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyfun/linalg/scalar.hpp"

namespace polyfun::freegroup {

struct Letter {
    int gen;  // 1..n
    int sign; // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group on n generators.
class Word {
public:
    explicit Word(int rank = 0);
    static Word generator(int rank, int i);
    // Text form: whitespace-separated x1, X1 (capital means inverse). "1" or
    // an empty string is the identity.
    static Word parse(int rank, std::string_view text);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word power(long k) const;
    Word operator*(const Word& o) const;
    friend bool operator==(const Word&, const Word&) = default;

    std::string to_string() const;

private:
    friend Word free_reduce(int rank, const std::vector<Letter>& raw);
    int rank_;
    std::vector<Letter> letters_;
};

Word free_reduce(int rank, const std::vector<Letter>& raw);
Word word_commutator(const Word& a, const Word& b);
// Left-normed commutator [[..[w1,w2],..],wk].
Word left_normed(const std::vector<Word>& ws);

int mobius(long d);
BigInt witt_rank(long n, long d);
// Lyndon words of length d over 1..n, lexicographic order.
std::vector<std::vector<int>> lyndon_words(int n, int d);

} // namespace polyfun::freegroup
