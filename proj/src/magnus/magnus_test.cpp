#include <random>

#include <gtest/gtest.h>

#include "polyfun/magnus/series.hpp"

using namespace polyfun;
using namespace polyfun::magnus;
using freegroup::Letter;
using freegroup::Word;

namespace {

Word random_word(std::mt19937& rng, int rank, int len)
{
    std::uniform_int_distribution<int> g(1, rank), s(0, 1);
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i)
        raw.push_back({g(rng), s(rng) ? 1 : -1});
    return freegroup::free_reduce(rank, raw);
}

TruncatedSeries series(int n, int D, const Field& f, std::vector<std::pair<Monomial, long>> terms)
{
    TruncatedSeries s(n, D, f);
    for (auto& [m, c] : terms)
        s.add_term(m, Scalar(f, c));
    return s;
}

} // namespace

TEST(Embed, Examples)
{
    Field z = Field::integers();
    EXPECT_TRUE(magnus_embed(Word(2), GroupModel::nilpotent(2, 3)).is_one());
    EXPECT_EQ(magnus_embed(Word::parse(1, "x1"), GroupModel::nilpotent(1, 3)),
              series(1, 3, z, {{{}, 1}, {{0}, 1}}));
    EXPECT_EQ(magnus_embed(Word::parse(1, "X1"), GroupModel::nilpotent(1, 3)),
              series(1, 3, z, {{{}, 1}, {{0}, -1}, {{0, 0}, 1}, {{0, 0, 0}, -1}}));
    EXPECT_EQ(magnus_embed(Word::parse(1, "X1"), GroupModel::nilpotent(1, 3)).to_string(),
              "1:1 X1:-1 X1X1:1 X1X1X1:-1");
}

TEST(Mul, Examples)
{
    Field z = Field::integers();
    auto a = series(2, 3, z, {{{}, 1}, {{0}, 3}, {{1, 0}, -2}});
    EXPECT_EQ(truncated_mul(a, TruncatedSeries::one(2, 3, z)), a);
    auto x = series(1, 3, z, {{{}, 1}, {{0}, 1}});
    auto xinv = series(1, 3, z, {{{}, 1}, {{0}, -1}, {{0, 0}, 1}, {{0, 0, 0}, -1}});
    EXPECT_TRUE(truncated_mul(x, xinv).is_one());
    auto x1 = series(2, 3, z, {{{}, 1}, {{0}, 1}});
    auto x2 = series(2, 3, z, {{{}, 1}, {{1}, 1}});
    EXPECT_EQ(truncated_mul(x1, x2), series(2, 3, z, {{{}, 1}, {{0}, 1}, {{1}, 1}, {{0, 1}, 1}}));
    EXPECT_THROW(truncated_mul(x1, TruncatedSeries::one(2, 2, z)), std::invalid_argument);
    EXPECT_EQ(truncated_inverse(x), xinv);
}

TEST(Embed, HomomorphismLaw)
{
    std::mt19937 rng(21);
    for (auto model : {GroupModel::nilpotent(2, 4), GroupModel::dimension(3, 3, 2), GroupModel::dimension(2, 4, 3)}) {
        for (int t = 0; t < 30; ++t) {
            Word u = random_word(rng, model.n, 7), v = random_word(rng, model.n, 7);
            EXPECT_EQ(magnus_embed(u * v, model), truncated_mul(magnus_embed(u, model), magnus_embed(v, model)));
            EXPECT_EQ(magnus_embed(u.inverse(), model), truncated_inverse(magnus_embed(u, model)));
        }
    }
}

TEST(GammaWeight, Examples)
{
    Word x = Word::generator(2, 1), y = Word::generator(2, 2);
    EXPECT_EQ(gamma_weight(x, 4), 1);
    EXPECT_EQ(gamma_weight(freegroup::word_commutator(x, y), 4), 2);
    EXPECT_EQ(gamma_weight(freegroup::left_normed({x, y, x}), 4), 3);
    EXPECT_EQ(gamma_weight(Word(2), 4), std::nullopt);
    EXPECT_EQ(gamma_weight(freegroup::left_normed({x, y, x, y, y}), 4), std::nullopt);
}

TEST(GammaWeight, LeftNormedCommutatorsOfDistinctGenerators)
{
    for (int k = 1; k <= 4; ++k) {
        std::vector<Word> gens;
        for (int i = 1; i <= k; ++i)
            gens.push_back(Word::generator(4, i));
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i)
            perm[i] = i;
        do {
            std::vector<Word> ws;
            for (int i : perm)
                ws.push_back(gens[i]);
            EXPECT_EQ(gamma_weight(freegroup::left_normed(ws), 5), k);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(NormalForm, EqualImagesIffQuotientDeep)
{
    // u and u*z with z a commutator of known weight: images agree at class c
    // exactly when the weight of z exceeds c.
    std::mt19937 rng(4);
    Word x = Word::generator(3, 1), y = Word::generator(3, 2), w = Word::generator(3, 3);
    std::vector<std::pair<Word, int>> family = {
        {freegroup::word_commutator(x, y), 2},
        {freegroup::left_normed({x, y, w}), 3},
        {freegroup::left_normed({y, x, x}), 3},
        {freegroup::left_normed({x, y, x, w}), 4},
        {freegroup::word_commutator(freegroup::word_commutator(x, y), freegroup::word_commutator(x, w)), 4},
        {freegroup::left_normed({w, x, y, y, x}), 5},
    };
    for (int c = 1; c <= 5; ++c) {
        auto model = GroupModel::nilpotent(3, c);
        for (const auto& [z, k] : family) {
            Word u = random_word(rng, 3, 6);
            Word v = u * z;
            bool deep = !gamma_weight(u * v.inverse(), c).has_value();
            EXPECT_EQ(same_element(u, v, model), deep);
            EXPECT_EQ(same_element(u, v, model), k > c) << c << " " << z.to_string();
        }
    }
}

TEST(DimSubgroup, Examples)
{
    Word x = Word::generator(1, 1);
    EXPECT_TRUE(dim_subgroup_member(x.power(4), 3, 2));
    EXPECT_FALSE(dim_subgroup_member(x.power(2), 3, 2));
    EXPECT_TRUE(dim_subgroup_member(Word(2), 7, 3));
    EXPECT_THROW(dim_subgroup_member(x, 3, 4), std::invalid_argument);
}

TEST(DimSubgroup, PowerLawOnInfiniteCyclic)
{
    // D_{c,p}(Z) from the product over i p^j >= c of gamma_i^{p^j}: only i = 1
    // contributes, giving p^j Z for the least j with p^j >= c.
    for (std::uint32_t p : {2u, 3u})
        for (int c = 1; c <= 9; ++c) {
            long least = 1;
            while (least < c)
                least *= p;
            long pj = 1;
            for (int j = 0; j <= 4; ++j, pj *= p) {
                bool in_formula = pj % least == 0;
                EXPECT_EQ(dim_subgroup_member(Word::generator(1, 1).power(pj), c, p), in_formula)
                    << "p=" << p << " c=" << c << " j=" << j;
            }
        }
}

TEST(Substitution, Examples)
{
    Word x = Word::generator(2, 1), y = Word::generator(2, 2);
    auto m2 = GroupModel::nilpotent(2, 2);
    EXPECT_TRUE(apply_substitution(freegroup::word_commutator(x, y), {x, x}, m2).is_one());
    Field z = Field::integers();
    EXPECT_EQ(apply_substitution(Word::generator(1, 1), {x * y}, m2),
              series(2, 2, z, {{{}, 1}, {{0}, 1}, {{1}, 1}, {{0, 1}, 1}}));
    Word w = Word::parse(2, "x1 X2 x2 x2 X1 X1");
    EXPECT_EQ(apply_substitution(w, {x, y}, m2), magnus_embed(w, m2));
    EXPECT_THROW(apply_substitution(w, {x}, m2), std::invalid_argument);
}

TEST(Substitution, MatchesMultiplicativeImage)
{
    std::mt19937 rng(8);
    auto model = GroupModel::dimension(2, 4, 2);
    for (int t = 0; t < 20; ++t) {
        Word w = random_word(rng, 3, 6);
        std::vector<Word> images = {random_word(rng, 2, 4), random_word(rng, 2, 4), random_word(rng, 2, 4)};
        auto direct = TruncatedSeries::one(2, 4, model.field());
        for (const auto& l : w.letters()) {
            auto im = magnus_embed(images[l.gen - 1], model);
            direct = truncated_mul(direct, l.sign > 0 ? im : truncated_inverse(im));
        }
        EXPECT_EQ(apply_substitution(w, images, model), direct);
    }
}
