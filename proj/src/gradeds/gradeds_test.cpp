#include <functional>

#include <gtest/gtest.h>

#include "polyfun/freegroup/word.hpp"
#include "polyfun/gradeds/gamma.hpp"

using namespace polyfun;
using namespace polyfun::gradeds;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs)
{
    std::vector<BigInt> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

GradedRanks ranks(std::initializer_list<long> xs) { return GradedRanks{ints(xs)}; }

// Count monomials in graded variables (degree -> how many variables) of total
// degree d, each exponent below `bound` (0 means unbounded).
std::vector<long> count_monomials(const std::vector<long>& vars_per_degree, int bound, int D)
{
    std::vector<int> degs;
    for (std::size_t i = 0; i < vars_per_degree.size(); ++i)
        for (long k = 0; k < vars_per_degree[i]; ++k)
            degs.push_back(static_cast<int>(i + 1));
    std::vector<long> out(D + 1, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t v, int total) {
        if (v == degs.size()) {
            ++out[total];
            return;
        }
        for (int e = 0; total + e * degs[v] <= D && (bound == 0 || e < bound); ++e)
            go(v + 1, total + e * degs[v]);
    };
    go(0, 0);
    return out;
}

long lyndon_count(int n, int d) { return static_cast<long>(freegroup::lyndon_words(n, d).size()); }

std::vector<long> as_longs(const IntSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coeffs())
        out.push_back(c.get_si());
    return out;
}

} // namespace

TEST(LieRanks, Examples)
{
    EXPECT_EQ(free_nilpotent_lie_ranks(2, 2), ranks({2, 1}));
    EXPECT_EQ(free_nilpotent_lie_ranks(1, 4), ranks({1, 0, 0, 0}));
    EXPECT_EQ(free_nilpotent_lie_ranks(2, 3), ranks({2, 1, 2}));
    EXPECT_EQ(product_scale(ranks({2, 1}), 2), ranks({4, 2}));
    EXPECT_EQ(product_scale(ranks({2, 1}), 1), ranks({2, 1}));
    EXPECT_EQ(product_scale(ranks({1}), 3), ranks({3}));
}

TEST(SymmetricPowers, Examples)
{
    EXPECT_EQ(symmetric_power_dims(ranks({2, 1}), 4).coeffs(), ints({1, 2, 4, 6, 9}));
    EXPECT_EQ(symmetric_power_dims(ranks({2}), 4).coeffs(), ints({1, 2, 3, 4, 5}));
    EXPECT_EQ(symmetric_power_dims(ranks({}), 3).coeffs(), ints({1, 0, 0, 0}));
}

TEST(SymmetricPowers, MatchesMonomialCount)
{
    for (auto r : {std::vector<long>{2, 1}, {3, 0, 2}, {1, 1, 1, 1}, {4, 6}}) {
        GradedRanks g;
        for (long x : r)
            g.ranks.emplace_back(x);
        EXPECT_EQ(as_longs(symmetric_power_dims(g, 8)), count_monomials(r, 0, 8));
    }
}

TEST(QRanks, Examples)
{
    EXPECT_EQ(q_ranks_nilpotent(2, 1, 2, 4).coeffs(), ints({1, 2, 4, 6, 9}));
    EXPECT_EQ(q_ranks_nilpotent(1, 1, 1, 3).coeffs(), ints({1, 1, 1, 1}));
    EXPECT_EQ(q_ranks_nilpotent(2, 1, kInfinity, 6).coeffs(), ints({1, 2, 4, 8, 16, 32, 64}));
}

TEST(QRanks, TensorAlgebraIdentity)
{
    for (int n = 1; n <= 3; ++n)
        for (int D = 0; D <= 6; ++D) {
            auto s = q_ranks_nilpotent(n, 1, kInfinity, D);
            BigInt pw = 1;
            for (int d = 0; d <= D; ++d, pw *= n)
                EXPECT_EQ(s[d], pw) << n << " " << D;
        }
}

TEST(QRanks, MatchesBruteCount)
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int c = 1; c <= 4; ++c) {
                std::vector<long> lie;
                for (int i = 1; i <= c; ++i)
                    lie.push_back(m * lyndon_count(n, i));
                EXPECT_EQ(as_longs(q_ranks_nilpotent(n, m, c, 6)), count_monomials(lie, 0, 6));
            }
}

TEST(RestrictedLie, Examples)
{
    EXPECT_EQ(free_restricted_lie_dims(1, 2, 8), ranks({1, 1, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(free_restricted_lie_dims(2, 2, 4), ranks({2, 3, 2, 6}));
    EXPECT_EQ(free_restricted_lie_dims(1, 3, 3), ranks({1, 0, 1}));
}

TEST(RestrictedPbw, Examples)
{
    EXPECT_EQ(restricted_pbw_dims(ranks({2, 1}), 2, 6).coeffs(), ints({1, 2, 2, 2, 1, 0, 0}));
    EXPECT_EQ(restricted_pbw_dims(ranks({2, 1}), 3, 8).coeffs(), ints({1, 2, 4, 4, 5, 4, 4, 2, 1}));
    EXPECT_EQ(restricted_pbw_dims(ranks({3, 0, 1}), 0, 7), symmetric_power_dims(ranks({3, 0, 1}), 7));
}

TEST(RestrictedPbw, MatchesRestrictedMonomialCountAndTotal)
{
    for (std::uint32_t p : {2u, 3u})
        for (auto r : {std::vector<long>{2, 1}, {1, 0, 2}, {3, 1}}) {
            std::vector<BigInt> v;
            long total = 0;
            for (long x : r) {
                v.emplace_back(x);
                total += x;
            }
            auto s = restricted_pbw_dims(GradedRanks{v}, p, 20);
            EXPECT_EQ(as_longs(s), count_monomials(r, p, 20));
            BigInt sum = 0, expect = 1;
            for (const auto& c : s.coeffs())
                sum += c;
            for (long k = 0; k < total; ++k)
                expect *= p;
            EXPECT_EQ(sum, expect);
        }
}

TEST(RestrictedPbw, FreeGroupIsTensorAlgebra)
{
    for (auto [n, p, D] : {std::tuple{1, 2u, 8}, {2, 2u, 5}, {2, 3u, 5}}) {
        auto s = restricted_pbw_dims(free_restricted_lie_dims(n, p, D), p, D);
        BigInt pw = 1;
        for (int d = 0; d <= D; ++d, pw *= n)
            EXPECT_EQ(s[d], pw);
    }
}

TEST(Gamma, NilpotentExamples)
{
    auto r = gamma_interval({GammaSetting::Kind::NilToNil, 1, 2}, {2, 2, 5});
    EXPECT_EQ(r.interval(), (std::vector<int>{0, 1}));
    ASSERT_TRUE(r.first_failure);
    EXPECT_EQ(r.first_failure->n, 2);
    EXPECT_EQ(r.first_failure->m, 1);
    EXPECT_EQ(r.first_failure->d, 2);
    EXPECT_EQ(r.first_failure->source, 4);
    EXPECT_EQ(r.first_failure->target, 3);

    auto r2 = gamma_interval({GammaSetting::Kind::NilToNil, 2, 3}, {2, 1, 4});
    EXPECT_EQ(r2.interval(), (std::vector<int>{0, 1, 2}));
    ASSERT_TRUE(r2.first_failure);
    EXPECT_EQ(r2.first_failure->d, 3);
    EXPECT_EQ(r2.first_failure->source, 8);
    EXPECT_EQ(r2.first_failure->target, 6);
}

TEST(Gamma, NilToDimExample)
{
    auto r = gamma_interval({GammaSetting::Kind::NilToDim, 2, 0, 2}, {1, 1, 5});
    ASSERT_TRUE(r.first_failure);
    EXPECT_EQ(r.first_failure->d, 4);
    EXPECT_EQ(r.first_failure->source, 1);
    EXPECT_EQ(r.first_failure->target, 0);
    EXPECT_EQ(r.interval(), (std::vector<int>{0, 1, 2, 3}));
}

TEST(Gamma, RejectsBadSettings)
{
    EXPECT_THROW(gamma_interval({GammaSetting::Kind::NilToNil, 2, 2}, {1, 1, 3}), std::invalid_argument);
    EXPECT_THROW(gamma_interval({GammaSetting::Kind::DimToDim, 1, 2, 4}, {1, 1, 3}), std::invalid_argument);
}

TEST(Gamma, StructuralPropertiesOnGrid)
{
    std::vector<GammaSetting> settings;
    for (int c0 = 1; c0 <= 3; ++c0) {
        for (int c1 = c0 + 1; c1 <= 4; ++c1) {
            settings.push_back({GammaSetting::Kind::NilToNil, c0, c1});
            settings.push_back({GammaSetting::Kind::DimToDim, c0, c1, 2});
            settings.push_back({GammaSetting::Kind::DimToDim, c0, c1, 3});
        }
        settings.push_back({GammaSetting::Kind::NilToNil, c0, kInfinity});
        settings.push_back({GammaSetting::Kind::DimToDim, c0, kInfinity, 2});
        settings.push_back({GammaSetting::Kind::NilToDim, c0, 0, 2});
        settings.push_back({GammaSetting::Kind::NilToDim, c0, 0, 3});
    }
    for (const auto& s : settings) {
        auto r = gamma_interval(s, {2, 2, 7});
        EXPECT_GE(r.interval_max, 0) << s.name();
        for (int d = 0; d <= r.interval_max; ++d)
            EXPECT_TRUE(r.per_degree[d].agree);
        EXPECT_TRUE(r.dominated) << s.name();
        EXPECT_TRUE(r.monotone_ok) << s.name();
        if (s.kind != GammaSetting::Kind::NilToDim)
            EXPECT_EQ(r.interval_max, s.c0) << s.name();
    }
}

TEST(Gamma, NilToDimWithinBounds)
{
    // [c0] is always contained; above p^r0 - 1 (r0 = floor(log_p c0) + 1) the
    // n = 1 witness already disagrees.
    for (std::uint32_t p : {2u, 3u})
        for (int c0 = 1; c0 <= 5; ++c0) {
            long pr = 1;
            while (pr <= c0)
                pr *= p;
            auto r = gamma_interval({GammaSetting::Kind::NilToDim, c0, 0, p}, {2, 2, 12});
            EXPECT_GE(r.interval_max, c0);
            EXPECT_LE(r.interval_max, pr - 1);
        }
}

TEST(Dset, Examples)
{
    auto nil = dset_probe({DsetSetting::Kind::Nilpotent, 2}, Field::rationals(), {2, 1, 5});
    for (const auto& row : nil.per_degree) {
        EXPECT_TRUE(row.strict);
        EXPECT_TRUE(row.in_degree_set);
    }
    auto dim = dset_probe({DsetSetting::Kind::Dimension, 2, 2}, Field::prime(2), {2, 2, 4});
    for (const auto& row : dim.per_degree)
        EXPECT_TRUE(row.strict) << row.d;
    auto triv = dset_probe({DsetSetting::Kind::Trivial}, Field::rationals(), {2, 2, 4});
    for (const auto& row : triv.per_degree) {
        EXPECT_FALSE(row.strict);
        EXPECT_EQ(row.in_degree_set, row.d == 0);
    }
}

TEST(Dset, DimensionAwayFromItsPrimeCollapses)
{
    auto r = dset_probe({DsetSetting::Kind::Dimension, 3, 2}, Field::prime(3), {3, 3, 5});
    for (const auto& row : r.per_degree) {
        EXPECT_FALSE(row.strict);
        EXPECT_EQ(row.in_degree_set, row.d == 0);
    }
    auto q = dset_probe({DsetSetting::Kind::Dimension, 3, 2}, Field::rationals(), {3, 3, 5});
    EXPECT_FALSE(q.per_degree[0].strict);
}
