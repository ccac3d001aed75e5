#include <map>
#include <set>

#include <gtest/gtest.h>

#include "polyfun/lawvere/ideal.hpp"
#include "polyfun/lawvere/module.hpp"
#include "polyfun/linalg/matrix.hpp"

using namespace polyfun;
using namespace polyfun::lawvere;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

// span{g o pi^d_n} over every g: n(d+1) -> m, no signature shortcut.
IdealCell brute_polynomiality(const Theory& t, int d, int m, int n, const Field& f)
{
    IdealCell out{m, n, Subspace(f, t.hom_size(n, m))};
    LinCombo pi = pi_element(t, d, n, f);
    for (const auto& g : hom_elements(t, n * (d + 1), m))
        out.space.insert(left_compose(t, g, pi).terms);
    return out;
}

// Aug^k spanned by all products (x_1 - e)...(x_k - e), computed densely.
std::size_t brute_aug_dim(const Theory& t, int k, int m, int n, const Field& f)
{
    PowerMonoid pm(t, n, m);
    const std::size_t N = pm.size();
    const auto e = pm.identity();
    std::vector<std::vector<Scalar>> current = {std::vector<Scalar>(N, Scalar::zero(f))};
    current[0][e] = Scalar::one(f);
    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& v : current)
            for (finmonoid::Elem x = 0; x < N; ++x) {
                std::vector<Scalar> w(N, Scalar::zero(f));
                for (finmonoid::Elem g = 0; g < N; ++g)
                    if (!v[g].is_zero()) {
                        w[pm.mul(g, x)] += v[g];
                        w[g] -= v[g];
                    }
                next.push_back(w);
            }
        ExactMatrix m2(f, next.size(), N);
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j < N; ++j)
                m2(i, j) = next[i][j];
        current = row_echelon(m2).basis;
        if (current.empty())
            return 0;
    }
    return current.size();
}

} // namespace

TEST(Theory, HomCounts)
{
    auto mod2 = Theory::linear(2);
    EXPECT_EQ(hom_elements(mod2, 2, 1).size(), 4u);
    EXPECT_EQ(hom_elements(Theory::free_comm_band(), 2, 1).size(), 4u);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(hom_elements(mod2, n, 0).size(), 1u);
    EXPECT_EQ(Theory::free_band().size(3), 160u);
    EXPECT_EQ(Theory::free_band().size(2), 7u);
    EXPECT_THROW(Theory::free_band().hom_size(3, 3), CapExceeded);
    EXPECT_THROW(mod2.size(4), CapExceeded);
}

TEST(Theory, IndexRoundTrip)
{
    auto t = Theory::linear(3);
    for (std::uint32_t x = 0; x < t.hom_size(2, 2); ++x)
        EXPECT_EQ(morphism_index(t, morphism_at(t, 2, 2, x)), x);
}

TEST(Theory, StarExamples)
{
    auto mod2 = Theory::linear(2);
    // linear forms in two variables encoded little-endian: (1,0) = 1, (1,1) = 3
    EXPECT_EQ(mod2.describe(2, star_product(mod2, 2, 1, 3)), "(0,1)");
    auto cb = Theory::free_comm_band();
    EXPECT_EQ(cb.describe(2, star_product(cb, 2, 1, 2)), "{1,2}");
    for (const auto& t : {mod2, cb, Theory::free_band(), Theory::linear(4)})
        for (int n = 0; n <= 2; ++n)
            for (Elem f = 0; f < t.size(n); ++f)
                EXPECT_EQ(star_product(t, n, f, t.unit(n)), f);
}

TEST(Theory, BundledTheoriesValidate)
{
    for (const auto& name : {"mod2", "mod3", "mod4", "cband", "band", "mod2:6"}) {
        auto v = validate_theory(Theory::from_name(name));
        EXPECT_TRUE(v.ok()) << name << ": " << v.failure;
    }
    EXPECT_THROW(Theory::from_name("ring"), std::invalid_argument);
}

TEST(Theory, BandStarIsConcatenation)
{
    auto t = Theory::free_band();
    Elem a = t.projection(2, 0), b = t.projection(2, 1);
    Elem ab = t.star(2, a, b);
    EXPECT_EQ(t.describe(2, ab), "ab");
    EXPECT_EQ(t.star(2, ab, ab), ab);
    EXPECT_NE(t.star(2, b, a), ab);
}

TEST(Pi, TermsAndSigns)
{
    auto t = Theory::linear(2);
    auto terms = pi_terms(t, 1, 1);
    ASSERT_EQ(terms.size(), 4u);
    std::vector<int> signs;
    for (const auto& [g, s] : terms)
        signs.push_back(s);
    EXPECT_EQ(signs, (std::vector<int>{1, -1, -1, 1}));
    for (int d = 0; d <= 2; ++d) {
        auto pi = pi_element(t, d, 1, Q);
        Scalar sum = Scalar::zero(Q);
        for (const auto& [c, s] : pi.terms)
            sum += s;
        EXPECT_TRUE(sum.is_zero());
    }
    // d = 0: id - e
    auto pi0 = pi_element(t, 0, 2, Q);
    auto id = morphism_index(t, identity_morphism(t, 2));
    auto e = morphism_index(t, Morphism{2, 2, {t.unit(2), t.unit(2)}});
    SparseVector expect = {{id, Scalar(Q, 1)}, {e, Scalar(Q, -1)}};
    canonicalize(expect);
    EXPECT_EQ(pi0.terms, expect);
    EXPECT_THROW(pi_element(t, 3, 1, Q), CapExceeded);
}

TEST(Polynomiality, Examples)
{
    auto t = Theory::linear(2);
    EXPECT_EQ(polynomiality_ideal_cell(t, 0, 1, 1, F2).dim(), 1u);
    EXPECT_EQ(polynomiality_ideal_cell(t, 1, 1, 1, F2).dim(), 0u);
    EXPECT_EQ(polynomiality_ideal_cell(t, 1, 1, 1, Q).dim(), 1u);
    EXPECT_EQ(aug_power_cell(t, 0, 1, 1, F2).dim(), 1u);
    EXPECT_EQ(aug_power_cell(t, 1, 1, 1, F2).dim(), 0u);
    // idempotent augmentation: (x - 1)^2 = -(x - 1), so Aug^2 = Aug
    auto cb = Theory::free_comm_band();
    EXPECT_EQ(aug_power_cell(cb, 1, 1, 1, Q).dim(), 1u);
    EXPECT_TRUE(cells_equal(aug_power_cell(cb, 1, 1, 1, Q), aug_power_cell(cb, 0, 1, 1, Q)));
}

TEST(Polynomiality, SignatureReductionMatchesBruteForce)
{
    for (const auto& t : {Theory::linear(2), Theory::linear(3), Theory::free_comm_band(), Theory::free_band()})
        for (const auto& f : {Q, F2, F3})
            for (int d = 0; d <= 2; ++d)
                for (auto [m, n] : ideal_cells(t, d, {2, 3})) {
                    if (t.hom_size(n * (d + 1), m) > 30000)
                        continue;
                    auto fast = polynomiality_ideal_cell(t, d, m, n, f);
                    auto slow = brute_polynomiality(t, d, m, n, f);
                    EXPECT_TRUE(cells_equal(fast, slow)) << t.name() << " d=" << d << " cell " << m << "," << n;
                }
}

TEST(Augmentation, GeneratorChainMatchesDenseProducts)
{
    for (const auto& t : {Theory::linear(2), Theory::free_comm_band(), Theory::free_band()})
        for (const auto& f : {Q, F2})
            for (int d = 0; d <= 2; ++d)
                for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
                    EXPECT_EQ(aug_power_cell(t, d, m, n, f).dim(), brute_aug_dim(t, d + 1, m, n, f))
                        << t.name() << " d=" << d << " cell " << m << "," << n;
}

TEST(Oracle, IdealEqualsAugmentationPower)
{
    for (const auto& name : {"mod2", "mod3", "cband", "band"}) {
        auto t = Theory::from_name(name);
        for (const auto& f : {Q, F2, F3})
            for (int d = 0; d <= 2; ++d) {
                auto r = ideal_equality_check(t, d, {3, 2}, f);
                EXPECT_TRUE(r.all_equal()) << name << " over " << f.name() << " d=" << d;
                EXPECT_FALSE(r.cells.empty());
            }
    }
}

TEST(Oracle, MismatchedDegreesDisagree)
{
    // Aug^1 differs from I^(1) over F2 on (1,1): a negative control.
    auto t = Theory::linear(2);
    EXPECT_FALSE(cells_equal(polynomiality_ideal_cell(t, 1, 1, 1, F2), aug_power_cell(t, 0, 1, 1, F2)));
}

TEST(Ideal, FiltrationAndRightClosure)
{
    for (const auto& name : {"mod2", "mod3", "cband", "band"}) {
        auto t = Theory::from_name(name);
        for (int d = 0; d <= 1; ++d)
            for (auto [m, n] : ideal_cells(t, d + 1, {3, 2}))
                EXPECT_TRUE(cell_contains(polynomiality_ideal_cell(t, d, m, n, F2),
                                          polynomiality_ideal_cell(t, d + 1, m, n, F2)));
        for (int d = 0; d <= 2; ++d) {
            auto probe = right_closure_probes(t, d, {3, 2}, Q, 40);
            EXPECT_EQ(probe.probes, 40);
            EXPECT_EQ(probe.failures, 0) << name;
        }
    }
}

TEST(Ideal, ZeroIdeal)
{
    auto t = Theory::linear(2);
    auto z = zero_ideal_cell(t, 1, 1, F2);
    EXPECT_EQ(z.dim(), 1u);
    EXPECT_TRUE(z.space.contains({{t.unit(1), Scalar::one(F2)}}));
    for (const auto& th : {t, Theory::free_band(), Theory::linear(3)})
        EXPECT_EQ(zero_ideal_cell(th, 0, 0, Q).dim(), 1u);
    // reduced modules are killed by zero morphisms
    auto taut = FiniteModule::tautological(t, F2, 3);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            EXPECT_TRUE(cell_contains(annihilator_cell(taut, m, n), zero_ideal_cell(t, m, n, F2)));
}

TEST(Kernel, Examples)
{
    auto xi = TheoryMap::reduction(4, 2);
    EXPECT_EQ(validate_theory_map(xi), "");
    EXPECT_EQ(kernel_ideal_cell(xi, 1, 1, Q).dim(), 2u);
    EXPECT_EQ(kernel_ideal_cell(xi, 2, 1, Q).dim(), 12u);
    auto id = TheoryMap::identity(Theory::linear(3));
    EXPECT_EQ(kernel_ideal_cell(id, 2, 2, Q).dim(), 0u);
    // an injection Z/2 -> Z/4 on coefficients is not full
    TheoryMap bad{Theory::linear(2), Theory::linear(4), [](int, Elem f) { return f; }, "bad"};
    EXPECT_THROW(kernel_ideal_cell(bad, 1, 1, Q), std::invalid_argument);
    EXPECT_NE(validate_theory_map(bad), "");
}

TEST(Kernel, MatchesDenseKernel)
{
    auto xi = TheoryMap::reduction(4, 2);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
        const std::size_t a = xi.source.hom_size(n, m), b = xi.target.hom_size(n, m);
        ExactMatrix map(F3, a, b);
        for (std::uint32_t x = 0; x < a; ++x) {
            Morphism g = morphism_at(xi.source, n, m, x);
            for (auto& c : g.comps)
                c = xi.apply(n, c);
            map(x, morphism_index(xi.target, g)) = Scalar::one(F3);
        }
        EXPECT_EQ(kernel_ideal_cell(xi, m, n, F3).dim(), left_kernel(map).size());
    }
}

TEST(Gamma, ReductionModFour)
{
    auto xi = TheoryMap::reduction(4, 2);
    CellCaps caps{3, 3};
    auto g0 = gamma_membership(xi, 0, caps, F2);
    auto g1 = gamma_membership(xi, 1, caps, F2);
    auto g2 = gamma_membership(xi, 2, caps, F2);
    EXPECT_TRUE(g0.member);
    EXPECT_TRUE(g1.member);
    EXPECT_FALSE(g2.member);
    // containment matches injectivity of L_C/I_C -> L_D/I_D
    for (const auto* g : {&g0, &g1, &g2})
        for (const auto& c : g->cells)
            EXPECT_EQ(c.contained, c.dim_source_quotient == c.dim_target_quotient);
}

TEST(Gamma, HandDerivedKernelOnOneOne)
{
    // k[Z/4] over F2 with u = g - 1: kernel of the reduction is (u^2),
    // Aug^3 = span{u^3}.
    auto xi = TheoryMap::reduction(4, 2);
    auto K = kernel_ideal_cell(xi, 1, 1, F2);
    EXPECT_EQ(K.dim(), 2u);
    SparseVector u2 = {{0, Scalar::one(F2)}, {2, Scalar::one(F2)}};          // g^2 - 1
    SparseVector u3 = {{0, Scalar::one(F2)}, {1, Scalar::one(F2)}, {2, Scalar::one(F2)}, {3, Scalar::one(F2)}};
    EXPECT_TRUE(K.space.contains(u2));
    EXPECT_TRUE(K.space.contains(u3));
    auto I2 = polynomiality_ideal_cell(xi.source, 2, 1, 1, F2);
    EXPECT_EQ(I2.dim(), 1u);
    EXPECT_TRUE(I2.space.contains(u3));
    EXPECT_FALSE(I2.space.contains(u2));
}

TEST(Module, BuildersAreFunctorial)
{
    auto t = Theory::linear(2);
    std::vector<FiniteModule> ms = {FiniteModule::constant(t, F2, 3), FiniteModule::zero(t, F2, 3),
                                    FiniteModule::tautological(t, F2, 3), FiniteModule::tensor_square(t, F2, 3),
                                    FiniteModule::representable_quotient(t, F2, 1, -1, 3),
                                    FiniteModule::representable_quotient(t, F2, 1, 1, 3),
                                    FiniteModule::representable_quotient(Theory::free_band(), Q, 1, 0, 3)};
    for (const auto& M : ms)
        EXPECT_EQ(check_functoriality(M), "") << M.name();
    EXPECT_THROW(FiniteModule::tautological(t, Q, 3), std::invalid_argument);
}

TEST(Module, CrossEffects)
{
    auto t = Theory::linear(2);
    EXPECT_EQ(cross_effect_dim(FiniteModule::tautological(t, F2, 3), {1, 1}), 0u);
    EXPECT_EQ(cross_effect_dim(FiniteModule::tensor_square(t, F2, 3), {1, 1}), 2u);
    EXPECT_EQ(cross_effect_dim(FiniteModule::constant(t, F2, 3), {1}), 0u);
    EXPECT_EQ(cross_effect_dim(FiniteModule::tautological(t, F2, 3), {2}), 2u);
    EXPECT_THROW(cross_effect_dim(FiniteModule::constant(t, F2, 3), {2, 2}), CapExceeded);
}

TEST(Module, DegreeAndCoherence)
{
    auto t = Theory::linear(2);
    std::vector<std::pair<FiniteModule, int>> cases = {{FiniteModule::constant(t, F2, 3), 0},
                                                       {FiniteModule::tautological(t, F2, 3), 1},
                                                       {FiniteModule::tensor_square(t, F2, 3), 2}};
    for (const auto& [M, expect] : cases) {
        auto r = module_poly_degree(M);
        ASSERT_TRUE(r.degree.has_value()) << M.name();
        EXPECT_EQ(*r.degree, expect) << M.name();
        for (int d = 0; d <= r.max_tested; ++d)
            EXPECT_EQ(r.zero_at[d], cross_effects_vanish(M, d + 1)) << M.name() << " d=" << d;
    }
    auto L = FiniteModule::representable_quotient(t, F2, 1, -1, 3);
    auto r = module_poly_degree(L);
    EXPECT_FALSE(r.degree.has_value());
    EXPECT_EQ(r.max_tested, 2);
}

TEST(Module, VanishingAndCovanishing)
{
    auto t = Theory::linear(2);
    auto I0 = polynomiality_family(t, 0, {3, 3}, F2);
    auto I1 = polynomiality_family(t, 1, {3, 3}, F2);

    auto c = FiniteModule::constant(t, F2, 3);
    auto vc = vanishing_submodule(c, I0);
    EXPECT_EQ(vc.object_cap(), 3);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(vc.dim(n), 1u);
    auto lc = covanishing_quotient(c, I0);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(lc.dim(n), 1u);

    auto sq = FiniteModule::tensor_square(t, F2, 3);
    auto vs = vanishing_submodule(sq, I1);
    EXPECT_EQ(vs.object_cap(), 1);
    EXPECT_EQ(vs.dim(1), 0u);

    auto taut = FiniteModule::tautological(t, F2, 3);
    auto lt = covanishing_quotient(taut, I0);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(lt.dim(n), 0u);
    // J acting as zero leaves M unchanged
    auto lt1 = covanishing_quotient(taut, I1);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(lt1.dim(n), taut.dim(n));
    EXPECT_EQ(check_functoriality(vs), "");
    EXPECT_EQ(check_functoriality(lt1), "");

    // the full ideal kills nothing but zero in a faithful module
    IdealFamily full;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            full.emplace(std::make_pair(m, n), full_cell(t, m, n, F2));
    auto v0 = vanishing_submodule(FiniteModule::representable_quotient(t, F2, 1, -1, 3), full);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(v0.dim(n), 0u);
}

TEST(Module, Annihilators)
{
    auto t = Theory::linear(2);
    auto z = annihilator_cell(FiniteModule::zero(t, F2, 3), 2, 1);
    EXPECT_EQ(z.dim(), z.ambient_dim());
    EXPECT_TRUE(cells_equal(annihilator_cell(FiniteModule::constant(t, F2, 3), 1, 1),
                            polynomiality_ideal_cell(t, 0, 1, 1, F2)));
    for (int d = 0; d <= 2; ++d) {
        std::vector<FiniteModule> parts;
        for (int X = 0; X * (d + 1) <= 3; ++X)
            parts.push_back(FiniteModule::representable_quotient(t, F2, X, d, 3));
        auto sum = FiniteModule::direct_sum(parts);
        for (auto [m, n] : ideal_cells(t, d, {3, 3}))
            EXPECT_TRUE(cells_equal(annihilator_cell(sum, m, n), polynomiality_ideal_cell(t, d, m, n, F2)))
                << "d=" << d << " cell " << m << "," << n;
    }
}

TEST(Degenerate, BandsAndRationalParity)
{
    for (const auto& [name, f] : std::vector<std::pair<std::string, Field>>{
             {"band", Q}, {"band", F2}, {"cband", Q}, {"cband", F2}, {"mod2", Q}}) {
        auto t = Theory::from_name(name);
        for (auto [m, n] : ideal_cells(t, 2, {3, 2})) {
            auto a = polynomiality_ideal_cell(t, 0, m, n, f);
            EXPECT_TRUE(cells_equal(a, polynomiality_ideal_cell(t, 1, m, n, f)));
            EXPECT_TRUE(cells_equal(a, polynomiality_ideal_cell(t, 2, m, n, f)));
        }
    }
    // strict over F2 for the parity theory
    auto t = Theory::linear(2);
    EXPECT_GT(polynomiality_ideal_cell(t, 0, 1, 1, F2).dim(), polynomiality_ideal_cell(t, 1, 1, 1, F2).dim());
}
