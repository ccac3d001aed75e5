// Acceptance runner: one line per criterion, nonzero exit if any fails.
// Expected values and time limits are pinned here and nowhere else.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polyfun/finmonoid/algebra.hpp"
#include "polyfun/finmonoid/groups.hpp"
#include "polyfun/freegroup/word.hpp"
#include "polyfun/gradeds/gamma.hpp"
#include "polyfun/gradeds/ranks.hpp"
#include "polyfun/lawvere/ideal.hpp"
#include "polyfun/lawvere/module.hpp"

using namespace polyfun;
using lawvere::Theory;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_ms; // 0 means no time limit
    std::function<void(Outcome&)> run;
};

IntSeries series(std::initializer_list<long> xs)
{
    std::vector<BigInt> v;
    for (long x : xs)
        v.emplace_back(x);
    return IntSeries(v);
}

// Band theories compare sources n <= 2: the (3,3) free band cell has 160^3 morphisms.
lawvere::CellCaps caps_for(const Theory& t)
{
    const bool band = t.name() == "band" || t.name() == "cband";
    return {3, band ? 2 : 3};
}

std::vector<Theory> ideal_theories()
{
    return {Theory::linear(2), Theory::linear(3), Theory::free_comm_band(2), Theory::free_band(2)};
}

SparseVector cyclic_product(std::uint32_t r, const SparseVector& a, const SparseVector& b)
{
    SparseVector out;
    for (const auto& [x, c] : a)
        for (const auto& [y, e] : b)
            out.emplace_back((x + y) % r, c * e);
    canonicalize(out);
    return out;
}

void witt_lyndon(Outcome& o)
{
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 8; ++d) {
            auto w = freegroup::witt_rank(n, d);
            auto l = freegroup::lyndon_words(n, d).size();
            o.require(w == BigInt(static_cast<unsigned long>(l)),
                      "n=" + std::to_string(n) + " d=" + std::to_string(d) + " witt " + w.get_str() + " lyndon " +
                          std::to_string(l));
        }
}

void tensor_identity(Outcome& o)
{
    for (int n : {2, 3}) {
        auto s = gradeds::q_ranks_nilpotent(n, 1, gradeds::kInfinity, 6);
        IntSeries e(6);
        BigInt pw = 1;
        for (int k = 0; k <= 6; ++k, pw *= n)
            e[k] = pw;
        o.require(s == e, "n=" + std::to_string(n) + " got " + s.to_string());
    }
}

void sandling_tahara(Outcome& o)
{
    auto a = gradeds::q_ranks_nilpotent(2, 1, 2, 4);
    o.require(a == series({1, 2, 4, 6, 9}), "(2,1,2,4) got " + a.to_string());
    auto b = gradeds::q_ranks_nilpotent(1, 1, 1, 3);
    o.require(b == series({1, 1, 1, 1}), "(1,1,1,3) got " + b.to_string());
}

void quillen(Outcome& o)
{
    struct Case {
        finmonoid::FiniteMonoid g;
        std::uint32_t p;
        int D;
        IntSeries expect;
    };
    std::vector<Case> cases = {
        {finmonoid::FiniteMonoid::unitriangular3(2), 2, 5, series({1, 2, 2, 2, 1, 0})},
        {finmonoid::FiniteMonoid::unitriangular3(3), 3, 8, series({1, 2, 4, 4, 5, 4, 4, 2, 1})},
        {finmonoid::FiniteMonoid::from_spec("cyclic:4"), 2, 4, series({1, 1, 1, 1, 0})},
    };
    for (const auto& c : cases) {
        auto q = finmonoid::quillen_check(c.g, c.p, c.D);
        o.require(q.agree && q.aug_dims == c.expect && q.pbw_dims == c.expect,
                  c.g.name() + " aug " + q.aug_dims.to_string() + " pbw " + q.pbw_dims.to_string());
    }
}

void ideal_equivalence(Outcome& o)
{
    int cells = 0;
    for (const auto& t : ideal_theories())
        for (const auto& f : {Field::rationals(), Field::prime(2), Field::prime(3)})
            for (int d = 0; d <= 2; ++d) {
                auto r = lawvere::ideal_equality_check(t, d, caps_for(t), f);
                cells += static_cast<int>(r.cells.size());
                for (const auto& c : r.cells)
                    o.require(c.equal, t.name() + "/" + f.name() + " d=" + std::to_string(d) + " cell (" +
                                           std::to_string(c.m) + "," + std::to_string(c.n) + ")");
            }
    o.require(cells > 0, "no cells compared");
    if (o.ok)
        o.detail = std::to_string(cells) + " cells equal";
}

void filtration(Outcome& o)
{
    const Field f = Field::prime(2);
    for (const auto& t : ideal_theories()) {
        for (int d = 0; d <= 1; ++d)
            for (auto [m, n] : lawvere::ideal_cells(t, d + 1, caps_for(t))) {
                auto a = lawvere::polynomiality_ideal_cell(t, d, m, n, f);
                auto b = lawvere::polynomiality_ideal_cell(t, d + 1, m, n, f);
                o.require(lawvere::cell_contains(a, b), t.name() + " I(" + std::to_string(d + 1) + ") not in I(" +
                                                            std::to_string(d) + ")");
            }
        for (int d = 0; d <= 2; ++d) {
            auto pr = lawvere::right_closure_probes(t, d, caps_for(t), f, 100, 1000 + d);
            o.require(pr.probes == 100 && pr.failures == 0,
                      t.name() + " d=" + std::to_string(d) + " " + std::to_string(pr.failures) + " failures");
        }
    }
}

void degree(Outcome& o)
{
    auto t = Theory::linear(2);
    auto f = Field::prime(2);
    std::vector<std::pair<lawvere::FiniteModule, int>> mods = {{lawvere::FiniteModule::constant(t, f, 3), 0},
                                                               {lawvere::FiniteModule::tautological(t, f, 3), 1},
                                                               {lawvere::FiniteModule::tensor_square(t, f, 3), 2}};
    for (const auto& [M, expect] : mods) {
        auto r = lawvere::module_poly_degree(M);
        o.require(r.degree && *r.degree == expect, M.name() + " degree mismatch");
        for (int d = 0; d <= r.max_tested; ++d)
            o.require(lawvere::cross_effects_vanish(M, d + 1) == r.zero_at[d],
                      M.name() + " cross effect disagrees at d=" + std::to_string(d));
    }
}

void degenerate(Outcome& o)
{
    std::vector<std::pair<Theory, Field>> cases = {
        {Theory::free_band(3), Field::rationals()},      {Theory::free_band(3), Field::prime(2)},
        {Theory::free_comm_band(3), Field::rationals()}, {Theory::free_comm_band(3), Field::prime(2)},
        {Theory::linear(2), Field::rationals()}};
    for (const auto& [t, f] : cases) {
        for (int n = 0; n <= 3; ++n) {
            int idx = finmonoid::stabilization_index(lawvere::PowerMonoid(t, n, 1), f);
            o.require(idx == 1, t.name() + "/" + f.name() + " n=" + std::to_string(n) + " index " +
                                    std::to_string(idx));
        }
        for (auto [m, n] : lawvere::ideal_cells(t, 2, caps_for(t))) {
            auto i0 = lawvere::polynomiality_ideal_cell(t, 0, m, n, f);
            auto i1 = lawvere::polynomiality_ideal_cell(t, 1, m, n, f);
            auto i2 = lawvere::polynomiality_ideal_cell(t, 2, m, n, f);
            o.require(lawvere::cells_equal(i0, i1) && lawvere::cells_equal(i0, i2),
                      t.name() + "/" + f.name() + " cell (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    }
}

void gamma_nilpotent(Outcome& o)
{
    using gradeds::GammaSetting;
    auto a = gradeds::gamma_interval({GammaSetting::Kind::NilToNil, 1, 2, 0}, {2, 2, 5});
    o.require(a.interval() == std::vector<int>{0, 1}, "c0=1 c1=2 interval");
    const auto& w = a.first_failure;
    o.require(w && w->n == 2 && w->m == 1 && w->d == 2, "c0=1 c1=2 witness");
    auto b = gradeds::gamma_interval({GammaSetting::Kind::NilToNil, 2, 3, 0}, {2, 1, 4});
    o.require(b.interval() == std::vector<int>{0, 1, 2}, "c0=2 c1=3 interval");
    o.require(b.first_failure && b.first_failure->d == 3, "c0=2 c1=3 witness");
}

void gamma_modular(Outcome& o)
{
    using gradeds::GammaSetting;
    auto g = gradeds::gamma_interval({GammaSetting::Kind::NilToDim, 2, 0, 2}, {2, 2, 5});
    for (const auto& v : g.per_degree)
        if (v.d <= 2)
            o.require(v.agree, "disagreement at d=" + std::to_string(v.d));
    bool found = false;
    for (const auto& v : g.per_degree)
        if (v.d == 4 && v.witness && v.witness->n == 1 && v.witness->source == 1 && v.witness->target == 0)
            found = true;
    if (g.first_failure && g.first_failure->d == 4 && g.first_failure->n == 1 && g.first_failure->source == 1 &&
        g.first_failure->target == 0)
        found = true;
    o.require(found, "no d=4, n=1 witness with dims 1 vs 0");
}

void dim_strictness(Outcome& o)
{
    auto r = gradeds::dset_probe({gradeds::DsetSetting::Kind::Dimension, 2, 2}, Field::prime(2), {3, 3, 4});
    o.require(r.per_degree.size() == 5, "expected degrees 0..4");
    for (const auto& v : r.per_degree)
        o.require(v.strict, "not strict at d=" + std::to_string(v.d));
    auto t = Theory::linear(2);
    for (int n = 0; n <= 3; ++n) {
        int idx = finmonoid::stabilization_index(lawvere::PowerMonoid(t, n, 1), Field::prime(3));
        o.require(idx == 1, "mod2 over F3 n=" + std::to_string(n) + " index " + std::to_string(idx));
    }
}

void gamma_finite(Outcome& o)
{
    auto xi = lawvere::TheoryMap::reduction(4, 2);
    o.require(lawvere::validate_theory_map(xi).empty(), "reduction map invalid");
    auto f = Field::prime(2);
    const bool expect[] = {true, true, false};
    for (int d = 0; d <= 2; ++d) {
        auto g = lawvere::gamma_membership(xi, d, {3, 3}, f);
        o.require(g.member == expect[d], "d=" + std::to_string(d) + " membership");
    }
    // hand-derived: kernel on (1,1) is (u^2), u = g - 1; the degree-2 ideal is (u^3)
    SparseVector u = {{0, Scalar(f, -1)}, {1, Scalar::one(f)}};
    canonicalize(u);
    auto u2 = cyclic_product(4, u, u), u3 = cyclic_product(4, u2, u);
    Subspace hand(f, 4), cube(f, 4);
    hand.insert(u2);
    hand.insert(u3);
    cube.insert(u3);
    o.require(lawvere::kernel_ideal_cell(xi, 1, 1, f).space == hand, "kernel(1,1) != (u^2)");
    o.require(lawvere::polynomiality_ideal_cell(xi.source, 2, 1, 1, f).space == cube, "I(2)(1,1) != (u^3)");
}

void annihilator(Outcome& o)
{
    auto t = Theory::linear(2);
    auto f = Field::prime(2);
    for (int d = 0; d <= 2; ++d) {
        std::vector<lawvere::FiniteModule> parts;
        for (int X = 0; X * (d + 1) <= t.arity_cap(); ++X)
            parts.push_back(lawvere::FiniteModule::representable_quotient(t, f, X, d, 3));
        auto sum = lawvere::FiniteModule::direct_sum(parts);
        for (auto [m, n] : lawvere::ideal_cells(t, d, {3, 3}))
            o.require(lawvere::cells_equal(lawvere::annihilator_cell(sum, m, n),
                                           lawvere::polynomiality_ideal_cell(t, d, m, n, f)),
                      "d=" + std::to_string(d) + " cell (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
}

void stabilization(Outcome& o)
{
    auto mod2 = Theory::linear(2);
    const int expect[] = {2, 3, 4};
    for (int m = 1; m <= 3; ++m) {
        int idx = finmonoid::stabilization_index(lawvere::PowerMonoid(mod2, 1, m), Field::prime(2));
        o.require(idx == expect[m - 1], "mod2 m=" + std::to_string(m) + " index " + std::to_string(idx));
    }
    auto band = Theory::free_band(3);
    for (const auto& f : {Field::rationals(), Field::prime(2)})
        for (int m = 1; m <= 3; ++m) {
            int idx = finmonoid::stabilization_index(lawvere::PowerMonoid(band, 1, m), f);
            o.require(idx == 1, "band/" + f.name() + " m=" + std::to_string(m) + " index " + std::to_string(idx));
        }
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "witt-lyndon agreement", 1000, witt_lyndon},
        {2, "tensor identity", 1000, tensor_identity},
        {3, "sandling-tahara instances", 1000, sandling_tahara},
        {4, "quillen triangle", 5000, quillen},
        {5, "ideal equals augmentation power", 60000, ideal_equivalence},
        {6, "filtration and right closure", 0, filtration},
        {7, "degree coherence", 0, degree},
        {8, "degenerate polynomiality", 0, degenerate},
        {9, "nilpotent gamma interval", 1000, gamma_nilpotent},
        {10, "modular gamma bound", 0, gamma_modular},
        {11, "dimension strictness", 0, dim_strictness},
        {12, "finite gamma via kernels", 0, gamma_finite},
        {13, "annihilator law", 0, annihilator},
        {14, "stabilization detector", 0, stabilization},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0 && ms > c.limit_ms)
            o.require(false, "over time limit " + std::to_string(static_cast<long>(c.limit_ms)) + " ms");
        failed += o.ok ? 0 : 1;
        std::printf("[%s] %2d %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), ms,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
