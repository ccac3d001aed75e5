#pragma once

#include <vector>

#include "polyfun/finmonoid/monoid.hpp"
#include "polyfun/gradeds/ranks.hpp"
#include "polyfun/linalg/series.hpp"

namespace polyfun::finmonoid {

using Subgroup = std::vector<Elem>; // sorted element indices

Subgroup subgroup_closure(const FiniteMonoid& g, const std::vector<Elem>& gens);
Subgroup commutator_subgroup(const FiniteMonoid& g, const Subgroup& a, const Subgroup& b);
// Subgroup generated by x^k for x in a.
Subgroup power_subgroup(const FiniteMonoid& g, const Subgroup& a, std::uint64_t k);
bool is_subset(const Subgroup& a, const Subgroup& b);

// gamma_1 = G, gamma_{c+1} = [gamma_c, G]; ends at the first repeated term.
std::vector<Subgroup> lower_central_series(const FiniteMonoid& g);

struct JenningsSeries {
    std::vector<Subgroup> terms;      // D_1, D_2, ...
    gradeds::GradedRanks factor_dims; // log_p |D_c / D_{c+1}|
    bool degenerate = false;          // p does not divide |G|
};

// D_c = product over i p^j >= c of gamma_i^(p^j).
JenningsSeries jennings_series(const FiniteMonoid& g, std::uint32_t p);

struct QuillenResult {
    bool agree;
    IntSeries aug_dims;
    IntSeries pbw_dims;
};

QuillenResult quillen_check(const FiniteMonoid& g, std::uint32_t p, int D);

} // namespace polyfun::finmonoid
