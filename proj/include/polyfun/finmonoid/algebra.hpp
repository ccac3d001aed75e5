#pragma once

#include <vector>

#include "polyfun/finmonoid/monoid.hpp"
#include "polyfun/linalg/series.hpp"
#include "polyfun/linalg/subspace.hpp"

namespace polyfun::finmonoid {

// Powers Aug^0 ⊇ Aug^1 ⊇ ... of the augmentation ideal of k[M], computed
// until two consecutive powers agree or the requested power is reached.
struct AlgebraFiltration {
    Field field;
    std::vector<Subspace> powers; // powers[d] spans Aug^d
    bool stabilized = false;      // last two entries are equal

    std::size_t dim(int d) const;
};

// Right product v * x in the monoid algebra.
SparseVector right_multiply(const MonoidView& m, const SparseVector& v, Elem x);
// v * (x - e)
SparseVector times_augmentation(const MonoidView& m, const SparseVector& v, Elem x);

AlgebraFiltration aug_filtration(const MonoidView& m, const Field& f, int max_power);
// Just Aug^d, built through the same chain.
Subspace aug_power(const MonoidView& m, const Field& f, int d);

// dim Aug^d - dim Aug^(d+1) for d = 0..D.
IntSeries aug_power_dims(const MonoidView& m, const Field& f, int D);
// Least d with Aug^d = Aug^(d+1).
int stabilization_index(const MonoidView& m, const Field& f);

// Invariant factors of Aug_Z^d / Aug_Z^(d+1): entries > 1 for the torsion,
// followed by one 0 per free summand.
std::vector<BigInt> q_invariants_integral(const MonoidView& m, int d);

} // namespace polyfun::finmonoid
