#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyfun/linalg/scalar.hpp"

namespace polyfun {

// Sorted by column, no explicit zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

// Sort, merge duplicate columns and drop zeros.
void canonicalize(SparseVector& v);
// v + c * w
SparseVector axpy(const SparseVector& v, const Scalar& c, const SparseVector& w);

// Incrementally built subspace of F^n kept in echelon form. Each stored row
// is normalised so that its largest column (the pivot) has coefficient 1.
// Taking pivots at the largest column keeps spans of differences g - e
// (e at column 0) trivially reduced.
class Subspace {
public:
    Subspace(const Field& f, std::size_t ambient_dim);

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    // Returns true iff the dimension grew.
    bool insert(SparseVector v);
    // Remainder of v modulo the subspace; zero on every pivot column and
    // independent of the chosen representative.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    bool contains_all(const Subspace& other) const;
    bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

    const std::vector<SparseVector>& basis() const { return rows_; }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains_all(b);
    }

private:
    Field field_;
    std::size_t ambient_;
    std::vector<SparseVector> rows_;
    std::vector<std::int32_t> pivot_row_;
};

} // namespace polyfun
