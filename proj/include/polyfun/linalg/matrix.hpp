#pragma once

#include <cstddef>
#include <vector>

#include "polyfun/linalg/scalar.hpp"

namespace polyfun {

// Dense row-major matrix whose entries share one coefficient ring.
class ExactMatrix {
public:
    ExactMatrix(const Field& f, std::size_t rows, std::size_t cols);
    static ExactMatrix identity(const Field& f, std::size_t n);
    // Rows given as integers, read into the ring f.
    static ExactMatrix from_rows(const Field& f, const std::vector<std::vector<long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const;
    bool is_zero() const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix scaled(const Scalar& c) const;
    ExactMatrix transpose() const;
    ExactMatrix kron(const ExactMatrix& o) const;
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    std::size_t rank = 0;
    // Reduced row echelon basis of the row space, pivots normalised to 1.
    std::vector<std::vector<Scalar>> basis;
    std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(const ExactMatrix& m);
std::size_t rank_over_field(const ExactMatrix& m);

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
std::vector<BigInt> smith_invariants(const ExactMatrix& m);

bool subspace_membership(const Field& f,
                         const std::vector<std::vector<Scalar>>& basis,
                         const std::vector<Scalar>& v);

// Basis of {c : c^T m = 0}, i.e. linear relations among the rows of m.
std::vector<std::vector<Scalar>> left_kernel(const ExactMatrix& m);

} // namespace polyfun
