#include "polyfun/linalg/matrix.hpp"

#include <algorithm>

namespace polyfun {

ExactMatrix::ExactMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

ExactMatrix ExactMatrix::identity(const Field& f, std::size_t n)
{
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& f, const std::vector<std::vector<long>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

std::vector<Scalar> ExactMatrix::row(std::size_t i) const
{
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

bool ExactMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    ExactMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero())
                    out(i, j) += a * o(k, j);
        }
    return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const
{
    ExactMatrix out = *this;
    for (auto& x : out.data_)
        x *= c;
    return out;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const
{
    ExactMatrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    out(i * o.rows_ + k, j * o.cols_ + l) = (*this)(i, j) * o(k, l);
    return out;
}

RowEchelon row_echelon(const ExactMatrix& m)
{
    if (!m.field().is_field())
        throw std::invalid_argument("rank over the integers: use smith_invariants");
    std::vector<std::vector<Scalar>> a;
    a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(m.row(i));

    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero())
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[r], a[piv]);
        Scalar inv = a[r][c].inverse();
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!a[r][j].is_zero())
                    a[i][j] -= f * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rank = r;
    out.basis = std::move(a);
    return out;
}

std::size_t rank_over_field(const ExactMatrix& m) { return row_echelon(m).rank; }

std::vector<BigInt> smith_invariants(const ExactMatrix& m)
{
    if (m.field().kind() != Field::Kind::Integers)
        throw std::invalid_argument("smith_invariants needs an integer matrix");
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            a[i][j] = m(i, j).as_integer();

    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // smallest nonzero entry in the trailing block
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (sgn(a[i][j]) != 0 && (pi == R || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == R)
                goto done;
            std::swap(a[t], a[pi]);
            for (auto& row : a)
                std::swap(row[t], row[pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (sgn(a[i][t]) == 0)
                    continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < C; ++j)
                    a[i][j] -= q * a[t][j];
                if (sgn(a[i][t]) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (sgn(a[t][j]) == 0)
                    continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < R; ++i)
                    a[i][j] -= q * a[i][t];
                if (sgn(a[t][j]) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // divisibility of the remaining block by the pivot
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R)
                break;
            for (std::size_t j = t; j < C; ++j)
                a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
done:
    return diag;
}

bool subspace_membership(const Field& f,
                         const std::vector<std::vector<Scalar>>& basis,
                         const std::vector<Scalar>& v)
{
    for (const auto& b : basis)
        if (b.size() != v.size())
            throw std::invalid_argument("row length mismatch in membership test");
    if (basis.empty())
        return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    ExactMatrix m(f, basis.size(), v.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            m(i, j) = basis[i][j];
    ExactMatrix ext(f, basis.size() + 1, v.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            ext(i, j) = basis[i][j];
    for (std::size_t j = 0; j < v.size(); ++j)
        ext(basis.size(), j) = v[j];
    return rank_over_field(m) == rank_over_field(ext);
}

std::vector<std::vector<Scalar>> left_kernel(const ExactMatrix& m)
{
    // nullspace of the transpose, read off the reduced echelon form
    ExactMatrix t = m.transpose();
    RowEchelon e = row_echelon(t);
    const Field& f = m.field();
    std::vector<bool> is_pivot(t.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t free = 0; free < t.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> x(t.cols(), Scalar::zero(f));
        x[free] = Scalar::one(f);
        for (std::size_t r = 0; r < e.rank; ++r)
            x[e.pivots[r]] = -e.basis[r][free];
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace polyfun
