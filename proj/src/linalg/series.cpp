#include "polyfun/linalg/series.hpp"

#include <stdexcept>

namespace polyfun {

IntSeries::IntSeries(int degree_cap)
{
    if (degree_cap < 0)
        throw std::invalid_argument("negative degree cap");
    c_.assign(degree_cap + 1, BigInt(0));
}

IntSeries::IntSeries(std::vector<BigInt> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty())
        throw std::invalid_argument("empty series");
}

IntSeries IntSeries::one(int degree_cap)
{
    IntSeries s(degree_cap);
    s.c_[0] = 1;
    return s;
}

IntSeries IntSeries::operator*(const IntSeries& o) const
{
    int D = std::min(degree_cap(), o.degree_cap());
    IntSeries out(D);
    for (int i = 0; i <= D; ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (int j = 0; i + j <= D; ++j)
            out.c_[i + j] += c_[i] * o.c_[j];
    }
    return out;
}

std::string IntSeries::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ",";
        s += c_[i].get_str();
    }
    return s + "]";
}

IntSeries series_expand(const std::vector<std::pair<int, BigInt>>& factors, int D)
{
    IntSeries acc = IntSeries::one(D);
    for (const auto& [i, e] : factors) {
        if (i < 1)
            throw std::invalid_argument("factor degree must be positive");
        if (sgn(e) == 0 || i > D)
            continue;
        // (1 - t^i)^(-e) = sum_k binom(e+k-1, k) t^(ik) for e > 0,
        // (1 - t^i)^(|e|) = sum_k (-1)^k binom(|e|, k) t^(ik) otherwise.
        IntSeries f(D);
        for (int k = 0; k * i <= D; ++k) {
            BigInt b;
            if (e > 0) {
                BigInt top = e + k - 1;
                mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), k);
            } else {
                BigInt top = -e;
                mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), k);
                if (k % 2)
                    b = -b;
            }
            f[k * i] = b;
        }
        acc = acc * f;
    }
    return acc;
}

} // namespace polyfun
