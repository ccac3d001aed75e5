#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyfun/linalg/scalar.hpp"

namespace polyfun {

// Truncated power series c_0 + c_1 t + ... + c_D t^D with integer coefficients.
class IntSeries {
public:
    explicit IntSeries(int degree_cap);
    IntSeries(std::vector<BigInt> coeffs);
    static IntSeries one(int degree_cap);

    int degree_cap() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& operator[](int i) const { return c_[i]; }
    BigInt& operator[](int i) { return c_[i]; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntSeries operator*(const IntSeries& o) const;
    friend bool operator==(const IntSeries&, const IntSeries&) = default;

    std::string to_string() const;

private:
    std::vector<BigInt> c_;
};

// Coefficients of prod_i (1 - t^i)^(-e_i) through degree D. A negative exponent
// contributes the numerator factor (1 - t^i)^|e_i|.
IntSeries series_expand(const std::vector<std::pair<int, BigInt>>& factors, int D);

} // namespace polyfun
