#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyfun/freegroup/word.hpp"
#include "polyfun/linalg/scalar.hpp"

namespace polyfun::magnus {

using Monomial = std::vector<std::uint8_t>; // generator indices, 0-based

struct ShortLex {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

// Free nilpotent group F_n / gamma_{c+1} (integer coefficients) or the
// dimension quotient F_n / D_{c+1,p} (coefficients in F_p); both are modelled
// by the free associative algebra truncated above degree c.
struct GroupModel {
    enum class Kind { Nilpotent, Dimension };
    Kind kind;
    int n;
    int c;
    std::uint32_t p = 0;

    static GroupModel nilpotent(int n, int c);
    static GroupModel dimension(int n, int c, std::uint32_t p);
    int cap() const { return c; }
    Field field() const;
};

// Element of the free associative algebra on X_1..X_n modulo degree > D.
class TruncatedSeries {
public:
    TruncatedSeries(int n, int D, const Field& f);
    static TruncatedSeries one(int n, int D, const Field& f);

    int generators() const { return n_; }
    int cap() const { return D_; }
    const Field& field() const { return field_; }
    const std::map<Monomial, Scalar, ShortLex>& terms() const { return terms_; }

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);
    bool is_one() const;
    // Least degree >= 1 carrying a nonzero coefficient.
    std::optional<int> least_nonconstant_degree() const;
    TruncatedSeries truncated(int D) const;

    // Right multiplication by 1 + X_i or by its inverse.
    TruncatedSeries times_letter(const freegroup::Letter& l) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
    std::string to_string() const;

private:
    int n_, D_;
    Field field_;
    std::map<Monomial, Scalar, ShortLex> terms_;
};

TruncatedSeries truncated_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Inverse of a series with constant term 1.
TruncatedSeries truncated_inverse(const TruncatedSeries& a);

TruncatedSeries magnus_embed(const freegroup::Word& w, const GroupModel& model);
bool same_element(const freegroup::Word& u, const freegroup::Word& v, const GroupModel& model);

// Least k with w in gamma_k but not gamma_{k+1}; nullopt when w lies in
// gamma_{c_max+1}.
std::optional<int> gamma_weight(const freegroup::Word& w, int c_max);
// Membership of w in the mod-p dimension subgroup D_{c,p}.
bool dim_subgroup_member(const freegroup::Word& w, int c, std::uint32_t p);

freegroup::Word substitute(const freegroup::Word& w, const std::vector<freegroup::Word>& images);
TruncatedSeries apply_substitution(const freegroup::Word& w,
                                   const std::vector<freegroup::Word>& images,
                                   const GroupModel& model);

} // namespace polyfun::magnus
