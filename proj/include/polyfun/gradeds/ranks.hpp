#pragma once

#include <limits>
#include <vector>

#include "polyfun/linalg/series.hpp"

namespace polyfun::gradeds {

// Nilpotency class "infinity": the free group itself.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Ranks r_1..r_C of a graded object; degrees above C have rank 0.
struct GradedRanks {
    std::vector<BigInt> ranks; // ranks[i] is the rank in degree i+1

    int cap() const { return static_cast<int>(ranks.size()); }
    BigInt at(int degree) const;
    friend bool operator==(const GradedRanks&, const GradedRanks&) = default;
    std::string to_string() const;
};

GradedRanks free_nilpotent_lie_ranks(int n, int c);
GradedRanks product_scale(const GradedRanks& r, long m);
GradedRanks truncate(const GradedRanks& r, int c);

// prod_i (1 - t^i)^(-r_i)
IntSeries symmetric_power_dims(const GradedRanks& r, int D);
// Graded ranks of the augmentation quotients of (F_n / gamma_{c+1})^m.
IntSeries q_ranks_nilpotent(int n, int m, int c, int D);

// Degree d carries sum over i p^j = d of witt_rank(n, i).
GradedRanks free_restricted_lie_dims(int n, std::uint32_t p, int D);
// prod_i ((1 - t^(ip)) / (1 - t^i))^(r_i); p = 0 gives the symmetric algebra.
IntSeries restricted_pbw_dims(const GradedRanks& r, std::uint32_t p, int D);
// Graded dimensions of F_p[(F_n / D_{c+1,p})^m] with respect to augmentation
// powers. p = 0 is routed to the nilpotent case.
IntSeries q_ranks_dimension(int n, int m, int c, std::uint32_t p, int D);

} // namespace polyfun::gradeds
