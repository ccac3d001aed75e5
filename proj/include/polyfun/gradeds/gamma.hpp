#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyfun/gradeds/ranks.hpp"
#include "polyfun/linalg/scalar.hpp"

namespace polyfun::gradeds {

struct Caps {
    int n_max = 2;
    int m_max = 2;
    int D = 5;
};

// The quotient functor xi between two categories of groups, compared through
// the graded ranks of its source and target.
struct GammaSetting {
    enum class Kind {
        NilToNil, // N_{c1} -> N_{c0}
        DimToDim, // Dim_{c1,p} -> Dim_{c0,p}, c1 may be kInfinity
        NilToDim  // N_{c0} -> Dim_{c0,p}
    };
    Kind kind;
    int c0;
    int c1 = 0;
    std::uint32_t p = 0;

    std::string name() const;
    static Kind parse_kind(const std::string& s);
    // Rank of degree d for the n-generator, m-fold product on either side.
    IntSeries source_ranks(int n, int m, int D) const;
    IntSeries target_ranks(int n, int m, int D) const;
    // Graded generator ranks; only for NilToNil and DimToDim.
    GradedRanks source_lie(int n, int m, int D) const;
    GradedRanks target_lie(int n, int m, int D) const;
};

struct Witness {
    int n, m, d;
    BigInt source, target;
};

struct DegreeVerdict {
    int d;
    bool agree;
    std::optional<Witness> witness;
};

struct GammaReport {
    GammaSetting setting;
    Caps caps;
    std::vector<DegreeVerdict> per_degree;
    // Largest d such that 0..d all agree, i.e. the maximal initial run.
    int interval_max = -1;
    std::optional<Witness> first_failure;
    // Source ranks dominate target ranks everywhere within caps.
    bool dominated = true;
    // For same-kind settings: agreement below the first Lie-rank drop and a
    // strict drop from there on.
    bool monotone_ok = true;

    std::vector<int> interval() const;
};

GammaReport gamma_interval(const GammaSetting& s, const Caps& caps);

struct DsetSetting {
    enum class Kind { Nilpotent, Dimension, Trivial };
    Kind kind;
    int c = 1;
    std::uint32_t p = 0;

    std::string name() const;
    static Kind parse_kind(const std::string& s);
    // Dimensions of Aug^d / Aug^(d+1) of k[C_n^m] for d = 0..D.
    IntSeries ranks(int n, int m, const Field& k, int D) const;
};

struct DsetDegree {
    int d;
    // Some (n, m) within caps has a positive rank in degree d + 1.
    bool strict;
    // d belongs to the degree set: d = 0, or a positive rank in degree d.
    bool in_degree_set;
    std::optional<Witness> witness; // target field unused
};

struct DsetReport {
    DsetSetting setting;
    Field field;
    Caps caps;
    std::vector<DsetDegree> per_degree;
};

DsetReport dset_probe(const DsetSetting& s, const Field& k, const Caps& caps);

} // namespace polyfun::gradeds
