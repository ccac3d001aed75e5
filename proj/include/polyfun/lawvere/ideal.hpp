#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfun/finmonoid/monoid.hpp"
#include "polyfun/lawvere/theory.hpp"
#include "polyfun/linalg/subspace.hpp"

namespace polyfun::lawvere {

// Element of L(m,n) = k[C(n,m)]; columns are morphism_index values.
struct LinCombo {
    int m = 0, n = 0;
    Field field;
    SparseVector terms;
};

// Subspace of L(m,n) in echelon form.
struct IdealCell {
    int m = 0, n = 0;
    Subspace space;

    std::size_t dim() const { return space.dim(); }
    std::size_t ambient_dim() const { return space.ambient_dim(); }
};

// Cells (m,n) with m <= max_target and n <= max_source.
struct CellCaps {
    int max_target = 3;
    int max_source = 3;
};

// D^T: n -> n(d+1), the T-th diagonal with units outside T, T a bitmask
// over the d+1 blocks.
Morphism diagonal_morphism(const Theory& t, int d, int n, unsigned T);
// The 2^(d+1) signed terms (D^T, (-1)^(d+1-|T|)) before cancellation.
std::vector<std::pair<Morphism, int>> pi_terms(const Theory& t, int d, int n);
// pi^d_n in L(n(d+1), n).
LinCombo pi_element(const Theory& t, int d, int n, const Field& f);

// g o x and x o h for a combination x.
LinCombo left_compose(const Theory& t, const Morphism& g, const LinCombo& x);
LinCombo right_compose(const Theory& t, const LinCombo& x, const Morphism& h);

// span{g o pi^d_n : g in C(n(d+1), m)}
IdealCell polynomiality_ideal_cell(const Theory& t, int d, int m, int n, const Field& f);
// Aug^(d+1) of k[C_n^m] for the componentwise star product.
IdealCell aug_power_cell(const Theory& t, int d, int m, int n, const Field& f);
// span{g o z o h} over morphisms factoring through the object 0.
IdealCell zero_ideal_cell(const Theory& t, int m, int n, const Field& f);
IdealCell full_cell(const Theory& t, int m, int n, const Field& f);

// C(n,m) with the componentwise star product.
class PowerMonoid : public finmonoid::MonoidView {
public:
    PowerMonoid(Theory t, int n, int m);
    std::size_t size() const override { return size_; }
    finmonoid::Elem identity() const override { return identity_; }
    finmonoid::Elem mul(finmonoid::Elem a, finmonoid::Elem b) const override;
    // Tuples with a single non-unit coordinate.
    std::vector<finmonoid::Elem> generators() const override;

private:
    Theory t_;
    int n_, m_;
    std::size_t size_, base_;
    finmonoid::Elem identity_ = 0;
    std::vector<Elem> star_; // star table of C_n
};

struct SkippedCell {
    int m, n;
    std::string reason;
};

// Cells within caps for which pi^d_n is defined and the hom-set fits.
std::vector<std::pair<int, int>> ideal_cells(const Theory& t, int d, const CellCaps& caps,
                                             std::vector<SkippedCell>* skipped = nullptr);

struct CellComparison {
    int m, n;
    std::size_t dim_ideal, dim_aug;
    bool equal;
};

struct EqualityReport {
    std::string theory;
    int d = 0;
    std::vector<CellComparison> cells;
    std::vector<SkippedCell> skipped;
    bool all_equal() const;
};

EqualityReport ideal_equality_check(const Theory& t, int d, const CellCaps& caps, const Field& f);

// Polynomiality ideal on every computable cell, keyed by (m,n).
using IdealFamily = std::map<std::pair<int, int>, IdealCell>;
IdealFamily polynomiality_family(const Theory& t, int d, const CellCaps& caps, const Field& f);

struct ClosureProbe {
    int probes = 0;
    int failures = 0;
    std::vector<std::string> failed;
};

// Random g: n(d+1) -> m and h: n' -> n; checks g o pi^d_n o h lies in the
// polynomiality cell (m, n').
ClosureProbe right_closure_probes(const Theory& t, int d, const CellCaps& caps, const Field& f, int count,
                                  std::uint64_t seed = 7);

// A full identity-on-objects functor between substitution theories, given
// elementwise on each C_n.
struct TheoryMap {
    Theory source, target;
    std::function<Elem(int n, Elem f)> apply;
    std::string name;

    // Z/r -> Z/s for s | r.
    static TheoryMap reduction(std::uint32_t r, std::uint32_t s, int arity_cap = 3);
    static TheoryMap identity(const Theory& t);
};

// Checks compatibility with substitution on samples and surjectivity of
// every C_n -> D_n; returns an empty string when fine.
std::string validate_theory_map(const TheoryMap& xi, int samples = 200, std::uint64_t seed = 3);

// Kernel of k[C(n,m)] -> k[D(n,m)].
IdealCell kernel_ideal_cell(const TheoryMap& xi, int m, int n, const Field& f);

struct GammaCell {
    int m, n;
    std::size_t dim_kernel, dim_ideal;
    bool contained;
    // dim L_C/I_C and dim L_D/I_D; equal iff the induced map is injective
    std::size_t dim_source_quotient, dim_target_quotient;
};

struct GammaMembership {
    int d = 0;
    bool member = true;
    std::vector<GammaCell> cells;
    std::vector<SkippedCell> skipped;
};

// K_xi contained in I^(d) on every cell within caps.
GammaMembership gamma_membership(const TheoryMap& xi, int d, const CellCaps& caps, const Field& f);

bool cell_contains(const IdealCell& big, const IdealCell& small);
bool cells_equal(const IdealCell& a, const IdealCell& b);

} // namespace polyfun::lawvere
