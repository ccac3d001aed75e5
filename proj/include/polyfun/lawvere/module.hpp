#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyfun/lawvere/ideal.hpp"
#include "polyfun/linalg/matrix.hpp"

namespace polyfun::lawvere {

// Functor C -> k-Mod on objects 0..object_cap(): a space M(n) per object and
// a matrix of shape dim M(m) x dim M(n) for every morphism n -> m.
class FiniteModule {
public:
    using Action = std::function<ExactMatrix(const Morphism&)>;

    FiniteModule(Theory t, Field f, std::vector<std::size_t> dims, Action act, std::string name);

    // k at every object, every morphism acting as the identity.
    static FiniteModule constant(const Theory& t, const Field& f, int cap);
    static FiniteModule zero(const Theory& t, const Field& f, int cap);
    // n -> F_p^n for the linear theory over Z/p, a morphism acting by its
    // matrix of coefficients.
    static FiniteModule tautological(const Theory& t, const Field& f, int cap);
    // Tensor square of the tautological module.
    static FiniteModule tensor_square(const Theory& t, const Field& f, int cap);
    // L(-,k) / I^(d)(-,k); d < 0 gives the plain representable L(-,k).
    static FiniteModule representable_quotient(const Theory& t, const Field& f, int k, int d, int cap);
    static FiniteModule direct_sum(const std::vector<FiniteModule>& parts, std::string name = {});

    const Theory& theory() const { return t_; }
    const Field& field() const { return f_; }
    const std::string& name() const { return name_; }
    int object_cap() const { return static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int n) const;

    ExactMatrix act(const Morphism& f) const;
    ExactMatrix act(const LinCombo& x) const;

private:
    Theory t_;
    Field f_;
    std::vector<std::size_t> dims_;
    Action act_;
    std::string name_;
};

// Compatibility with composition and identities on random pairs; empty when
// fine.
std::string check_functoriality(const FiniteModule& M, int samples = 100, std::uint64_t seed = 5);

// cr_k(M)(n_1..n_k): kernel of M(sum n_i) -> direct sum of the M(sum with
// n_i omitted) along the block projections.
std::size_t cross_effect_dim(const FiniteModule& M, const std::vector<int>& objects);
// Whether cr_k vanishes on every tuple of positive objects with sum <= cap.
bool cross_effects_vanish(const FiniteModule& M, int k);

struct DegreeReport {
    // Least d with pi^d_n acting as zero for all testable n >= 1.
    std::optional<int> degree;
    // Largest d for which pi^d_1 could be tested.
    int max_tested = -1;
    // zero_at[d]: pi^d acts as zero on every testable object
    std::vector<bool> zero_at;
};

DegreeReport module_poly_degree(const FiniteModule& M);

// Largest submodule killed by J, on the objects n for which every cell
// (m,n) with m <= cap is present in J.
FiniteModule vanishing_submodule(const FiniteModule& M, const IdealFamily& J);
// M / (J acting on M), using the cells of J present.
FiniteModule covanishing_quotient(const FiniteModule& M, const IdealFamily& J);

// Combinations in L(m,n) acting as zero from M(n) to M(m).
IdealCell annihilator_cell(const FiniteModule& M, int m, int n);

} // namespace polyfun::lawvere
