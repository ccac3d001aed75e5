#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace polyfun::lawvere {

using Elem = std::uint32_t;

// Upper bound on any enumerated hom-set or monoid carrier.
inline constexpr std::uint64_t kHomGuard = 1000000;

// Concrete carrier of a substitution theory: C_n = C(n,1) as indices
// 0..size(n)-1 for every arity n <= arity_cap().
class TheoryModel {
public:
    virtual ~TheoryModel() = default;
    virtual std::string name() const = 0;
    virtual int arity_cap() const = 0;
    virtual std::size_t size(int n) const = 0;
    // k-th projection in C_n, 0 <= k < n.
    virtual Elem projection(int n, int k) const = 0;
    // f in C_N applied to N elements of C_k.
    virtual Elem substitute(int N, Elem f, int k, const Elem* args) const = 0;
    // The binary operation in C_2 and the constant in C_0 defining the star
    // product.
    virtual Elem nabla() const = 0;
    virtual Elem eta() const = 0;
    virtual std::string describe(int n, Elem f) const = 0;
    // f * g in C_n; defaults to substitution into nabla.
    virtual Elem star(int n, Elem f, Elem g) const;
};

// Lawvere theory with finite hom-sets C(n,m) = C_n^m.
class Theory {
public:
    explicit Theory(std::shared_ptr<const TheoryModel> model);

    // Linear forms over Z/r: C_n = (Z/r)^n, star = addition.
    static Theory linear(std::uint32_t r, int arity_cap = 3);
    // Free commutative bands: C_n = subsets of {1..n}, star = union.
    static Theory free_comm_band(int arity_cap = 3);
    // Free bands: C_n = the free band on n letters (n <= 3), star = product.
    static Theory free_band(int arity_cap = 3);
    // "mod2", "mod3", "mod4", "modR", "cband", "band", optionally ":cap".
    static Theory from_name(const std::string& name);

    std::string name() const { return model_->name(); }
    int arity_cap() const { return model_->arity_cap(); }
    std::size_t size(int n) const;
    Elem projection(int n, int k) const { return model_->projection(n, k); }
    Elem substitute(int N, Elem f, int k, const std::vector<Elem>& args) const;
    Elem star(int n, Elem f, Elem g) const { return model_->star(n, f, g); }
    // Unit of the star product in C_n.
    Elem unit(int n) const;
    std::string describe(int n, Elem f) const { return model_->describe(n, f); }

    // |C(n,m)|, throwing CapExceeded above kHomGuard.
    std::size_t hom_size(int n, int m) const;

private:
    std::shared_ptr<const TheoryModel> model_;
    void check_arity(int n) const;
};

// A morphism n -> m, given by m elements of C_n.
struct Morphism {
    int n = 0, m = 0;
    std::vector<Elem> comps;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Position of f in the canonical order of C(n,m): mixed radix with the first
// component least significant.
std::uint32_t morphism_index(const Theory& t, const Morphism& f);
Morphism morphism_at(const Theory& t, int n, int m, std::uint32_t index);
std::vector<Morphism> hom_elements(const Theory& t, int n, int m);

Morphism identity_morphism(const Theory& t, int n);
// g o f for f: n -> k and g: k -> m.
Morphism compose(const Theory& t, const Morphism& g, const Morphism& f);
Elem star_product(const Theory& t, int n, Elem f, Elem g);
Morphism random_morphism(const Theory& t, int n, int m, std::mt19937_64& rng);

struct TheoryValidation {
    bool lawvere_axioms = true; // associativity and unit laws on samples
    bool zero_object = true;    // (Z): |C_0| = 1
    bool star_monoid = true;    // (M): star associative and unital
    bool generated = true;      // (M*): projected C_1 generates each C_n
    std::string failure;
    bool ok() const { return lawvere_axioms && zero_object && star_monoid && generated; }
};

TheoryValidation validate_theory(const Theory& t, int samples = 200, std::uint64_t seed = 1);

} // namespace polyfun::lawvere
