#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyfun::finmonoid {

using Elem = std::uint32_t;

// Anything with a finite carrier 0..size()-1, an identity and a product.
class MonoidView {
public:
    virtual ~MonoidView() = default;
    virtual std::size_t size() const = 0;
    virtual Elem identity() const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    // A generating set; defaults to every element.
    virtual std::vector<Elem> generators() const;
};

// Finite monoid given by its multiplication table.
class FiniteMonoid : public MonoidView {
public:
    // table[a][b] = a*b. Checks closure, identity and associativity (all
    // triples up to 256 elements, a fixed pseudo-random sample beyond).
    FiniteMonoid(const std::vector<std::vector<Elem>>& table, Elem identity, std::string name = {});

    static FiniteMonoid cyclic(std::uint32_t r);
    static FiniteMonoid elementary_abelian(std::uint32_t p, std::uint32_t k);
    static FiniteMonoid free_band(int n);
    static FiniteMonoid free_comm_band(int n);
    static FiniteMonoid unitriangular3(std::uint32_t p);
    static FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);
    // "cyclic:4", "elab:2:3", "band:2", "cband:3", "ut3:2", "a*b" for products.
    static FiniteMonoid from_spec(const std::string& spec);

    // First line "k identity", then k rows of k indices.
    static FiniteMonoid parse(const std::string& text);
    std::string to_text() const;

    std::size_t size() const override { return k_; }
    Elem identity() const override { return e_; }
    Elem mul(Elem a, Elem b) const override { return table_[a * k_ + b]; }
    std::vector<Elem> generators() const override { return gens_; }

    const std::string& name() const { return name_; }
    bool is_group() const { return inverse_.has_value(); }
    Elem inverse(Elem a) const;
    Elem power(Elem a, std::uint64_t k) const;
    // Element labels, when the constructor knows a readable form.
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::size_t k_;
    Elem e_;
    std::vector<Elem> table_;
    std::optional<std::vector<Elem>> inverse_;
    std::vector<Elem> gens_;
    std::string name_;
    std::vector<std::string> labels_;

    void compute_generators();
};

// Canonical form of a word in the free band on letters 0..n-1: two words are
// equal in the free band iff their keys agree.
std::string free_band_key(const std::vector<int>& word);
// Shortest representatives of the free band on n <= 3 letters, in the index
// order used by FiniteMonoid::free_band(n).
std::vector<std::vector<int>> free_band_words(int n);

} // namespace polyfun::finmonoid
