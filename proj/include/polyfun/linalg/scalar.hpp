#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace polyfun {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Raised when a requested computation exceeds a configured size guard.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

// Coefficient ring: the integers, the rationals, or a prime field F_p.
class Field {
public:
    enum class Kind : std::uint8_t { Integers, Rationals, Prime };

    static Field integers() { return Field(Kind::Integers, 0); }
    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint32_t p);

    // Accepts "Z", "Q", "Fp:3", "F3".
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t modulus() const { return p_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_field() const { return kind_ != Kind::Integers; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
};

class Scalar {
public:
    Scalar() : v_(BigInt(0)) {}
    Scalar(const Field& f, long v);
    Scalar(const Field& f, const BigInt& v);

    static Scalar zero(const Field& f) { return Scalar(f, 0L); }
    static Scalar one(const Field& f) { return Scalar(f, 1L); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

    Scalar inverse() const;

    const BigInt& as_integer() const { return std::get<BigInt>(v_); }
    const BigRational& as_rational() const { return std::get<BigRational>(v_); }
    std::uint32_t residue() const { return std::get<Residue>(v_).value; }

    std::string to_string() const;

private:
    std::variant<BigInt, BigRational, Residue> v_;
};

} // namespace polyfun
