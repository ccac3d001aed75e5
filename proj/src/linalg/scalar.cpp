#include "polyfun/linalg/scalar.hpp"

#include <charconv>

namespace polyfun {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text)
{
    if (text == "Q" || text == "QQ")
        return rationals();
    if (text == "Z" || text == "ZZ")
        return integers();
    std::string_view digits;
    if (text.rfind("Fp:", 0) == 0)
        digits = text.substr(3);
    else if (text.rfind("F", 0) == 0)
        digits = text.substr(1);
    else
        throw std::invalid_argument("unknown field: " + std::string(text));
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw std::invalid_argument("bad field characteristic: " + std::string(text));
    return prime(p);
}

std::string Field::name() const
{
    switch (kind_) {
    case Kind::Integers:
        return "Z";
    case Kind::Rationals:
        return "Q";
    default:
        return "F" + std::to_string(p_);
    }
}

namespace {

std::uint32_t reduce_mod(const BigInt& v, std::uint32_t p)
{
    BigInt r = v % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

[[noreturn]] void mismatch() { throw std::invalid_argument("scalar ring mismatch"); }

} // namespace

Scalar::Scalar(const Field& f, long v) : Scalar(f, BigInt(v)) {}

Scalar::Scalar(const Field& f, const BigInt& v)
{
    switch (f.kind()) {
    case Field::Kind::Integers:
        v_ = v;
        break;
    case Field::Kind::Rationals:
        v_ = BigRational(v);
        break;
    case Field::Kind::Prime:
        v_ = Residue{reduce_mod(v, f.modulus()), f.modulus()};
        break;
    }
}

Field Scalar::field() const
{
    if (std::holds_alternative<BigInt>(v_))
        return Field::integers();
    if (std::holds_alternative<BigRational>(v_))
        return Field::rationals();
    return Field::prime(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return r->value == 0;
    if (auto z = std::get_if<BigInt>(&v_))
        return sgn(*z) == 0;
    return sgn(std::get<BigRational>(v_)) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return r->value == 1;
    if (auto z = std::get_if<BigInt>(&v_))
        return *z == 1;
    return std::get<BigRational>(v_) == 1;
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    if (auto r = std::get_if<Residue>(&out.v_)) {
        if (r->value)
            r->value = r->p - r->value;
    } else if (auto z = std::get_if<BigInt>(&out.v_)) {
        *z = -*z;
    } else {
        auto& q = std::get<BigRational>(out.v_);
        q = -q;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (auto r = std::get_if<Residue>(&v_)) {
        auto s = std::get_if<Residue>(&o.v_);
        if (!s || s->p != r->p)
            mismatch();
        std::uint32_t t = r->value + s->value;
        r->value = t >= r->p ? t - r->p : t;
    } else if (auto z = std::get_if<BigInt>(&v_)) {
        auto w = std::get_if<BigInt>(&o.v_);
        if (!w)
            mismatch();
        *z += *w;
    } else {
        auto w = std::get_if<BigRational>(&o.v_);
        if (!w)
            mismatch();
        std::get<BigRational>(v_) += *w;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (auto r = std::get_if<Residue>(&v_)) {
        auto s = std::get_if<Residue>(&o.v_);
        if (!s || s->p != r->p)
            mismatch();
        r->value = static_cast<std::uint32_t>(std::uint64_t(r->value) * s->value % r->p);
    } else if (auto z = std::get_if<BigInt>(&v_)) {
        auto w = std::get_if<BigInt>(&o.v_);
        if (!w)
            mismatch();
        *z *= *w;
    } else {
        auto w = std::get_if<BigRational>(&o.v_);
        if (!w)
            mismatch();
        std::get<BigRational>(v_) *= *w;
    }
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    Scalar out = *this;
    if (auto r = std::get_if<Residue>(&out.v_)) {
        r->value = inv_mod(r->value, r->p);
    } else if (auto q = std::get_if<BigRational>(&out.v_)) {
        *q = 1 / *q;
    } else {
        const auto& z = std::get<BigInt>(v_);
        if (z != 1 && z != -1)
            throw std::domain_error("integer " + z.get_str() + " is not a unit");
    }
    return out;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return std::to_string(r->value);
    if (auto z = std::get_if<BigInt>(&v_))
        return z->get_str();
    return std::get<BigRational>(v_).get_str();
}

} // namespace polyfun
