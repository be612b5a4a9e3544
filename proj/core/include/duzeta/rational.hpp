#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include "duzeta/errors.hpp"

namespace duzeta {

/// Exact rational number, always canonical: lowest terms, denominator > 0.
/// Structural equality therefore coincides with value equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                    // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(mpq_class(n) / mpq_class(d)) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "num" or "num/den". Throws SchemaError on malformed input.
    static Rational parse(const std::string& s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "num/den", den omitted when 1.
    std::string str() const;

    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// p-adic valuation; v_p(0) is +infinity.
struct PAdicValuation {
    bool infinite = false;
    long value = 0;

    static PAdicValuation infinity() { return {true, 0}; }
    static PAdicValuation finite(long v) { return {false, v}; }

    bool operator==(const PAdicValuation&) const = default;
};

/// Deterministic primality for p < 2^31 (trial division).
bool is_prime(std::uint32_t p);

void require_prime(std::uint32_t p);

PAdicValuation padic_valuation(const Rational& x, std::uint32_t p);

bool is_p_integral(const Rational& x, std::uint32_t p);

/// Residue of numerator * denominator^{-1} mod p. Requires v_p(x) >= 0.
std::uint32_t mod_p_residue(const Rational& x, std::uint32_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

} // namespace duzeta
