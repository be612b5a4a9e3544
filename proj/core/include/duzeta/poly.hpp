#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "duzeta/gaussian.hpp"
#include "duzeta/rational.hpp"

namespace duzeta {

mpz_class binomial(unsigned long n, long k);

/// Dense exact-rational univariate polynomial. Trailing zeros are trimmed;
/// the zero polynomial has an empty coefficient vector and no degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
    static UniPoly monomial(std::size_t k, Rational v);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    /// Coefficient of T^k (zero beyond degree).
    const Rational& coeff(std::size_t k) const {
        static const Rational kZero;
        return k < c_.size() ? c_[k] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& s) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Exact division; throws InexactDivision if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& divisor) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Homogeneous bivariate polynomial of degree n: sum A_i x0^{n-i} x1^i.
/// The coefficient vector always has exactly n+1 entries.
class HomogBivariate {
public:
    HomogBivariate(std::size_t degree, std::vector<Rational> coeffs);

    std::size_t degree() const { return n_; }
    const Rational& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    friend bool operator==(const HomogBivariate& a, const HomogBivariate& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// Evaluates at exact Gaussian-rational arguments.
    GaussianRational eval(const GaussianRational& x0, const GaussianRational& x1) const;

private:
    std::size_t n_;
    std::vector<Rational> c_;
};

} // namespace duzeta
