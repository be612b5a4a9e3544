#pragma once

#include <cstddef>
#include <vector>

#include "duzeta/poly.hpp"
#include "duzeta/rational.hpp"

namespace duzeta {

/// Power series truncated at T^order; all arithmetic is exact mod T^{order+1}.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncatedSeries from_poly(const UniPoly& p, std::size_t order);
    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of T^k; throws OrderExceeded beyond the truncation order.
    const Rational& coeff(std::size_t k) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(const Rational& s) const;

    /// Multiplicative inverse mod T^{order+1}; requires a nonzero constant term.
    TruncatedSeries invert() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    /// The polynomial formed by the stored coefficients (trailing zeros trimmed).
    UniPoly to_poly() const { return UniPoly(c_); }

private:
    std::size_t order_;
    std::vector<Rational> c_;  // size order_+1
};

/// Substitutes t <- T/(1-T) into a polynomial in t, expanded exactly to the
/// given order.
TruncatedSeries compose_t_over_one_minus_t(const UniPoly& poly, std::size_t order);

/// (1-T)^{-e} to the given order: coefficients C(e-1+k, k).
TruncatedSeries geometric_negative_power(std::size_t e, std::size_t order);

} // namespace duzeta
