#include "duzeta/series.hpp"

namespace duzeta {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    c_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const UniPoly& p, std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = p.coeff(k);
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = Rational(1);
    return TruncatedSeries(order, std::move(c));
}

const Rational& TruncatedSeries::coeff(std::size_t k) const {
    if (k > order_) throw OrderExceeded("coefficient index beyond truncation order");
    return c_[k];
}

static std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw Error("truncation order mismatch");
    return a.order();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = common_order(a, b);
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs()[k] + b.coeffs()[k];
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = common_order(a, b);
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs()[k] - b.coeffs()[k];
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = common_order(a, b);
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs()[j].is_zero()) continue;
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    std::vector<Rational> c(order_ + 1);
    for (std::size_t k = 0; k <= order_; ++k) c[k] = c_[k] * s;
    return TruncatedSeries(order_, std::move(c));
}

TruncatedSeries TruncatedSeries::invert() const {
    if (c_[0].is_zero()) throw NonUnitSeries("series with zero constant term has no inverse");
    std::vector<Rational> inv(order_ + 1);
    Rational u = Rational(1) / c_[0];
    inv[0] = u;
    for (std::size_t k = 1; k <= order_; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * inv[k - j];
        inv[k] = -u * acc;
    }
    return TruncatedSeries(order_, std::move(inv));
}

TruncatedSeries geometric_negative_power(std::size_t e, std::size_t order) {
    std::vector<Rational> c(order + 1);
    if (e == 0) {
        c[0] = Rational(1);
    } else {
        for (std::size_t k = 0; k <= order; ++k)
            c[k] = Rational(binomial(e - 1 + k, static_cast<long>(k)));
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries compose_t_over_one_minus_t(const UniPoly& poly, std::size_t order) {
    std::vector<Rational> c(order + 1);
    if (!poly.is_zero()) {
        const std::size_t deg = *poly.degree();
        for (std::size_t i = 0; i <= deg; ++i) {
            const Rational& ci = poly.coeff(i);
            if (ci.is_zero()) continue;
            // c_i * T^i * (1-T)^{-i}
            for (std::size_t k = i; k <= order; ++k) {
                if (i == 0) {
                    c[0] += ci;
                    break;
                }
                c[k] += ci * Rational(binomial(k - 1, static_cast<long>(k - i)));
            }
        }
    }
    return TruncatedSeries(order, std::move(c));
}

} // namespace duzeta
