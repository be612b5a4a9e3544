#include "duzeta/poly.hpp"

#include <algorithm>

namespace duzeta {

mpz_class binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

UniPoly UniPoly::monomial(std::size_t k, Rational v) {
    std::vector<Rational> c(k + 1);
    c[k] = std::move(v);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    if (is_zero()) return UniPoly::zero();
    std::vector<Rational> rem = c_;
    const std::size_t dd = *divisor.degree();
    const Rational& lead = divisor.c_.back();
    if (rem.size() - 1 < dd) throw InexactDivision("degree of dividend below divisor");
    std::vector<Rational> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
        Rational q = rem[k] / lead;
        quot[k - dd] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.c_[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw InexactDivision("nonzero remainder in exact polynomial division");
    return UniPoly(std::move(quot));
}

HomogBivariate::HomogBivariate(std::size_t degree, std::vector<Rational> coeffs)
    : n_(degree), c_(std::move(coeffs)) {
    if (c_.size() != n_ + 1)
        throw Error("homogeneous coefficient vector must have length degree+1");
}

bool HomogBivariate::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

GaussianRational HomogBivariate::eval(const GaussianRational& x0, const GaussianRational& x1) const {
    GaussianRational acc(0);
    for (std::size_t i = 0; i <= n_; ++i) {
        if (c_[i].is_zero()) continue;
        GaussianRational term = x0.pow(n_ - i) * x1.pow(i);
        acc += GaussianRational(c_[i], Rational(0)) * term;
    }
    return acc;
}

} // namespace duzeta
