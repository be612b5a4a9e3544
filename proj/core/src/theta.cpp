#include "duzeta/theta.hpp"

namespace duzeta {

QSeries::QSeries(std::size_t order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    c_.resize(order_ + 1);
}

QSeries QSeries::one(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = Rational(1);
    return QSeries(order, std::move(c));
}

const Rational& QSeries::coeff(std::size_t k) const {
    if (k > order_) throw OrderExceeded("coefficient index beyond truncation order");
    return c_[k];
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.order_ != b.order_) throw Error("truncation order mismatch");
    std::vector<Rational> c(a.order_ + 1);
    for (std::size_t k = 0; k <= a.order_; ++k) c[k] = a.c_[k] + b.c_[k];
    return QSeries(a.order_, std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.order_ != b.order_) throw Error("truncation order mismatch");
    const std::size_t n = a.order_;
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return QSeries(n, std::move(c));
}

QSeries QSeries::scaled(const Rational& s) const {
    std::vector<Rational> c(order_ + 1);
    for (std::size_t k = 0; k <= order_; ++k) c[k] = c_[k] * s;
    return QSeries(order_, std::move(c));
}

QSeries QSeries::pow(std::size_t e) const {
    QSeries acc = QSeries::one(order_);
    QSeries base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QSeries theta_constant(int a, std::size_t order) {
    if (a != 0 && a != 1) throw Error("theta_constant residue must be 0 or 1");
    std::vector<Rational> c(order + 1);
    for (std::size_t b = static_cast<std::size_t>(a); b * b <= order; b += 2)
        c[b * b] += Rational(b == 0 ? 1 : 2);
    return QSeries(order, std::move(c));
}

QSeries th_map(const HomogBivariate& f, std::size_t order) {
    const std::size_t n = f.degree();
    QSeries f0 = theta_constant(0, order);
    QSeries f1 = theta_constant(1, order);

    // incremental power tables; only exponents with nonzero A_i matter but at
    // these degrees computing the full ladder is cheaper than bookkeeping
    std::vector<QSeries> pow0, pow1;
    pow0.reserve(n + 1);
    pow1.reserve(n + 1);
    pow0.push_back(QSeries::one(order));
    pow1.push_back(QSeries::one(order));
    for (std::size_t k = 1; k <= n; ++k) {
        pow0.push_back(pow0.back() * f0);
        pow1.push_back(pow1.back() * f1);
    }

    std::vector<Rational> acc(order + 1);
    QSeries result(order, std::move(acc));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        result = result + (pow0[n - i] * pow1[i]).scaled(f.coeff(i));
    }
    return result;
}

QSeries th_map(const FormalWeightEnumerator& f, std::size_t order) {
    return th_map(f.as_bivariate(), order);
}

QSeriesIntegrality qseries_p_integrality(const QSeries& s, std::uint32_t p) {
    require_prime(p);
    QSeriesIntegrality out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (!is_p_integral(s.coeff(k), p)) {
            out.integral = false;
            out.first_violation = k;
            break;
        }
    }
    return out;
}

} // namespace duzeta
