#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "duzeta/enumerator.hpp"
#include "duzeta/rational.hpp"

namespace duzeta {

/// Truncated series in the nome u = exp(pi i tau / 2); theta-constant
/// exponents are then exactly b^2.
class QSeries {
public:
    QSeries(std::size_t order, std::vector<Rational> coeffs);

    static QSeries one(std::size_t order);

    std::size_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(std::size_t k) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries scaled(const Rational& s) const;
    QSeries pow(std::size_t e) const;

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

private:
    std::size_t order_;
    std::vector<Rational> c_;
};

/// f_a = sum over integers b with b = a mod 2 of u^{b^2}: coefficient of u^k
/// is the number of such b with b^2 = k.
QSeries theta_constant(int a, std::size_t order);

/// Substitutes x0 <- f_0, x1 <- f_1 into f and expands mod u^{order+1}.
QSeries th_map(const FormalWeightEnumerator& f, std::size_t order);

QSeries th_map(const HomogBivariate& f, std::size_t order);

struct QSeriesIntegrality {
    bool integral = true;
    std::optional<std::size_t> first_violation;
};

QSeriesIntegrality qseries_p_integrality(const QSeries& s, std::uint32_t p);

} // namespace duzeta
