#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duzeta/theta.hpp"

using namespace duzeta;

namespace {

QSeries sparse(std::size_t order, std::initializer_list<std::pair<std::size_t, long>> terms) {
    std::vector<Rational> c(order + 1);
    for (auto [k, v] : terms) c[k] = Rational(v);
    return QSeries(order, std::move(c));
}

} // namespace

TEST_CASE("theta constants as lattice point counts") {
    CHECK(theta_constant(0, 20) == sparse(20, {{0, 1}, {4, 2}, {16, 2}}));
    CHECK(theta_constant(1, 30) == sparse(30, {{1, 2}, {9, 2}, {25, 2}}));
    CHECK(theta_constant(0, 0) == sparse(0, {{0, 1}}));
    CHECK(theta_constant(1, 0) == sparse(0, {}));
}

TEST_CASE("series arithmetic") {
    QSeries a = sparse(6, {{0, 1}, {1, 2}});
    QSeries b = sparse(6, {{0, 1}, {1, -2}});
    CHECK(a * b == sparse(6, {{0, 1}, {2, -4}}));
    CHECK(a + b == sparse(6, {{0, 2}}));
    CHECK(a.pow(2) == a * a);
    CHECK(a.pow(5) == a * a * a * a * a);
    CHECK(a.scaled(Rational(1, 2)) ==
          QSeries(6, {Rational(1, 2), 1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(a.coeff(7), OrderExceeded);
}

TEST_CASE("image of the degree-8 average is the E8 theta series") {
    QSeries s = th_map(normalized_eisenstein(8), 12);
    CHECK(s == sparse(12, {{0, 1}, {4, 240}, {8, 2160}, {12, 6720}}));
}

TEST_CASE("substitution is multiplicative") {
    HomogBivariate f8 = eisenstein_closed_form(8);
    HomogBivariate f12 = eisenstein_closed_form(12);
    std::vector<Rational> prod(21);
    for (std::size_t i = 0; i <= 8; ++i)
        for (std::size_t j = 0; j <= 12; ++j)
            prod[i + j] += f8.coeff(i) * f12.coeff(j);
    QSeries lhs = th_map(HomogBivariate(20, prod), 40);
    QSeries rhs = th_map(f8, 40) * th_map(f12, 40);
    CHECK(lhs == rhs);
}

TEST_CASE("p-integrality of series coefficients") {
    QSeries s = th_map(normalized_eisenstein(12), 60);
    for (std::uint32_t p : {7u, 11u, 13u}) {
        QSeriesIntegrality chk = qseries_p_integrality(s, p);
        CHECK(chk.integral);
        CHECK_FALSE(chk.first_violation.has_value());
    }

    QSeries bad(4, {1, 0, Rational(1, 5), 0, 0});
    QSeriesIntegrality chk = qseries_p_integrality(bad, 5);
    CHECK_FALSE(chk.integral);
    REQUIRE(chk.first_violation.has_value());
    CHECK(*chk.first_violation == 2);
    CHECK(qseries_p_integrality(bad, 7).integral);
}
