#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duzeta/poly.hpp"
#include "duzeta/series.hpp"

using namespace duzeta;

namespace {

TruncatedSeries random_unit_series(std::mt19937_64& rng, std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = Rational(1 + static_cast<long>(rng() % 5));
    for (std::size_t k = 1; k <= order; ++k)
        c[k] = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 6));
    return TruncatedSeries(order, std::move(c));
}

} // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(12, 4) == 495);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
}

TEST_CASE("unipoly degree and trimming") {
    CHECK_FALSE(UniPoly::zero().degree().has_value());
    CHECK(UniPoly({Rational(1), Rational(0)}).degree() == 0);
    UniPoly p({Rational(0), Rational(2)});
    CHECK(p.degree() == 1);
    CHECK((p - p).is_zero());
}

TEST_CASE("exact polynomial division") {
    // (1 + 4T^4) = (1 - 2T + 2T^2)(1 + 2T + 2T^2)
    UniPoly num({Rational(1), Rational(0), Rational(0), Rational(0), Rational(4)});
    UniPoly div({Rational(1), Rational(-2), Rational(2)});
    CHECK(num.divide_exact(div) == UniPoly({Rational(1), Rational(2), Rational(2)}));
    UniPoly bad({Rational(1), Rational(1)});
    CHECK_THROWS_AS(bad.divide_exact(div), InexactDivision);
}

TEST_CASE("series coefficient extraction") {
    // 1/((1-T)(1-2T)): coefficients 2^{k+1} - 1
    UniPoly denom = UniPoly({Rational(1), Rational(-1)}) * UniPoly({Rational(1), Rational(-2)});
    TruncatedSeries z = TruncatedSeries::from_poly(denom, 4).invert();
    CHECK(z.coeff(2) == Rational(7));
    CHECK(z.coeff(4) == Rational(31));
    CHECK(z.coeff(0) == Rational(1));
    CHECK_THROWS_AS(z.coeff(5), OrderExceeded);

    TruncatedSeries geo = TruncatedSeries::from_poly(UniPoly({Rational(1), Rational(-1)}), 5).invert();
    CHECK(geo.coeff(3) == Rational(1));
}

TEST_CASE("series inversion") {
    TruncatedSeries a = TruncatedSeries::from_poly(UniPoly({Rational(1), Rational(-1)}), 2).invert();
    CHECK(a == TruncatedSeries(2, {Rational(1), Rational(1), Rational(1)}));

    TruncatedSeries b =
        TruncatedSeries::from_poly(UniPoly({Rational(1), Rational(-2), Rational(2)}), 4).invert();
    TruncatedSeries prod = b * TruncatedSeries::from_poly(UniPoly({Rational(1), Rational(-2), Rational(2)}), 4);
    CHECK(prod == TruncatedSeries::one(4));

    CHECK(TruncatedSeries::from_poly(UniPoly::constant(Rational(5)), 3).invert().coeff(0) ==
          Rational(1, 5));

    CHECK_THROWS_AS(TruncatedSeries::from_poly(UniPoly::monomial(1, Rational(1)), 3).invert(),
                    NonUnitSeries);
}

TEST_CASE("series inversion round-trips on random units") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries z = random_unit_series(rng, 8);
        CHECK(z * z.invert() == TruncatedSeries::one(8));
    }
}

TEST_CASE("compose t <- T/(1-T)") {
    CHECK(compose_t_over_one_minus_t(UniPoly::monomial(1, Rational(1)), 3) ==
          TruncatedSeries(3, {Rational(0), Rational(1), Rational(1), Rational(1)}));

    // 1/5 + t^4 at order 8: binomial expansion of (1-T)^{-4}
    UniPoly p({Rational(1, 5), Rational(0), Rational(0), Rational(0), Rational(1)});
    TruncatedSeries s = compose_t_over_one_minus_t(p, 8);
    CHECK(s.coeff(0) == Rational(1, 5));
    CHECK(s.coeff(4) == Rational(1));
    CHECK(s.coeff(5) == Rational(4));
    CHECK(s.coeff(6) == Rational(10));
    CHECK(s.coeff(7) == Rational(20));
    CHECK(s.coeff(8) == Rational(35));

    CHECK(compose_t_over_one_minus_t(UniPoly::constant(Rational(7)), 5) ==
          TruncatedSeries(5, {Rational(7)}));
}

TEST_CASE("compose is linear in the polynomial argument") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> ca(6), cb(6);
        for (auto& c : ca) c = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
        for (auto& c : cb) c = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
        UniPoly a(ca), b(cb);
        CHECK(compose_t_over_one_minus_t(a + b, 9) ==
              compose_t_over_one_minus_t(a, 9) + compose_t_over_one_minus_t(b, 9));
    }
}

TEST_CASE("polynomial product agrees with series product on prefixes") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> ca(5), cb(7);
        for (auto& c : ca) c = Rational(static_cast<long>(rng() % 9) - 4);
        for (auto& c : cb) c = Rational(static_cast<long>(rng() % 9) - 4);
        UniPoly a(ca), b(cb);
        UniPoly prod = a * b;
        for (std::size_t order : {0UL, 3UL, 6UL, 10UL}) {
            TruncatedSeries sp = TruncatedSeries::from_poly(a, order) * TruncatedSeries::from_poly(b, order);
            CHECK(sp == TruncatedSeries::from_poly(prod, order));
        }
    }
}

TEST_CASE("homogeneous bivariate shape") {
    CHECK_THROWS(HomogBivariate(3, {Rational(1)}));
    HomogBivariate f(2, {Rational(1), Rational(0), Rational(1)});  // x0^2 + x1^2
    CHECK(f.eval(GaussianRational(1), GaussianRational::i()) == GaussianRational(0));
}
