#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "duzeta/enumerator.hpp"
#include "duzeta/group.hpp"

using namespace duzeta;

TEST_CASE("generators are unitary") {
    auto [g1, g2] = h1_generators();
    CHECK(g1.is_unitary());
    CHECK(g2.is_unitary());
}

TEST_CASE("diag(1,i)^4 is the identity") {
    auto [g1, g2] = h1_generators();
    UnitaryMatrix2 m = g2 * g2 * g2 * g2;
    CHECK(m == UnitaryMatrix2::identity());
}

TEST_CASE("trivial closures") {
    CHECK(closure({UnitaryMatrix2::identity()}, 10).order() == 1);
    auto [g1, g2] = h1_generators();
    CHECK(closure({g2}, 10).order() == 4);  // powers of i on the diagonal
    CHECK_THROWS_AS(closure({g1, g2}, 50), CapExceeded);
}

TEST_CASE("H1 has order 96, closed under inverse, all unitary") {
    const MatrixGroup& h1 = h1_group();
    CHECK(h1.order() == 96);
    for (const auto& m : h1.elements()) {
        CHECK(m.is_unitary());
        CHECK(h1.contains(m.conjugate_transpose()));
    }
    auto [g1, g2] = h1_generators();
    CHECK(h1.contains(g1 * g1));
}

TEST_CASE("reynolds average vanishes off multiples of 4 and at 4") {
    const MatrixGroup& h1 = h1_group();
    CHECK(reynolds_power(h1, 4).is_zero());
    CHECK(reynolds_power(h1, 6).is_zero());
    for (std::size_t ell = 1; ell <= 20; ++ell) {
        bool vanish = (ell % 4 != 0) || ell == 4;
        CHECK(reynolds_power(h1, ell).is_zero() == vanish);
    }
}

TEST_CASE("reynolds average at 8 reproduces the published row") {
    auto f = normalize(reynolds_power(h1_group(), 8));
    REQUIRE(f.has_value());
    std::vector<Rational> expected{1, 0, 0, 0, 14, 0, 0, 0, 1};
    CHECK(f->coeffs() == expected);
}

TEST_CASE("reynolds output is invariant under the generators") {
    const MatrixGroup& h1 = h1_group();
    auto [g1, g2] = h1_generators();
    for (std::size_t ell : {8UL, 12UL, 16UL}) {
        HomogBivariate f = reynolds_power(h1, ell);
        // f(M (x0,x1)^t) = f(x0,x1) checked by exact evaluation at generic points
        for (const auto& m : {g1, g2, g1 * g2}) {
            for (long a = 1; a <= 2; ++a) {
                GaussianRational x0(Rational(a), Rational(1, 3));
                GaussianRational x1(Rational(2, 7), Rational(-a));
                GaussianRational y0 = m.at(0, 0) * x0 + m.at(0, 1) * x1;
                GaussianRational y1 = m.at(1, 0) * x0 + m.at(1, 1) * x1;
                CHECK(f.eval(y0, y1) == f.eval(x0, x1));
            }
        }
    }
}

TEST_CASE("reynolds result is independent of element order") {
    const MatrixGroup& h1 = h1_group();
    auto reversed = h1.elements();
    std::reverse(reversed.begin(), reversed.end());
    MatrixGroup backwards(std::move(reversed));
    CHECK(reynolds_power(h1, 12) == reynolds_power(backwards, 12));
}
