#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "duzeta/enumerator.hpp"
#include "duzeta/group.hpp"

using namespace duzeta;
using nlohmann::json;

TEST_CASE("closed form at 8 and 12") {
    HomogBivariate p8 = eisenstein_closed_form(8);
    std::vector<Rational> e8{5, 0, 0, 0, 70, 0, 0, 0, 5};
    CHECK(p8.coeffs() == e8);

    HomogBivariate p12 = eisenstein_closed_form(12);
    std::vector<Rational> e12{15, 0, 0, 0, -495, 0, 0, 0, -495, 0, 0, 0, 15};
    CHECK(p12.coeffs() == e12);
}

TEST_CASE("leading scalar") {
    CHECK(eisenstein_leading_scalar(8) == Rational(5));
    CHECK(eisenstein_leading_scalar(12) == Rational(15));
    CHECK(eisenstein_leading_scalar(16) == Rational(65));
    CHECK_THROWS_AS(eisenstein_leading_scalar(6), UnsupportedDegree);
    CHECK_THROWS_AS(eisenstein_closed_form(4), UnsupportedDegree);
}

TEST_CASE("normalization") {
    auto f = normalize(eisenstein_closed_form(8));
    REQUIRE(f.has_value());
    std::vector<Rational> expected{1, 0, 0, 0, 14, 0, 0, 0, 1};
    CHECK(f->coeffs() == expected);
    CHECK(min_distance(*f) == 4);

    CHECK_FALSE(normalize(HomogBivariate(3, {0, 0, 0, 0})).has_value());
    CHECK_THROWS_AS(normalize(HomogBivariate(2, {0, 1, 0})), NoLeadingTerm);
}

TEST_CASE("constructor validates A_0 and minimum distance handling") {
    CHECK_THROWS_AS(FormalWeightEnumerator(2, {Rational(2), 0, 1}), InvariantViolation);

    FormalWeightEnumerator pure(5, {1, 0, 0, 0, 0, 0});
    CHECK_FALSE(pure.has_min_distance());
    CHECK_THROWS_AS(min_distance(pure), NoMinimumDistance);
}

TEST_CASE("normalized weight enumerator examples") {
    UniPoly n8 = normalized_weight_enumerator(normalized_eisenstein(8), Rational(2));
    CHECK(n8 == UniPoly({Rational(1, 5), 0, 0, 0, 1}));

    UniPoly n12 = normalized_weight_enumerator(normalized_eisenstein(12), Rational(2));
    CHECK(n12 == UniPoly({Rational(-1, 15), 0, 0, 0, Rational(-1, 15), 0, 0, 0, 1}));
}

TEST_CASE("json round trip and schema errors") {
    FormalWeightEnumerator f = normalized_eisenstein(12);
    json doc = store_enumerator(f);
    CHECK(doc["degree"] == 12);
    CHECK(doc["coefficients"][4] == "-33");
    CHECK(load_enumerator(doc) == f);

    CHECK_THROWS_AS(load_enumerator(json{{"degree", 2}, {"coefficients", {"2", "0", "1"}}}),
                    InvariantViolation);
    CHECK_THROWS_AS(load_enumerator(json{{"degree", 2}, {"coefficients", {"1", "0"}}}),
                    SchemaError);
    CHECK_THROWS_AS(load_enumerator(json{{"coefficients", {"1"}}}), SchemaError);
    CHECK_THROWS_AS(load_enumerator(json{{"degree", 0}, {"coefficients", {"1/0x"}}}),
                    SchemaError);
}

TEST_CASE("corpus files match the closed form") {
    std::string dir = DUZETA_CORPUS_DIR;
    for (std::size_t ell = 8; ell <= 40; ell += 4) {
        FormalWeightEnumerator got =
            load_enumerator_file(dir + "/phi" + std::to_string(ell) + ".json");
        CHECK(got == normalized_eisenstein(ell));
    }
    FormalWeightEnumerator ham = load_enumerator_file(dir + "/hamming8.json");
    CHECK(ham == normalized_eisenstein(8));
}

TEST_CASE("normalized averages are palindromic and supported on multiples of 4") {
    for (std::size_t ell = 8; ell <= 32; ell += 4) {
        FormalWeightEnumerator f = normalized_eisenstein(ell);
        for (std::size_t i = 0; i <= ell; ++i) {
            CHECK(f.coeff(i) == f.coeff(ell - i));
            if (i % 4 != 0) CHECK(f.coeff(i).is_zero());
        }
    }
}

TEST_CASE("group average agrees with the closed form") {
    const MatrixGroup& h1 = h1_group();
    for (std::size_t ell = 8; ell <= 24; ell += 4) {
        auto avg = normalize(reynolds_power(h1, ell));
        REQUIRE(avg.has_value());
        CHECK(*avg == normalized_eisenstein(ell));
    }
}
