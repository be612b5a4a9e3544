#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "duzeta/zeta.hpp"

using namespace duzeta;

namespace {

UniPoly zeta8_expected() {
    return UniPoly({Rational(1, 5), Rational(2, 5), Rational(2, 5)});
}

UniPoly zeta12_expected() {
    return UniPoly({Rational(-1, 15), Rational(-2, 15), Rational(-2, 15), 0,
                    Rational(4, 15), Rational(8, 15), Rational(8, 15)});
}

UniPoly zeta16_expected() {
    return UniPoly({Rational(1, 65), Rational(2, 65), Rational(2, 65), 0,
                    Rational(-4, 65), Rational(-8, 65), Rational(-8, 65), 0,
                    Rational(16, 65), Rational(32, 65), Rational(32, 65)});
}

} // namespace

TEST_CASE("zeta of small averages, all four routes") {
    for (std::size_t ell : {8UL, 12UL, 16UL}) {
        FormalWeightEnumerator f = normalized_eisenstein(ell);
        UniPoly expected = ell == 8 ? zeta8_expected()
                         : ell == 12 ? zeta12_expected() : zeta16_expected();
        CHECK(zeta_via_linear_system(f, 2).poly == expected);
        CHECK(zeta_via_series(f, 2).poly == expected);
        CHECK(zeta_closed_form(ell).poly == expected);
        CHECK(zeta_expanded_form(ell).poly == expected);
    }
}

TEST_CASE("golay zeta") {
    std::string dir = DUZETA_CORPUS_DIR;
    FormalWeightEnumerator golay = load_enumerator_file(dir + "/golay24.json");
    UniPoly expected({Rational(1, 969), Rational(2, 323), Rational(20, 969),
                      Rational(16, 323), Rational(394, 4199), Rational(36, 247),
                      Rational(788, 4199), Rational(64, 323), Rational(160, 969),
                      Rational(32, 323), Rational(32, 969)});
    ZetaPolynomial z = zeta_via_linear_system(golay, 2);
    CHECK(z.poly == expected);
    CHECK(z.source_degree == 24);
    CHECK(z.source_min_distance == 8);
    CHECK(zeta_via_series(golay, 2).poly == expected);
}

TEST_CASE("degenerate enumerator x0 + x1") {
    FormalWeightEnumerator f(1, {1, 1});
    CHECK(zeta_via_linear_system(f, 2).poly == UniPoly::constant(1));
    CHECK(zeta_via_series(f, 2).poly == UniPoly::constant(1));
}

TEST_CASE("routes agree on random enumerators") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 9;
        std::size_t d = 1 + rng() % n;
        std::vector<Rational> coeffs(n + 1);
        coeffs[0] = 1;
        for (std::size_t i = d; i <= n; ++i)
            coeffs[i] = Rational(static_cast<long>(rng() % 19) - 9,
                                 static_cast<long>(1 + rng() % 6));
        if (coeffs[d].is_zero()) coeffs[d] = 1;
        FormalWeightEnumerator f(n, std::move(coeffs));
        Rational q(static_cast<long>(2 + rng() % 5));
        CHECK(zeta_via_linear_system(f, q).poly == zeta_via_series(f, q).poly);
    }
}

TEST_CASE("exact roots") {
    ExactRoots r8 = exact_roots(8);
    REQUIRE(r8.angles.size() == 2);
    CHECK(r8.angles[0] == RationalAngle(3, 4));
    CHECK(r8.angles[1] == RationalAngle(5, 4));

    ExactRoots r12 = exact_roots(12);
    std::vector<RationalAngle> expected12{{0, 1}, {1, 2}, {3, 4}, {1, 1}, {5, 4}, {3, 2}};
    CHECK(r12.angles == expected12);

    for (std::size_t ell = 8; ell <= 40; ell += 4)
        CHECK(exact_roots(ell).angles.size() == ell - 6);
}

TEST_CASE("rational angles normalize") {
    CHECK(RationalAngle(9, 4) == RationalAngle(1, 4));
    CHECK(RationalAngle(-1, 4) == RationalAngle(7, 4));
    CHECK(RationalAngle(2, 4) == RationalAngle(1, 2));
    CHECK(RationalAngle(1, 4) < RationalAngle(1, 3));
    CHECK(RationalAngle(3, 4).str() == "3/4 pi");
}

TEST_CASE("root modulus, structural and numeric") {
    for (std::size_t ell = 8; ell <= 40; ell += 4)
        CHECK(rha_check_structural(ell));

    RootReport good = rha_check_numeric(zeta_closed_form(20), 1e-9);
    CHECK(good.verdict);
    REQUIRE(good.deviations.size() == 14);
    for (double dev : good.deviations) CHECK(dev < 1e-9);

    ZetaPolynomial bad;
    bad.poly = UniPoly({1, -2});  // root at 1/2, off the critical circle
    bad.q = 2;
    RootReport r = rha_check_numeric(bad, 1e-9);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.deviations.size() == 1);
    CHECK(r.deviations[0] == doctest::Approx(0.7071067811865476 - 0.5).epsilon(1e-12));
}

TEST_CASE("interlacing 8 against 12") {
    InterlaceReport rep = interlace_check(8);
    std::vector<RationalAngle> lower{{3, 4}, {5, 4}};
    CHECK(rep.lower_angles == lower);
    CHECK(rep.upper_angles.size() == 6);
    CHECK(rep.common_angles == lower);
    CHECK(rep.arcs_covered);
    for (std::size_t count : rep.per_arc_counts) CHECK(count >= 1);

    for (std::size_t ell = 8; ell <= 36; ell += 4)
        CHECK(interlace_check(ell).arcs_covered);
}

TEST_CASE("p-integrality of zeta coefficients") {
    PIntegralityReport rep = p_integrality_report(zeta_closed_form(8));
    CHECK(rep.min_valuation.at(5) == -1);
    CHECK(rep.violating == std::set<mpz_class>{5});

    PIntegralityReport r16 = p_integrality_report(zeta_closed_form(16));
    CHECK(r16.min_valuation.at(5) == -1);
    CHECK(r16.min_valuation.at(13) == -1);
    CHECK(r16.min_valuation.count(7) == 0);
}

TEST_CASE("valuation at large primes") {
    mpz_class p("1000003");
    Rational x(mpz_class(1), p * p);
    PAdicValuation v = valuation_at(x, p);
    CHECK_FALSE(v.infinite);
    CHECK(v.value == -2);
    CHECK(valuation_at(Rational(0), p).infinite);
}

TEST_CASE("factorization") {
    std::map<mpz_class, unsigned> f = factorize(1200);
    CHECK(f == std::map<mpz_class, unsigned>{{2, 4}, {3, 1}, {5, 2}});

    mpz_class semiprime = mpz_class("1000003") * mpz_class("1000033");
    std::map<mpz_class, unsigned> g = factorize(semiprime);
    CHECK(g == std::map<mpz_class, unsigned>{{mpz_class("1000003"), 1},
                                             {mpz_class("1000033"), 1}});
}

TEST_CASE("unit residues at primes p with l = 2(p-1)") {
    LemmaUnitCheck c7 = lemma_unit_check(7);
    CHECK(c7.residue == 1);
    CHECK(c7.p_mod_4 == 3);
    CHECK(c7.case_3_mod_4_holds);

    LemmaUnitCheck c13 = lemma_unit_check(13);
    CHECK(c13.residue == 11);
    CHECK(c13.p_mod_4 == 1);
    CHECK(c13.case_1_mod_4_holds);

    for (std::uint32_t p : {7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        LemmaUnitCheck c = lemma_unit_check(p);
        CHECK(c.residue != 0);
        CHECK(c.case_3_mod_4_holds);
        CHECK(c.case_1_mod_4_holds);
    }

    CHECK_THROWS_AS(lemma_unit_check(3), ExcludedPrime);
    CHECK_THROWS_AS(lemma_unit_check(5), ExcludedPrime);
    CHECK_THROWS_AS(lemma_unit_check(8), NonPrimeModulus);
}
