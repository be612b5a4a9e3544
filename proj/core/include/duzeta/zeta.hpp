#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "duzeta/enumerator.hpp"
#include "duzeta/poly.hpp"

namespace duzeta {

/// Duursma zeta polynomial P_f(T) together with its parameters.
struct ZetaPolynomial {
    UniPoly poly;
    Rational q;
    std::size_t source_degree = 0;
    std::size_t source_min_distance = 0;
};

/// Angle (num/den) * pi, reduced, normalized to [0, 2) * pi.
class RationalAngle {
public:
    RationalAngle(long num, long den);

    long num() const { return num_; }
    long den() const { return den_; }

    friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RationalAngle& a, const RationalAngle& b) {
        return static_cast<long long>(a.num_) * b.den_ < static_cast<long long>(b.num_) * a.den_;
    }

    std::string str() const;  // e.g. "3/4 pi"

private:
    long num_;
    long den_;
};

/// Roots of the Eisenstein-family zeta polynomial: all of modulus 2^{-1/2},
/// with exact rational angle arguments in circular order.
struct ExactRoots {
    std::vector<RationalAngle> angles;
    static constexpr const char* modulus = "2^(-1/2)";
};

struct RootReport {
    std::string method;              // "structural" or "numeric"
    std::vector<double> deviations;  // | |root| - 1/sqrt(q) | per root
    bool verdict = false;
};

struct InterlaceReport {
    std::vector<RationalAngle> lower_angles;
    std::vector<RationalAngle> upper_angles;
    std::vector<RationalAngle> common_angles;
    std::vector<std::size_t> per_arc_counts;  // zeros of the upper poly per open arc
    bool arcs_covered = false;
};

struct PIntegralityReport {
    std::map<mpz_class, long> min_valuation;  // primes appearing in any denominator
    std::set<mpz_class> violating;            // primes with negative minimum
};

struct LemmaUnitCheck {
    std::uint64_t residue = 0;         // ((-1)^{l/4} + 2^{(l-4)/2}) mod p, l = 2(p-1)
    int p_mod_4 = 0;
    bool case_3_mod_4_holds = true;    // r = -3 * 2^{p-3} mod p (vacuous unless p = 3 mod 4)
    bool case_1_mod_4_holds = true;    // r = 5 * 2^{p-3} mod p (vacuous unless p = 1 mod 4)
};

/// The unique P of degree <= n-d matching Duursma's generating-function
/// identity, found by fraction-free elimination on the coefficient system.
ZetaPolynomial zeta_via_linear_system(const FormalWeightEnumerator& f, const Rational& q);

/// P via the normalized weight enumerator:
///   P(T) = N_f(T/(1-T)) (1-qT) (1-T)^{-d}  mod T^{n-d+1}.
ZetaPolynomial zeta_via_series(const FormalWeightEnumerator& f, const Rational& q);

/// Closed form for normalized phi_l at q=2: exact division of
/// (-1)^{l/4} + 2^{(l-4)/2} T^{l-4} by 1 - 2T + 2T^2, scaled.
ZetaPolynomial zeta_closed_form(std::size_t ell);

/// The same polynomial written as the explicit block sum
///   (1/c) sum_i s_i 4^{i-1} (T^{4(i-1)} + 2T^{4(i-1)+1} + 2T^{4(i-1)+2}).
ZetaPolynomial zeta_expanded_form(std::size_t ell);

/// Exact root arguments of the closed-form zeta polynomial: the (l-4)-th
/// roots of -(-1)^{l/4}/2^{(l-4)/2} with the two angles +-pi/4 removed.
ExactRoots exact_roots(std::size_t ell);

/// Exact polynomial identity c (1-2T+2T^2) P_l(T) = (-1)^{l/4} + 2^{(l-4)/2} T^{l-4},
/// which pins every root modulus to 2^{-1/2}.
bool rha_check_structural(std::size_t ell);

/// Numeric root check for arbitrary zeta polynomials (Aberth iteration on
/// 80-bit extended floats; residual-converged).
RootReport rha_check_numeric(const ZetaPolynomial& p, double tolerance);

/// Arc coverage of exact_roots(ell) by exact_roots(ell+4), with shared
/// angles tracked separately.
InterlaceReport interlace_check(std::size_t ell);

PIntegralityReport p_integrality_report(const ZetaPolynomial& p);

/// Fermat-congruence unit check for l = 2(p-1); p in {3, 5} is excluded.
LemmaUnitCheck lemma_unit_check(std::uint32_t p);

/// v_p for an arbitrary-precision prime p (primality assumed by the caller).
PAdicValuation valuation_at(const Rational& x, const mpz_class& p);

/// Full factorization by trial division plus Brent-Pollard rho.
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

} // namespace duzeta
