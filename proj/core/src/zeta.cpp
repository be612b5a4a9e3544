#include "duzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "duzeta/series.hpp"

namespace duzeta {

namespace {

// row i of Lemma lem:D's coefficient system:
//   C(n,i) [T^{n-d-k}] T^{n-i} (1-T)^{i-1} (1-qT)^{-1}  (k-th unknown)
TruncatedSeries row_base_series(std::size_t n, std::size_t i, const Rational& q, std::size_t order) {
    std::vector<Rational> c(order + 1);
    if (n - i <= order) c[n - i] = Rational(1);
    TruncatedSeries s(order, std::move(c));
    if (i == 0) {
        s = s * geometric_negative_power(1, order);
    } else {
        UniPoly one_minus_t({Rational(1), Rational(-1)});
        UniPoly pw = UniPoly::constant(Rational(1));
        for (std::size_t k = 1; k < i; ++k) pw = pw * one_minus_t;
        s = s * TruncatedSeries::from_poly(pw, order);
    }
    TruncatedSeries denom = TruncatedSeries::from_poly(UniPoly({Rational(1), -q}), order);
    return s * denom.invert();
}

} // namespace

ZetaPolynomial zeta_via_linear_system(const FormalWeightEnumerator& f, const Rational& q) {
    if (q == Rational(1)) throw Error("q = 1 is excluded");
    const std::size_t n = f.degree();
    const std::size_t d = min_distance(f);
    const std::size_t unknowns = n - d + 1;
    const std::size_t rows = n + 1;
    const std::size_t order = n - d;

    // rational augmented matrix, then cleared to integers row by row
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(unknowns + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        TruncatedSeries base = row_base_series(n, i, q, order);
        Rational cn(binomial(n, static_cast<long>(i)));
        std::vector<Rational> row(unknowns + 1);
        for (std::size_t k = 0; k < unknowns; ++k) row[k] = cn * base.coeff(order - k);
        row[unknowns] = (f.coeff(i) - Rational(i == 0 ? 1 : 0)) / (q - Rational(1));
        mpz_class lcm = 1;
        for (const auto& r : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.denominator().get_mpz_t());
        for (std::size_t k = 0; k <= unknowns; ++k)
            m[i][k] = row[k].numerator() * (lcm / row[k].denominator());
    }

    // fraction-free (Bareiss) elimination with row pivoting
    std::vector<std::size_t> pivot_row;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i2 = r + 1; i2 < rows; ++i2) {
            for (std::size_t j = col + 1; j <= unknowns; ++j) {
                mpz_class t = m[i2][j] * m[r][col] - m[i2][col] * m[r][j];
                mpz_divexact(m[i2][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i2][col] = 0;
        }
        prev = m[r][col];
        pivot_row.push_back(col);
        ++r;
    }
    if (pivot_row.size() != unknowns)
        throw SingularSystem("coefficient system is rank-deficient (rank " +
                             std::to_string(pivot_row.size()) + " of " + std::to_string(unknowns) + ")");
    for (std::size_t i2 = r; i2 < rows; ++i2)
        if (m[i2][unknowns] != 0)
            throw SingularSystem("coefficient system is inconsistent");

    // back substitution over rationals
    std::vector<Rational> sol(unknowns);
    for (std::size_t idx = unknowns; idx-- > 0;) {
        std::size_t col = pivot_row[idx];
        Rational acc(m[idx][unknowns]);
        for (std::size_t j = col + 1; j < unknowns; ++j) acc -= Rational(m[idx][j]) * sol[j];
        sol[col] = acc / Rational(m[idx][col]);
    }
    return {UniPoly(std::move(sol)), q, n, d};
}

ZetaPolynomial zeta_via_series(const FormalWeightEnumerator& f, const Rational& q) {
    if (q == Rational(1)) throw Error("q = 1 is excluded");
    const std::size_t n = f.degree();
    const std::size_t d = min_distance(f);
    const std::size_t order = n - d;

    UniPoly nwe = normalized_weight_enumerator(f, q);
    TruncatedSeries composed = compose_t_over_one_minus_t(nwe, order);
    TruncatedSeries p_series = composed *
                               TruncatedSeries::from_poly(UniPoly({Rational(1), -q}), order) *
                               geometric_negative_power(d, order);
    UniPoly p = p_series.to_poly();

    // re-multiply: P (1-T)^d / (1-qT) must reproduce the composed series
    TruncatedSeries back = TruncatedSeries::from_poly(p, order) *
                           geometric_negative_power(d, order).invert() *
                           TruncatedSeries::from_poly(UniPoly({Rational(1), -q}), order).invert();
    if (!(back == composed))
        throw TruncationResidue("series route failed its defining congruence");
    return {std::move(p), q, n, d};
}

ZetaPolynomial zeta_closed_form(std::size_t ell) {
    Rational c = eisenstein_leading_scalar(ell);  // validates ell
    long sign = (ell / 4) % 2 == 0 ? 1 : -1;
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, (ell - 4) / 2);

    std::vector<Rational> num(ell - 3);
    num[0] = Rational(sign);
    num[ell - 4] = Rational(p2);
    UniPoly numerator(std::move(num));
    UniPoly denominator({Rational(1), Rational(-2), Rational(2)});
    UniPoly quotient = numerator.divide_exact(denominator);
    return {quotient.scaled(Rational(1) / c), Rational(2), ell, 4};
}

ZetaPolynomial zeta_expanded_form(std::size_t ell) {
    Rational c = eisenstein_leading_scalar(ell);
    const std::size_t m = ell / 4;
    const bool m_even = m % 2 == 0;
    std::vector<Rational> coeffs(ell - 3);
    mpz_class four_pow = 1;
    for (std::size_t i = 1; i <= m - 1; ++i) {
        long sign = m_even ? (i % 2 == 1 ? 1 : -1) : (i % 2 == 1 ? -1 : 1);
        mpz_class signed_pow = mpz_class(sign) * four_pow;
        Rational base(signed_pow);
        std::size_t at = 4 * (i - 1);
        coeffs[at] += base;
        coeffs[at + 1] += base * Rational(2);
        coeffs[at + 2] += base * Rational(2);
        four_pow *= 4;
    }
    return {UniPoly(std::move(coeffs)).scaled(Rational(1) / c), Rational(2), ell, 4};
}

RationalAngle::RationalAngle(long num, long den) {
    if (den <= 0) throw Error("angle denominator must be positive");
    long g = std::gcd(std::abs(num), den);
    num /= g;
    den /= g;
    num %= 2 * den;
    if (num < 0) num += 2 * den;
    num_ = num;
    den_ = den;
}

std::string RationalAngle::str() const {
    if (num_ == 0) return "0";
    if (den_ == 1) return num_ == 1 ? "pi" : std::to_string(num_) + " pi";
    return std::to_string(num_) + "/" + std::to_string(den_) + " pi";
}

ExactRoots exact_roots(std::size_t ell) {
    eisenstein_leading_scalar(ell);  // validates ell
    const long m = static_cast<long>(ell) - 4;
    std::vector<RationalAngle> angles;
    angles.reserve(m);
    if (ell % 8 == 4) {
        for (long k = 0; k < m; ++k) angles.emplace_back(2 * k, m);
    } else {
        for (long k = 0; k < m; ++k) angles.emplace_back(2 * k + 1, m);
    }
    const RationalAngle excl1(1, 4), excl2(7, 4);
    auto has = [&](const RationalAngle& a) {
        return std::find(angles.begin(), angles.end(), a) != angles.end();
    };
    if (!has(excl1) || !has(excl2))
        throw ExclusionMismatch("angles +-pi/4 absent from the numerator root set");
    std::erase(angles, excl1);
    std::erase(angles, excl2);
    std::sort(angles.begin(), angles.end());
    return {std::move(angles)};
}

bool rha_check_structural(std::size_t ell) {
    ZetaPolynomial p = zeta_via_series(normalized_eisenstein(ell), Rational(2));
    Rational c = eisenstein_leading_scalar(ell);
    long sign = (ell / 4) % 2 == 0 ? 1 : -1;
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, (ell - 4) / 2);
    std::vector<Rational> num(ell - 3);
    num[0] = Rational(sign);
    num[ell - 4] = Rational(p2);
    UniPoly lhs = UniPoly({Rational(1), Rational(-2), Rational(2)}) * p.poly.scaled(c);
    return lhs == UniPoly(std::move(num));
}

RootReport rha_check_numeric(const ZetaPolynomial& zp, double tolerance) {
    using C = std::complex<long double>;
    RootReport report;
    report.method = "numeric";
    if (zp.poly.is_zero()) throw Error("zero polynomial has no root structure");
    const std::size_t deg = *zp.poly.degree();
    const long double target = 1.0L / sqrtl(zp.q.to_long_double());
    if (deg == 0) {
        report.verdict = true;
        return report;
    }

    std::vector<long double> a(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) a[k] = zp.poly.coeff(k).to_long_double();

    auto eval = [&](C z, C& val, C& der) {
        val = a[deg];
        der = 0;
        for (std::size_t k = deg; k-- > 0;) {
            der = der * z + val;
            val = val * z + a[k];
        }
    };

    // initial guesses on a circle at the geometric mean of the root moduli
    long double radius = powl(fabsl(a[0] / a[deg]), 1.0L / static_cast<long double>(deg));
    if (!(radius > 0.0L) || !std::isfinite(static_cast<double>(radius))) radius = 1.0L;
    std::vector<C> z(deg);
    for (std::size_t j = 0; j < deg; ++j) {
        long double th = 2.0L * M_PIl * static_cast<long double>(j) / deg + 0.41L;
        z[j] = radius * C(cosl(th), sinl(th));
    }

    const long double eps = 1e-17L;
    bool converged = false;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
        converged = true;
        for (std::size_t j = 0; j < deg; ++j) {
            C val, der;
            eval(z[j], val, der);
            if (std::abs(val) == 0.0L) continue;
            C ratio = (std::abs(der) == 0.0L) ? C(0) : val / der;
            C sum = 0;
            for (std::size_t k = 0; k < deg; ++k)
                if (k != j) sum += C(1) / (z[j] - z[k]);
            C denom = C(1) - ratio * sum;
            C step = (std::abs(denom) == 0.0L) ? ratio : ratio / denom;
            z[j] -= step;
            if (std::abs(step) > eps * (1.0L + std::abs(z[j]))) converged = false;
        }
    }
    if (!converged) throw NonConvergence("Aberth iteration failed to reach residual target");

    report.deviations.reserve(deg);
    double maxdev = 0.0;
    for (const auto& root : z) {
        double dev = static_cast<double>(fabsl(std::abs(root) - target));
        report.deviations.push_back(dev);
        maxdev = std::max(maxdev, dev);
    }
    report.verdict = maxdev <= tolerance;
    return report;
}

InterlaceReport interlace_check(std::size_t ell) {
    InterlaceReport rep;
    rep.lower_angles = exact_roots(ell).angles;
    rep.upper_angles = exact_roots(ell + 4).angles;
    for (const auto& a : rep.lower_angles)
        if (std::find(rep.upper_angles.begin(), rep.upper_angles.end(), a) != rep.upper_angles.end())
            rep.common_angles.push_back(a);

    const std::size_t n = rep.lower_angles.size();
    rep.per_arc_counts.assign(n, 0);
    rep.arcs_covered = true;
    for (std::size_t i = 0; i < n; ++i) {
        const RationalAngle& lo = rep.lower_angles[i];
        const RationalAngle& hi = rep.lower_angles[(i + 1) % n];
        std::size_t count = 0;
        for (const auto& b : rep.upper_angles) {
            bool inside;
            if (i + 1 < n) {
                inside = lo < b && b < hi;
            } else {
                inside = lo < b || b < hi;  // wrap-around arc
            }
            if (inside) ++count;
        }
        rep.per_arc_counts[i] = count;
        if (count == 0) rep.arcs_covered = false;
    }
    return rep;
}

PAdicValuation valuation_at(const Rational& x, const mpz_class& p) {
    if (x.is_zero()) return PAdicValuation::infinity();
    mpz_class tmp;
    long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.numerator().get_mpz_t(), p.get_mpz_t()));
    long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.denominator().get_mpz_t(), p.get_mpz_t()));
    return PAdicValuation::finite(vnum - vden);
}

namespace {

mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
    // Brent's cycle variant of Pollard rho; n odd composite, not a prime power
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x, ys, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long step = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += step) {
                ys = y;
                unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = (x > ys) ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    mpz_class f = pollard_brent(n, 0xD0CE5EEDUL);
    factor_into(f, out);
    factor_into(n / f, out);
}

} // namespace

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
    if (n <= 0) throw Error("factorize requires a positive integer");
    std::map<mpz_class, unsigned> out;
    factor_into(n, out);
    return out;
}

PIntegralityReport p_integrality_report(const ZetaPolynomial& zp) {
    PIntegralityReport rep;
    std::set<mpz_class> primes;
    for (const auto& c : zp.poly.coeffs()) {
        if (c.is_zero() || c.denominator() == 1) continue;
        for (const auto& [p, e] : factorize(c.denominator())) primes.insert(p);
    }
    for (const auto& p : primes) {
        long minval = 0;
        bool first = true;
        for (const auto& c : zp.poly.coeffs()) {
            auto v = valuation_at(c, p);
            if (v.infinite) continue;
            if (first || v.value < minval) minval = v.value;
            first = false;
        }
        rep.min_valuation[p] = minval;
        if (minval < 0) rep.violating.insert(p);
    }
    return rep;
}

LemmaUnitCheck lemma_unit_check(std::uint32_t p) {
    if (p == 3 || p == 5)
        throw ExcludedPrime("p = " + std::to_string(p) + " is excluded from the unit check");
    require_prime(p);
    if (p < 7 || p % 2 == 0) throw ExcludedPrime("unit check requires an odd prime >= 7");

    LemmaUnitCheck chk;
    chk.p_mod_4 = static_cast<int>(p % 4);
    // l = 2(p-1): (-1)^{l/4} = (-1)^{(p-1)/2}, 2^{(l-4)/2} = 2^{p-3}
    std::uint64_t pw = pow_mod(2, p - 3, p);
    std::uint64_t sign_term = ((p - 1) / 2) % 2 == 0 ? 1 : p - 1;  // +-1 mod p
    chk.residue = (sign_term + pw) % p;
    if (chk.residue == 0)
        throw UnitCheckFailed("(-1)^{l/4} + 2^{(l-4)/2} = 0 mod " + std::to_string(p));
    if (chk.p_mod_4 == 3) {
        std::uint64_t expected = static_cast<std::uint64_t>(p - 3) * pw % p;  // -3 * 2^{p-3}
        chk.case_3_mod_4_holds = chk.residue == expected;
    } else {
        std::uint64_t expected = 5 * pw % p;
        chk.case_1_mod_4_holds = chk.residue == expected;
    }
    return chk;
}

} // namespace duzeta
