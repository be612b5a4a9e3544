#include "duzeta/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace duzeta {

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    auto check = [&](const std::string& part) {
        if (part.empty()) throw SchemaError("malformed rational: " + s);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw SchemaError("malformed rational: " + s);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw SchemaError("malformed rational: " + s);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check(s);
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check(num);
    check(den);
    mpz_class d(den);
    if (d == 0) throw SchemaError("zero denominator: " + s);
    return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long double Rational::to_long_double() const {
    // mpq -> long double with a few extra bits: split via 2^64 scaling
    mpf_class f(v_, 128);
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    return ldexpl(static_cast<long double>(mant), static_cast<int>(exp));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t f = 5; f * f <= p; f += 6) {
        if (p % f == 0 || p % (f + 2) == 0) return false;
    }
    return true;
}

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
}

PAdicValuation padic_valuation(const Rational& x, std::uint32_t p) {
    require_prime(p);
    if (x.is_zero()) return PAdicValuation::infinity();
    const mpz_class pz(p);
    mpz_class tmp;
    long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.numerator().get_mpz_t(), pz.get_mpz_t()));
    long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.denominator().get_mpz_t(), pz.get_mpz_t()));
    return PAdicValuation::finite(vnum - vden);
}

bool is_p_integral(const Rational& x, std::uint32_t p) {
    auto v = padic_valuation(x, p);
    return v.infinite || v.value >= 0;
}

std::uint32_t mod_p_residue(const Rational& x, std::uint32_t p) {
    auto v = padic_valuation(x, p);  // also validates primality
    if (!v.infinite && v.value < 0)
        throw NotPIntegral(x.str() + " is not " + std::to_string(p) + "-integral");
    const mpz_class pz(p);
    mpz_class num = x.numerator() % pz;
    if (num < 0) num += pz;
    mpz_class den = x.denominator() % pz;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw NotPIntegral("denominator not invertible mod " + std::to_string(p));
    mpz_class r = (num * inv) % pz;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace duzeta
