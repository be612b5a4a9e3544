#include "duzeta/enumerator.hpp"

#include <fstream>

namespace duzeta {

FormalWeightEnumerator::FormalWeightEnumerator(std::size_t degree, std::vector<Rational> coeffs)
    : n_(degree), c_(std::move(coeffs)) {
    if (c_.size() != n_ + 1)
        throw InvariantViolation("coefficient vector must have length degree+1");
    if (c_[0] != Rational(1))
        throw InvariantViolation("leading coefficient A_0 must be 1, got " + c_[0].str());
    for (std::size_t i = 1; i <= n_; ++i) {
        if (!c_[i].is_zero()) {
            d_ = i;
            break;
        }
    }
}

std::size_t min_distance(const FormalWeightEnumerator& f) {
    if (!f.d_) throw NoMinimumDistance("f = x0^n has no nonzero A_i with i >= 1");
    return *f.d_;
}

Rational eisenstein_leading_scalar(std::size_t ell) {
    if (ell % 4 != 0 || ell < 8)
        throw UnsupportedDegree("closed form requires ell a multiple of 4, ell >= 8");
    long sign = (ell / 4) % 2 == 0 ? 1 : -1;
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, (ell - 4) / 2);
    mpz_class c = mpz_class(sign) + p2;
    return Rational(c);
}

HomogBivariate eisenstein_closed_form(std::size_t ell) {
    Rational c = eisenstein_leading_scalar(ell);  // validates ell
    long sign = (ell / 4) % 2 == 0 ? 1 : -1;
    std::vector<Rational> coeffs(ell + 1);
    coeffs[0] = c;
    coeffs[ell] = c;
    for (std::size_t j = 4; j < ell; j += 4) {
        mpz_class v = mpz_class(sign) * binomial(ell, static_cast<long>(j));
        coeffs[j] = Rational(v);
    }
    return HomogBivariate(ell, std::move(coeffs));
}

std::optional<FormalWeightEnumerator> normalize(const HomogBivariate& raw) {
    if (raw.is_zero()) return std::nullopt;
    const Rational& lead = raw.coeff(0);
    if (lead.is_zero())
        throw NoLeadingTerm("nonzero polynomial with zero x0^n coefficient");
    std::vector<Rational> coeffs(raw.degree() + 1);
    for (std::size_t i = 0; i <= raw.degree(); ++i) coeffs[i] = raw.coeff(i) / lead;
    return FormalWeightEnumerator(raw.degree(), std::move(coeffs));
}

FormalWeightEnumerator normalized_eisenstein(std::size_t ell) {
    return *normalize(eisenstein_closed_form(ell));
}

UniPoly normalized_weight_enumerator(const FormalWeightEnumerator& f, const Rational& q) {
    if (q == Rational(1)) throw Error("q = 1 is excluded");
    std::size_t d = min_distance(f);
    std::size_t n = f.degree();
    Rational scale = Rational(1) / (q - Rational(1));
    std::vector<Rational> c(n - d + 1);
    for (std::size_t i = d; i <= n; ++i)
        c[i - d] = scale * f.coeff(i) / Rational(binomial(n, static_cast<long>(i)));
    return UniPoly(std::move(c));
}

FormalWeightEnumerator load_enumerator(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("coefficients"))
        throw SchemaError("enumerator document needs \"degree\" and \"coefficients\"");
    if (!doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 0)
        throw SchemaError("\"degree\" must be a nonnegative integer");
    std::size_t n = doc["degree"].get<std::size_t>();
    const auto& arr = doc["coefficients"];
    if (!arr.is_array() || arr.size() != n + 1)
        throw SchemaError("\"coefficients\" must be an array of length degree+1");
    std::vector<Rational> coeffs;
    coeffs.reserve(n + 1);
    for (const auto& item : arr) {
        if (!item.is_string()) throw SchemaError("coefficients must be rational strings");
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    }
    return FormalWeightEnumerator(n, std::move(coeffs));
}

nlohmann::json store_enumerator(const FormalWeightEnumerator& f) {
    nlohmann::json doc;
    doc["degree"] = f.degree();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.str());
    doc["coefficients"] = std::move(arr);
    return doc;
}

FormalWeightEnumerator load_enumerator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return load_enumerator(doc);
}

} // namespace duzeta
