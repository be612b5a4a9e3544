#include "duzeta/render.hpp"

#include <algorithm>

namespace duzeta {

namespace {

std::string plain_coeff(const Rational& c, bool leading, bool bare_unit) {
    std::string s;
    Rational a = c;
    if (c.sign() < 0) {
        s += leading ? "-" : "- ";
        a = -c;
    } else if (!leading) {
        s += "+ ";
    }
    if (a == Rational(1) && bare_unit) return s;
    s += a.str();
    if (bare_unit) s += " ";
    return s;
}

std::string plain_power(const std::string& var, std::size_t e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::string latex_power(const std::string& var, std::size_t e) {
    if (e == 0) return "";
    if (e == 1) return var;
    if (e < 10) return var + "^" + std::to_string(e);
    return var + "^{" + std::to_string(e) + "}";
}

} // namespace

std::string to_plain(const HomogBivariate& f) {
    if (f.is_zero()) return "ZERO";
    std::string out;
    bool leading = true;
    const std::size_t n = f.degree();
    for (std::size_t i = 0; i <= n; ++i) {
        const Rational& c = f.coeff(i);
        if (c.is_zero()) continue;
        std::string mono;
        std::string p0 = plain_power("x0", n - i);
        std::string p1 = plain_power("x1", i);
        mono = p0;
        if (!p0.empty() && !p1.empty()) mono += " ";
        mono += p1;
        out += plain_coeff(c, leading, !mono.empty());
        out += mono;
        out += " ";
        leading = false;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string to_latex(const HomogBivariate& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool leading = true;
    const std::size_t n = f.degree();
    for (std::size_t i = 0; i <= n; ++i) {
        const Rational& c = f.coeff(i);
        if (c.is_zero()) continue;
        Rational a = c;
        if (c.sign() < 0) {
            out += "-";
            a = -c;
        } else if (!leading) {
            out += "+";
        }
        std::string mono = latex_power("x_0", n - i);
        std::string p1 = latex_power("x_1", i);
        if (!mono.empty() && !p1.empty()) mono += " ";
        mono += p1;
        if (a != Rational(1) || mono.empty()) {
            if (a.is_integer()) {
                out += a.str();
                if (!mono.empty()) out += " ";
            } else {
                out += "\\frac{" + a.numerator().get_str() +
                       (mono.empty() ? "" : " " + mono) + "}{" + a.denominator().get_str() + "}";
                mono.clear();
            }
        }
        out += mono;
        leading = false;
    }
    return out;
}

std::string to_plain(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (std::size_t k = 0; k <= *p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string mono = plain_power(var, k);
        out += plain_coeff(c, leading, !mono.empty());
        out += mono;
        out += " ";
        leading = false;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string to_latex(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (std::size_t k = 0; k <= *p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        Rational a = c;
        if (c.sign() < 0) {
            out += "-";
            a = -c;
        } else if (!leading) {
            out += "+";
        }
        std::string mono = latex_power(var, k);
        if (a.is_integer()) {
            if (a != Rational(1) || mono.empty()) {
                out += a.str();
                if (!mono.empty()) out += " ";
            }
            out += mono;
        } else {
            std::string num = a.numerator() == 1 && !mono.empty() ? mono
                              : a.numerator().get_str() + (mono.empty() ? "" : " " + mono);
            out += "\\frac{" + num + "}{" + a.denominator().get_str() + "}";
        }
        leading = false;
    }
    return out;
}

nlohmann::json to_json(const UniPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    if (!p.is_zero())
        for (std::size_t k = 0; k <= *p.degree(); ++k) arr.push_back(p.coeff(k).str());
    return arr;
}

UniPoly unipoly_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw SchemaError("polynomial document must be an array");
    std::vector<Rational> c;
    c.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_string()) throw SchemaError("polynomial coefficients must be rational strings");
        c.push_back(Rational::parse(item.get<std::string>()));
    }
    return UniPoly(std::move(c));
}

nlohmann::json to_json(const QSeries& s) {
    nlohmann::json doc;
    doc["nome"] = "exp(pi*i*tau/2)";
    doc["order"] = s.order();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.coeffs()) arr.push_back(c.str());
    doc["coefficients"] = std::move(arr);
    return doc;
}

nlohmann::json interlace_json(const InterlaceReport& rep) {
    nlohmann::json doc;
    auto angles = [](const std::vector<RationalAngle>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : v) arr.push_back(std::to_string(a.num()) + "/" + std::to_string(a.den()));
        return arr;
    };
    doc["lower_angles_pi"] = angles(rep.lower_angles);
    doc["upper_angles_pi"] = angles(rep.upper_angles);
    doc["common_angles_pi"] = angles(rep.common_angles);
    doc["per_arc_counts"] = rep.per_arc_counts;
    doc["arcs_covered"] = rep.arcs_covered;
    return doc;
}

nlohmann::json valuations_json(const PIntegralityReport& rep) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [p, v] : rep.min_valuation) doc[p.get_str()] = v;
    return doc;
}

nlohmann::json zeta_report_json(std::size_t ell, double numeric_tolerance) {
    ZetaPolynomial zp = zeta_closed_form(ell);
    nlohmann::json doc;
    doc["ell"] = ell;
    doc["q"] = zp.q.str();
    doc["coefficients"] = to_json(zp.poly);
    nlohmann::json rha;
    rha["structural"] = rha_check_structural(ell);
    RootReport rr = rha_check_numeric(zp, numeric_tolerance);
    double maxdev = 0.0;
    for (double d : rr.deviations) maxdev = std::max(maxdev, d);
    rha["numeric_max_deviation"] = maxdev;
    doc["rha"] = std::move(rha);
    doc["interlace_with_next"] = interlace_json(interlace_check(ell));
    doc["valuations"] = valuations_json(p_integrality_report(zp));
    return doc;
}

nlohmann::json zeta_report_json(const FormalWeightEnumerator& f, const Rational& q,
                                double numeric_tolerance) {
    ZetaPolynomial zp = zeta_via_linear_system(f, q);
    nlohmann::json doc;
    doc["q"] = q.str();
    doc["coefficients"] = to_json(zp.poly);
    nlohmann::json rha;
    RootReport rr = rha_check_numeric(zp, numeric_tolerance);
    double maxdev = 0.0;
    for (double d : rr.deviations) maxdev = std::max(maxdev, d);
    rha["numeric_max_deviation"] = maxdev;
    rha["numeric_verdict"] = rr.verdict;
    doc["rha"] = std::move(rha);
    doc["valuations"] = valuations_json(p_integrality_report(zp));
    return doc;
}

} // namespace duzeta
