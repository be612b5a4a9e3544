#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "duzeta/enumerator.hpp"
#include "duzeta/poly.hpp"
#include "duzeta/theta.hpp"
#include "duzeta/zeta.hpp"

namespace duzeta {

/// "x0^8 + 14 x0^4 x1^4 + x1^8"
std::string to_plain(const HomogBivariate& f);

/// "x_0^8+14 x_0^4 x_1^4+x_1^8"
std::string to_latex(const HomogBivariate& f);

/// "1/5 + 2/5 T + 2/5 T^2"
std::string to_plain(const UniPoly& p, const std::string& var = "T");

/// "\frac{1}{5}+\frac{2 T}{5}+\frac{2 T^2}{5}"
std::string to_latex(const UniPoly& p, const std::string& var = "T");

nlohmann::json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const QSeries& s);

/// Zeta report document:
/// {"ell", "q", "coefficients", "rha": {...}, "interlace_with_next": {...},
///  "valuations": {...}}
nlohmann::json zeta_report_json(std::size_t ell, double numeric_tolerance = 1e-9);

/// Report for an arbitrary enumerator (no exact root structure).
nlohmann::json zeta_report_json(const FormalWeightEnumerator& f, const Rational& q,
                                double numeric_tolerance = 1e-9);

nlohmann::json interlace_json(const InterlaceReport& rep);
nlohmann::json valuations_json(const PIntegralityReport& rep);

} // namespace duzeta
