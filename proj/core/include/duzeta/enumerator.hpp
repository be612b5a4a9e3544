#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <vector>

#include "duzeta/poly.hpp"

namespace duzeta {

/// Homogeneous degree-n polynomial with A_0 = 1. The minimum distance d is
/// the smallest i >= 1 with A_i != 0; it does not exist for f = x0^n.
class FormalWeightEnumerator {
public:
    /// Validates A_0 = 1 and computes d.
    FormalWeightEnumerator(std::size_t degree, std::vector<Rational> coeffs);

    std::size_t degree() const { return n_; }
    const Rational& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool has_min_distance() const { return d_.has_value(); }

    HomogBivariate as_bivariate() const { return HomogBivariate(n_, c_); }

    friend bool operator==(const FormalWeightEnumerator& a, const FormalWeightEnumerator& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

private:
    friend std::size_t min_distance(const FormalWeightEnumerator&);
    std::size_t n_;
    std::vector<Rational> c_;
    std::optional<std::size_t> d_;
};

/// Smallest i >= 1 with A_i != 0; throws NoMinimumDistance for f = x0^n.
std::size_t min_distance(const FormalWeightEnumerator& f);

/// Unnormalized Eisenstein polynomial by the closed form
///   ((-1)^{l/4} + 2^{(l-4)/2})(x0^l + x1^l)
///     + sum_{0<j<l, 4|j} (-1)^{l/4} C(l,j) x0^{l-j} x1^j.
/// Requires l a multiple of 4, l >= 8 (phi_4 vanishes identically).
HomogBivariate eisenstein_closed_form(std::size_t ell);

/// (-1)^{l/4} + 2^{(l-4)/2}, the x0^l coefficient of the closed form.
Rational eisenstein_leading_scalar(std::size_t ell);

/// Divides by the x0^n coefficient so A_0 = 1. Returns nullopt for the zero
/// polynomial; throws NoLeadingTerm when raw is nonzero with zero x0^n
/// coefficient.
std::optional<FormalWeightEnumerator> normalize(const HomogBivariate& raw);

/// Normalized phi_l (the group average scaled to leading coefficient 1).
FormalWeightEnumerator normalized_eisenstein(std::size_t ell);

/// N_f(t) = (1/(q-1)) sum_{i=d}^n (A_i / C(n,i)) t^{i-d}.
UniPoly normalized_weight_enumerator(const FormalWeightEnumerator& f, const Rational& q);

/// JSON schema: {"degree": n, "coefficients": ["1", "0", ..., "A_n"]}.
FormalWeightEnumerator load_enumerator(const nlohmann::json& doc);
nlohmann::json store_enumerator(const FormalWeightEnumerator& f);

FormalWeightEnumerator load_enumerator_file(const std::string& path);

} // namespace duzeta
