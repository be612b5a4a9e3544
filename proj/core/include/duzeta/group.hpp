#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "duzeta/gaussian.hpp"
#include "duzeta/poly.hpp"

namespace duzeta {

/// 2x2 matrix over Q(i). Row-major entries; unitarity is exactly testable.
class UnitaryMatrix2 {
public:
    UnitaryMatrix2() : e_{GaussianRational(1), GaussianRational(0),
                          GaussianRational(0), GaussianRational(1)} {}
    UnitaryMatrix2(GaussianRational a, GaussianRational b,
                   GaussianRational c, GaussianRational d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static UnitaryMatrix2 identity() { return UnitaryMatrix2(); }

    const GaussianRational& at(std::size_t row, std::size_t col) const { return e_[2 * row + col]; }

    friend UnitaryMatrix2 operator*(const UnitaryMatrix2& x, const UnitaryMatrix2& y);

    UnitaryMatrix2 conjugate_transpose() const;

    bool is_unitary() const;

    friend bool operator==(const UnitaryMatrix2& a, const UnitaryMatrix2& b) { return a.e_ == b.e_; }

    /// Canonical key on reduced entries; usable for hashing/set membership.
    std::string key() const;

private:
    std::array<GaussianRational, 4> e_;
};

/// Finite set of matrices closed under multiplication, in deterministic
/// (BFS insertion) order.
class MatrixGroup {
public:
    explicit MatrixGroup(std::vector<UnitaryMatrix2> elements) : elems_(std::move(elements)) {}

    std::size_t order() const { return elems_.size(); }
    const std::vector<UnitaryMatrix2>& elements() const { return elems_; }

    bool contains(const UnitaryMatrix2& m) const;

private:
    std::vector<UnitaryMatrix2> elems_;
};

/// The two generators of H_1: ((1+i)/2) [[1,1],[1,-1]] and diag(1, i).
std::pair<UnitaryMatrix2, UnitaryMatrix2> h1_generators();

/// Breadth-first multiplicative closure. Throws CapExceeded if the closure
/// grows past cap.
MatrixGroup closure(const std::vector<UnitaryMatrix2>& generators, std::size_t cap);

/// The order-96 group generated by h1_generators().
const MatrixGroup& h1_group();

/// (1/|G|) sum over sigma of (sigma x0)^ell, where sigma x0 is the first row
/// of sigma applied to (x0, x1)^t. Throws NonRealResult if any coefficient
/// has a nonzero imaginary part.
HomogBivariate reynolds_power(const MatrixGroup& group, std::size_t ell);

} // namespace duzeta
