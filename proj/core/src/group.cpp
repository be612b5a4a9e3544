#include "duzeta/group.hpp"

#include <deque>
#include <unordered_set>

namespace duzeta {

UnitaryMatrix2 operator*(const UnitaryMatrix2& x, const UnitaryMatrix2& y) {
    auto cell = [&](std::size_t r, std::size_t c) {
        return x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
    };
    return {cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)};
}

UnitaryMatrix2 UnitaryMatrix2::conjugate_transpose() const {
    return {at(0, 0).conj(), at(1, 0).conj(), at(0, 1).conj(), at(1, 1).conj()};
}

bool UnitaryMatrix2::is_unitary() const {
    return (*this) * conjugate_transpose() == identity();
}

std::string UnitaryMatrix2::key() const {
    std::string s;
    for (const auto& g : e_) {
        s += g.re().str();
        s += ',';
        s += g.im().str();
        s += ';';
    }
    return s;
}

bool MatrixGroup::contains(const UnitaryMatrix2& m) const {
    for (const auto& e : elems_)
        if (e == m) return true;
    return false;
}

std::pair<UnitaryMatrix2, UnitaryMatrix2> h1_generators() {
    GaussianRational h(Rational(1, 2), Rational(1, 2));  // (1+i)/2
    UnitaryMatrix2 g1(h, h, h, -h);
    UnitaryMatrix2 g2(GaussianRational(1), GaussianRational(0),
                      GaussianRational(0), GaussianRational::i());
    return {g1, g2};
}

MatrixGroup closure(const std::vector<UnitaryMatrix2>& generators, std::size_t cap) {
    std::vector<UnitaryMatrix2> elems;
    std::unordered_set<std::string> seen;
    std::deque<std::size_t> frontier;

    auto insert = [&](const UnitaryMatrix2& m) {
        if (seen.insert(m.key()).second) {
            if (elems.size() >= cap)
                throw CapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements");
            elems.push_back(m);
            frontier.push_back(elems.size() - 1);
        }
    };

    insert(UnitaryMatrix2::identity());
    for (const auto& g : generators) insert(g);

    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            // copy: insert() may reallocate elems
            UnitaryMatrix2 m = elems[idx];
            insert(m * g);
            insert(g * m);
        }
    }
    return MatrixGroup(std::move(elems));
}

const MatrixGroup& h1_group() {
    static const MatrixGroup group = [] {
        auto [g1, g2] = h1_generators();
        return closure({g1, g2}, 1000);
    }();
    return group;
}

HomogBivariate reynolds_power(const MatrixGroup& group, std::size_t ell) {
    if (ell < 1) throw Error("reynolds_power requires ell >= 1");
    std::vector<GaussianRational> acc(ell + 1, GaussianRational(0));
    for (const auto& sigma : group.elements()) {
        // sigma x0 = m00 x0 + m01 x1; expand (m00 x0 + m01 x1)^ell
        const GaussianRational& a = sigma.at(0, 0);
        const GaussianRational& b = sigma.at(0, 1);
        std::vector<GaussianRational> apow(ell + 1), bpow(ell + 1);
        apow[0] = GaussianRational(1);
        bpow[0] = GaussianRational(1);
        for (std::size_t k = 1; k <= ell; ++k) {
            apow[k] = apow[k - 1] * a;
            bpow[k] = bpow[k - 1] * b;
        }
        for (std::size_t k = 0; k <= ell; ++k) {
            if ((apow[ell - k].is_zero()) || (bpow[k].is_zero())) continue;
            GaussianRational term = apow[ell - k] * bpow[k];
            acc[k] += GaussianRational(Rational(binomial(ell, static_cast<long>(k))), Rational(0)) * term;
        }
    }
    Rational inv_order(1, static_cast<long>(group.order()));
    std::vector<Rational> coeffs(ell + 1);
    for (std::size_t k = 0; k <= ell; ++k) {
        GaussianRational v = acc[k] * GaussianRational(inv_order, Rational(0));
        if (!v.im().is_zero())
            throw NonRealResult("imaginary residue " + v.im().str() + " at x1^" + std::to_string(k));
        coeffs[k] = v.re();
    }
    return HomogBivariate(ell, std::move(coeffs));
}

} // namespace duzeta
