#include "duzeta/gaussian.hpp"

namespace duzeta {

GaussianRational GaussianRational::pow(unsigned long e) const {
    GaussianRational acc(1);
    GaussianRational base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    s += im_.str() + "*i";
    return s;
}

} // namespace duzeta
