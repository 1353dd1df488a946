#include "modlie/matrix.hpp"

namespace modlie {

Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scaled(const PrimeField& f, const Vec& a, Scalar c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (Scalar v : a)
        if (v) return false;
    return true;
}

} // namespace modlie
