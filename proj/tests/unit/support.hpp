#pragma once

#include <random>
#include <string>
#include <vector>

#include "qhopf/fixtures.hpp"

namespace qhopf::testing {

inline Scalar random_scalar(const FieldSpec& f, std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    if (f.kind == FieldKind::Prime) return Scalar(f, num(rng));
    Rational re(num(rng), den(rng));
    Rational im = f.kind == FieldKind::Gaussian ? Rational(num(rng), den(rng)) : Rational();
    return Scalar(f, re, im);
}

inline Vec random_vec(const FieldSpec& f, std::size_t n, std::mt19937& rng) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
    return v;
}

inline Tensor random_tensor(const AlgebraPtr& a, int arity, std::mt19937& rng) {
    Tensor t(a, arity);
    for (std::size_t i = 0; i < t.size(); ++i) t.at(i) = random_scalar(a->field, rng);
    return t;
}

// Fixtures small enough for exhaustive unit checks.
inline std::vector<std::string> small_fixtures() {
    return {"h2", "klein_x", "klein_x_y", "klein_xy", "klein", "c2", "c3", "c4", "h2xh2", "d_h2", "bos_h2_plus", "bos_h2_minus"};
}

inline Scalar q(const FieldSpec& f, std::int64_t n, std::int64_t d = 1) { return Scalar::from_ratio(f, n, d); }

inline Scalar gi(std::int64_t re, std::int64_t im) {
    return Scalar(FieldSpec::gaussian(), Rational(re), Rational(im));
}

} // namespace qhopf::testing
