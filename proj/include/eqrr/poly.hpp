#pragma once

#include <vector>

#include "eqrr/gf.hpp"

namespace eqrr {

// Dense univariate polynomial over a registered finite field, little-endian
// coefficients, no trailing zeros (zero polynomial has empty coefficient list).
struct Poly {
    int32_t field = -1;
    std::vector<Fe> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Fe lead() const { return c.back(); }
    Fe at(size_t i) const { return i < c.size() ? c[i] : Fe{field, 0}; }
    bool operator==(const Poly&) const = default;
};

Poly poly_zero(int32_t field);
Poly poly_one(int32_t field);
Poly poly_x(int32_t field);
Poly poly_from(int32_t field, const std::vector<Fe>& coeffs);
Poly poly_from_int(int32_t field, const std::vector<int64_t>& coeffs);
void poly_trim(Poly& a);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Fe s);
// quotient and remainder by nonzero b
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_monic(const Poly& a);
Poly poly_powmod(const Poly& base, const Int& e, const Poly& mod);
Poly poly_derivative(const Poly& a);
Fe poly_eval(const Poly& a, Fe x);
// a(s*x + t)
Poly poly_compose_linear(const Poly& a, Fe s, Fe t);

bool poly_is_irreducible(const Poly& f);

struct Factorization {
    Fe lead;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
};

// Deterministic given (f, seed): equal-degree splitting draws from a seeded
// stream, and the factor list is sorted by (degree, coefficient encoding).
Factorization factor_polynomial(const Poly& f, uint64_t seed);

// Roots of f lying in its own coefficient field.
std::vector<Fe> poly_roots(const Poly& f, uint64_t seed);

}  // namespace eqrr
