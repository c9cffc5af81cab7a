#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqrr/gf.hpp"
#include "eqrr/numeric.hpp"

namespace eqrr {

// Element of Q(zeta_m), stored reduced modulo the m-th cyclotomic polynomial:
// a rational coefficient vector of length phi(m). Conductors are merged through
// least common multiples where operations mix them.
class Cyc {
public:
    Cyc() : m_(1), c_(1, Rat(0)) {}
    static Cyc zero(uint64_t m);
    static Cyc one(uint64_t m);
    static Cyc from_rat(const Rat& r, uint64_t m = 1);
    static Cyc zeta_pow(uint64_t m, int64_t k);  // zeta_m^k

    uint64_t conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Cyc raised(uint64_t M) const;  // view in Q(zeta_M), m | M

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Rat& r, const Cyc& a);
    Cyc operator-() const;
    Cyc inverse() const;
    Cyc pow(const Int& e) const;
    bool operator==(const Cyc& b) const;
    bool operator!=(const Cyc& b) const { return !(*this == b); }

    std::string to_string() const;

private:
    uint64_t m_;
    std::vector<Rat> c_;  // length phi(m_)
    Cyc(uint64_t m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
    static void reduce(uint64_t m, std::vector<Rat>& raw);
};

// The m-th cyclotomic polynomial over Z (little-endian integer coefficients); cached.
const std::vector<Int>& cyclotomic_polynomial(uint64_t m);

// Multiplicative lift of a root of unity in a finite field: x of order d | m
// with p not dividing m maps to zeta_m^t along the canonical generator tower.
// Satisfies lift(xy) = lift(x)lift(y) and compatibility with subfield embeddings.
Cyc root_of_unity_lift(Fe x, uint64_t m);

}  // namespace eqrr
