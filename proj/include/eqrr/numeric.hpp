#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eqrr {

using Int = mpz_class;
using Rat = mpq_class;

// Input or schema problem: bad data, failed precondition on user-supplied values.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A named hypothesis of a formula is violated (weak ramification, stalk shape, ...).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline int64_t ceil_div_i64(int64_t a, int64_t b) {
    // b > 0 assumed
    int64_t q = a / b, r = a % b;
    return q + (r > 0 ? 1 : 0);
}

inline int64_t mod_i64(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

uint64_t pow_u64(uint64_t base, uint64_t exp);
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

bool is_prime_u64(uint64_t n);

// Prime factorisation of n as (prime, exponent) pairs, ascending.
std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n);

// Multiplicative order of a modulo m, gcd(a,m)=1.
uint64_t mult_order_u64(uint64_t a, uint64_t m);

// v_ell(n) for a nonzero integer: the exponent of ell in n.
int64_t int_valuation(const Int& n, const Int& ell);

// v_ell of a nonzero rational.
int64_t rat_valuation(const Rat& q, const Int& ell);

uint64_t euler_phi_u64(uint64_t n);

std::vector<uint64_t> divisors_u64(uint64_t n);

// splitmix64: tiny deterministic stream, stable across platforms. Used wherever
// an algorithm needs random trials (equal-degree splitting and friends).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace eqrr
