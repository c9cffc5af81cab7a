#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqrr/numeric.hpp"

namespace eqrr {

// Element of a registered finite field. `v` encodes the coefficient vector
// (c_0,...,c_{n-1}) over F_p as sum c_i p^i, so equality and hashing are cheap.
struct Fe {
    int32_t field = -1;
    uint64_t v = 0;

    bool operator==(const Fe&) const = default;
    bool is_zero() const { return v == 0; }
};

// F_{p^n} = F_p[x]/(modulus). Fields live in a global registry and are referred
// to by id. Every (p, n) has one *canonical* field whose modulus is found by a
// deterministic search making the classes of x form a norm-compatible tower of
// multiplicative generators across extensions (so eigenvalue lifts do not depend
// on which field they are computed in). User-supplied moduli get a lazily built
// isomorphism onto the canonical field.
struct Field {
    int32_t id;
    uint32_t p;
    uint32_t n;
    uint64_t q;                        // p^n, required to fit in 63 bits
    std::vector<uint32_t> modulus;     // monic, length n+1
    bool canonical;

    Fe zero() const { return {id, 0}; }
    Fe one() const { return {id, 1}; }
    Fe from_int(int64_t a) const;                 // image of an integer (prime subfield)
    Fe from_coeffs(const std::vector<uint32_t>& c) const;
    std::vector<uint32_t> coeffs(Fe a) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, const Int& e) const;
    Fe frobenius(Fe a) const { return pow(a, Int(p)); }

    // multiplicative order of a nonzero element
    uint64_t order(Fe a) const;

    // canonical multiplicative generator (class of x for canonical fields,
    // a fixed root of the canonical modulus otherwise)
    Fe generator() const;

    // discrete log base generator(): a = g^t, 0 <= t < q-1
    uint64_t dlog(Fe a) const;

    std::string to_string(Fe a) const;
};

class Fields {
public:
    // canonical field for (p, n)
    static int32_t canonical(uint32_t p, uint32_t n);
    // spec entry point: optional user modulus (monic, degree n, coefficients mod p)
    static int32_t make(uint32_t p, uint32_t n, const std::optional<std::vector<uint32_t>>& modulus);
    static const Field& get(int32_t id);

    // embedding of a into the canonical field F_{p^m}, where the degree of a's
    // field divides m; compatible with generators (norm tower)
    static Fe embed(Fe a, int32_t target_field);

    // express a (living in any field over p) in canonical coordinates of its own field
    static Fe to_canonical(Fe a);
};

inline bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

}  // namespace eqrr
