#include "eqrr/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace eqrr {

uint64_t pow_u64(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n, Rng& rng) {
    if ((n & 1) == 0) return 2;
    while (true) {
        uint64_t x = rng.below(n - 2) + 2, y = x, c = rng.below(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, Rng& rng, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n, rng);
    factor_rec(d, rng, out);
    factor_rec(n / d, rng, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    std::vector<uint64_t> primes;
    uint64_t m = n;
    for (uint64_t p = 2; p < 10000 && p * p <= m; ++p) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    if (m > 1) {
        Rng rng(0x5eedULL ^ n);
        factor_rec(m, rng, primes);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

uint64_t mult_order_u64(uint64_t a, uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(a, m) != 1) throw ValidationError("mult_order: not a unit");
    uint64_t lam = euler_phi_u64(m);
    uint64_t ord = lam;
    for (auto [p, e] : factor_u64(lam)) {
        for (int i = 0; i < e && ord % p == 0 && powmod_u64(a, ord / p, m) == 1; ++i) ord /= p;
    }
    return ord;
}

int64_t int_valuation(const Int& n, const Int& ell) {
    if (n == 0) throw ValidationError("valuation of zero");
    Int m = abs(n);
    int64_t v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), ell.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

int64_t rat_valuation(const Rat& q, const Int& ell) {
    if (q == 0) throw ValidationError("valuation of zero");
    return int_valuation(Int(q.get_num()), ell) - int_valuation(Int(q.get_den()), ell);
}

uint64_t euler_phi_u64(uint64_t n) {
    uint64_t r = n;
    for (auto [p, e] : factor_u64(n)) r = r / p * (p - 1);
    return r;
}

std::vector<uint64_t> divisors_u64(uint64_t n) {
    std::vector<uint64_t> out{1};
    for (auto [p, e] : factor_u64(n)) {
        size_t sz = out.size();
        uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eqrr
