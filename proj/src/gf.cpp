#include "eqrr/gf.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "eqrr/detail.hpp"

namespace eqrr {

namespace {

// ---- dense polynomial helpers over F_p (coefficient vectors, little-endian) ----

using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    return c;
}

// remainder of a by monic m
PVec pmod(PVec a, const PVec& m, uint32_t p) {
    ptrim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - dm;
        if (c) {
            for (size_t j = 0; j < dm; ++j) {
                uint64_t t = static_cast<uint64_t>(c) * m[j] % p;
                a[shift + j] = static_cast<uint32_t>((a[shift + j] + p - t) % p);
            }
        }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& m, uint32_t p) {
    return pmod(pmul(a, b, p), m, p);
}

PVec ppowmod(PVec base, Int e, const PVec& m, uint32_t p) {
    PVec r{1};
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

uint32_t pinv_scalar(uint32_t a, uint32_t p) {
    return static_cast<uint32_t>(powmod_u64(a, p - 2, p));
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic for pmod
        uint32_t lc = b.back();
        if (lc != 1) {
            uint32_t il = pinv_scalar(lc, p);
            for (auto& x : b) x = static_cast<uint32_t>(static_cast<uint64_t>(x) * il % p);
        }
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint32_t il = pinv_scalar(a.back(), p);
        for (auto& x : a) x = static_cast<uint32_t>(static_cast<uint64_t>(x) * il % p);
    }
    return a;
}

bool p_is_irreducible(const PVec& f, uint32_t p) {
    // f monic of degree n >= 1
    size_t n = f.size() - 1;
    if (n == 1) return true;
    PVec x{0, 1};
    // x^(p^n) == x mod f
    PVec t = x;
    for (size_t i = 0; i < n; ++i) t = ppowmod(t, Int(p), f, p);
    PVec diff = t;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    if (!diff.empty()) return false;
    for (auto [r, e] : factor_u64(n)) {
        size_t d = n / r;
        PVec u = x;
        for (size_t i = 0; i < d; ++i) u = ppowmod(u, Int(p), f, p);
        u.resize(std::max<size_t>(u.size(), 2), 0);
        u[1] = static_cast<uint32_t>((u[1] + p - 1) % p);
        ptrim(u);
        PVec g = pgcd(u, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// evaluate a polynomial with F_p coefficients at y, inside F_p[x]/(m)
PVec peval_mod(const PVec& poly, const PVec& y, const PVec& m, uint32_t p) {
    PVec acc;
    for (size_t i = poly.size(); i-- > 0;) {
        acc = pmulmod(acc, y, m, p);
        if (poly[i]) {
            if (acc.empty()) acc.push_back(poly[i]);
            else acc[0] = static_cast<uint32_t>((acc[0] + poly[i]) % p);
        }
        ptrim(acc);
    }
    return acc;
}

// ---- registry internals ----

struct FieldExtra {
    std::vector<std::pair<uint64_t, int>> q1_factors;
    uint64_t gen_enc = 0;
    bool gen_ready = false;
    // user field <-> canonical field of the same (p, n)
    bool iso_ready = false;
    std::vector<uint64_t> can_pow;            // images in user field of x_can^i, i < n
    std::vector<std::vector<uint32_t>> inv_m; // n x n inverse matrix over F_p (user -> canonical)
    // baby-step table for dlog
    std::unordered_map<uint64_t, uint32_t> baby;
    uint64_t baby_m = 0;
    uint64_t giant_enc = 0;
};

struct Registry {
    std::mutex mu;
    std::deque<Field> fields;
    std::deque<FieldExtra> extras;
    std::map<std::pair<uint32_t, uint32_t>, int32_t> canonical_ids;
    std::map<std::pair<uint32_t, uint32_t>, PVec> tower_polys;
};

Registry& reg() {
    static Registry r;
    return r;
}

uint64_t pow_check(uint32_t p, uint32_t n) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (q > (1ULL << 62) / p) throw ValidationError("field too large (p^n must fit in 63 bits)");
        q *= p;
    }
    return q;
}

// deterministic tower polynomial for (p, n); requires reg().mu held
const PVec& tower_poly_locked(uint32_t p, uint32_t n) {
    auto key = std::make_pair(p, n);
    auto it = reg().tower_polys.find(key);
    if (it != reg().tower_polys.end()) return it->second;

    uint64_t q = pow_check(p, n);
    PVec result;
    if (n == 1) {
        // x - c with c the smallest primitive root mod p
        for (uint32_t c = 1; c < p; ++c) {
            if (p == 2 || mult_order_u64(c, p) == p - 1) {
                result = {(p - c) % p, 1};
                break;
            }
        }
    } else {
        for (uint32_t m = 1; m < n; ++m)
            if (n % m == 0) tower_poly_locked(p, m);
        auto q1f = factor_u64(q - 1);
        std::vector<uint64_t> divs;
        for (uint32_t m = 1; m < n; ++m)
            if (n % m == 0) divs.push_back(m);
        PVec x{0, 1};
        for (uint64_t cand = 0; cand < q; ++cand) {
            if (cand % p == 0) continue;  // constant term must be nonzero
            PVec f(n + 1, 0);
            uint64_t t = cand;
            for (uint32_t i = 0; i < n; ++i) {
                f[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            f[n] = 1;
            if (!p_is_irreducible(f, p)) continue;
            bool primitive = true;
            for (auto [r, e] : q1f) {
                PVec u = ppowmod(x, Int((q - 1) / r), f, p);
                if (u.size() == 1 && u[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (!primitive) continue;
            bool compat = true;
            for (uint64_t m : divs) {
                uint64_t qm = pow_u64(p, m);
                PVec y = ppowmod(x, Int((q - 1) / (qm - 1)), f, p);
                const PVec& dm = reg().tower_polys.at({p, static_cast<uint32_t>(m)});
                PVec val = peval_mod(dm, y, f, p);
                if (!val.empty()) {
                    compat = false;
                    break;
                }
            }
            if (!compat) continue;
            result = f;
            break;
        }
        if (result.empty()) throw ValidationError("no tower polynomial found (unexpected)");
    }
    auto [ins, ok] = reg().tower_polys.emplace(key, std::move(result));
    (void)ok;
    return ins->second;
}

int32_t register_field_locked(uint32_t p, uint32_t n, const PVec& modulus, bool canonical) {
    Field f;
    f.id = static_cast<int32_t>(reg().fields.size());
    f.p = p;
    f.n = n;
    f.q = pow_check(p, n);
    f.modulus = modulus;
    f.canonical = canonical;
    reg().fields.push_back(std::move(f));
    reg().extras.emplace_back();
    return reg().fields.back().id;
}

void decode(const Field& f, uint64_t v, uint32_t* out) {
    for (uint32_t i = 0; i < f.n; ++i) {
        out[i] = static_cast<uint32_t>(v % f.p);
        v /= f.p;
    }
}

uint64_t encode(const Field& f, const uint32_t* c) {
    uint64_t v = 0;
    for (uint32_t i = f.n; i-- > 0;) v = v * f.p + c[i];
    return v;
}

FieldExtra& extra(int32_t id) { return reg().extras[static_cast<size_t>(id)]; }

const std::vector<std::pair<uint64_t, int>>& q1_factors(const Field& f) {
    std::lock_guard<std::mutex> lk(reg().mu);
    auto& ex = extra(f.id);
    if (ex.q1_factors.empty() && f.q > 1) ex.q1_factors = factor_u64(f.q - 1);
    return ex.q1_factors;
}

void ensure_iso_locked(const Field& f);

uint64_t generator_enc(const Field& f) {
    {
        std::lock_guard<std::mutex> lk(reg().mu);
        auto& ex = extra(f.id);
        if (ex.gen_ready) return ex.gen_enc;
        if (f.canonical) {
            // class of x; for n = 1 the root of x - c is c itself
            ex.gen_enc = (f.n == 1) ? f.modulus[0] ? (f.p - f.modulus[0]) % f.p : 0 : f.p;
            ex.gen_ready = true;
            return ex.gen_enc;
        }
    }
    // user field: generator is the minimal-encoding root of the canonical modulus
    PVec can;
    {
        std::lock_guard<std::mutex> lk(reg().mu);
        can = tower_poly_locked(f.p, f.n);
    }
    Fe root = detail::find_root_of_fp_poly(can, f.id, /*seed=*/0x700e5);
    // minimise over the Frobenius orbit for determinism
    uint64_t best = root.v;
    Fe r = root;
    for (uint32_t i = 1; i < f.n; ++i) {
        r = f.frobenius(r);
        best = std::min(best, r.v);
    }
    std::lock_guard<std::mutex> lk(reg().mu);
    auto& ex = extra(f.id);
    ex.gen_enc = best;
    ex.gen_ready = true;
    return best;
}

// Gaussian elimination over F_p for the user->canonical change of basis
std::vector<std::vector<uint32_t>> invert_fp_matrix(std::vector<std::vector<uint32_t>> a, uint32_t p) {
    size_t n = a.size();
    std::vector<std::vector<uint32_t>> inv(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw ValidationError("singular change-of-basis matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        uint32_t il = pinv_scalar(a[col][col], p);
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = static_cast<uint32_t>(static_cast<uint64_t>(a[col][j]) * il % p);
            inv[col][j] = static_cast<uint32_t>(static_cast<uint64_t>(inv[col][j]) * il % p);
        }
        for (size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == col || a[r2][col] == 0) continue;
            uint64_t c = a[r2][col];
            for (size_t j = 0; j < n; ++j) {
                a[r2][j] = static_cast<uint32_t>((a[r2][j] + (p - c % p) * a[col][j]) % p);
                inv[r2][j] = static_cast<uint32_t>((inv[r2][j] + (p - c % p) * inv[col][j]) % p);
            }
        }
    }
    return inv;
}

void ensure_iso(const Field& f) {
    if (f.canonical) return;
    {
        std::lock_guard<std::mutex> lk(reg().mu);
        if (extra(f.id).iso_ready) return;
    }
    uint64_t g = generator_enc(f);  // root of canonical modulus in user coordinates
    // powers of the generator give images of the canonical basis x_can^i
    std::vector<uint64_t> pows(f.n);
    Fe acc = f.one(), gfe{f.id, g};
    for (uint32_t i = 0; i < f.n; ++i) {
        pows[i] = acc.v;
        acc = f.mul(acc, gfe);
    }
    // columns = coefficient vectors of pows -> invert for user->canonical
    std::vector<std::vector<uint32_t>> m(f.n, std::vector<uint32_t>(f.n, 0));
    std::vector<uint32_t> buf(f.n);
    for (uint32_t j = 0; j < f.n; ++j) {
        decode(f, pows[j], buf.data());
        for (uint32_t i = 0; i < f.n; ++i) m[i][j] = buf[i];
    }
    auto inv = invert_fp_matrix(m, f.p);
    std::lock_guard<std::mutex> lk(reg().mu);
    auto& ex = extra(f.id);
    if (!ex.iso_ready) {
        ex.can_pow = std::move(pows);
        ex.inv_m = std::move(inv);
        ex.iso_ready = true;
    }
}

}  // namespace

// ---- Field methods ----

Fe Field::from_int(int64_t a) const {
    int64_t r = a % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return {id, static_cast<uint64_t>(r)};
}

Fe Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > n) throw ValidationError("coefficient vector too long");
    uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p) throw ValidationError("coefficient out of range");
        v = v * p + c[i];
    }
    return {id, v};
}

std::vector<uint32_t> Field::coeffs(Fe a) const {
    std::vector<uint32_t> c(n);
    decode(*this, a.v, c.data());
    return c;
}

Fe Field::add(Fe a, Fe b) const {
    if (n == 1) return {id, (a.v + b.v) % p};
    uint32_t x[64], y[64];
    decode(*this, a.v, x);
    decode(*this, b.v, y);
    for (uint32_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
    return {id, encode(*this, x)};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::neg(Fe a) const {
    if (n == 1) return {id, a.v ? p - a.v : 0};
    uint32_t x[64];
    decode(*this, a.v, x);
    for (uint32_t i = 0; i < n; ++i) x[i] = x[i] ? p - x[i] : 0;
    return {id, encode(*this, x)};
}

Fe Field::mul(Fe a, Fe b) const {
    if (a.field != id || b.field != id) throw ValidationError("field mismatch in mul");
    if (n == 1) return {id, mulmod_u64(a.v, b.v, p)};
    if (a.v == 0 || b.v == 0) return zero();
    uint32_t x[64], y[64];
    uint64_t acc[127] = {0};
    decode(*this, a.v, x);
    decode(*this, b.v, y);
    for (uint32_t i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (uint32_t j = 0; j < n; ++j) acc[i + j] = (acc[i + j] + static_cast<uint64_t>(x[i]) * y[j]) % p;
    }
    for (uint32_t i = 2 * n - 2; i >= n && i < 127; --i) {
        uint64_t c = acc[i] % p;
        acc[i] = 0;
        if (c) {
            for (uint32_t j = 0; j < n; ++j)
                acc[i - n + j] = (acc[i - n + j] + c * ((p - modulus[j]) % p)) % p;
        }
        if (i == n) break;
    }
    uint32_t out[64];
    for (uint32_t i = 0; i < n; ++i) out[i] = static_cast<uint32_t>(acc[i] % p);
    return {id, encode(*this, out)};
}

Fe Field::pow(Fe a, const Int& e) const {
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) throw ValidationError("inverse of zero");
        return zero();
    }
    Int m = e % Int(static_cast<unsigned long>(q - 1));
    if (m < 0) m += static_cast<unsigned long>(q - 1);
    uint64_t ee = mpz_get_ui(m.get_mpz_t());
    Fe r = one(), base = a;
    while (ee) {
        if (ee & 1) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) throw ValidationError("inverse of zero");
    return pow(a, Int(static_cast<unsigned long>(q - 2)));
}

uint64_t Field::order(Fe a) const {
    if (a.v == 0) throw ValidationError("order of zero");
    uint64_t ord = q - 1;
    for (auto [r, e] : q1_factors(*this)) {
        for (int i = 0; i < e; ++i) {
            if (ord % r == 0 && pow(a, Int(static_cast<unsigned long>(ord / r))) == one())
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

Fe Field::generator() const { return {id, generator_enc(*this)}; }

uint64_t Field::dlog(Fe a) const {
    if (a.v == 0) throw ValidationError("dlog of zero");
    if (q == 2) return 0;
    if (q - 1 > (1ULL << 40)) throw ValidationError("field too large for discrete log");
    Fe g = generator();  // takes the registry lock internally
    std::lock_guard<std::mutex> lk(reg().mu);
    auto& ex = extra(id);
    if (ex.baby.empty()) {
        ex.baby_m = static_cast<uint64_t>(std::sqrt(static_cast<double>(q - 1))) + 1;
        Fe t = one();
        for (uint64_t j = 0; j < ex.baby_m; ++j) {
            ex.baby.emplace(t.v, static_cast<uint32_t>(j));
            t = mul(t, g);
        }
        ex.giant_enc = inv(pow(g, Int(static_cast<unsigned long>(ex.baby_m)))).v;
    }
    uint64_t m = ex.baby_m;
    Fe cur = a, giant{id, ex.giant_enc};
    for (uint64_t i = 0; i * m <= q - 1; ++i) {
        auto it = ex.baby.find(cur.v);
        if (it != ex.baby.end()) return (i * m + it->second) % (q - 1);
        cur = mul(cur, giant);
    }
    throw ValidationError("dlog failed (element not in group?)");
}

std::string Field::to_string(Fe a) const {
    if (n == 1) return std::to_string(a.v);
    std::ostringstream os;
    auto c = coeffs(a);
    os << "[";
    for (uint32_t i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

// ---- Fields registry ----

int32_t Fields::canonical(uint32_t p, uint32_t n) {
    if (!is_prime_u64(p)) throw ValidationError("characteristic must be prime");
    if (n == 0) throw ValidationError("extension degree must be positive");
    std::lock_guard<std::mutex> lk(reg().mu);
    auto key = std::make_pair(p, n);
    auto it = reg().canonical_ids.find(key);
    if (it != reg().canonical_ids.end()) return it->second;
    const PVec& tp = tower_poly_locked(p, n);
    int32_t id = register_field_locked(p, n, tp, true);
    reg().canonical_ids[key] = id;
    return id;
}

int32_t Fields::make(uint32_t p, uint32_t n, const std::optional<std::vector<uint32_t>>& modulus) {
    if (!is_prime_u64(p)) throw ValidationError("characteristic must be prime");
    if (n == 0) throw ValidationError("extension degree must be positive");
    if (!modulus) return canonical(p, n);
    PVec m = *modulus;
    for (auto& c : m) c %= p;
    ptrim(m);
    if (m.size() != n + 1 || m.back() != 1) throw ValidationError("modulus must be monic of degree n");
    if (!p_is_irreducible(m, p)) throw ValidationError("reducible modulus");
    std::lock_guard<std::mutex> lk(reg().mu);
    bool canon = false;
    {
        const PVec& tp = tower_poly_locked(p, n);
        canon = (tp == m);
    }
    if (canon) {
        auto key = std::make_pair(p, n);
        auto it = reg().canonical_ids.find(key);
        if (it != reg().canonical_ids.end()) return it->second;
        int32_t id = register_field_locked(p, n, m, true);
        reg().canonical_ids[key] = id;
        return id;
    }
    return register_field_locked(p, n, m, false);
}

const Field& Fields::get(int32_t id) {
    std::lock_guard<std::mutex> lk(reg().mu);
    if (id < 0 || static_cast<size_t>(id) >= reg().fields.size()) throw ValidationError("unknown field id");
    return reg().fields[static_cast<size_t>(id)];
}

Fe Fields::to_canonical(Fe a) {
    const Field& f = get(a.field);
    if (f.canonical) return a;
    ensure_iso(f);
    int32_t cid = canonical(f.p, f.n);
    const Field& cf = get(cid);
    std::vector<uint32_t> c(f.n), out(f.n, 0);
    {
        std::lock_guard<std::mutex> lk(reg().mu);
        const auto& inv_m = extra(f.id).inv_m;
        decode(f, a.v, c.data());
        for (uint32_t i = 0; i < f.n; ++i) {
            uint64_t s = 0;
            for (uint32_t j = 0; j < f.n; ++j) s += static_cast<uint64_t>(inv_m[i][j]) * c[j];
            out[i] = static_cast<uint32_t>(s % f.p);
        }
    }
    return cf.from_coeffs(out);
}

Fe Fields::embed(Fe a, int32_t target_field) {
    const Field& src = get(a.field);
    const Field& dst = get(target_field);
    if (src.p != dst.p) throw ValidationError("embedding across characteristics");
    if (a.field == target_field) return a;
    if (!dst.canonical) throw ValidationError("embedding target must be a canonical field");
    if (dst.n % src.n != 0) throw ValidationError("no embedding: degree does not divide");
    Fe ac = to_canonical(a);
    const Field& csrc = get(ac.field);
    if (ac.field == target_field) return ac;
    // image of the source generator: z_m -> z_n^((q_n-1)/(q_m-1))
    Fe zimg = dst.pow(dst.generator(), Int(static_cast<unsigned long>((dst.q - 1) / (csrc.q - 1))));
    auto c = csrc.coeffs(ac);
    Fe acc = dst.zero();
    for (size_t i = c.size(); i-- > 0;) {
        acc = dst.mul(acc, zimg);
        acc = dst.add(acc, dst.from_int(static_cast<int64_t>(c[i])));
    }
    return acc;
}

}  // namespace eqrr
