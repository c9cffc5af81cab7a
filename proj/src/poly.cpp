#include "eqrr/poly.hpp"

#include <algorithm>
#include <map>

#include "eqrr/detail.hpp"

namespace eqrr {

Poly poly_zero(int32_t field) { return {field, {}}; }

Poly poly_one(int32_t field) { return {field, {Fe{field, 1}}}; }

Poly poly_x(int32_t field) { return {field, {Fe{field, 0}, Fe{field, 1}}}; }

void poly_trim(Poly& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

Poly poly_from(int32_t field, const std::vector<Fe>& coeffs) {
    Poly p{field, coeffs};
    for (auto& x : p.c)
        if (x.field != field) throw ValidationError("mixed fields in polynomial");
    poly_trim(p);
    return p;
}

Poly poly_from_int(int32_t field, const std::vector<int64_t>& coeffs) {
    const Field& F = Fields::get(field);
    Poly p{field, {}};
    p.c.reserve(coeffs.size());
    for (int64_t v : coeffs) p.c.push_back(F.from_int(v));
    poly_trim(p);
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    const Field& F = Fields::get(a.field);
    Poly r{a.field, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.at(i), b.at(i));
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const Field& F = Fields::get(a.field);
    Poly r{a.field, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.at(i), b.at(i));
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero(a.field);
    const Field& F = Fields::get(a.field);
    Poly r{a.field, std::vector<Fe>(a.c.size() + b.c.size() - 1, F.zero())};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_trim(r);
    return r;
}

Poly poly_scale(const Poly& a, Fe s) {
    const Field& F = Fields::get(a.field);
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ValidationError("division by zero polynomial");
    const Field& F = Fields::get(a.field);
    Poly rem = a, quot{a.field, {}};
    if (a.degree() >= b.degree()) quot.c.assign(a.c.size() - b.c.size() + 1, F.zero());
    Fe invlead = F.inv(b.lead());
    while (rem.degree() >= b.degree() && !rem.is_zero()) {
        Fe coef = F.mul(rem.lead(), invlead);
        size_t shift = rem.c.size() - b.c.size();
        quot.c[shift] = coef;
        for (size_t j = 0; j < b.c.size(); ++j)
            rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(coef, b.c[j]));
        poly_trim(rem);
    }
    poly_trim(quot);
    return {quot, rem};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    const Field& F = Fields::get(a.field);
    return poly_scale(a, F.inv(a.lead()));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_powmod(const Poly& base, const Int& e, const Poly& mod) {
    Poly r = poly_one(base.field);
    Poly b = poly_mod(base, mod);
    Int ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) r = poly_mod(poly_mul(r, b), mod);
        b = poly_mod(poly_mul(b, b), mod);
        ee >>= 1;
    }
    return r;
}

Poly poly_derivative(const Poly& a) {
    const Field& F = Fields::get(a.field);
    Poly r{a.field, {}};
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(F.mul(a.c[i], F.from_int(static_cast<int64_t>(i))));
    poly_trim(r);
    return r;
}

Fe poly_eval(const Poly& a, Fe x) {
    const Field& F = Fields::get(a.field);
    Fe acc = F.zero();
    for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

Poly poly_compose_linear(const Poly& a, Fe s, Fe t) {
    Poly lin{a.field, {t, s}};
    poly_trim(lin);
    Poly acc = poly_zero(a.field);
    for (size_t i = a.c.size(); i-- > 0;) {
        acc = poly_mul(acc, lin);
        acc = poly_add(acc, Poly{a.field, {a.c[i]}});
    }
    return acc;
}

bool poly_is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const Field& F = Fields::get(f.field);
    Poly fm = poly_monic(f);
    uint32_t n = static_cast<uint32_t>(fm.degree());
    Poly x = poly_x(f.field);
    Poly t = x;
    for (uint32_t i = 0; i < n; ++i) t = poly_powmod(t, Int(static_cast<unsigned long>(F.q)), fm);
    if (!(poly_sub(t, x).is_zero())) return false;
    for (auto [r, e] : factor_u64(n)) {
        uint32_t d = n / static_cast<uint32_t>(r);
        Poly u = x;
        for (uint32_t i = 0; i < d; ++i) u = poly_powmod(u, Int(static_cast<unsigned long>(F.q)), fm);
        Poly g = poly_gcd(poly_sub(u, x), fm);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

// f = g(x^p) -> p-th root of f (coefficientwise q/p power)
Poly pth_root(const Poly& f) {
    const Field& F = Fields::get(f.field);
    uint64_t e = F.q / F.p;  // c^(q/p) is the inverse of c -> c^p
    Poly r{f.field, {}};
    for (size_t i = 0; i < f.c.size(); i += F.p)
        r.c.push_back(F.pow(f.c[i], Int(static_cast<unsigned long>(e))));
    poly_trim(r);
    return r;
}

void squarefree_parts(const Poly& f, int mult, std::map<int, Poly>& out);

void merge_part(int mult, const Poly& g, std::map<int, Poly>& out) {
    if (g.degree() <= 0) return;
    auto it = out.find(mult);
    if (it == out.end())
        out.emplace(mult, g);
    else
        it->second = poly_mul(it->second, g);
}

// Yun-style squarefree decomposition adapted to characteristic p.
void squarefree_parts(const Poly& f, int mult, std::map<int, Poly>& out) {
    const Field& F = Fields::get(f.field);
    Poly fp = poly_derivative(f);
    if (fp.is_zero()) {
        squarefree_parts(pth_root(f), mult * static_cast<int>(F.p), out);
        return;
    }
    Poly g = poly_gcd(f, fp);
    Poly w = poly_divrem(f, g).first;  // product of squarefree part coprime to p-multiplicities
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly part = poly_divrem(w, y).first;  // factors of exact multiplicity i
        merge_part(mult * i, part, out);
        w = y;
        g = poly_divrem(g, y).first;
        ++i;
    }
    if (g.degree() > 0) squarefree_parts(g, mult, out);  // leftover p-th power part
}

// distinct-degree decomposition of a squarefree monic f: list of (product, degree)
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    const Field& F = Fields::get(f.field);
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    Poly h = poly_x(f.field);
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.push_back({rest, rest.degree()});
            break;
        }
        h = poly_powmod(h, Int(static_cast<unsigned long>(F.q)), rest);
        Poly g = poly_gcd(poly_sub(h, poly_x(f.field)), rest);
        if (g.degree() > 0) {
            out.push_back({g, d});
            rest = poly_divrem(rest, g).first;
            h = poly_mod(h, rest);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree monic f whose
// irreducible factors all have degree d.
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field& F = Fields::get(f.field);
    int n = f.degree();
    while (true) {
        // random polynomial of degree < n
        Poly a{f.field, {}};
        for (int i = 0; i < n; ++i) a.c.push_back(Fe{f.field, rng.below(F.q)});
        poly_trim(a);
        if (a.degree() < 1 && d > 1) continue;
        Poly g = poly_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(poly_divrem(f, g).first, d, rng, out);
            return;
        }
        Poly b;
        if (F.p == 2) {
            // trace map over F_2: sum of a^(2^i), i < d*log2(q)... use d * n-bit count
            uint64_t bits = 0;
            uint64_t qq = F.q;
            while (qq > 1) {
                qq >>= 1;
                ++bits;
            }
            uint64_t steps = bits * static_cast<uint64_t>(d);
            Poly t = poly_mod(a, f), acc = t;
            for (uint64_t i = 1; i < steps; ++i) {
                t = poly_mod(poly_mul(t, t), f);
                acc = poly_add(acc, t);
            }
            b = acc;
        } else {
            Int qd = 1;
            for (int i = 0; i < d; ++i) qd *= Int(static_cast<unsigned long>(F.q));
            b = poly_sub(poly_powmod(a, (qd - 1) / 2, f), poly_one(f.field));
        }
        g = poly_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(poly_divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i].v != b.c[i].v) return a.c[i].v < b.c[i].v;
    }
    return false;
}

}  // namespace

Factorization factor_polynomial(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw ValidationError("cannot factor the zero polynomial");
    Factorization out;
    out.lead = f.lead();
    if (f.degree() == 0) return out;
    Poly fm = poly_monic(f);
    std::map<int, Poly> sqf;
    squarefree_parts(fm, 1, sqf);
    Rng rng(seed ^ 0x9c0c5eedULL);
    std::vector<std::pair<Poly, int>> factors;
    for (auto& [mult, part] : sqf) {
        for (auto& [prod, d] : distinct_degree(poly_monic(part))) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) factors.push_back({poly_monic(g), mult});
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    out.factors = std::move(factors);
    return out;
}

std::vector<Fe> poly_roots(const Poly& f, uint64_t seed) {
    const Field& F = Fields::get(f.field);
    // restrict to the part splitting in the base field
    Poly xq = poly_powmod(poly_x(f.field), Int(static_cast<unsigned long>(F.q)), poly_monic(f));
    Poly lin = poly_gcd(poly_sub(xq, poly_x(f.field)), poly_monic(f));
    std::vector<Fe> roots;
    if (lin.degree() <= 0) return roots;
    auto fac = factor_polynomial(lin, seed);
    for (auto& [g, m] : fac.factors) {
        if (g.degree() == 1) roots.push_back(F.neg(g.c[0]));
    }
    std::sort(roots.begin(), roots.end(), [](Fe a, Fe b) { return a.v < b.v; });
    return roots;
}

namespace detail {

Fe find_root_of_fp_poly(const std::vector<uint32_t>& poly, int32_t field, uint64_t seed) {
    const Field& F = Fields::get(field);
    Poly f{field, {}};
    for (uint32_t cv : poly) f.c.push_back(F.from_int(static_cast<int64_t>(cv)));
    poly_trim(f);
    auto roots = poly_roots(f, seed);
    if (roots.empty()) throw ValidationError("polynomial has no root in the field");
    return roots.front();
}

}  // namespace detail

}  // namespace eqrr
