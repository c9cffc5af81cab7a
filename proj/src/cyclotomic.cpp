#include "eqrr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace eqrr {

namespace {

std::pair<std::vector<Int>, std::vector<Int>> zpoly_divrem(const std::vector<Int>& a,
                                                           const std::vector<Int>& b) {
    // b monic
    std::vector<Int> rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Int(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        Int c = rem.back();
        size_t shift = rem.size() - b.size();
        if (c != 0) {
            quot[shift] = c;
            for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
        }
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {quot, rem};
}

std::mutex phi_mu;
std::map<uint64_t, std::vector<Int>> phi_cache;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(uint64_t m) {
    std::lock_guard<std::mutex> lk(phi_mu);
    auto it = phi_cache.find(m);
    if (it != phi_cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed by exact division
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (uint64_t d : divisors_u64(m)) {
        if (d == m) continue;
        std::vector<Int> phid;
        auto jt = phi_cache.find(d);
        if (jt != phi_cache.end()) {
            phid = jt->second;
        } else {
            // recursive fill (small depth); release/reacquire not needed: direct compute
            std::vector<Int> nd(d + 1, Int(0));
            nd[0] = -1;
            nd[d] = 1;
            for (uint64_t e : divisors_u64(d)) {
                if (e == d) continue;
                const auto& pe = phi_cache.at(e);  // divisors ascend, so e is present
                nd = zpoly_divrem(nd, pe).first;
            }
            phi_cache[d] = nd;
            phid = nd;
        }
        num = zpoly_divrem(num, phid).first;
    }
    auto [ins, ok] = phi_cache.emplace(m, std::move(num));
    (void)ok;
    return ins->second;
}

void Cyc::reduce(uint64_t m, std::vector<Rat>& raw) {
    const auto& phi = cyclotomic_polynomial(m);
    size_t deg = phi.size() - 1;
    // divide raw by monic phi, keep remainder
    while (raw.size() > deg) {
        Rat c = raw.back();
        size_t shift = raw.size() - 1 - deg;
        if (c != 0) {
            for (size_t j = 0; j < deg; ++j) raw[shift + j] -= c * Rat(phi[j]);
        }
        raw.pop_back();
    }
    raw.resize(deg, Rat(0));
    for (auto& x : raw) x.canonicalize();
}

Cyc Cyc::zero(uint64_t m) {
    size_t deg = cyclotomic_polynomial(m).size() - 1;
    return Cyc(m, std::vector<Rat>(deg, Rat(0)));
}

Cyc Cyc::one(uint64_t m) {
    Cyc z = zero(m);
    z.c_[0] = 1;
    return z;
}

Cyc Cyc::from_rat(const Rat& r, uint64_t m) {
    Cyc z = zero(m);
    z.c_[0] = r;
    z.c_[0].canonicalize();
    return z;
}

Cyc Cyc::zeta_pow(uint64_t m, int64_t k) {
    uint64_t kk = static_cast<uint64_t>(mod_i64(k, static_cast<int64_t>(m)));
    std::vector<Rat> raw(kk + 1, Rat(0));
    raw[kk] = 1;
    reduce(m, raw);
    return Cyc(m, std::move(raw));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::rational_value() const {
    if (!is_rational()) throw ValidationError("cyclotomic number is not rational: " + to_string());
    return c_[0];
}

Cyc Cyc::raised(uint64_t M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw ValidationError("conductor raise must be to a multiple");
    uint64_t step = M / m_;
    Cyc out = zero(M);
    // zeta_m^i -> zeta_M^(i*step)
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out = out + (c_[i] * zeta_pow(M, static_cast<int64_t>(i * step)));
    }
    return out;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    uint64_t M = std::lcm(a.m_, b.m_);
    if (a.m_ != M) return a.raised(M) + b.raised(M);
    if (b.m_ != M) return a + b.raised(M);
    std::vector<Rat> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = a.c_[i] + b.c_[i];
        c[i].canonicalize();
    }
    return Cyc(M, std::move(c));
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc Cyc::operator-() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return Cyc(m_, std::move(c));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    uint64_t M = std::lcm(a.m_, b.m_);
    if (a.m_ != M || b.m_ != M) return a.raised(M) * b.raised(M);
    std::vector<Rat> raw(2 * a.c_.size(), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyc::reduce(M, raw);
    return Cyc(M, std::move(raw));
}

Cyc operator*(const Rat& r, const Cyc& a) {
    std::vector<Rat> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = r * a.c_[i];
        c[i].canonicalize();
    }
    return Cyc(a.m_, std::move(c));
}

bool Cyc::operator==(const Cyc& b) const {
    if (m_ == b.m_) return c_ == b.c_;
    uint64_t M = std::lcm(m_, b.m_);
    return raised(M).c_ == b.raised(M).c_;
}

namespace {

// extended Euclid over Q[x] for the inverse in Q[x]/(phi)
using QP = std::vector<Rat>;

void qtrim(QP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QP qmul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    for (auto& x : c) x.canonicalize();
    return c;
}

QP qsub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
        a[i].canonicalize();
    }
    qtrim(a);
    return a;
}

std::pair<QP, QP> qdivrem(QP a, const QP& b) {
    QP quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rat(0));
    Rat il = 1 / b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() * il;
        c.canonicalize();
        size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            a[shift + j] -= c * b[j];
            a[shift + j].canonicalize();
        }
        qtrim(a);
    }
    return {quot, a};
}

}  // namespace

Cyc Cyc::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero cyclotomic number");
    if (is_rational()) return from_rat(1 / c_[0], m_);
    const auto& phiz = cyclotomic_polynomial(m_);
    QP phi(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rat(phiz[i]);
    QP a(c_.begin(), c_.end());
    qtrim(a);
    // Bezout: s*a + t*phi = gcd = nonzero rational
    QP r0 = phi, r1 = a, s0 = {}, s1 = {Rat(1)};
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = qdivrem(r0, r1);
        QP s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw ValidationError("non-invertible element (unexpected in a field)");
    Rat g = r1[0];
    QP inv = s1;
    for (auto& x : inv) {
        x /= g;
        x.canonicalize();
    }
    std::vector<Rat> raw(inv.begin(), inv.end());
    reduce(m_, raw);
    return Cyc(m_, std::move(raw));
}

Cyc Cyc::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc r = one(m_), b = *this;
    Int ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) r = r * b;
        b = b * b;
        ee >>= 1;
    }
    return r;
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z" << m_ << "^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

Cyc root_of_unity_lift(Fe x, uint64_t m) {
    const Field& F = Fields::get(x.field);
    if (x.is_zero()) throw ValidationError("lift of zero");
    if (m % F.p == 0) throw ValidationError("conductor divisible by the characteristic");
    uint64_t d = F.order(x);
    if (m % d != 0) throw ValidationError("element order does not divide the conductor");
    uint64_t s = F.dlog(x);  // x = g^s with g of order q-1
    // s is a multiple of (q-1)/d; lift(x) = zeta_d^(s*d/(q-1)) = zeta_m^(s*(m/d)*(d/(q-1)))
    uint64_t q1 = F.q - 1;
    uint64_t step = s / (q1 / d);  // exponent of zeta_d
    return Cyc::zeta_pow(m, static_cast<int64_t>(step * (m / d) % m));
}

}  // namespace eqrr
