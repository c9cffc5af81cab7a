#include "eqrr/ramification.hpp"

#include <algorithm>

#include "eqrr/cyclotomic.hpp"

namespace eqrr {

Fe LocalDatum::theta_at(size_t ambient_elem) const {
    const Field& kw = Fields::get(residue_field);
    const auto& cg = *complement.group;
    size_t sub = complement.to_sub(ambient_elem);
    size_t gen = complement.to_sub(theta_generator);
    // write sub as gen^k in the cyclic group C_w
    size_t x = cg.identity();
    for (uint32_t k = 0; k < cg.size(); ++k) {
        if (x == sub) return kw.pow(theta_value, Int(static_cast<unsigned long>(k)));
        x = cg.op(x, gen);
    }
    throw ValidationError("theta generator does not generate C_w");
}

LocalDatum make_local_datum(GroupPtr group, Subgroup inertia, Subgroup wild, Subgroup complement,
                            size_t theta_generator, Fe theta_value, uint32_t f_w,
                            std::optional<std::vector<uint64_t>> filtration,
                            bool declared_weakly_ramified) {
    LocalDatum dat;
    dat.group = group;
    dat.inertia = std::move(inertia);
    dat.wild = std::move(wild);
    dat.complement = std::move(complement);
    dat.theta_generator = theta_generator;
    dat.theta_value = theta_value;
    dat.f_w = f_w;
    dat.filtration = std::move(filtration);

    const Field& kw = Fields::get(theta_value.field);
    if (kw.n != f_w) throw ValidationError("theta value must live in F_{p^{f_w}}");
    dat.residue_field = theta_value.field;

    const auto& G = *group;
    uint32_t p = kw.p;

    // subgroup sanity: P_w, C_w inside I_w
    for (size_t e : dat.wild.elems)
        if (!dat.inertia.contains(e)) throw ValidationError("P_w not contained in I_w");
    for (size_t e : dat.complement.elems)
        if (!dat.inertia.contains(e)) throw ValidationError("C_w not contained in I_w");

    // P_w is the normal Sylow p-subgroup of I_w
    size_t ppart = 1, m = dat.inertia.size();
    while (m % p == 0) {
        m /= p;
        ppart *= p;
    }
    if (dat.wild.size() != ppart) throw ValidationError("P_w is not a Sylow p-subgroup of I_w");
    {
        // normal inside I_w
        for (size_t x : dat.inertia.elems)
            for (size_t a : dat.wild.elems)
                if (!dat.wild.contains(G.op(G.op(x, a), G.inverse(x))))
                    throw ValidationError("P_w is not normal in I_w");
    }
    // I_w = P_w . C_w with trivial intersection, C_w cyclic of prime-to-p order
    if (dat.wild.size() * dat.complement.size() != dat.inertia.size())
        throw ValidationError("|P_w| * |C_w| != |I_w|");
    {
        size_t common = 0;
        for (size_t e : dat.complement.elems)
            if (dat.wild.contains(e)) ++common;
        if (common != 1) throw ValidationError("P_w and C_w intersect nontrivially");
    }
    if (dat.complement.size() % p == 0) throw ValidationError("C_w order divisible by p");
    if (G.element_order(theta_generator) != dat.complement.size() ||
        !dat.complement.contains(theta_generator))
        throw ValidationError("theta generator must generate the cyclic C_w");

    // theta injective on C_w with image of order |I_w/P_w|
    if (theta_value.is_zero() || kw.order(theta_value) != dat.complement.size())
        throw ValidationError("theta order differs from |C_w|");

    if (declared_weakly_ramified && dat.wild.size() > 1) {
        // P_w elementary abelian
        for (size_t e : dat.wild.elems)
            if (e != G.identity() && G.element_order(e) != p)
                throw ValidationError("weakly ramified requires elementary abelian P_w");
        // conjugates of C_w by nontrivial wild elements meet C_w trivially
        for (size_t g : dat.wild.elems) {
            if (g == G.identity()) continue;
            size_t common = 0;
            for (size_t e : dat.complement.elems) {
                size_t conj = G.op(G.op(g, e), G.inverse(g));
                if (dat.complement.contains(conj)) ++common;
            }
            if (common != 1)
                throw ValidationError("complement conjugates intersect nontrivially (not weakly ramified)");
        }
    }

    if (dat.filtration) {
        const auto& fil = *dat.filtration;
        if (fil.empty()) throw ValidationError("empty filtration");
        for (size_t i = 1; i < fil.size(); ++i)
            if (fil[i] > fil[i - 1]) throw ValidationError("filtration must be non-increasing");
        if (fil[0] != dat.inertia.size()) throw ValidationError("|I_{w,0}| != |I_w|");
        if (fil.size() > 1 && fil[1] != dat.wild.size())
            throw ValidationError("|I_{w,1}| != |P_w|");
        if (fil.size() == 1 && dat.wild.size() != 1)
            throw ValidationError("|I_{w,1}| != |P_w|");
    }

    // subgroups of the abstract inertia group
    std::vector<size_t> wild_in_i, comp_in_i;
    for (size_t e : dat.wild.elems) wild_in_i.push_back(dat.inertia.to_sub(e));
    for (size_t e : dat.complement.elems) comp_in_i.push_back(dat.inertia.to_sub(e));
    dat.inertia_group_wild = make_subgroup(dat.inertia.group, wild_in_i);
    dat.inertia_group_complement = make_subgroup(dat.inertia.group, comp_in_i);
    return dat;
}

bool is_weakly_ramified(const std::vector<uint64_t>& filtration) {
    if (filtration.empty()) throw ValidationError("missing filtration");
    return filtration.size() <= 2 || filtration[2] == 1;
}

bool is_weakly_ramified(const LocalDatum& dat) {
    if (!dat.filtration) throw ValidationError("missing filtration");
    return is_weakly_ramified(*dat.filtration);
}

bool check_ew(const BundleStalk& stalk, const LocalDatum& dat) {
    int64_t pw = static_cast<int64_t>(dat.wild_order());
    for (int64_t n : stalk.exponents)
        if (mod_i64(n + 1, pw) != 0) return false;
    return true;
}

std::vector<int64_t> l_exponents(const BundleStalk& stalk, const LocalDatum& dat) {
    int64_t pw = static_cast<int64_t>(dat.wild_order());
    int64_t e = static_cast<int64_t>(dat.tame_order());
    std::vector<int64_t> out;
    for (int64_t n : stalk.exponents) {
        if (mod_i64(n + 1, pw) != 0)
            throw HypothesisError("stalk exponent " + std::to_string(n) +
                                  " violates the wild stalk condition (n != -1 mod |P_w|)");
        out.push_back(mod_i64((n + 1) / pw - 1, e));
    }
    return out;
}

std::vector<int64_t> l_from_neron(const std::vector<int64_t>& r, bool in_z_prime,
                                  const LocalDatum& dat) {
    int64_t e = static_cast<int64_t>(dat.tame_order());
    std::vector<int64_t> out;
    if (!in_z_prime) {
        out.assign(r.size(), e - 1);
        return out;
    }
    int64_t iw = static_cast<int64_t>(dat.inertia.size());
    for (int64_t ri : r) {
        if (ri < 0 || ri >= iw) throw ValidationError("Neron exponent out of range [0, |I_w|)");
        out.push_back(ri != 0 ? ri - 1 : e - 1);
    }
    return out;
}

int64_t d_prime(const std::vector<int64_t>& r) {
    int64_t c = 0;
    for (int64_t x : r)
        if (x == 0) ++c;
    return c;
}

int64_t descent_exponent(int64_t n_w, int64_t e) {
    if (e < 1) throw ValidationError("ramification index must be >= 1");
    return -1 + ceil_div_i64(n_w + 1, e);
}

K0Class mw_projective_class_over(const LocalDatum& dat, int64_t j, uint32_t subfield_degree) {
    if (dat.f_w % subfield_degree != 0)
        throw ValidationError("subfield degree must divide [k_w : F_p]");
    uint32_t steps = dat.f_w / subfield_degree;
    const Field& kw = Fields::get(dat.residue_field);
    uint32_t p = kw.p;
    // line character on C_w as a representation over F_{p^subfield_degree}:
    // at c, sum over Galois conjugates lift(theta(c)^j)^(q^a)
    const auto& cgrp = dat.inertia_group_complement;  // C_w inside inertia.group
    ClassFunction line = cf_zero(cgrp.group, p);
    uint64_t cond = line.values.empty() ? 1 : line.values[0].conductor();
    Int base(static_cast<unsigned long>(p));
    Int q = 1;
    for (uint32_t i = 0; i < subfield_degree; ++i) q *= base;
    for (size_t i = 0; i < line.reps.size(); ++i) {
        size_t c_in_inertia = cgrp.to_parent(line.reps[i]);
        size_t ambient = dat.inertia.to_parent(c_in_inertia);
        Fe tv = dat.theta_at(ambient);
        Cyc lift = root_of_unity_lift(tv, cond).pow(Int(j));
        Cyc sum = Cyc::zero(cond);
        Int qa(1);
        for (uint32_t a = 0; a < steps; ++a) {
            sum = sum + lift.pow(qa);
            qa *= q;
        }
        line.values[i] = sum;
    }
    ClassFunction induced = induce_class_function(cgrp, line);
    return k0_from_cf(std::move(induced), K0Class::Provenance::FromProjectiveModule);
}

K0Class mw_projective_class(const LocalDatum& dat, int64_t j) {
    return mw_projective_class_over(dat, j, 1);
}

}  // namespace eqrr
