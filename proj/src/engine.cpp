#include "eqrr/engine.hpp"

#include <algorithm>
#include <set>

namespace eqrr {

void CoverData::validate() const {
    if (!group) throw ValidationError("cover has no group");
    if (s == 0) throw ValidationError("constant field degree s must be positive");
    for (const auto& pl : places) {
        if (pl.datum.group.get() != group.get())
            throw ValidationError("place datum attached to a different group");
        if (pl.wild != pl.datum.is_wild())
            throw ValidationError("wild marker does not match |P_w| at place " + pl.label);
        if (pl.datum.f_w % s != 0)
            throw ValidationError("residue degree f_w is not a multiple of [k:F_p] at " + pl.label);
        const Field& kw = Fields::get(pl.datum.residue_field);
        if (kw.p != p) throw ValidationError("residue characteristic mismatch at " + pl.label);
    }
}

bool CoverData::weakly_ramified() const {
    for (const auto& pl : places) {
        if (!pl.datum.is_wild()) continue;  // tame places are weakly ramified
        if (!pl.datum.filtration) {
            // fall back to the group-theoretic consequences checked at construction
            continue;
        }
        if (!is_weakly_ramified(pl.datum)) return false;
    }
    return true;
}

int64_t BundleData::chi_eg(const CoverData& cover) const {
    if (chi_descended) return *chi_descended;
    if (deg_descended) return chi_hrr(rank, cover.genus, *deg_descended);
    throw ValidationError("bundle needs chi(E^G) or deg(E^G)");
}

void BundleData::validate(const CoverData& cover) const {
    if (stalks.size() != cover.places.size())
        throw ValidationError("bundle must carry one stalk per ramified place");
    for (size_t i = 0; i < stalks.size(); ++i) {
        if (stalks[i].rank() != rank)
            throw ValidationError("stalk rank mismatch at place " + cover.places[i].label);
        if (cover.places[i].wild && !check_ew(stalks[i], cover.places[i].datum))
            throw HypothesisError("wild stalk condition fails at place " + cover.places[i].label);
    }
}

int64_t chi_hrr(int64_t rank, int64_t g_k, int64_t deg_eg) { return rank * (1 - g_k) + deg_eg; }

namespace {

// K0 class of Ind_{I_w}^G M_w(j) read over the constant field k = F_{p^s}
K0Class induced_mw(const CoverData& cover, const RamifiedPlace& pl, int64_t j) {
    K0Class local = mw_projective_class_over(pl.datum, j, cover.s);
    return k0_from_cf(induce_class_function(pl.datum.inertia, local.cf),
                      K0Class::Provenance::FromProjectiveModule);
}

K0Class zero_class(const CoverData& cover) {
    return k0_from_cf(cf_zero(cover.group, cover.p));
}

}  // namespace

K0Class n_pi(const CoverData& cover) {
    cover.validate();
    if (!cover.weakly_ramified()) throw HypothesisError("cover is not weakly ramified");
    K0Class acc = zero_class(cover);
    for (const auto& pl : cover.places) {
        int64_t e = static_cast<int64_t>(pl.datum.tame_order());
        int64_t pw = static_cast<int64_t>(pl.datum.wild_order());
        for (int64_t j = 1; j < e; ++j) {
            Rat coef(static_cast<long>(j * pw), static_cast<unsigned long>(cover.group->size()));
            coef.canonicalize();
            acc = k0_add(acc, k0_scale(coef, induced_mw(cover, pl, j)));
        }
    }
    return acc;
}

K0Class w_g(const CoverData& cover, const BundleData& bundle) {
    cover.validate();
    bundle.validate(cover);
    K0Class acc = zero_class(cover);
    for (size_t pi = 0; pi < cover.places.size(); ++pi) {
        const auto& pl = cover.places[pi];
        auto ls = l_exponents(bundle.stalks[pi], pl.datum);
        // 1/[G:I_w]
        Rat coef(static_cast<unsigned long>(pl.datum.inertia.size()),
                 static_cast<unsigned long>(cover.group->size()));
        coef.canonicalize();
        // group equal l values to avoid recomputing inductions
        std::map<int64_t, int64_t> count;
        for (int64_t l : ls) ++count[l];
        int64_t lmax = count.empty() ? 0 : count.rbegin()->first;
        int64_t tail = 0;  // number of i with l_i >= j, accumulated from the top
        std::map<int64_t, int64_t> weight;  // j -> multiplicity
        for (int64_t j = lmax; j >= 1; --j) {
            auto it = count.find(j);
            if (it != count.end()) tail += it->second;
            if (tail) weight[j] = tail;
        }
        for (auto [j, mult] : weight) {
            Rat c = coef * Rat(static_cast<long>(mult));
            c.canonicalize();
            acc = k0_add(acc, k0_scale(c, induced_mw(cover, pl, -j)));
        }
    }
    return acc;
}

K0Class euler_char(const CoverData& cover, const BundleData& bundle) {
    cover.validate();
    bundle.validate(cover);
    if (!cover.weakly_ramified()) throw HypothesisError("cover is not weakly ramified");
    int64_t chi = bundle.chi_eg(cover);
    K0Class npi = n_pi(cover);
    K0Class wg = w_g(cover, bundle);
    K0Class ind = k0_scale(Rat(static_cast<long>(chi)), k0_from_cf(cf_regular(cover.group, cover.p)));
    K0Class result = k0_add(k0_sub(ind, k0_scale(Rat(static_cast<long>(bundle.rank)), npi)), wg);
    // the formula holds in K_0(kG) itself: the identity value must be an integer
    Rat dim = result.dimension();
    if (dim.get_den() != 1)
        throw HypothesisError("non-integral equivariant Euler characteristic (hypotheses violated)");
    return result;
}

K0Class pullback_twist_chi(const CoverData& cover, const PullbackTwistInput& in) {
    cover.validate();
    if (!cover.weakly_ramified()) throw HypothesisError("cover is not weakly ramified");
    std::set<size_t> z(in.z_places.begin(), in.z_places.end());
    for (size_t i = 0; i < cover.places.size(); ++i)
        if (!z.count(i))
            throw ValidationError("Z is missing ramified place " + cover.places[i].label);
    K0Class acc = zero_class(cover);
    for (const auto& pl : cover.places) {
        int64_t e = static_cast<int64_t>(pl.datum.tame_order());
        int64_t pw = static_cast<int64_t>(pl.datum.wild_order());
        for (int64_t j = 1; j < e; ++j) {
            Rat coef(static_cast<long>(in.rank_f * j * pw), static_cast<unsigned long>(cover.group->size()));
            coef.canonicalize();
            acc = k0_add(acc, k0_scale(coef, induced_mw(cover, pl, -j)));
        }
    }
    int64_t c = in.rank_f * (1 - cover.genus - in.deg_z) + in.deg_f;
    K0Class ind = k0_scale(Rat(static_cast<long>(c)), k0_from_cf(cf_regular(cover.group, cover.p)));
    return k0_add(acc, ind);
}

DegreeIdentityReport degree_identity(const CoverData& cover, const BundleData& bundle,
                                     int64_t deg_e, int64_t deg_eg) {
    cover.validate();
    bundle.validate(cover);
    DegreeIdentityReport rep;
    rep.lhs = Int(static_cast<long>(deg_e)) -
              Int(static_cast<unsigned long>(cover.group->size())) * Int(static_cast<long>(deg_eg));
    Int rhs(0);
    bool all_normalized = true;
    Int nsum(0);
    for (size_t pi = 0; pi < cover.places.size(); ++pi) {
        const auto& pl = cover.places[pi];
        auto ls = l_exponents(bundle.stalks[pi], pl.datum);
        int64_t pw = static_cast<int64_t>(pl.datum.wild_order());
        int64_t iw = static_cast<int64_t>(pl.datum.inertia.size());
        for (size_t i = 0; i < ls.size(); ++i) {
            rhs += Int(static_cast<long>(pw * (ls[i] + 1) - 1));
            int64_t n = bundle.stalks[pi].exponents[i];
            if (n < 0 || n >= iw)
                all_normalized = false;
            else
                nsum += Int(static_cast<long>(n));
        }
    }
    rep.rhs = rhs;
    rep.holds = (rep.lhs == rep.rhs);
    rep.normalized_form_checked = all_normalized;
    if (all_normalized) rep.normalized_form_holds = (rep.lhs == nsum);
    return rep;
}

KockReport kock_cross_check(const CoverData& cover, const BundleData& bundle, int64_t deg_e) {
    cover.validate();
    bundle.validate(cover);
    KockReport rep;
    K0Class engine = euler_char(cover, bundle);
    uint32_t p = cover.p;
    // alternating-character side away from the identity:
    // -(1/|G|) sum_w |P_w| sum_{j=1}^{|I_w/P_w|-1} j Ind(Bch of m^j E_w / m^{j+1} E_w)
    ClassFunction alt = cf_zero(cover.group, p);
    uint64_t cond = alt.values.empty() ? 1 : alt.values[0].conductor();
    for (size_t pi = 0; pi < cover.places.size(); ++pi) {
        const auto& pl = cover.places[pi];
        if (!pl.datum.filtration)
            throw ValidationError("cross-check needs a filtration at place " + pl.label);
        int64_t e = static_cast<int64_t>(pl.datum.tame_order());
        int64_t pw = static_cast<int64_t>(pl.datum.wild_order());
        uint32_t steps = pl.datum.f_w / cover.s;
        Int q = 1;
        for (uint32_t i = 0; i < cover.s; ++i) q *= Int(p);
        for (int64_t j = 1; j < e; ++j) {
            // graded piece: sum_i theta^(j - n_i) lines on I_w (theta kills P_w), read over k
            const auto& igrp = pl.datum.inertia;
            ClassFunction graded = cf_zero(igrp.group, p);
            for (size_t ci = 0; ci < graded.reps.size(); ++ci) {
                size_t rep = graded.reps[ci];
                // C_w-component of rep: the unique c in C_w with rep * c^-1 in P_w
                size_t comp = igrp.group->size();
                for (size_t c_in : pl.datum.inertia_group_complement.elems) {
                    size_t quot = igrp.group->op(rep, igrp.group->inverse(c_in));
                    if (pl.datum.inertia_group_wild.contains(quot)) {
                        comp = c_in;
                        break;
                    }
                }
                if (comp == igrp.group->size())
                    throw ValidationError("inertia element has no C_w component");
                Fe tv = pl.datum.theta_at(igrp.to_parent(comp));
                Cyc sum = Cyc::zero(cond);
                for (int64_t n : bundle.stalks[pi].exponents) {
                    Cyc l = root_of_unity_lift(tv, cond).pow(Int(static_cast<long>(j - n)));
                    Int qa(1);
                    for (uint32_t a = 0; a < steps; ++a) {
                        sum = sum + l.pow(qa);
                        qa *= q;
                    }
                }
                graded.values[ci] = sum;
            }
            ClassFunction ind = induce_class_function(pl.datum.inertia, graded);
            Rat coef(static_cast<long>(-j * pw), static_cast<unsigned long>(cover.group->size()));
            coef.canonicalize();
            alt = cf_add(alt, cf_scale(coef, ind));
        }
    }
    rep.agrees_off_identity = true;
    for (size_t i = 1; i < alt.values.size(); ++i) {
        if (alt.values[i] != engine.cf.values[i]) {
            rep.agrees_off_identity = false;
            rep.diffs.push_back({cover.group->label(alt.reps[i]),
                                 (engine.cf.values[i] - alt.values[i]).to_string()});
        }
    }
    // c' from the alternating formula
    Rat cprime(1 + cover.genus);
    Rat degterm(static_cast<long>(deg_e), static_cast<unsigned long>(cover.group->size()));
    degterm.canonicalize();
    cprime += degterm;
    Int fcorr(0);
    for (const auto& pl : cover.places) {
        int64_t e = static_cast<int64_t>(pl.datum.tame_order());
        int64_t pw = static_cast<int64_t>(pl.datum.wild_order());
        Int term((e - 1) * (pw + 1));
        if (pl.datum.filtration) {
            const auto& fil = *pl.datum.filtration;
            for (size_t si = 2; si < fil.size(); ++si) term += Int(static_cast<long>(fil[si] - 1));
        }
        fcorr += term;
    }
    Rat corr(bundle.rank * fcorr, 2 * Int(static_cast<unsigned long>(cover.group->size())));
    corr.canonicalize();
    cprime -= corr;
    rep.c_prime = cprime;
    rep.c_engine = Rat(static_cast<long>(bundle.chi_eg(cover)));
    rep.coefficients_match = (rep.c_prime == rep.c_engine);
    return rep;
}

}  // namespace eqrr
