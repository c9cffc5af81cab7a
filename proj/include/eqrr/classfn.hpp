#pragma once

#include <vector>

#include "eqrr/cyclotomic.hpp"
#include "eqrr/group.hpp"

namespace eqrr {

// Class function on the p-regular classes of a group, with values in Q(zeta_m)
// for m the exponent of the p-regular part.
struct ClassFunction {
    GroupPtr group;
    uint32_t p = 0;
    std::vector<size_t> reps;     // p-regular class representatives, canonical order
    std::vector<Cyc> values;      // parallel to reps
    std::vector<int32_t> pos_of_class;  // group class index -> position in reps, or -1

    Cyc eval(size_t elem) const;
    bool same_shape(const ClassFunction& o) const;
    bool operator==(const ClassFunction& o) const;
};

ClassFunction cf_zero(GroupPtr g, uint32_t p);
ClassFunction cf_trivial(GroupPtr g, uint32_t p);
// Brauer character of the regular module: |G| at 1, zero elsewhere
ClassFunction cf_regular(GroupPtr g, uint32_t p);

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(const Rat& r, const ClassFunction& a);

// (Ind phi)(g) = (1/|H|) sum over x in G with x^-1 g x in H of phi(x^-1 g x)
ClassFunction induce_class_function(const Subgroup& h, const ClassFunction& phi);
ClassFunction restrict_class_function(const ClassFunction& phi, const Subgroup& h);
// value at g -> value at g^-1
ClassFunction dual_class_function(const ClassFunction& phi);

// sum over p-regular classes of phi(g) chi(g^-1) / |centraliser(g)|
Cyc cf_inner_product(const ClassFunction& phi, const ClassFunction& chi);

// Computational avatar of an element of K_0(kG) (x) Q: class functions separate
// classes of projectives, so equality of class functions is the equality here.
struct K0Class {
    enum class Provenance { FromProjectiveModule, FormalCombination };
    ClassFunction cf;
    Provenance provenance = Provenance::FormalCombination;

    // value at the identity class: rational, denominator divides |G|
    Rat dimension() const;
    void validate() const;
};

K0Class k0_from_cf(ClassFunction cf, K0Class::Provenance prov = K0Class::Provenance::FormalCombination);
K0Class k0_add(const K0Class& a, const K0Class& b);
K0Class k0_sub(const K0Class& a, const K0Class& b);
K0Class k0_scale(const Rat& r, const K0Class& a);

// Classes of projectives agreeing away from 1 differ by an integer multiple of
// the regular class; returns (true, c) with a - b = c * [kG] in that case.
std::pair<bool, Int> stable_equal(const K0Class& a, const K0Class& b);

K0Class restrict_class(const K0Class& a, const Subgroup& h);
K0Class dual_class(const K0Class& a);

}  // namespace eqrr
