#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqrr/classfn.hpp"
#include "eqrr/group.hpp"

namespace eqrr {

// Local data of one ramified place: inertia I_w = P_w x| C_w inside an ambient
// group, the cotangent character theta_w on C_w, and the residue degree over
// the prime field. theta is stored on a generator of C_w only; P_w acts
// trivially on the cotangent line.
struct LocalDatum {
    GroupPtr group;          // ambient G
    Subgroup inertia;        // I_w <= G
    Subgroup wild;           // P_w as subgroup of G
    Subgroup complement;     // C_w as subgroup of G
    size_t theta_generator;  // element of C_w (ambient index) generating it
    Fe theta_value;          // theta_w(theta_generator) in k_w^x
    uint32_t f_w = 1;        // [k_w : F_p]
    std::optional<std::vector<uint64_t>> filtration;  // |I_{w,0}|, |I_{w,1}|, ...

    // derived at validation
    Subgroup inertia_group_wild;        // P_w inside inertia.group
    Subgroup inertia_group_complement;  // C_w inside inertia.group
    int32_t residue_field = -1;         // canonical F_{p^{f_w}}

    size_t wild_order() const { return wild.size(); }
    size_t tame_order() const { return complement.size(); }  // |I_w / P_w|
    bool is_wild() const { return wild.size() > 1; }
    // theta at an element of C_w (ambient index)
    Fe theta_at(size_t ambient_elem) const;
};

LocalDatum make_local_datum(GroupPtr group, Subgroup inertia, Subgroup wild, Subgroup complement,
                            size_t theta_generator, Fe theta_value, uint32_t f_w,
                            std::optional<std::vector<uint64_t>> filtration,
                            bool declared_weakly_ramified);

struct BundleStalk {
    std::vector<int64_t> exponents;  // n_{w,1..r}
    int64_t rank() const { return static_cast<int64_t>(exponents.size()); }
};

bool is_weakly_ramified(const std::vector<uint64_t>& filtration);
bool is_weakly_ramified(const LocalDatum& dat);

// all n_{w,i} == -1 mod |P_w|
bool check_ew(const BundleStalk& stalk, const LocalDatum& dat);

// l_{w,i} == (1+n_{w,i})/|P_w| - 1 mod |I_w/P_w|, 0 <= l < |I_w/P_w|
std::vector<int64_t> l_exponents(const BundleStalk& stalk, const LocalDatum& dat);

// exponents from Neron reduction types: outside Z'_L every l is |I/P|-1;
// inside, r determines l
std::vector<int64_t> l_from_neron(const std::vector<int64_t>& r, bool in_z_prime,
                                  const LocalDatum& dat);

// number of r_{w,i} equal to zero
int64_t d_prime(const std::vector<int64_t>& r);

// n_v = -1 + ceil((n_w + 1) / e)
int64_t descent_exponent(int64_t n_w, int64_t e);

// Brauer class of Ind_{C_w}^{I_w}(theta^j line), the projective indecomposable
// cover of the theta^j character. The line is read as an F_p-representation of
// dimension f_w; `subfield_steps` generalises to reading it over F_{p^s}
// (s * subfield_steps = f_w), which the Riemann-Roch engine uses with s = [k:F_p].
K0Class mw_projective_class(const LocalDatum& dat, int64_t j);
K0Class mw_projective_class_over(const LocalDatum& dat, int64_t j, uint32_t subfield_degree);

}  // namespace eqrr
