#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqrr/classfn.hpp"
#include "eqrr/ramification.hpp"

namespace eqrr {

struct RamifiedPlace {
    std::string label;
    LocalDatum datum;
    bool wild = false;
};

// A weakly ramified G-cover pi: X_L -> X over the constant field k = F_{p^s};
// genus is that of the base curve X. One entry per ramified place of X_L.
struct CoverData {
    GroupPtr group;
    uint32_t p = 0;
    uint32_t s = 1;  // |k| = p^s
    int64_t genus = 0;
    std::vector<RamifiedPlace> places;

    void validate() const;
    bool weakly_ramified() const;
};

// Equivariant bundle data: stalk exponents at the ramified places plus the
// Euler characteristic of the descended bundle (given directly or via
// Hirzebruch-Riemann-Roch from deg E^G).
struct BundleData {
    int64_t rank = 1;
    std::vector<BundleStalk> stalks;  // parallel to cover places
    std::optional<int64_t> chi_descended;
    std::optional<int64_t> deg_descended;

    int64_t chi_eg(const CoverData& cover) const;
    void validate(const CoverData& cover) const;
};

// rank (1 - g_K) + deg E^G
int64_t chi_hrr(int64_t rank, int64_t g_k, int64_t deg_eg);

// [N(pi)] = (1/|G|) sum_w |P_w| sum_{j=1}^{|I_w/P_w|-1} j [Ind M_w(j)]
K0Class n_pi(const CoverData& cover);

// [W_G(E)] = sum_w (1/[G:I_w]) sum_i sum_{j=1}^{l_wi} [Ind M_w(-j)]
K0Class w_g(const CoverData& cover, const BundleData& bundle);

// chi_{kG}(E) = -rk [N(pi)] + [W_G(E)] + Ind_1^G(chi_k(E^G))
K0Class euler_char(const CoverData& cover, const BundleData& bundle);

struct PullbackTwistInput {
    int64_t rank_f = 1;
    int64_t deg_f = 0;
    int64_t deg_z = 0;                  // degree of the reduced image Z in X
    std::vector<size_t> z_places;       // indices of cover places contained in Z_L
};

// Specialised formula for E = (pi^* F)(-Z_L); must agree with euler_char on
// the all-(-1)-stalk bundle.
K0Class pullback_twist_chi(const CoverData& cover, const PullbackTwistInput& in);

struct DegreeIdentityReport {
    Int lhs;             // deg E - |G| deg E^G
    Int rhs;             // sum_w sum_i (|P_w| (l_wi + 1) - 1)
    bool holds = false;
    bool normalized_form_checked = false;  // against sum n_wi when 0 <= n < |I_w|
    bool normalized_form_holds = false;
};

DegreeIdentityReport degree_identity(const CoverData& cover, const BundleData& bundle,
                                     int64_t deg_e, int64_t deg_eg);

struct KockReport {
    bool agrees_off_identity = false;
    std::vector<std::pair<std::string, std::string>> diffs;  // class label -> diff value
    Rat c_prime;         // coefficient of the regular Brauer character in the alternating formula
    Rat c_engine;        // coefficient of [kG] carried by the engine result (chi_k(E^G))
    bool coefficients_match = false;
};

// Alternating Brauer-character formula with graded stalk pieces, compared with
// euler_char away from the identity; needs filtrations and deg E.
KockReport kock_cross_check(const CoverData& cover, const BundleData& bundle, int64_t deg_e);

}  // namespace eqrr
