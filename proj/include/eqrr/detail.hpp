#pragma once

#include <cstdint>
#include <vector>

#include "eqrr/gf.hpp"

namespace eqrr::detail {

// One root in `field` of a squarefree monic polynomial with F_p coefficients
// that splits completely there. Implemented by the polynomial module.
Fe find_root_of_fp_poly(const std::vector<uint32_t>& poly, int32_t field, uint64_t seed);

}  // namespace eqrr::detail
