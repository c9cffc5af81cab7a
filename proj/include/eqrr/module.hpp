#pragma once

#include <vector>

#include "eqrr/classfn.hpp"
#include "eqrr/group.hpp"
#include "eqrr/matrix.hpp"

namespace eqrr {

// kG-module given by one invertible matrix per group generator; matrices for
// all elements are filled in along the Cayley graph and the homomorphism
// property is checked (exhaustively for small groups, on a sample above).
struct MatrixModule {
    GroupPtr group;
    int32_t field = -1;
    size_t dim = 0;
    std::vector<Matrix<Fe>> mats;  // one per group element

    const Matrix<Fe>& mat(size_t elem) const { return mats[elem]; }
};

MatrixModule make_matrix_module(GroupPtr g, int32_t field, size_t dim,
                                const std::vector<Matrix<Fe>>& generator_mats);

MatrixModule regular_module(GroupPtr g, int32_t field);
MatrixModule trivial_module(GroupPtr g, int32_t field);
// permutation module on the left cosets of a subgroup (k[G/H])
MatrixModule coset_permutation_module(GroupPtr g, int32_t field, const Subgroup& h);
MatrixModule module_direct_sum(const MatrixModule& a, const MatrixModule& b);
MatrixModule module_dual(const MatrixModule& a);

// Brauer character: at each p-regular class, the sum of multiplicative lifts of
// the eigenvalues over a splitting extension, with multiplicity.
ClassFunction brauer_character(const MatrixModule& m);

// Higman's criterion over a Sylow p-subgroup: exists phi with
// sum_{s in S} s.phi.s^-1 = id, a linear system over the field.
bool is_projective(const MatrixModule& m);

// Independent route: freeness over k[Sylow] by head-dimension counting
// (dim M == |S| * dim M/rad(kS)M).
bool is_free_over_sylow(const MatrixModule& m);

}  // namespace eqrr
