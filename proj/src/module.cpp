#include "eqrr/module.hpp"

#include <algorithm>

#include "eqrr/poly.hpp"

namespace eqrr {

Poly mat_charpoly(const Field& F, Matrix<Fe> A) {
    if (A.rows != A.cols) throw ValidationError("charpoly of non-square matrix");
    size_t n = A.rows;
    FeCtx ctx{F};
    // similarity reduction to upper Hessenberg with pivoting
    for (size_t col = 0; col + 2 < n; ++col) {
        size_t piv = col + 1;
        while (piv < n && A.at(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col + 1, j));
            for (size_t i = 0; i < n; ++i) std::swap(A.at(i, piv), A.at(i, col + 1));
        }
        Fe ipiv = F.inv(A.at(col + 1, col));
        for (size_t i = col + 2; i < n; ++i) {
            if (A.at(i, col).is_zero()) continue;
            Fe f = F.mul(A.at(i, col), ipiv);
            // R_i -= f R_{col+1};  C_{col+1} += f C_i
            for (size_t j = 0; j < n; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(col + 1, j)));
            for (size_t i2 = 0; i2 < n; ++i2)
                A.at(i2, col + 1) = F.add(A.at(i2, col + 1), F.mul(f, A.at(i2, i)));
        }
    }
    // p_k = (x - H[k-1][k-1]) p_{k-1} - sum_{i=1}^{k-1} H[i-1][k-1] (prod_{j=i}^{k-1} H[j][j-1]) p_{i-1}
    std::vector<Poly> p(n + 1);
    p[0] = poly_one(F.id);
    for (size_t k = 1; k <= n; ++k) {
        Poly t = poly_mul(poly_sub(poly_x(F.id), Poly{F.id, {A.at(k - 1, k - 1)}}), p[k - 1]);
        poly_trim(t);
        Fe prod = F.one();
        for (size_t i = k - 1; i >= 1; --i) {
            prod = F.mul(prod, A.at(i, i - 1));  // accumulates prod_{j=i}^{k-1} H[j][j-1]
            if (prod.is_zero()) break;
            Fe coef = F.mul(A.at(i - 1, k - 1), prod);
            if (!coef.is_zero()) t = poly_sub(t, poly_scale(p[i - 1], coef));
        }
        p[k] = std::move(t);
    }
    return p[n];
}

MatrixModule make_matrix_module(GroupPtr g, int32_t field, size_t dim,
                                const std::vector<Matrix<Fe>>& generator_mats) {
    const auto& gens = g->generators();
    if (generator_mats.size() != gens.size())
        throw ValidationError("need one matrix per group generator");
    const Field& F = Fields::get(field);
    FeCtx ctx{F};
    for (const auto& m : generator_mats)
        if (m.rows != dim || m.cols != dim) throw ValidationError("generator matrix dimension mismatch");

    MatrixModule mod;
    mod.group = g;
    mod.field = field;
    mod.dim = dim;
    mod.mats.assign(g->size(), Matrix<Fe>());
    std::vector<bool> known(g->size(), false);
    mod.mats[g->identity()] = mat_identity(ctx, dim);
    known[g->identity()] = true;
    std::vector<size_t> queue{g->identity()};
    for (size_t head = 0; head < queue.size(); ++head) {
        size_t x = queue[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            size_t y = g->op(x, gens[gi]);
            if (known[y]) continue;
            mod.mats[y] = mat_mul(ctx, mod.mats[x], generator_mats[gi]);
            known[y] = true;
            queue.push_back(y);
        }
    }
    for (bool k : known)
        if (!k) throw ValidationError("generators do not reach all elements");

    // homomorphism check: exhaustive for small groups, deterministic sample above
    size_t n = g->size();
    auto check_pair = [&](size_t a, size_t b) {
        if (mat_mul(ctx, mod.mats[a], mod.mats[b]) != mod.mats[g->op(a, b)])
            throw ValidationError("generator matrices do not define a homomorphism");
    };
    if (n <= 64) {
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) check_pair(a, b);
    } else {
        Rng rng(0xc4ec4);
        for (int i = 0; i < 2048; ++i) check_pair(rng.below(n), rng.below(n));
    }
    return mod;
}

MatrixModule regular_module(GroupPtr g, int32_t field) {
    const Field& F = Fields::get(field);
    FeCtx ctx{F};
    size_t n = g->size();
    std::vector<Matrix<Fe>> gens;
    for (size_t gi : g->generators()) {
        Matrix<Fe> m(n, n, F.zero());
        for (size_t x = 0; x < n; ++x) m.at(g->op(gi, x), x) = F.one();
        gens.push_back(std::move(m));
    }
    return make_matrix_module(g, field, n, gens);
}

MatrixModule trivial_module(GroupPtr g, int32_t field) {
    const Field& F = Fields::get(field);
    std::vector<Matrix<Fe>> gens(g->generators().size(), Matrix<Fe>(1, 1, F.one()));
    return make_matrix_module(g, field, 1, gens);
}

MatrixModule coset_permutation_module(GroupPtr g, int32_t field, const Subgroup& h) {
    if (h.parent.get() != g.get()) throw ValidationError("subgroup of a different group");
    const Field& F = Fields::get(field);
    // left cosets xH
    std::vector<int32_t> coset_of(g->size(), -1);
    std::vector<size_t> coset_rep;
    for (size_t x = 0; x < g->size(); ++x) {
        if (coset_of[x] >= 0) continue;
        int32_t c = static_cast<int32_t>(coset_rep.size());
        for (size_t a : h.elems) coset_of[g->op(x, a)] = c;
        coset_rep.push_back(x);
    }
    size_t nc = coset_rep.size();
    std::vector<Matrix<Fe>> gens;
    for (size_t gi : g->generators()) {
        Matrix<Fe> m(nc, nc, F.zero());
        for (size_t c = 0; c < nc; ++c)
            m.at(static_cast<size_t>(coset_of[g->op(gi, coset_rep[c])]), c) = F.one();
        gens.push_back(std::move(m));
    }
    return make_matrix_module(g, field, nc, gens);
}

MatrixModule module_direct_sum(const MatrixModule& a, const MatrixModule& b) {
    if (a.group.get() != b.group.get() || a.field != b.field)
        throw ValidationError("direct sum needs matching group and field");
    const Field& F = Fields::get(a.field);
    std::vector<Matrix<Fe>> gens;
    for (size_t gi : a.group->generators()) {
        Matrix<Fe> m(a.dim + b.dim, a.dim + b.dim, F.zero());
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.mat(gi).at(i, j);
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.mat(gi).at(i, j);
        gens.push_back(std::move(m));
    }
    return make_matrix_module(a.group, a.field, a.dim + b.dim, gens);
}

MatrixModule module_dual(const MatrixModule& a) {
    FeCtx ctx{Fields::get(a.field)};
    std::vector<Matrix<Fe>> gens;
    for (size_t gi : a.group->generators())
        gens.push_back(mat_transpose(ctx, a.mat(a.group->inverse(gi))));
    return make_matrix_module(a.group, a.field, a.dim, gens);
}

ClassFunction brauer_character(const MatrixModule& m) {
    const Field& F = Fields::get(m.field);
    ClassFunction out = cf_zero(m.group, F.p);
    uint64_t cond = out.values.empty() ? 1 : out.values[0].conductor();
    for (size_t i = 0; i < out.reps.size(); ++i) {
        size_t g = out.reps[i];
        if (m.group->element_order(g) == 1) {
            out.values[i] = Cyc::from_rat(Rat(static_cast<unsigned long>(m.dim)), cond);
            continue;
        }
        Poly cp = mat_charpoly(F, m.mat(g));
        auto fac = factor_polynomial(cp, /*seed=*/0);
        Cyc val = Cyc::zero(cond);
        for (const auto& [h, mult] : fac.factors) {
            if (h.degree() == 1 && h.c[0].is_zero())
                throw ValidationError("matrix of a p-regular element is singular (broken module)");
            uint32_t e = static_cast<uint32_t>(h.degree());
            int32_t big = Fields::canonical(F.p, F.n * e);
            const Field& B = Fields::get(big);
            std::vector<Fe> cc;
            for (const Fe& c : h.c) cc.push_back(Fields::embed(c, big));
            Poly hb = poly_from(big, cc);
            auto roots = poly_roots(hb, /*seed=*/0);
            if (roots.empty()) throw ValidationError("no root of an irreducible factor in its splitting field");
            Fe r = roots.front();
            Cyc lift = root_of_unity_lift(r, cond);
            // sum over the Frobenius orbit r^(q^a), a < e
            Cyc orbit = Cyc::zero(cond);
            Int qa(1);
            for (uint32_t a = 0; a < e; ++a) {
                orbit = orbit + lift.pow(qa);
                qa *= Int(static_cast<unsigned long>(F.q));
            }
            val = val + Rat(mult) * orbit;
            (void)B;
        }
        out.values[i] = val;
    }
    return out;
}

bool is_projective(const MatrixModule& m) {
    const Field& F = Fields::get(m.field);
    Subgroup s = sylow_subgroup(m.group, F.p);
    if (s.size() == 1) return true;
    FeCtx ctx{F};
    size_t d = m.dim;
    if (d == 0) return true;
    // sum_s rho(s) phi rho(s)^-1 = id; vec column-major: vec(B X C) = (C^T (x) B) vec(X)
    Matrix<Fe> sys(d * d, d * d, F.zero());
    for (size_t se : s.elems) {
        const Matrix<Fe>& b = m.mat(se);
        const Matrix<Fe>& c = m.mat(m.group->inverse(se));
        // kron(C^T, B)[ (j2*d+i2), (j1*d+i1) ] = C[j1][j2] * B[i2][i1]
        for (size_t j1 = 0; j1 < d; ++j1)
            for (size_t j2 = 0; j2 < d; ++j2) {
                Fe cc = c.at(j1, j2);
                if (cc.is_zero()) continue;
                for (size_t i2 = 0; i2 < d; ++i2)
                    for (size_t i1 = 0; i1 < d; ++i1) {
                        Fe bb = b.at(i2, i1);
                        if (bb.is_zero()) continue;
                        size_t row = j2 * d + i2, col = j1 * d + i1;
                        sys.at(row, col) = F.add(sys.at(row, col), F.mul(cc, bb));
                    }
            }
    }
    std::vector<Fe> rhs(d * d, F.zero());
    for (size_t i = 0; i < d; ++i) rhs[i * d + i] = F.one();
    return mat_solve(ctx, sys, rhs).has_value();
}

bool is_free_over_sylow(const MatrixModule& m) {
    const Field& F = Fields::get(m.field);
    Subgroup s = sylow_subgroup(m.group, F.p);
    if (s.size() == 1) return true;
    FeCtx ctx{F};
    if (m.dim % s.size() != 0) return false;
    // head = M / rad(kS) M; rad spanned by (s-1) over subgroup generators
    const auto& sgens = s.group->generators();
    Matrix<Fe> cols(m.dim, m.dim * sgens.size(), F.zero());
    size_t c0 = 0;
    for (size_t sg : sgens) {
        const Matrix<Fe>& a = m.mat(s.to_parent(sg));
        for (size_t i = 0; i < m.dim; ++i)
            for (size_t j = 0; j < m.dim; ++j)
                cols.at(i, c0 + j) = i == j ? F.sub(a.at(i, j), F.one()) : a.at(i, j);
        c0 += m.dim;
    }
    size_t rad_dim = mat_rank(ctx, cols);
    size_t head = m.dim - rad_dim;
    return head * s.size() == m.dim;
}

}  // namespace eqrr
