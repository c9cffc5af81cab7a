#pragma once

#include <optional>
#include <vector>

#include "eqrr/cyclotomic.hpp"
#include "eqrr/gf.hpp"
#include "eqrr/numeric.hpp"
#include "eqrr/poly.hpp"

namespace eqrr {

template <typename T>
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(size_t r, size_t c, const T& fill) : rows(r), cols(c), a(r * c, fill) {}
    T& at(size_t i, size_t j) { return a[i * cols + j]; }
    const T& at(size_t i, size_t j) const { return a[i * cols + j]; }
    bool operator==(const Matrix&) const = default;
};

// Field contexts give the elimination routines their arithmetic.
struct FeCtx {
    const Field& F;
    using V = Fe;
    V zero() const { return F.zero(); }
    V one() const { return F.one(); }
    bool is_zero(const V& x) const { return x.is_zero(); }
    V add(const V& x, const V& y) const { return F.add(x, y); }
    V sub(const V& x, const V& y) const { return F.sub(x, y); }
    V mul(const V& x, const V& y) const { return F.mul(x, y); }
    V inv(const V& x) const { return F.inv(x); }
    V neg(const V& x) const { return F.neg(x); }
};

struct RatCtx {
    using V = Rat;
    V zero() const { return Rat(0); }
    V one() const { return Rat(1); }
    bool is_zero(const V& x) const { return x == 0; }
    V add(const V& x, const V& y) const { Rat r = x + y; r.canonicalize(); return r; }
    V sub(const V& x, const V& y) const { Rat r = x - y; r.canonicalize(); return r; }
    V mul(const V& x, const V& y) const { Rat r = x * y; r.canonicalize(); return r; }
    V inv(const V& x) const { return 1 / x; }
    V neg(const V& x) const { return -x; }
};

struct CycCtx {
    uint64_t m;
    using V = Cyc;
    V zero() const { return Cyc::zero(m); }
    V one() const { return Cyc::one(m); }
    bool is_zero(const V& x) const { return x.is_zero(); }
    V add(const V& x, const V& y) const { return x + y; }
    V sub(const V& x, const V& y) const { return x - y; }
    V mul(const V& x, const V& y) const { return x * y; }
    V inv(const V& x) const { return x.inverse(); }
    V neg(const V& x) const { return -x; }
};

template <typename C>
Matrix<typename C::V> mat_identity(const C& ctx, size_t n) {
    Matrix<typename C::V> m(n, n, ctx.zero());
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
}

template <typename C>
Matrix<typename C::V> mat_mul(const C& ctx, const Matrix<typename C::V>& x,
                              const Matrix<typename C::V>& y) {
    if (x.cols != y.rows) throw ValidationError("matrix dimension mismatch");
    Matrix<typename C::V> r(x.rows, y.cols, ctx.zero());
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const auto& v = x.at(i, k);
            if (ctx.is_zero(v)) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = ctx.add(r.at(i, j), ctx.mul(v, y.at(k, j)));
        }
    return r;
}

template <typename C>
Matrix<typename C::V> mat_add(const C& ctx, const Matrix<typename C::V>& x,
                              const Matrix<typename C::V>& y) {
    Matrix<typename C::V> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = ctx.add(r.a[i], y.a[i]);
    return r;
}

template <typename C>
Matrix<typename C::V> mat_transpose(const C&, const Matrix<typename C::V>& x) {
    Matrix<typename C::V> r(x.cols, x.rows, x.a.empty() ? typename C::V{} : x.a[0]);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

// In-place row echelon; returns (rank, det-of-leading-square if square).
template <typename C>
size_t mat_echelon(const C& ctx, Matrix<typename C::V>& m, typename C::V* det_out = nullptr) {
    size_t rank = 0;
    typename C::V det = ctx.one();
    bool neg = false;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && ctx.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            neg = !neg;
        }
        det = ctx.mul(det, m.at(rank, col));
        auto il = ctx.inv(m.at(rank, col));
        for (size_t j = col; j < m.cols; ++j) m.at(rank, j) = ctx.mul(m.at(rank, j), il);
        for (size_t r2 = 0; r2 < m.rows; ++r2) {
            if (r2 == rank || ctx.is_zero(m.at(r2, col))) continue;
            auto c = m.at(r2, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(r2, j) = ctx.sub(m.at(r2, j), ctx.mul(c, m.at(rank, j)));
        }
        ++rank;
    }
    if (det_out) {
        if (rank < std::min(m.rows, m.cols)) det = ctx.zero();
        *det_out = neg ? ctx.neg(det) : det;
    }
    return rank;
}

template <typename C>
size_t mat_rank(const C& ctx, Matrix<typename C::V> m) {
    return mat_echelon(ctx, m);
}

template <typename C>
typename C::V mat_det(const C& ctx, Matrix<typename C::V> m) {
    if (m.rows != m.cols) throw ValidationError("determinant of non-square matrix");
    if (m.rows == 0) return ctx.one();
    typename C::V det = ctx.zero();
    mat_echelon(ctx, m, &det);
    return det;
}

// Solve A x = b; returns nullopt if inconsistent. The result is re-checked
// against the inputs (residual check) before returning.
template <typename C>
std::optional<std::vector<typename C::V>> mat_solve(const C& ctx,
                                                    const Matrix<typename C::V>& A,
                                                    const std::vector<typename C::V>& b) {
    if (A.rows != b.size()) throw ValidationError("rhs size mismatch");
    Matrix<typename C::V> aug(A.rows, A.cols + 1, ctx.zero());
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    mat_echelon(ctx, aug);
    std::vector<typename C::V> x(A.cols, ctx.zero());
    for (size_t i = 0; i < aug.rows; ++i) {
        size_t lead = aug.cols;
        for (size_t j = 0; j < aug.cols; ++j) {
            if (!ctx.is_zero(aug.at(i, j))) {
                lead = j;
                break;
            }
        }
        if (lead == aug.cols) continue;
        if (lead == A.cols) return std::nullopt;  // 0 = nonzero
        x[lead] = aug.at(i, A.cols);
    }
    // residual check
    for (size_t i = 0; i < A.rows; ++i) {
        auto s = ctx.zero();
        for (size_t j = 0; j < A.cols; ++j) s = ctx.add(s, ctx.mul(A.at(i, j), x[j]));
        if (!ctx.is_zero(ctx.sub(s, b[i]))) return std::nullopt;
    }
    return x;
}

template <typename C>
Matrix<typename C::V> mat_inverse(const C& ctx, const Matrix<typename C::V>& A) {
    if (A.rows != A.cols) throw ValidationError("inverse of non-square matrix");
    size_t n = A.rows;
    Matrix<typename C::V> aug(n, 2 * n, ctx.zero());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = ctx.one();
    }
    size_t rank = mat_echelon(ctx, aug);
    if (rank != n) throw ValidationError("singular matrix");
    Matrix<typename C::V> inv(n, n, ctx.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Characteristic polynomial over a finite field: similarity reduction to upper
// Hessenberg form, then the standard leading-minor recurrence.
Poly mat_charpoly(const Field& F, Matrix<Fe> A);

}  // namespace eqrr
