#ifndef HGW_QMATRIX_HPP
#define HGW_QMATRIX_HPP

#include <optional>
#include <vector>

#include "hgw/rational.hpp"

namespace hgw {

/* Dense exact rational matrix.
 *
 * Convention used across the whole library: vectors are ROW vectors and a
 * matrix M acts on the right, x ↦ x·M.  Consequently row i of the matrix of a
 * linear map is the image of the i-th basis vector, and composing maps is
 * plain left-to-right multiplication. */
struct QMat {
    int m = 0, n = 0;            // m rows, n cols
    std::vector<Rat> a;          // row-major

    QMat() = default;
    QMat(int rows, int cols) : m(rows), n(cols), a((size_t)rows * cols) {}

    Rat& at(int i, int j) { return a[(size_t)i * n + j]; }
    const Rat& at(int i, int j) const { return a[(size_t)i * n + j]; }

    static QMat identity(int k) {
        QMat I(k, k);
        for (int i = 0; i < k; i++) I.at(i, i) = 1;
        return I;
    }

    std::vector<Rat> row(int i) const {
        return std::vector<Rat>(a.begin() + (size_t)i * n, a.begin() + (size_t)(i + 1) * n);
    }
    void set_row(int i, const std::vector<Rat>& v) {
        for (int j = 0; j < n; j++) at(i, j) = v[j];
    }

    bool operator==(const QMat& o) const { return m == o.m && n == o.n && a == o.a; }
};

inline QMat transpose(const QMat& A) {
    QMat T(A.n, A.m);
    for (int i = 0; i < A.m; i++)
        for (int j = 0; j < A.n; j++) T.at(j, i) = A.at(i, j);
    return T;
}

inline QMat mul(const QMat& A, const QMat& B) {
    if (A.n != B.m) fail(errc::internal_inconsistency, "matrix shape mismatch in mul");
    QMat C(A.m, B.n);
    for (int i = 0; i < A.m; i++)
        for (int k = 0; k < A.n; k++) {
            if (is_zero(A.at(i, k))) continue;
            for (int j = 0; j < B.n; j++) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

inline std::vector<Rat> mul_row(const std::vector<Rat>& v, const QMat& A) {
    if ((int)v.size() != A.m) fail(errc::internal_inconsistency, "row/matrix shape mismatch");
    std::vector<Rat> w(A.n);
    for (int k = 0; k < A.m; k++) {
        if (is_zero(v[k])) continue;
        for (int j = 0; j < A.n; j++) w[j] += v[k] * A.at(k, j);
    }
    return w;
}

inline QMat add(const QMat& A, const QMat& B) {
    QMat C(A.m, A.n);
    for (size_t i = 0; i < C.a.size(); i++) C.a[i] = A.a[i] + B.a[i];
    return C;
}

inline QMat sub(const QMat& A, const QMat& B) {
    QMat C(A.m, A.n);
    for (size_t i = 0; i < C.a.size(); i++) C.a[i] = A.a[i] - B.a[i];
    return C;
}

/* In-place reduced row echelon form; returns the pivot column list.
 * Deterministic: first nonzero entry of each column scan becomes the pivot. */
inline std::vector<int> rref(QMat& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.n && r < A.m; c++) {
        int piv = -1;
        for (int i = r; i < A.m; i++)
            if (!is_zero(A.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < A.n; j++) std::swap(A.at(piv, j), A.at(r, j));
        Rat inv = 1 / A.at(r, c);
        for (int j = c; j < A.n; j++) A.at(r, j) *= inv;
        for (int i = 0; i < A.m; i++) {
            if (i == r || is_zero(A.at(i, c))) continue;
            Rat f = A.at(i, c);
            for (int j = c; j < A.n; j++) A.at(i, j) -= f * A.at(r, j);
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

inline int rank(QMat A) { return (int)rref(A).size(); }

inline Rat det(QMat A) {
    if (A.m != A.n) fail(errc::internal_inconsistency, "det of non-square matrix");
    Rat d = 1;
    for (int c = 0; c < A.n; c++) {
        int piv = -1;
        for (int i = c; i < A.m; i++)
            if (!is_zero(A.at(i, c))) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < A.n; j++) std::swap(A.at(piv, j), A.at(c, j));
            d = -d;
        }
        d *= A.at(c, c);
        Rat inv = 1 / A.at(c, c);
        for (int i = c + 1; i < A.m; i++) {
            if (is_zero(A.at(i, c))) continue;
            Rat f = A.at(i, c) * inv;
            for (int j = c; j < A.n; j++) A.at(i, j) -= f * A.at(c, j);
        }
    }
    return d;
}

inline QMat inverse(const QMat& A) {
    if (A.m != A.n) fail(errc::internal_inconsistency, "inverse of non-square matrix");
    QMat W(A.m, 2 * A.n);
    for (int i = 0; i < A.m; i++) {
        for (int j = 0; j < A.n; j++) W.at(i, j) = A.at(i, j);
        W.at(i, A.n + i) = 1;
    }
    auto piv = rref(W);
    if ((int)piv.size() != A.n || piv.back() != A.n - 1)
        fail(errc::rank_deficient, "matrix not invertible");
    QMat B(A.m, A.n);
    for (int i = 0; i < A.m; i++)
        for (int j = 0; j < A.n; j++) B.at(i, j) = W.at(i, A.n + j);
    return B;
}

/* Solve y·B = v for a row vector y, where the rows of B need not be
 * independent; returns nullopt when v is outside the row space.  When the
 * rows ARE independent the solution is unique. */
inline std::optional<std::vector<Rat>> solve_in_rowspace(const QMat& B, const std::vector<Rat>& v) {
    // Transpose to the column picture: Bᵀ yᵀ = vᵀ, then eliminate.
    QMat W(B.n, B.m + 1);
    for (int i = 0; i < B.m; i++)
        for (int j = 0; j < B.n; j++) W.at(j, i) = B.at(i, j);
    for (int j = 0; j < B.n; j++) W.at(j, B.m) = v[j];
    auto piv = rref(W);
    std::vector<Rat> y(B.m);
    for (size_t k = 0; k < piv.size(); k++) {
        if (piv[k] == B.m) return std::nullopt;  // inconsistent system
        y[piv[k]] = W.at((int)k, B.m);
    }
    return y;
}

/* Basis (as rows) of { y : y·A = 0 }. */
inline QMat left_nullspace(const QMat& A) {
    QMat T = transpose(A);
    auto piv = rref(T);
    std::vector<bool> is_piv(A.m, false);
    for (size_t k = 0; k < piv.size(); k++) is_piv[piv[k]] = true;
    QMat K(A.m - (int)piv.size(), A.m);
    int r = 0;
    for (int j = 0; j < A.m; j++) {
        if (is_piv[j]) continue;
        K.at(r, j) = 1;
        for (size_t k = 0; k < piv.size(); k++) K.at(r, piv[k]) = -T.at((int)k, j);
        r++;
    }
    return K;
}

/* Basis (as rows of a k×n matrix) of { x : A·xᵀ = 0 }. */
inline QMat right_nullspace(const QMat& A) { return left_nullspace(transpose(A)); }

/* ---- arithmetic mod a prime, used by the residue scans ---- */

inline Int fp_reduce(const Int& x, const Int& p) {
    Int r = x % p;
    if (sgn(r) < 0) r += p;
    return r;
}

/* Reduce a rational with p-free denominator mod p. */
inline Int fp_reduce(const Rat& x, const Int& p) {
    Int den = x.get_den();
    if (divides(p, den)) fail(errc::invalid_argument, "denominator not prime to p");
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        fail(errc::invalid_argument, "denominator not invertible mod p");
    return fp_reduce(Int(x.get_num() * dinv), p);
}

struct FpMat {
    int m = 0, n = 0;
    Int p;
    std::vector<Int> a;
    FpMat(int rows, int cols, Int prime) : m(rows), n(cols), p(std::move(prime)), a((size_t)rows * cols) {}
    Int& at(int i, int j) { return a[(size_t)i * n + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * n + j]; }
};

inline std::vector<int> fp_rref(FpMat& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.n && r < A.m; c++) {
        int piv = -1;
        for (int i = r; i < A.m; i++)
            if (sgn(A.at(i, c)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < A.n; j++) std::swap(A.at(piv, j), A.at(r, j));
        Int inv;
        mpz_invert(inv.get_mpz_t(), A.at(r, c).get_mpz_t(), A.p.get_mpz_t());
        for (int j = c; j < A.n; j++) A.at(r, j) = fp_reduce(Int(A.at(r, j) * inv), A.p);
        for (int i = 0; i < A.m; i++) {
            if (i == r || sgn(A.at(i, c)) == 0) continue;
            Int f = A.at(i, c);
            for (int j = c; j < A.n; j++)
                A.at(i, j) = fp_reduce(Int(A.at(i, j) - f * A.at(r, j)), A.p);
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

inline int fp_rank(FpMat A) { return (int)fp_rref(A).size(); }

/* Basis rows of { y in F_p^m : y·A = 0 }. */
inline FpMat fp_left_nullspace(const FpMat& A) {
    FpMat T(A.n, A.m, A.p);
    for (int i = 0; i < A.m; i++)
        for (int j = 0; j < A.n; j++) T.at(j, i) = A.at(i, j);
    auto piv = fp_rref(T);
    std::vector<bool> is_piv(A.m, false);
    for (size_t k = 0; k < piv.size(); k++) is_piv[piv[k]] = true;
    FpMat K(A.m - (int)piv.size(), A.m, A.p);
    int r = 0;
    for (int j = 0; j < A.m; j++) {
        if (is_piv[j]) continue;
        K.at(r, j) = 1;
        for (size_t k = 0; k < piv.size(); k++)
            K.at(r, piv[k]) = fp_reduce(Int(-T.at((int)k, j)), A.p);
        r++;
    }
    return K;
}

} // namespace hgw

#endif
