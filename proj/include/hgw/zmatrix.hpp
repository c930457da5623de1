#ifndef HGW_ZMATRIX_HPP
#define HGW_ZMATRIX_HPP

#include <utility>
#include <vector>

#include "hgw/rational.hpp"

namespace hgw {

struct ZMat {
    int m = 0, n = 0;
    std::vector<Int> a;  // row-major

    ZMat() = default;
    ZMat(int rows, int cols) : m(rows), n(cols), a((size_t)rows * cols) {}

    Int& at(int i, int j) { return a[(size_t)i * n + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * n + j]; }

    static ZMat identity(int k) {
        ZMat I(k, k);
        for (int i = 0; i < k; i++) I.at(i, i) = 1;
        return I;
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < n; j++) std::swap(at(i, j), at(k, j));
    }
    void negate_row(int i) {
        for (int j = 0; j < n; j++) at(i, j) = -at(i, j);
    }
    // row_k -= q * row_i
    void submul_row(int k, const Int& q, int i) {
        if (sgn(q) == 0) return;
        for (int j = 0; j < n; j++) at(k, j) -= q * at(i, j);
    }

    bool operator==(const ZMat& o) const { return m == o.m && n == o.n && a == o.a; }
};

inline ZMat mul(const ZMat& A, const ZMat& B) {
    if (A.n != B.m) fail(errc::internal_inconsistency, "matrix shape mismatch in mul");
    ZMat C(A.m, B.n);
    for (int i = 0; i < A.m; i++)
        for (int k = 0; k < A.n; k++) {
            if (sgn(A.at(i, k)) == 0) continue;
            for (int j = 0; j < B.n; j++) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

inline Int content(const ZMat& A) {
    Int g = 0;
    for (const Int& x : A.a) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t()); }
    return g;
}

/* Row-style Hermite normal form, computed by unimodular row operations only.
 *
 *   U · M = H,   U unimodular (m×m),
 *
 * where H is in row echelon form with strictly increasing pivot columns,
 * positive pivots, entries above each pivot reduced into [0, pivot), and all
 * zero rows at the bottom.  H including its zero rows is returned so the rows
 * of U opposite them form a basis of the integer left kernel of M. */
inline std::pair<ZMat, ZMat> hnf_transform(const ZMat& M) {
    ZMat H = M;
    ZMat U = ZMat::identity(M.m);
    int r = 0;
    for (int c = 0; c < H.n && r < H.m; c++) {
        // Shrink the column-c entries of rows r..m-1 by gcd steps until at
        // most one survives.
        for (;;) {
            int best = -1;
            int nnz = 0;
            for (int i = r; i < H.m; i++) {
                if (sgn(H.at(i, c)) == 0) continue;
                nnz++;
                if (best < 0 || cmpabs(H.at(i, c), H.at(best, c)) < 0) best = i;
            }
            if (nnz == 0) { best = -1; }
            if (nnz <= 1) {
                if (best >= 0) { H.swap_rows(r, best); U.swap_rows(r, best); }
                break;
            }
            H.swap_rows(r, best);
            U.swap_rows(r, best);
            for (int i = r + 1; i < H.m; i++) {
                if (sgn(H.at(i, c)) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
                H.submul_row(i, q, r);
                U.submul_row(i, q, r);
            }
        }
        if (sgn(H.at(r, c)) == 0) continue;  // column already clear below r
        if (sgn(H.at(r, c)) < 0) { H.negate_row(r); U.negate_row(r); }
        for (int k = 0; k < r; k++) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H.at(k, c).get_mpz_t(), H.at(r, c).get_mpz_t());
            H.submul_row(k, q, r);
            U.submul_row(k, q, r);
        }
        r++;
    }
    return {H, U};
}

/* HNF with the zero rows stripped: the canonical basis of the row lattice. */
inline ZMat hnf(const ZMat& M) {
    ZMat H = hnf_transform(M).first;
    int r = H.m;
    while (r > 0) {
        bool zero = true;
        for (int j = 0; j < H.n; j++)
            if (sgn(H.at(r - 1, j)) != 0) { zero = false; break; }
        if (!zero) break;
        r--;
    }
    ZMat out(r, H.n);
    std::copy(H.a.begin(), H.a.begin() + (size_t)r * H.n, out.a.begin());
    return out;
}

/* Basis rows of the integer left kernel { u : u·M = 0 }. */
inline ZMat left_kernel(const ZMat& M) {
    auto [H, U] = hnf_transform(M);
    int r = H.m;
    while (r > 0) {
        bool zero = true;
        for (int j = 0; j < H.n; j++)
            if (sgn(H.at(r - 1, j)) != 0) { zero = false; break; }
        if (!zero) break;
        r--;
    }
    ZMat K(H.m - r, M.m);
    for (int i = r; i < H.m; i++)
        for (int j = 0; j < M.m; j++) K.at(i - r, j) = U.at(i, j);
    return K;
}

/* Smith normal form with transforms:
 *
 *   U · M · V = S,   U (m×m) and V (n×n) unimodular,
 *
 * S diagonal with s_1 | s_2 | ... | s_r > 0 followed by zeros. */
struct SnfResult {
    ZMat S, U, V;
};

inline SnfResult snf_transform(const ZMat& M) {
    ZMat S = M;
    ZMat U = ZMat::identity(M.m);
    ZMat V = ZMat::identity(M.n);

    auto swap_cols = [&](ZMat& A, int j, int k) {
        if (j == k) return;
        for (int i = 0; i < A.m; i++) std::swap(A.at(i, j), A.at(i, k));
    };
    auto submul_col = [&](ZMat& A, int k, const Int& q, int j) {
        if (sgn(q) == 0) return;
        for (int i = 0; i < A.m; i++) A.at(i, k) -= q * A.at(i, j);
    };

    int t = 0;
    int lim = std::min(S.m, S.n);
    while (t < lim) {
        // Find a nonzero entry in the trailing submatrix; smallest |value|
        // keeps the gcd steps short.
        int pi = -1, pj = -1;
        for (int i = t; i < S.m; i++)
            for (int j = t; j < S.n; j++) {
                if (sgn(S.at(i, j)) == 0) continue;
                if (pi < 0 || cmpabs(S.at(i, j), S.at(pi, pj)) < 0) { pi = i; pj = j; }
            }
        if (pi < 0) break;  // rest is zero
        S.swap_rows(t, pi); U.swap_rows(t, pi);
        swap_cols(S, t, pj); swap_cols(V, t, pj);
        if (sgn(S.at(t, t)) < 0) { S.negate_row(t); U.negate_row(t); }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (int i = t + 1; i < S.m; i++) {
                if (sgn(S.at(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, t).get_mpz_t(), S.at(t, t).get_mpz_t());
                S.submul_row(i, q, t);
                U.submul_row(i, q, t);
                if (sgn(S.at(i, t)) != 0) {
                    // remainder smaller than pivot: promote it and restart
                    S.swap_rows(t, i); U.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // clear row t
            for (int j = t + 1; j < S.n; j++) {
                if (sgn(S.at(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(t, j).get_mpz_t(), S.at(t, t).get_mpz_t());
                submul_col(S, j, q, t);
                submul_col(V, j, q, t);
                if (sgn(S.at(t, j)) != 0) {
                    swap_cols(S, t, j); swap_cols(V, t, j);
                    dirty = true;
                }
            }
        }
        if (sgn(S.at(t, t)) < 0) { S.negate_row(t); U.negate_row(t); }

        // Divisibility: s_t must divide every entry of the trailing block.
        bool redo = false;
        for (int i = t + 1; i < S.m && !redo; i++)
            for (int j = t + 1; j < S.n && !redo; j++) {
                if (divides(S.at(t, t), S.at(i, j))) continue;
                // fold row i into row t and re-run the elimination at step t
                S.submul_row(t, Int(-1), i);
                U.submul_row(t, Int(-1), i);
                redo = true;
            }
        if (!redo) t++;
    }
    return {S, U, V};
}

inline std::vector<Int> elementary_divisors(const ZMat& M) {
    ZMat S = snf_transform(M).S;
    std::vector<Int> d;
    for (int t = 0; t < std::min(S.m, S.n); t++) {
        if (sgn(S.at(t, t)) == 0) break;
        d.push_back(S.at(t, t));
    }
    return d;
}

} // namespace hgw

#endif
