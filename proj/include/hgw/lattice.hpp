#ifndef HGW_LATTICE_HPP
#define HGW_LATTICE_HPP

#include <optional>
#include <vector>

#include "hgw/qmatrix.hpp"
#include "hgw/zmatrix.hpp"

namespace hgw {

/* A finitely generated subgroup of Q^dim, stored in a canonical form:
 * the lattice is rowspan_Z(mat)/den with mat in row HNF (no zero rows) and
 * gcd(content(mat), den) = 1.  Two lattices are equal iff their stored forms
 * are identical, which is what makes every downstream report reproducible. */
struct Lattice {
    int dim = 0;
    ZMat mat;     // r×dim, row HNF, r = rank
    Int den = 1;

    int rank() const { return mat.m; }

    QMat qrows() const {
        QMat B(mat.m, dim);
        for (int i = 0; i < mat.m; i++)
            for (int j = 0; j < dim; j++) B.at(i, j) = ratio(mat.at(i, j), den);
        return B;
    }
    std::vector<Rat> qrow(int i) const {
        std::vector<Rat> v(dim);
        for (int j = 0; j < dim; j++) v[j] = ratio(mat.at(i, j), den);
        return v;
    }

    bool operator==(const Lattice& o) const {
        return dim == o.dim && den == o.den && mat == o.mat;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    /* Build from arbitrary rational generators (rows may be dependent). */
    static Lattice from_rows(const QMat& rows) {
        Int D = 1;
        for (const Rat& x : rows.a) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den().get_mpz_t());
        ZMat M(rows.m, rows.n);
        for (int i = 0; i < rows.m; i++)
            for (int j = 0; j < rows.n; j++) {
                Rat s = rows.at(i, j) * D;
                M.at(i, j) = s.get_num();  // denominator is 1 by construction
            }
        Lattice L;
        L.dim = rows.n;
        L.mat = hnf(M);
        L.den = D;
        Int g = content(L.mat);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), D.get_mpz_t());
        if (g > 1) {
            for (Int& x : L.mat.a) x /= g;
            L.den /= g;
        }
        return L;
    }

    static Lattice standard(int d) { return from_rows(QMat::identity(d)); }

    /* Integer coordinates of v in the HNF basis, or nullopt if v is not in
     * the lattice.  Pivot-by-pivot exact division against the echelon rows. */
    std::optional<std::vector<Int>> coords(const std::vector<Rat>& v) const {
        std::vector<Rat> w(dim);
        for (int j = 0; j < dim; j++) w[j] = v[j] * den;
        std::vector<Int> c(mat.m);
        for (int i = 0; i < mat.m; i++) {
            int pc = 0;
            while (pc < dim && sgn(mat.at(i, pc)) == 0) pc++;
            Rat q = w[pc] / mat.at(i, pc);
            if (!is_integer(q)) return std::nullopt;
            c[i] = q.get_num();
            if (sgn(c[i]) != 0)
                for (int j = pc; j < dim; j++) {
                    Int t = c[i] * mat.at(i, j);
                    w[j] -= t;
                }
        }
        for (int j = 0; j < dim; j++)
            if (!is_zero(w[j])) return std::nullopt;
        return c;
    }

    bool contains(const std::vector<Rat>& v) const { return coords(v).has_value(); }

    /* Rational coordinates in the HNF basis (v must lie in the Q-span). */
    std::optional<std::vector<Rat>> qcoords(const std::vector<Rat>& v) const {
        return solve_in_rowspace(qrows(), v);
    }

    /* p-local membership: v lies in the localization Z_(p)·L iff its
     * coordinates have denominators prime to p. */
    bool contains_local(const std::vector<Rat>& v, const Int& p) const {
        auto c = qcoords(v);
        if (!c) return false;
        for (const Rat& x : *c)
            if (divides(p, x.get_den())) return false;
        return true;
    }

    bool contains_lattice(const Lattice& sub) const {
        for (int i = 0; i < sub.mat.m; i++)
            if (!contains(sub.qrow(i))) return false;
        return true;
    }
};

inline Lattice lattice_sum(const Lattice& A, const Lattice& B) {
    if (A.dim != B.dim) fail(errc::invalid_argument, "lattice ambient dimensions differ");
    QMat rows(A.rank() + B.rank(), A.dim);
    for (int i = 0; i < A.rank(); i++) rows.set_row(i, A.qrow(i));
    for (int i = 0; i < B.rank(); i++) rows.set_row(A.rank() + i, B.qrow(i));
    return Lattice::from_rows(rows);
}

/* Intersection via the integer left kernel of the stacked (rescaled) bases:
 * a relation u·A' = -v·B' identifies one common element u·A'. */
inline Lattice intersect(const Lattice& A, const Lattice& B) {
    if (A.dim != B.dim) fail(errc::invalid_argument, "lattice ambient dimensions differ");
    Int D;
    mpz_lcm(D.get_mpz_t(), A.den.get_mpz_t(), B.den.get_mpz_t());
    Int fa = D / A.den, fb = D / B.den;
    ZMat M(A.rank() + B.rank(), A.dim);
    for (int i = 0; i < A.rank(); i++)
        for (int j = 0; j < A.dim; j++) M.at(i, j) = A.mat.at(i, j) * fa;
    for (int i = 0; i < B.rank(); i++)
        for (int j = 0; j < A.dim; j++) M.at(A.rank() + i, j) = B.mat.at(i, j) * fb;
    ZMat K = left_kernel(M);
    QMat rows(K.m, A.dim);
    for (int k = 0; k < K.m; k++)
        for (int j = 0; j < A.dim; j++) {
            Int s = 0;
            for (int i = 0; i < A.rank(); i++) s += K.at(k, i) * M.at(i, j);
            rows.at(k, j) = ratio(s, D);
        }
    return Lattice::from_rows(rows);
}

/* [sup : sub] for a finite-index sublattice; errors otherwise. */
inline Int index_in(const Lattice& sub, const Lattice& sup) {
    if (sub.dim != sup.dim) fail(errc::invalid_argument, "lattice ambient dimensions differ");
    if (sub.rank() != sup.rank()) fail(errc::not_sublattice, "ranks differ: index would be infinite");
    QMat C(sub.rank(), sub.rank());
    for (int i = 0; i < sub.rank(); i++) {
        auto c = sup.qcoords(sub.qrow(i));
        if (!c) fail(errc::not_sublattice, "row outside the Q-span of the ambient lattice");
        for (int j = 0; j < sub.rank(); j++) {
            if (!is_integer((*c)[j]))
                fail(errc::not_sublattice, "not a sublattice: fractional coordinate");
            C.at(i, j) = (*c)[j];
        }
    }
    Rat d = det(C);
    Int v = abs(d.get_num());
    if (sgn(v) == 0) fail(errc::internal_inconsistency, "degenerate index determinant");
    return v;
}

/* { x in L : x in the Q-span of span_rows }. */
inline Lattice intersect_with_subspace(const Lattice& L, const QMat& span_rows) {
    if (span_rows.n != L.dim) fail(errc::invalid_argument, "subspace ambient dimension differs");
    // x in span(S)  <=>  x annihilates every column of the right nullspace of S.
    QMat N = transpose(right_nullspace(span_rows));  // dim × k
    if (N.n == 0) return L;                          // span is everything
    QMat P = mul(L.qrows(), N);                      // rank × k, row u picks u·basis
    Int D = 1;
    for (const Rat& x : P.a) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den().get_mpz_t());
    ZMat Pi(P.m, P.n);
    for (int i = 0; i < P.m; i++)
        for (int j = 0; j < P.n; j++) Pi.at(i, j) = Rat(P.at(i, j) * D).get_num();
    ZMat K = left_kernel(Pi);
    QMat B = L.qrows();
    QMat rows(K.m, L.dim);
    for (int k = 0; k < K.m; k++) {
        std::vector<Rat> acc(L.dim);
        for (int i = 0; i < B.m; i++) {
            if (sgn(K.at(k, i)) == 0) continue;
            for (int j = 0; j < L.dim; j++) acc[j] += Rat(K.at(k, i)) * B.at(i, j);
        }
        rows.set_row(k, acc);
    }
    return Lattice::from_rows(rows);
}

/* { y in Q^n : y·A is integral }, for A (n×m) of full row rank n.
 * Writing A = A'/D with A' integral and U·A'·V = S in Smith form, the
 * condition becomes (y·U^{-1})_i · s_i in D·Z, so a basis is given by the
 * rows (D/s_i)·U_i. */
inline Lattice integral_preimage(const QMat& A) {
    Int D = 1;
    for (const Rat& x : A.a) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den().get_mpz_t());
    ZMat Ai(A.m, A.n);
    for (int i = 0; i < A.m; i++)
        for (int j = 0; j < A.n; j++) Ai.at(i, j) = Rat(A.at(i, j) * D).get_num();
    SnfResult s = snf_transform(Ai);
    QMat rows(A.m, A.m);
    for (int i = 0; i < A.m; i++) {
        if (i >= std::min(Ai.m, Ai.n) || sgn(s.S.at(i, i)) == 0)
            fail(errc::rank_deficient, "integral preimage needs full row rank");
        Rat f = ratio(D, s.S.at(i, i));
        for (int j = 0; j < A.m; j++) rows.at(i, j) = f * s.U.at(i, j);
    }
    return Lattice::from_rows(rows);
}

} // namespace hgw

#endif
