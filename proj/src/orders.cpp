#include "hgw/orders.hpp"

#include <algorithm>

namespace hgw {

bool contains_unit(const HopfAlgebra& H, const Lattice& L) { return L.contains(H.unit); }

bool is_ring_lattice(const HopfAlgebra& H, const Lattice& L) {
    if (!contains_unit(H, L)) return false;
    for (int i = 0; i < L.rank(); i++)
        for (int j = i; j < L.rank(); j++)
            if (!L.contains(H.product(L.qrow(i), L.qrow(j)))) return false;
    return true;
}

Lattice associated_order(const HopfAlgebra& H, const ActionTable& T_int) {
    Lattice A = integral_preimage(T_int.flat);
    if (!is_ring_lattice(H, A))
        fail(errc::internal_inconsistency,
             "the order of integral-acting elements is not closed; this cannot happen");
    return A;
}

Lattice fixed_point_order(const NumberField& E, const HopfAlgebra& H, const Lattice& OE) {
    int n = H.n, d = H.d;
    if (OE.rank() != d || OE.dim != d)
        fail(errc::invalid_argument, "integral basis of E must have full rank");
    // O_E[N] as a rank n·d lattice in the ambient group-algebra coordinates
    QMat rows(n * d, n * d);
    QMat oe = OE.qrows();
    for (int i = 0; i < n; i++)
        for (int a = 0; a < d; a++)
            for (int k = 0; k < d; k++) rows.at(i * d + a, i * d + k) = oe.at(a, k);
    Lattice OEN = Lattice::from_rows(rows);
    Lattice meet = intersect_with_subspace(OEN, H.basis);
    if (meet.rank() != n)
        fail(errc::internal_inconsistency, "fixed-point order has unexpected rank");
    QMat coords(n, n);
    for (int i = 0; i < n; i++) {
        auto c = H.coords(meet.qrow(i));
        if (!c) fail(errc::internal_inconsistency, "fixed-point order row outside H");
        coords.set_row(i, *c);
    }
    Lattice fpo = Lattice::from_rows(coords);
    if (!is_ring_lattice(H, fpo))
        fail(errc::internal_inconsistency, "fixed-point order is not a ring");
    return fpo;
}

std::optional<Lattice> group_ring_lattice(const HopfAlgebra& H) {
    QMat coords(H.n, H.n);
    for (int j = 0; j < H.n; j++) {
        std::vector<Rat> amb((size_t)H.n * H.d);
        amb[(size_t)j * H.d + 0] = 1;
        auto c = H.coords(amb);
        if (!c) return std::nullopt;  // nu_j is not G-fixed
        coords.set_row(j, *c);
    }
    return Lattice::from_rows(coords);
}

OrbitSumResult orbit_sum_basis(const NumberField& E, const GaloisGroup& G,
                               const std::vector<Perm>& lambda, const PermGroup& N,
                               const Lattice& OE, int x_index) {
    int n = N.order(), d = E.deg;
    if (x_index < 0 || x_index >= n) fail(errc::invalid_argument, "orbit point out of range");

    // conjugation action of G on N-element indices
    std::vector<std::vector<int>> conj(G.order(), std::vector<int>(n));
    for (int g = 0; g < G.order(); g++)
        for (int i = 0; i < n; i++) {
            int j = N.element_index(conjugate(lambda[g], N.elements[i]));
            if (j < 0) fail(errc::invalid_argument, "subgroup not normalized by the translation image");
            conj[g][i] = j;
        }

    std::vector<int> orbit;
    {
        std::vector<bool> seen(n, false);
        std::vector<int> work{x_index};
        seen[x_index] = true;
        while (!work.empty()) {
            int y = work.back();
            work.pop_back();
            orbit.push_back(y);
            for (int g = 0; g < G.order(); g++)
                if (!seen[conj[g][y]]) {
                    seen[conj[g][y]] = true;
                    work.push_back(conj[g][y]);
                }
        }
        std::sort(orbit.begin(), orbit.end());
    }

    // kernel of the action on the orbit, and the stabilizer of the point
    std::vector<int> kernel, stab;
    for (int g = 0; g < G.order(); g++) {
        bool fixes_all = true;
        for (int y : orbit)
            if (conj[g][y] != y) { fixes_all = false; break; }
        if (fixes_all) kernel.push_back(g);
        if (conj[g][x_index] == x_index) stab.push_back(g);
    }
    /* The reduced action of G/kernel on the orbit is faithful and
     * transitive; it is regular exactly when the stabilizer collapses to
     * the kernel. */
    if (stab != kernel)
        fail(errc::unsupported_case,
             "the reduced action on the conjugation orbit is not regular; "
             "orbit sums are only defined in the regular case");
    int osz = (int)orbit.size();
    if ((int)kernel.size() * osz != G.order())
        fail(errc::internal_inconsistency, "orbit/stabilizer count mismatch");

    // integral basis of the subfield fixed by the kernel, rank = orbit size
    QMat stacked(d, d * (int)kernel.size());
    for (size_t k = 0; k < kernel.size(); k++) {
        QMat Dg = sub(G.mats[kernel[k]], QMat::identity(d));
        for (int i = 0; i < d; i++)
            for (int j = 0; j < d; j++) stacked.at(i, (int)k * d + j) = Dg.at(i, j);
    }
    QMat fixed = left_nullspace(stacked);
    if (fixed.m != osz)
        fail(errc::internal_inconsistency, "fixed field of the orbit kernel has wrong degree");
    Lattice OF = intersect_with_subspace(OE, fixed);
    if (OF.rank() != osz)
        fail(errc::internal_inconsistency, "integral basis of the orbit subfield has wrong rank");

    // transversal of the kernel: for each orbit point the least g reaching it
    std::vector<int> rep_to(osz, -1);
    for (int g = 0; g < G.order(); g++) {
        int y = conj[g][x_index];
        int pos = (int)(std::lower_bound(orbit.begin(), orbit.end(), y) - orbit.begin());
        if (rep_to[pos] < 0) rep_to[pos] = g;
    }

    OrbitSumResult R;
    R.orbit = orbit;
    R.vectors = QMat(osz, n * d);
    for (int i = 0; i < osz; i++) {
        std::vector<Rat> a = OF.qrow(i);
        for (int pos = 0; pos < osz; pos++) {
            int g = rep_to[pos];
            Elem moved = mul_row(a, G.mats[g]);
            int block = orbit[pos];
            for (int k = 0; k < d; k++) R.vectors.at(i, block * d + k) += moved[k];
        }
    }

    /* determinant of the matrix (g(a_i)) over E; its square is rational and
     * integral, and measures how far the orbit sums are from an exact local
     * basis. */
    {
        std::vector<std::vector<Elem>> M(osz, std::vector<Elem>(osz));
        for (int r = 0; r < osz; r++)
            for (int i = 0; i < osz; i++) M[r][i] = mul_row(OF.qrow(i), G.mats[rep_to[r]]);
        // fraction-free enough: Gaussian elimination in the field E
        Elem detE = E.one();
        for (int c = 0; c < osz; c++) {
            int piv = -1;
            for (int r = c; r < osz; r++)
                if (!E.is_zero_elem(M[r][c])) { piv = r; break; }
            if (piv < 0) { detE = E.zero(); break; }
            if (piv != c) {
                std::swap(M[piv], M[c]);
                detE = E.neg(detE);
            }
            detE = E.mul(detE, M[c][c]);
            Elem inv = E.inv(M[c][c]);
            for (int r = c + 1; r < osz; r++) {
                if (E.is_zero_elem(M[r][c])) continue;
                Elem f = E.mul(M[r][c], inv);
                for (int j = c; j < osz; j++) M[r][j] = E.sub(M[r][j], E.mul(f, M[c][j]));
            }
        }
        Elem d2 = E.mul(detE, detE);
        if (!E.is_rational(d2) || !is_integer(d2[0]))
            fail(errc::internal_inconsistency, "orbit determinant square is not an integer");
        R.det_sq = d2[0].get_num();
    }
    return R;
}

OrbitSpanResult orbit_sum_span(const NumberField& E, const GaloisGroup& G,
                               const std::vector<Perm>& lambda, const PermGroup& N,
                               const HopfAlgebra& H, const Lattice& OE) {
    int n = N.order();
    OrbitSpanResult out;
    std::vector<bool> used(n, false);
    std::vector<std::vector<Rat>> rows;
    for (int x = 0; x < n; x++) {
        if (used[x]) continue;
        OrbitSumResult R = orbit_sum_basis(E, G, lambda, N, OE, x);
        for (int y : R.orbit) used[y] = true;
        for (int i = 0; i < R.vectors.m; i++) {
            auto c = H.coords(R.vectors.row(i));
            if (!c) fail(errc::internal_inconsistency, "orbit sum is not G-fixed");
            rows.push_back(*c);
        }
        out.orbits.push_back(std::move(R));
    }
    QMat rm((int)rows.size(), n);
    for (size_t i = 0; i < rows.size(); i++) rm.set_row((int)i, rows[i]);
    out.span = Lattice::from_rows(rm);
    return out;
}

namespace {

/* Tensor-square lattice of L in H⊗H coordinates (n² ambient), spanned by
 * the pairwise Kronecker products of basis rows. */
Lattice tensor_square(const Lattice& L) {
    int n = L.dim;
    QMat rows(L.rank() * L.rank(), n * n);
    QMat B = L.qrows();
    for (int r = 0; r < L.rank(); r++)
        for (int s = 0; s < L.rank(); s++)
            for (int j = 0; j < n; j++)
                for (int k = 0; k < n; k++)
                    rows.at(r * L.rank() + s, j * n + k) = B.at(r, j) * B.at(s, k);
    return Lattice::from_rows(rows);
}

std::vector<Rat> comult_vector(const HopfAlgebra& H, const std::vector<Rat>& u) {
    std::vector<Rat> w((size_t)H.n * H.n);
    for (int i = 0; i < H.n; i++) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < H.n; j++)
            for (int k = 0; k < H.n; k++) {
                const Rat& c = H.comult_c(i, j, k);
                if (!is_zero(c)) w[(size_t)j * H.n + k] += u[i] * c;
            }
    }
    return w;
}

bool hopf_order_checks(const HopfAlgebra& H, const Lattice& L, const Int* p) {
    auto in_lattice = [&](const Lattice& M, const std::vector<Rat>& v) {
        return p ? M.contains_local(v, *p) : M.contains(v);
    };
    // ring checks (global or p-local)
    if (!in_lattice(L, H.unit)) return false;
    for (int i = 0; i < L.rank(); i++)
        for (int j = i; j < L.rank(); j++)
            if (!in_lattice(L, H.product(L.qrow(i), L.qrow(j)))) return false;

    Lattice LL = tensor_square(L);
    for (int i = 0; i < L.rank(); i++) {
        // comultiplication stability
        if (!in_lattice(LL, comult_vector(H, L.qrow(i)))) return false;
        // counit integrality
        Rat e = H.apply_counit(L.qrow(i));
        if (p ? divides(*p, e.get_den()) : !is_integer(e)) return false;
        // antipode stability
        if (!in_lattice(L, H.apply_antipode(L.qrow(i)))) return false;
    }
    if (!p) {
        // global antipode must be onto: S(L) = L, not merely S(L) ⊆ L
        QMat s(L.rank(), L.dim);
        for (int i = 0; i < L.rank(); i++) s.set_row(i, H.apply_antipode(L.qrow(i)));
        if (Lattice::from_rows(s) != L) return false;
    }
    return true;
}

}  // namespace

bool is_hopf_order(const HopfAlgebra& H, const Lattice& L) {
    return hopf_order_checks(H, L, nullptr);
}

bool p_is_hopf_order(const HopfAlgebra& H, const Lattice& L, const Int& p) {
    return hopf_order_checks(H, L, &p);
}

Int disc_order(const HopfAlgebra& H, const Lattice& L) {
    int n = H.n;
    if (L.rank() != n || L.dim != n) fail(errc::rank_deficient, "order must have full rank");
    // traces of right multiplication by each H-basis vector
    std::vector<Rat> tr(n);
    for (int i = 0; i < n; i++)
        for (int a = 0; a < n; a++) tr[i] += H.mult_c(a, i, a);
    QMat gram(n, n);
    for (int r = 0; r < n; r++)
        for (int s = r; s < n; s++) {
            std::vector<Rat> prod = H.product(L.qrow(r), L.qrow(s));
            Rat t = 0;
            for (int i = 0; i < n; i++) t += prod[i] * tr[i];
            gram.at(r, s) = t;
            gram.at(s, r) = t;
        }
    Rat dd = det(gram);
    if (!is_integer(dd))
        fail(errc::internal_inconsistency, "trace form of a ring lattice must be integral");
    if (is_zero(dd)) fail(errc::internal_inconsistency, "degenerate trace form");
    return dd.get_num();
}

PMaxResult p_maximal(const HopfAlgebra& H, const Lattice& L, const Int& p) {
    if (!H.commutative)
        fail(errc::unsupported_case, "maximality test is implemented for commutative algebras only");
    if (!is_prime(p)) fail(errc::invalid_argument, "maximality test needs a prime");
    int n = H.n;
    Int disc = disc_order(H, L);
    // an enlargement would divide the discriminant by a nontrivial square
    if (valuation(Rat(disc), p) < 2) return {true, L};

    // multiplication table of L on its own basis (integer entries)
    std::vector<Int> c((size_t)n * n * n);
    for (int r = 0; r < n; r++)
        for (int s = 0; s < n; s++) {
            auto k = L.coords(H.product(L.qrow(r), L.qrow(s)));
            if (!k) fail(errc::not_closed, "lattice is not closed under multiplication");
            for (int t = 0; t < n; t++) c[((size_t)r * n + s) * n + t] = (*k)[t];
        }
    auto fp_mul = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        std::vector<Int> z(n);
        for (int r = 0; r < n; r++) {
            if (sgn(x[r]) == 0) continue;
            for (int s = 0; s < n; s++) {
                if (sgn(y[s]) == 0) continue;
                Int f = fp_reduce(Int(x[r] * y[s]), p);
                for (int t = 0; t < n; t++)
                    z[t] = fp_reduce(Int(z[t] + f * c[((size_t)r * n + s) * n + t]), p);
            }
        }
        return z;
    };

    /* Nilradical of L/pL via the p-power map, which is F_p-linear in a
     * commutative algebra; iterate the kernel until it stabilizes. */
    auto one = L.coords(H.unit);
    if (!one) fail(errc::not_closed, "lattice misses the unit");
    FpMat frob(n, n, p);
    for (int r = 0; r < n; r++) {
        // e_r^p by square-and-multiply on the exponent
        std::vector<Int> acc(n), base(n);
        base[r] = 1;
        for (int t = 0; t < n; t++) acc[t] = fp_reduce((*one)[t], p);
        Int e = p;
        while (sgn(e) > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = fp_mul(acc, base);
            e >>= 1;
            if (sgn(e) > 0) base = fp_mul(base, base);
        }
        for (int t = 0; t < n; t++) frob.at(r, t) = acc[t];
    }
    auto fp_matmul = [&](const FpMat& A, const FpMat& B) {
        FpMat C(A.m, B.n, p);
        for (int i = 0; i < A.m; i++)
            for (int k = 0; k < A.n; k++) {
                if (sgn(A.at(i, k)) == 0) continue;
                for (int j = 0; j < B.n; j++)
                    C.at(i, j) = fp_reduce(Int(C.at(i, j) + A.at(i, k) * B.at(k, j)), p);
            }
        return C;
    };
    // radical = kernel of F^k with p^k ≥ n, so nilpotents of any index die
    FpMat power = frob;
    Int pk = p;
    while (pk < n) {
        power = fp_matmul(power, frob);
        pk *= p;
    }
    FpMat rad = fp_left_nullspace(power);

    // I = pL + radical lift, in L-coordinates
    QMat irows(n + rad.m, n);
    for (int r = 0; r < n; r++) irows.at(r, r) = Rat(p);
    for (int r = 0; r < rad.m; r++)
        for (int t = 0; t < n; t++) irows.at(n + r, t) = Rat(rad.at(r, t));
    Lattice I = Lattice::from_rows(irows);  // full rank: contains pL

    // multiplier ring (I : I) = { y : y·I ⊆ I }, in L-coordinates
    QMat ib = I.qrows();
    QMat ibinv = inverse(ib);
    QMat stacked(n, n * n);
    for (int j = 0; j < n; j++) {
        // P_j: y ↦ coordinates of y·beta_j in the I-basis
        QMat Pj(n, n);
        for (int r = 0; r < n; r++) {
            std::vector<Rat> z(n);
            for (int s = 0; s < n; s++) {
                if (is_zero(ib.at(j, s))) continue;
                for (int t = 0; t < n; t++) z[t] += ib.at(j, s) * Rat(c[((size_t)r * n + s) * n + t]);
            }
            Pj.set_row(r, z);
        }
        QMat PjC = mul(Pj, ibinv);
        for (int r = 0; r < n; r++)
            for (int t = 0; t < n; t++) stacked.at(r, j * n + t) = PjC.at(r, t);
    }
    Lattice multiplier_L = integral_preimage(stacked);

    // back to H-coordinates
    QMat mh(n, n);
    QMat lb = L.qrows();
    for (int r = 0; r < n; r++) mh.set_row(r, mul_row(multiplier_L.qrow(r), lb));
    Lattice enlarged = Lattice::from_rows(mh);

    if (!enlarged.contains_lattice(L))
        fail(errc::internal_inconsistency, "multiplier ring does not contain the order");
    Int idx = index_in(L, enlarged);
    if (idx == 1) return {true, L};
    if (!is_ring_lattice(H, enlarged))
        fail(errc::internal_inconsistency, "multiplier ring is not a ring");
    return {false, enlarged};
}

bool is_maximal(const HopfAlgebra& H, const Lattice& L) {
    Int disc = disc_order(H, L);
    for (auto& [p, e] : factor(disc)) {
        if (e < 2) continue;
        if (!p_maximal(H, L, p).maximal) return false;
    }
    return true;
}

Lattice maximal_overorder(const HopfAlgebra& H, const Lattice& L) {
    Lattice cur = L;
    for (;;) {
        Int disc = disc_order(H, cur);
        bool grew = false;
        for (auto& [p, e] : factor(disc)) {
            if (e < 2) continue;
            for (;;) {
                PMaxResult r = p_maximal(H, cur, p);
                if (r.maximal) break;
                cur = r.enlarged;
                grew = true;
            }
        }
        if (!grew) return cur;
    }
}

InclusionIndex inclusion_and_index(const Lattice& sub, const Lattice& sup) {
    InclusionIndex r;
    r.contained = sup.contains_lattice(sub);
    if (r.contained && sub.rank() == sup.rank()) r.index = index_in(sub, sup);
    return r;
}

} // namespace hgw
