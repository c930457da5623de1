#include "hgw/descent.hpp"

#include <algorithm>

#include "hgw/lattice.hpp"

namespace hgw {

std::vector<Rat> HopfAlgebra::to_ambient(const std::vector<Rat>& coords) const {
    return mul_row(coords, basis);
}

std::optional<std::vector<Rat>> HopfAlgebra::coords(const std::vector<Rat>& ambient) const {
    return solve_in_rowspace(basis, ambient);
}

std::vector<Rat> HopfAlgebra::product(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> z(n);
    for (int i = 0; i < n; i++) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < n; j++) {
            if (is_zero(y[j])) continue;
            Rat f = x[i] * y[j];
            for (int k = 0; k < n; k++) {
                const Rat& c = mult_c(i, j, k);
                if (!is_zero(c)) z[k] += f * c;
            }
        }
    }
    return z;
}

std::vector<Rat> HopfAlgebra::apply_antipode(const std::vector<Rat>& x) const {
    return mul_row(x, antipode);
}

Rat HopfAlgebra::apply_counit(const std::vector<Rat>& x) const {
    Rat e = 0;
    for (int i = 0; i < n; i++) e += x[i] * counit[i];
    return e;
}

std::vector<QMat> semilinear_action(const NumberField& E, const GaloisGroup& G,
                                    const std::vector<Perm>& lambda, const PermGroup& N) {
    int n = N.order(), d = E.deg;
    if ((int)lambda.size() != G.order())
        fail(errc::invalid_argument, "translation image size differs from the group order");
    std::vector<QMat> rho;
    rho.reserve(G.order());
    for (int g = 0; g < G.order(); g++) {
        // conjugation permutation of N induced by lambda_g
        std::vector<int> cp(n);
        for (int i = 0; i < n; i++) {
            int j = N.element_index(conjugate(lambda[g], N.elements[i]));
            if (j < 0)
                fail(errc::invalid_argument,
                     "subgroup is not normalized by the translation image");
            cp[i] = j;
        }
        QMat R(n * d, n * d);
        const QMat& sg = G.mats[g];
        for (int i = 0; i < n; i++)
            for (int k = 0; k < d; k++)
                for (int j = 0; j < d; j++) R.at(i * d + k, cp[i] * d + j) = sg.at(k, j);
        rho.push_back(std::move(R));
    }
    return rho;
}

namespace {

/* Canonical basis of a Q-subspace given by any spanning rows: Hermite form
 * of the integer lattice generated by the reduced-echelon basis. */
QMat canonical_subspace_basis(const QMat& rows) {
    QMat R = rows;
    auto piv = rref(R);
    QMat B((int)piv.size(), rows.n);
    for (size_t i = 0; i < piv.size(); i++) B.set_row((int)i, R.row((int)i));
    return Lattice::from_rows(B).qrows();
}

}  // namespace

HopfAlgebra descend_group_algebra(const NumberField& E, const GaloisGroup& G,
                                  const CosetSpace& X, const std::vector<Perm>& lambda,
                                  const PermGroup& N) {
    int n = N.order(), d = E.deg;
    if (X.npoints != n)
        fail(errc::invalid_argument, "subgroup order differs from the point count");

    std::vector<QMat> rho = semilinear_action(E, G, lambda, N);

    // fixed space of all the semilinear operators
    QMat stacked(n * d, n * d * G.order());
    for (int g = 0; g < G.order(); g++) {
        QMat Dg = sub(rho[g], QMat::identity(n * d));
        for (int i = 0; i < n * d; i++)
            for (int j = 0; j < n * d; j++) stacked.at(i, g * n * d + j) = Dg.at(i, j);
    }
    QMat K = left_nullspace(stacked);
    if (K.m != n)
        fail(errc::descent_failure, "fixed space has dimension " + std::to_string(K.m) +
                                        ", expected " + std::to_string(n));

    HopfAlgebra H;
    H.n = n;
    H.d = d;
    H.N = N;
    H.basis = canonical_subspace_basis(K);

    H.nmul.resize((size_t)n * n);
    H.ninv.resize(n);
    for (int i = 0; i < n; i++) {
        H.ninv[i] = N.element_index(inverse(N.elements[i]));
        for (int j = 0; j < n; j++)
            H.nmul[(size_t)i * n + j] = N.element_index(compose(N.elements[i], N.elements[j]));
    }

    // group-algebra product of two ambient vectors
    auto ambient_product = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        std::vector<Rat> w((size_t)n * d);
        for (int i = 0; i < n; i++) {
            Elem ui(u.begin() + (size_t)i * d, u.begin() + (size_t)(i + 1) * d);
            if (E.is_zero_elem(ui)) continue;
            for (int j = 0; j < n; j++) {
                Elem vj(v.begin() + (size_t)j * d, v.begin() + (size_t)(j + 1) * d);
                if (E.is_zero_elem(vj)) continue;
                Elem prod = E.mul(ui, vj);
                int t = H.nmul[(size_t)i * n + j];
                for (int k = 0; k < d; k++) w[(size_t)t * d + k] += prod[k];
            }
        }
        return w;
    };

    // multiplication tensor
    H.mult_t.assign((size_t)n * n * n, Rat(0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            auto c = H.coords(ambient_product(H.basis.row(i), H.basis.row(j)));
            if (!c) fail(errc::descent_failure, "fixed space is not closed under multiplication");
            for (int k = 0; k < n; k++) H.mult_t[((size_t)i * n + j) * n + k] = (*c)[k];
        }
    H.commutative = true;
    for (int i = 0; i < n && H.commutative; i++)
        for (int j = i + 1; j < n && H.commutative; j++)
            for (int k = 0; k < n; k++)
                if (H.mult_c(i, j, k) != H.mult_c(j, i, k)) { H.commutative = false; break; }

    // unit
    {
        std::vector<Rat> one((size_t)n * d);
        int idN = N.element_index(Perm::identity(n));
        if (idN < 0) fail(errc::internal_inconsistency, "subgroup misses the identity");
        one[(size_t)idN * d + 0] = 1;
        auto c = H.coords(one);
        if (!c) fail(errc::descent_failure, "identity element is not in the fixed space");
        H.unit = *c;
    }

    // counit: sum of the E-coefficients, which must be rational on H
    H.counit.resize(n);
    for (int i = 0; i < n; i++) {
        Elem s = E.zero();
        const auto bi = H.basis.row(i);
        for (int j = 0; j < n; j++) {
            Elem cj(bi.begin() + (size_t)j * d, bi.begin() + (size_t)(j + 1) * d);
            s = E.add(s, cj);
        }
        if (!E.is_rational(s))
            fail(errc::descent_failure, "counit of a descended basis vector is irrational");
        H.counit[i] = s[0];
    }

    // antipode: nu -> nu^{-1} on the group labels, coefficients unchanged
    H.antipode = QMat(n, n);
    for (int i = 0; i < n; i++) {
        std::vector<Rat> s((size_t)n * d);
        const auto bi = H.basis.row(i);
        for (int j = 0; j < n; j++)
            for (int k = 0; k < d; k++) s[(size_t)H.ninv[j] * d + k] = bi[(size_t)j * d + k];
        auto c = H.coords(s);
        if (!c) fail(errc::descent_failure, "antipode leaves the fixed space");
        H.antipode.set_row(i, *c);
    }

    /* comultiplication: on E[N]⊗_E E[N] with E-basis nu_j⊗nu_k, coordinates
     * are Q^{n²·d} with block (j·n+k) the E-coefficient.  Δ(nu)=nu⊗nu, so
     * Δ(b_i) has block (j,j) equal to the j-th coefficient of b_i.  The
     * descended tensors b_j⊗b_k have block (r,s) = c_r(b_j)·c_s(b_k), and
     * Δ(b_i) must be a rational combination of them. */
    {
        QMat BB(n * n, n * n * d);
        for (int j = 0; j < n; j++) {
            const auto bj = H.basis.row(j);
            for (int k = 0; k < n; k++) {
                const auto bk = H.basis.row(k);
                for (int r = 0; r < n; r++) {
                    Elem cr(bj.begin() + (size_t)r * d, bj.begin() + (size_t)(r + 1) * d);
                    if (E.is_zero_elem(cr)) continue;
                    for (int s = 0; s < n; s++) {
                        Elem cs(bk.begin() + (size_t)s * d, bk.begin() + (size_t)(s + 1) * d);
                        if (E.is_zero_elem(cs)) continue;
                        Elem prod = E.mul(cr, cs);
                        for (int t = 0; t < d; t++)
                            BB.at(j * n + k, (r * n + s) * d + t) = prod[t];
                    }
                }
            }
        }
        H.comult_t.assign((size_t)n * n * n, Rat(0));
        for (int i = 0; i < n; i++) {
            std::vector<Rat> delta((size_t)n * n * d);
            const auto bi = H.basis.row(i);
            for (int j = 0; j < n; j++)
                for (int t = 0; t < d; t++)
                    delta[(size_t)(j * n + j) * d + t] = bi[(size_t)j * d + t];
            auto c = solve_in_rowspace(BB, delta);
            if (!c)
                fail(errc::descent_failure,
                     "comultiplication does not descend to the fixed space");
            for (int j = 0; j < n; j++)
                for (int k = 0; k < n; k++)
                    H.comult_t[((size_t)i * n + j) * n + k] = (*c)[(size_t)j * n + k];
        }
    }

    if (!hopf_axioms_hold(H))
        fail(errc::internal_inconsistency, "descended structure violates the Hopf axioms");
    return H;
}

bool hopf_axioms_hold(const HopfAlgebra& H) {
    int n = H.n;
    auto unit_vec = H.unit;

    // associativity: (b_i b_j) b_k = b_i (b_j b_k)
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            std::vector<Rat> bij(n);
            for (int k = 0; k < n; k++) bij[k] = H.mult_c(i, j, k);
            for (int k = 0; k < n; k++) {
                std::vector<Rat> bjk(n);
                for (int t = 0; t < n; t++) bjk[t] = H.mult_c(j, k, t);
                std::vector<Rat> ek(n);
                ek[k] = 1;
                std::vector<Rat> lhs = H.product(bij, ek);
                std::vector<Rat> ei(n);
                ei[i] = 1;
                std::vector<Rat> rhs = H.product(ei, bjk);
                if (lhs != rhs) return false;
            }
        }

    // unit: 1·b_i = b_i·1 = b_i
    for (int i = 0; i < n; i++) {
        std::vector<Rat> ei(n);
        ei[i] = 1;
        if (H.product(unit_vec, ei) != ei || H.product(ei, unit_vec) != ei) return false;
    }

    // counit is an algebra map on products of basis vectors
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            Rat lhs = 0;
            for (int k = 0; k < n; k++) lhs += H.mult_c(i, j, k) * H.counit[k];
            if (lhs != H.counit[i] * H.counit[j]) return false;
        }

    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ on each basis vector
    for (int i = 0; i < n; i++) {
        // both sides are tensors in H⊗H⊗H with coordinates (a,b,c)
        std::vector<Rat> lhs((size_t)n * n * n), rhs((size_t)n * n * n);
        for (int j = 0; j < n; j++)
            for (int k = 0; k < n; k++) {
                const Rat& c = H.comult_c(i, j, k);
                if (is_zero(c)) continue;
                for (int a = 0; a < n; a++)
                    for (int b = 0; b < n; b++) {
                        const Rat& l = H.comult_c(j, a, b);
                        if (!is_zero(l)) lhs[((size_t)a * n + b) * n + k] += c * l;
                        const Rat& r = H.comult_c(k, a, b);
                        if (!is_zero(r)) rhs[((size_t)j * n + a) * n + b] += c * r;
                    }
            }
        if (lhs != rhs) return false;
    }

    // counit axiom: (ε⊗id)Δ = id = (id⊗ε)Δ
    for (int i = 0; i < n; i++) {
        std::vector<Rat> l(n), r(n);
        for (int j = 0; j < n; j++)
            for (int k = 0; k < n; k++) {
                const Rat& c = H.comult_c(i, j, k);
                if (is_zero(c)) continue;
                l[k] += c * H.counit[j];
                r[j] += c * H.counit[k];
            }
        std::vector<Rat> ei(n);
        ei[i] = 1;
        if (l != ei || r != ei) return false;
    }

    // Δ is an algebra map: Δ(b_i b_j) = Δ(b_i)Δ(b_j)
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            std::vector<Rat> lhs((size_t)n * n), rhs((size_t)n * n);
            for (int k = 0; k < n; k++) {
                const Rat& m = H.mult_c(i, j, k);
                if (is_zero(m)) continue;
                for (int a = 0; a < n; a++)
                    for (int b = 0; b < n; b++) {
                        const Rat& c = H.comult_c(k, a, b);
                        if (!is_zero(c)) lhs[(size_t)a * n + b] += m * c;
                    }
            }
            for (int a1 = 0; a1 < n; a1++)
                for (int b1 = 0; b1 < n; b1++) {
                    const Rat& ci = H.comult_c(i, a1, b1);
                    if (is_zero(ci)) continue;
                    for (int a2 = 0; a2 < n; a2++)
                        for (int b2 = 0; b2 < n; b2++) {
                            const Rat& cj = H.comult_c(j, a2, b2);
                            if (is_zero(cj)) continue;
                            Rat f = ci * cj;
                            for (int a = 0; a < n; a++) {
                                const Rat& ma = H.mult_c(a1, a2, a);
                                if (is_zero(ma)) continue;
                                for (int b = 0; b < n; b++) {
                                    const Rat& mb = H.mult_c(b1, b2, b);
                                    if (!is_zero(mb)) rhs[(size_t)a * n + b] += f * ma * mb;
                                }
                            }
                        }
                }
            if (lhs != rhs) return false;
        }

    // antipode: m(S⊗id)Δ = m(id⊗S)Δ = ε(·)1
    for (int i = 0; i < n; i++) {
        std::vector<Rat> l(n), r(n);
        for (int j = 0; j < n; j++)
            for (int k = 0; k < n; k++) {
                const Rat& c = H.comult_c(i, j, k);
                if (is_zero(c)) continue;
                std::vector<Rat> sj = H.antipode.row(j);
                std::vector<Rat> ek(n);
                ek[k] = 1;
                std::vector<Rat> t = H.product(sj, ek);
                for (int a = 0; a < n; a++) l[a] += c * t[a];
                std::vector<Rat> ej(n);
                ej[j] = 1;
                std::vector<Rat> sk = H.antipode.row(k);
                std::vector<Rat> u = H.product(ej, sk);
                for (int a = 0; a < n; a++) r[a] += c * u[a];
            }
        std::vector<Rat> want(n);
        for (int a = 0; a < n; a++) want[a] = H.counit[i] * H.unit[a];
        if (l != want || r != want) return false;
    }
    return true;
}

QMat ActionTable::matrix(int i) const {
    QMat M(m, m);
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) M.at(a, b) = flat.at(i, a * m + b);
    return M;
}

ActionTable build_action_table(const NumberField& E, const GaloisGroup& G, const CosetSpace& X,
                               const std::vector<Perm>& lambda, const HopfAlgebra& H,
                               const QMat& Lbasis, const std::vector<int>* reps_override) {
    int n = H.n, d = H.d, m = Lbasis.m;
    const std::vector<int>& reps = reps_override ? *reps_override : X.reps;
    if ((int)reps.size() != X.npoints)
        fail(errc::invalid_argument, "representative list has the wrong length");
    int base_point = X.coset_of[G.id];

    /* nu acts through the Galois element representing the coset nu^{-1}(base
     * point); precompute that automorphism index for each nu. */
    std::vector<int> sigma_of(n);
    for (int i = 0; i < n; i++) {
        int pt = inverse(H.N.elements[i]).img[base_point];
        int rep = reps[pt];
        if (X.coset_of[rep] != pt)
            fail(errc::invalid_argument, "representative does not lie in its coset");
        sigma_of[i] = rep;
    }

    ActionTable T;
    T.m = m;
    T.flat = QMat(n, m * m);
    for (int i = 0; i < n; i++) {
        const auto bi = H.basis.row(i);
        for (int a = 0; a < m; a++) {
            Elem img = E.zero();
            for (int j = 0; j < n; j++) {
                Elem cj(bi.begin() + (size_t)j * d, bi.begin() + (size_t)(j + 1) * d);
                if (E.is_zero_elem(cj)) continue;
                Elem moved = mul_row(Lbasis.row(a), G.mats[sigma_of[j]]);
                img = E.add(img, E.mul(cj, moved));
            }
            auto c = solve_in_rowspace(Lbasis, img);
            if (!c)
                fail(errc::internal_inconsistency,
                     "action of the descended algebra left the subfield");
            for (int b = 0; b < m; b++) T.flat.at(i, a * m + b) = (*c)[b];
        }
    }
    return T;
}

Elem act_on_L(const NumberField& E, const HopfAlgebra& H, const ActionTable& T,
              const QMat& Lbasis, const std::vector<Rat>& hcoords, const Elem& x) {
    auto cx = solve_in_rowspace(Lbasis, x);
    if (!cx) fail(errc::invalid_argument, "element is not in the subfield");
    std::vector<Rat> acc(T.m);
    for (int i = 0; i < H.n; i++) {
        if (is_zero(hcoords[i])) continue;
        std::vector<Rat> row = mul_row(*cx, T.matrix(i));
        for (int b = 0; b < T.m; b++) acc[b] += hcoords[i] * row[b];
    }
    return mul_row(acc, Lbasis);
}

Rat galois_map_det(const NumberField& E, const HopfAlgebra& H, const ActionTable& T,
                   const QMat& Lbasis) {
    int n = H.n, m = T.m;
    if (n != m) fail(errc::invalid_argument, "action table size differs from dim H");
    // multiplication-by-l_a matrices on the chosen basis of L
    std::vector<QMat> D;
    for (int a = 0; a < m; a++) {
        QMat Da(m, m);
        for (int b = 0; b < m; b++) {
            Elem prod = E.mul(Lbasis.row(b), Lbasis.row(a));
            auto c = solve_in_rowspace(Lbasis, prod);
            if (!c) fail(errc::internal_inconsistency, "subfield basis is not multiplicatively closed");
            Da.set_row(b, *c);
        }
        D.push_back(std::move(Da));
    }
    QMat J(n * m, m * m);
    for (int a = 0; a < m; a++)
        for (int i = 0; i < n; i++) {
            QMat M = mul(T.matrix(i), D[a]);  // x ↦ l_a·(b_i·x), row action
            for (int r = 0; r < m; r++)
                for (int s = 0; s < m; s++) J.at(a * n + i, r * m + s) = M.at(r, s);
        }
    return det(J);
}

bool module_algebra_identities(const NumberField& E, const HopfAlgebra& H, const ActionTable& T,
                               const QMat& Lbasis) {
    int n = H.n, m = T.m;
    std::vector<QMat> Tm;
    for (int i = 0; i < n; i++) Tm.push_back(T.matrix(i));

    auto lcoords = [&](const Elem& x) {
        auto c = solve_in_rowspace(Lbasis, x);
        if (!c) fail(errc::internal_inconsistency, "product left the subfield");
        return *c;
    };

    // h·1 = ε(h)·1
    std::vector<Rat> one = lcoords(E.one());
    for (int i = 0; i < n; i++) {
        std::vector<Rat> lhs = mul_row(one, Tm[i]);
        for (int b = 0; b < m; b++)
            if (lhs[b] != H.counit[i] * one[b]) return false;
    }

    // h·(xy) = Σ (h_(1)·x)(h_(2)·y) on all pairs of basis vectors of L
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) {
            std::vector<Rat> ab = lcoords(E.mul(Lbasis.row(a), Lbasis.row(b)));
            for (int i = 0; i < n; i++) {
                std::vector<Rat> lhs = mul_row(ab, Tm[i]);
                Elem rhs = E.zero();
                for (int j = 0; j < n; j++)
                    for (int k = 0; k < n; k++) {
                        const Rat& c = H.comult_c(i, j, k);
                        if (is_zero(c)) continue;
                        Elem xj = mul_row(Tm[j].row(a), Lbasis);
                        Elem yk = mul_row(Tm[k].row(b), Lbasis);
                        rhs = E.add(rhs, E.scale(c, E.mul(xj, yk)));
                    }
                if (mul_row(lhs, Lbasis) != rhs) return false;
            }
        }
    return true;
}

} // namespace hgw
