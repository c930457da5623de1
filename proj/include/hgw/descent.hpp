#ifndef HGW_DESCENT_HPP
#define HGW_DESCENT_HPP

#include <optional>

#include "hgw/numfield.hpp"
#include "hgw/perm.hpp"

namespace hgw {

/* The group algebra E[N] is coordinatized as Q^{n·d}: block i (length d)
 * holds the E-coefficient of the i-th element of N (N.elements order),
 * itself written on the power basis of E.
 *
 * The Galois group acts semilinearly: on coefficients through E, on N by
 * conjugation with the left-translation image.  The descended algebra H is
 * the fixed space, an n-dimensional Q-algebra; all of its structure tensors
 * are stored on a canonical basis so runs are reproducible. */
struct HopfAlgebra {
    int n = 0;                  // dim_Q H = |N|
    int d = 0;                  // [E : Q]
    PermGroup N;
    std::vector<int> nmul;      // n×n: index of nu_i ∘ nu_j
    std::vector<int> ninv;      // index of nu_i^{-1}
    QMat basis;                 // n × (n·d), canonical rows
    std::vector<Rat> mult_t;    // n^3: b_i·b_j = sum_k mult(i,j,k) b_k
    std::vector<Rat> comult_t;  // n^3: Δ(b_i) = sum_{j,k} comult(i,j,k) b_j⊗b_k
    std::vector<Rat> counit;    // n
    QMat antipode;              // n×n, row i = coords of S(b_i)
    std::vector<Rat> unit;      // coords of 1
    bool commutative = false;

    const Rat& mult_c(int i, int j, int k) const { return mult_t[((size_t)i * n + j) * n + k]; }
    const Rat& comult_c(int i, int j, int k) const { return comult_t[((size_t)i * n + j) * n + k]; }

    std::vector<Rat> to_ambient(const std::vector<Rat>& coords) const;
    std::optional<std::vector<Rat>> coords(const std::vector<Rat>& ambient) const;

    /* product/antipode/counit on coordinate vectors */
    std::vector<Rat> product(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
    std::vector<Rat> apply_antipode(const std::vector<Rat>& x) const;
    Rat apply_counit(const std::vector<Rat>& x) const;
};

/* Matrices of the semilinear Galois action on Q^{n·d}, one per group
 * element, acting on row vectors. */
std::vector<QMat> semilinear_action(const NumberField& E, const GaloisGroup& G,
                                    const std::vector<Perm>& lambda, const PermGroup& N);

/* Descend E[N] through the semilinear action and assemble the full Hopf
 * structure.  Checks along the way: fixed space dimension, rational counit,
 * solvable comultiplication, and the Hopf axioms on the result. */
HopfAlgebra descend_group_algebra(const NumberField& E, const GaloisGroup& G,
                                  const CosetSpace& X, const std::vector<Perm>& lambda,
                                  const PermGroup& N);

/* Exact verification of coassociativity, counit, antipode and
 * (co)multiplicativity identities on the structure tensors. */
bool hopf_axioms_hold(const HopfAlgebra& H);

/* Action of H on the subfield L expressed on a chosen Q-basis of L (rows in
 * E coordinates): matrix(i) sends the row vector of x in that basis to the
 * row vector of b_i·x.  The coset representative used for each coefficient
 * can be overridden to confirm representative independence. */
struct ActionTable {
    int m = 0;
    QMat flat;  // n × (m·m); row i is the m×m matrix of b_i, row-major

    QMat matrix(int i) const;
};

ActionTable build_action_table(const NumberField& E, const GaloisGroup& G, const CosetSpace& X,
                               const std::vector<Perm>& lambda, const HopfAlgebra& H,
                               const QMat& Lbasis,
                               const std::vector<int>* reps_override = nullptr);

/* b·x for H-coordinates b and an element x of L (E coordinates). */
Elem act_on_L(const NumberField& E, const HopfAlgebra& H, const ActionTable& T,
              const QMat& Lbasis, const std::vector<Rat>& hcoords, const Elem& x);

/* Determinant of L⊗H → End(L), l⊗h ↦ (x ↦ l·(h·x)); nonzero certifies the
 * action makes L an H-Galois extension. */
Rat galois_map_det(const NumberField& E, const HopfAlgebra& H, const ActionTable& T,
                   const QMat& Lbasis);

/* h·(xy) = Σ (h_(1)·x)(h_(2)·y) and h·1 = ε(h)·1, checked exactly. */
bool module_algebra_identities(const NumberField& E, const HopfAlgebra& H, const ActionTable& T,
                               const QMat& Lbasis);

} // namespace hgw

#endif
