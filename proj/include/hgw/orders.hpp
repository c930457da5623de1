#ifndef HGW_ORDERS_HPP
#define HGW_ORDERS_HPP

#include <optional>

#include "hgw/descent.hpp"
#include "hgw/lattice.hpp"

namespace hgw {

/* Orders live in H-coordinates: a rank-n lattice in Q^n whose rows are
 * coordinates on the descended basis of H. */

bool is_ring_lattice(const HopfAlgebra& H, const Lattice& L);     // closed + unit
bool contains_unit(const HopfAlgebra& H, const Lattice& L);

/* The largest lattice whose action preserves the given integral basis of
 * the subfield: the integral preimage of the flattened action table. */
Lattice associated_order(const HopfAlgebra& H, const ActionTable& T_int);

/* O_E[N] ∩ H, i.e. the G-fixed points of the integral group algebra. */
Lattice fixed_point_order(const NumberField& E, const HopfAlgebra& H, const Lattice& OE);

/* Z-span of the group elements of N inside H, available when every element
 * of N is itself G-fixed (e.g. the classical structure with abelian G). */
std::optional<Lattice> group_ring_lattice(const HopfAlgebra& H);

/* Galois-orbit sums over one conjugation orbit.  The construction reduces
 * to the quotient of G acting faithfully on the orbit; that reduced action
 * must be regular (automatic when G is abelian). */
struct OrbitSumResult {
    std::vector<int> orbit;   // N-element indices, sorted
    QMat vectors;             // |orbit| × (n·d) ambient group-algebra rows
    Int det_sq;               // square of det(g(a_i)) over the orbit, an integer
};

OrbitSumResult orbit_sum_basis(const NumberField& E, const GaloisGroup& G,
                               const std::vector<Perm>& lambda, const PermGroup& N,
                               const Lattice& OE, int x_index);

/* All orbits, walked smallest-representative-first; span is returned in
 * H-coordinates for comparison with the fixed-point order. */
struct OrbitSpanResult {
    std::vector<OrbitSumResult> orbits;
    Lattice span;  // in H-coordinates
};

OrbitSpanResult orbit_sum_span(const NumberField& E, const GaloisGroup& G,
                               const std::vector<Perm>& lambda, const PermGroup& N,
                               const HopfAlgebra& H, const Lattice& OE);

bool is_hopf_order(const HopfAlgebra& H, const Lattice& L);
bool p_is_hopf_order(const HopfAlgebra& H, const Lattice& L, const Int& p);

/* det of Tr(b_i b_j) for the regular representation restricted to L. */
Int disc_order(const HopfAlgebra& H, const Lattice& L);

struct PMaxResult {
    bool maximal = false;
    Lattice enlarged;  // equals the input when maximal
};

/* One radical-multiplier round at p (commutative H only). */
PMaxResult p_maximal(const HopfAlgebra& H, const Lattice& L, const Int& p);

bool is_maximal(const HopfAlgebra& H, const Lattice& L);
Lattice maximal_overorder(const HopfAlgebra& H, const Lattice& L);

struct InclusionIndex {
    bool contained = false;
    Int index = 0;  // valid when contained
};

InclusionIndex inclusion_and_index(const Lattice& sub, const Lattice& sup);

} // namespace hgw

#endif
