#ifndef HGW_NUMFIELD_HPP
#define HGW_NUMFIELD_HPP

#include <string>
#include <vector>

#include "hgw/lattice.hpp"
#include "hgw/perm.hpp"
#include "hgw/qmatrix.hpp"

namespace hgw {

/* Element of Q[x]/(f): coefficient vector on the power basis, constant term
 * first, length = deg f.  All arithmetic is exact. */
using Elem = std::vector<Rat>;

struct NumberField {
    std::vector<Int> min_poly;            // monic, length deg+1, constant first
    int deg = 0;
    std::vector<std::vector<Rat>> red;    // x^(deg+k) reduced, k = 0..deg-2

    static NumberField create(std::vector<Int> min_poly);

    Elem zero() const { return Elem(deg); }
    Elem one() const;
    Elem gen() const;
    Elem from_rat(const Rat& c) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(const Rat& c, const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;   // errors: division_by_zero, reducibility
    Elem div(const Elem& a, const Elem& b) const;

    bool is_zero_elem(const Elem& a) const;
    bool is_rational(const Elem& a) const;

    /* Evaluate a polynomial with rational coefficients (constant first) at
     * an element of the field. */
    Elem eval_poly(const std::vector<Rat>& coeffs, const Elem& at) const;
    Elem eval_int_poly(const std::vector<Int>& coeffs, const Elem& at) const;

    QMat mult_matrix(const Elem& a) const;  // row k = coords of a·x^k
    Rat trace(const Elem& a) const;         // trace of the regular representation
};

std::string elem_to_string(const Elem& a);

/* Field automorphism, determined by where it sends the power-basis
 * generator; the image must be another root of the minimal polynomial. */
struct Automorphism {
    Elem gen_image;
    bool operator==(const Automorphism& o) const { return gen_image == o.gen_image; }
    bool operator<(const Automorphism& o) const { return gen_image < o.gen_image; }
};

Elem apply(const NumberField& E, const Automorphism& s, const Elem& a);
QMat aut_matrix(const NumberField& E, const Automorphism& s);

/* The full automorphism group, with elements sorted by generator image so
 * element indices are reproducible.  Requiring |group| = degree certifies
 * the extension is Galois over Q. */
struct GaloisGroup {
    std::vector<Automorphism> elements;
    std::vector<QMat> mats;       // matrix of each automorphism (row action)
    GroupTable table;             // table.mul(i,j) = index of elements[i]∘elements[j]
    int id = -1;

    int order() const { return (int)elements.size(); }
};

GaloisGroup build_galois_group(const NumberField& E, const std::vector<Automorphism>& gens);

/* det(Tr(b_i·b_j)) over the rows of a full-rank lattice in E. */
Int trace_form_disc(const NumberField& E, const Lattice& B);

/* The subfield L = E^{G'} together with its induced integral structure. */
struct SubfieldData {
    std::vector<int> gprime;   // sorted element indices of G'
    int degree = 0;            // [L : Q]
    QMat qbasis;               // degree×deg rows: canonical Q-basis of L in E
    Lattice OL;                // O_E ∩ L, rank = degree, ambient deg
    Int disc = 0;              // det of the Tr_{L/Q} Gram matrix on OL
};

SubfieldData fixed_field(const NumberField& E, const GaloisGroup& G,
                         const std::vector<int>& gprime, const Lattice& OE);

/* Trace from L to Q of an element of L (given in E coordinates). */
Rat subfield_trace(const NumberField& E, const SubfieldData& L, const Elem& z);

inline bool is_unramified(const Int& p, const Int& disc_L) { return !divides(p, disc_L); }

/* Every prime dividing the degree is unramified. */
bool is_domestic(int degree_L, const Int& disc_L);

} // namespace hgw

#endif
