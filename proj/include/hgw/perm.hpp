#ifndef HGW_PERM_HPP
#define HGW_PERM_HPP

#include <string>
#include <vector>

#include "hgw/errors.hpp"

namespace hgw {

/* Permutation of {0, ..., n-1} in one-line notation: img[i] is the image
 * of i.  Composition is function composition, (a∘b)(i) = a(b(i)). */
struct Perm {
    std::vector<int> img;

    int degree() const { return (int)img.size(); }
    int operator()(int i) const { return img[i]; }

    static Perm identity(int n) {
        Perm p;
        p.img.resize(n);
        for (int i = 0; i < n; i++) p.img[i] = i;
        return p;
    }
    bool is_identity() const {
        for (int i = 0; i < degree(); i++)
            if (img[i] != i) return false;
        return true;
    }
    bool is_fixed_point_free() const {
        for (int i = 0; i < degree(); i++)
            if (img[i] == i) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator!=(const Perm& o) const { return img != o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

Perm compose(const Perm& a, const Perm& b);  // a∘b
Perm inverse(const Perm& a);
Perm conjugate(const Perm& g, const Perm& x);  // g x g^{-1}
int perm_order(const Perm& a);
std::string cycle_string(const Perm& a);

/* A permutation group given by generators, with the full (sorted) element
 * list materialized.  Everything downstream relies on `elements` being the
 * lexicographically sorted closure, so equal groups compare equal. */
struct PermGroup {
    int n = 0;                    // number of points
    std::vector<Perm> gens;
    std::vector<Perm> elements;   // sorted, closed

    int order() const { return (int)elements.size(); }
    bool contains(const Perm& p) const;
    int element_index(const Perm& p) const;  // -1 if absent

    bool operator==(const PermGroup& o) const { return n == o.n && elements == o.elements; }
    bool operator<(const PermGroup& o) const { return elements < o.elements; }
};

PermGroup generate(int n, const std::vector<Perm>& gens);
bool is_abelian(const PermGroup& G);

/* Invariants that tell apart the groups arising at workbench sizes:
 * order, commutativity, and the multiset of element orders. */
struct GroupFingerprint {
    int order = 0;
    bool abelian = false;
    std::vector<int> element_orders;  // sorted ascending

    std::string to_string() const;
    bool operator==(const GroupFingerprint& o) const {
        return order == o.order && abelian == o.abelian && element_orders == o.element_orders;
    }
};

GroupFingerprint group_fingerprint(const PermGroup& G);

/* Abstract finite group as a multiplication table over element indices. */
struct GroupTable {
    int m = 0;                  // group order
    std::vector<int> t;         // t[i*m+j] = index of (element i)·(element j)
    int id = -1;

    int mul(int i, int j) const { return t[(size_t)i * m + j]; }
    int inv(int i) const;

    static GroupTable from_perms(const std::vector<Perm>& sorted_elements);
};

/* Left coset space G/G' with a deterministic point order: cosets are indexed
 * by first appearance when scanning the element list in index order, which
 * makes the representative of each coset the minimal element index in it. */
struct CosetSpace {
    int npoints = 0;
    std::vector<int> subgroup;   // validated, sorted element indices of G'
    std::vector<int> coset_of;   // element index -> point
    std::vector<int> reps;       // point -> minimal element index

    /* Maximal-element representatives; used to confirm constructions do not
     * depend on the choice of coset representatives. */
    std::vector<int> alternate_reps() const;
};

CosetSpace coset_space(const GroupTable& G, const std::vector<int>& subgroup);

/* Left-translation action on G/G'; one permutation per group element. */
std::vector<Perm> lambda_embedding(const GroupTable& G, const CosetSpace& X);

bool is_regular(const PermGroup& N);
bool is_normalized(const PermGroup& N, const std::vector<Perm>& lambdaG);

/* All subgroups of Sym(points) that are regular and normalized by the given
 * translation image, in a canonical order.  The search walks unions of
 * conjugation orbits of fixed-point-free permutations, closing eagerly and
 * pruning any partial closure that exceeds the point count or produces a
 * fixed point. */
std::vector<PermGroup> enumerate_regular_normalized(const std::vector<Perm>& lambdaG,
                                                    int max_points = 8);

} // namespace hgw

#endif
