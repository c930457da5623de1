#ifndef HGW_FREENESS_HPP
#define HGW_FREENESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hgw/numfield.hpp"
#include "hgw/orders.hpp"

namespace hgw {

/* All module-generator work happens in the coordinates of the integral
 * basis of L (the rows of OL), with the action table built on that basis,
 * so "Λ·θ" is the row span of integer matrices applied to an integer
 * vector. */

/* Integer action matrices of the rows of an order (each row must act
 * integrally on the integral basis; guaranteed for sublattices of the
 * associated order). */
std::vector<ZMat> integral_action_matrices(const HopfAlgebra& H, const ActionTable& T,
                                           const Lattice& order);

/* [O_L : Λ·θ] for integer coordinates θ, or 0 when Λ·θ has deficient rank. */
Int generator_index(const std::vector<ZMat>& action, const std::vector<Int>& theta);

/* Deterministic sweep order over integer coordinate vectors with sup-norm
 * ≤ bound: L1-norm ascending, ties lexicographically descending. */
std::vector<std::vector<Int>> sweep_vectors(int len, int bound);

struct CriticalPrime {
    Int p;
    std::vector<std::string> reasons;  // sorted; from {divides-index, divides-degree, divides-disc, forced}
};

struct CriticalSet {
    bool conclusive = false;            // false: no finite-index sweep element found
    std::vector<Int> theta0;            // sweep witness (OL coordinates), when conclusive
    Int theta0_index = 0;               // [O_L : Λ·θ0]
    std::vector<CriticalPrime> primes;  // sorted by p
};

/* Critical primes for freeness of O_L over the order: divisors of the index
 * of the first finite-index sweep element, of the degree, and of disc(O_L).
 * Everywhere else the index argument makes local freeness automatic. */
CriticalSet critical_primes(const HopfAlgebra& H, const ActionTable& T, const Lattice& order,
                            int degree_L, const Int& disc_L, int sweep_bound = 2);

struct LocalFreeResult {
    bool free = false;
    std::vector<Int> witness;  // residue classes in [0,p), present when free
};

/* Nakayama test at p: O_L/p is generated over Λ/p by some residue class iff
 * O_L is locally free over Λ at p.  Exhaustive scan in lexicographic order;
 * a completed empty scan PROVES non-freeness.  Throws resource_limit when
 * p^rank exceeds the budget. */
LocalFreeResult local_free(const HopfAlgebra& H, const ActionTable& T, const Lattice& order,
                           const Int& p, const Int& scan_budget = 1000000);

struct LeftIntegralCertificate {
    std::vector<Rat> theta;       // H-coordinates of the trace element Σ n
    bool identity_holds = false;  // h·θ = ε(h)·θ for every basis h, exact
};

LeftIntegralCertificate left_integral(const HopfAlgebra& H);

struct TamenessRecord {
    bool invariants_are_base = false;  // (1) {s : h·s = ε(h)s} is one-dimensional
    bool rank_equal = false;           // (2) rank O_L = dim H
    bool faithful = false;             // (3) the action matrices are independent
    bool trace_ideal_p_unit = false;   // (4) θ·O_L = g·Z with p ∤ g
    Int trace_gcd = 0;
    std::vector<Int> t_witness;        // OL coordinates with θ·t = trace_gcd

    bool tame() const {
        return invariants_are_base && rank_equal && faithful && trace_ideal_p_unit;
    }
};

/* The four tameness conditions for O_L over the order at p; (4) uses the
 * trace element, whose image ideal θ·O_L is the trace ideal of L. */
TamenessRecord tameness(const NumberField& E, const SubfieldData& L, const HopfAlgebra& H,
                        const ActionTable& T, const Lattice& order, const Int& p);

/* First sweep element generating O_L over the order globally (index 1). */
std::optional<std::vector<Int>> global_generator_search(const HopfAlgebra& H,
                                                        const ActionTable& T,
                                                        const Lattice& order, int bound);

struct TheoremVerdict {
    std::string rule;         // which verified statement this row instantiates
    std::string prime;        // decimal prime, or "-" for global statements
    bool applicable = false;  // hypotheses hold on this instance/structure/prime
    bool pass = false;        // conclusion verified (meaningful when applicable)
    bool inconclusive = false;  // hypotheses hold but a needed computation hit a limit
    std::string detail;

    std::string conclusion() const {
        if (!applicable) return "n/a";
        if (inconclusive) return "inconclusive";
        return pass ? "pass" : "FAIL";
    }
};

} // namespace hgw

#endif
