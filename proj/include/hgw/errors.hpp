#ifndef HGW_ERRORS_HPP
#define HGW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgw {

/* Every failure the library can signal deliberately carries one of these
 * kinds, so callers (and the CLI's exit-code policy) can react without
 * parsing message text. */
enum class errc {
    malformed_input,        // unreadable/ill-typed instance data
    validation,             // instance data readable but inconsistent
    invalid_subgroup,       // subgroup indices not closed / out of range
    not_galois,             // automorphism closure smaller than the degree
    invalid_automorphism,   // generator image is not a root of the min poly
    reducibility,           // zero divisor hit: the modulus is not irreducible
    division_by_zero,
    invalid_argument,       // element outside the expected subfield/lattice
    not_sublattice,         // index requested for a non-inclusion
    rank_deficient,         // full-rank lattice required
    descent_failure,        // fixed space has the wrong dimension
    not_closed,             // "order" candidate not closed under multiplication
    unsupported_case,       // outside the implemented fragment (documented)
    resource_limit,         // point-count ceiling or residue-scan budget hit
    internal_inconsistency, // invariant the library itself guarantees broke
};

struct error : std::runtime_error {
    errc kind;
    error(errc k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& what) { throw error(k, what); }

} // namespace hgw

#endif
