#ifndef HGW_INSTANCE_HPP
#define HGW_INSTANCE_HPP

#include <string>
#include <vector>

#include "hgw/numfield.hpp"

namespace hgw {

struct InstanceOptions {
    std::vector<Int> forced_primes;  // always analyzed, sorted and deduplicated
    int sweep_bound = 2;             // height for the index sweep in the critical-set step
    int global_search_bound = 2;     // height for the global generator sweep
    Int scan_budget = 1000000;       // residue-scan ceiling p^rank
    int max_points = 8;              // enumeration ceiling on |G/G'|
};

/* Everything a run needs, as validated input data: the ambient field E, its
 * automorphism generators, a declared integral basis with its discriminant,
 * and the subgroup G' cutting out L = E^{G'}.  Indices in gprime refer to the
 * canonical (generator-image-sorted) element order of the closed group. */
struct InstanceSpec {
    std::string name;
    std::vector<Int> min_poly;            // monic, constant term first
    std::vector<Elem> automorphism_gens;  // generator images of the primitive element
    QMat integral_basis;                  // deg×deg rows, power-basis coordinates
    Int declared_disc = 0;
    std::vector<int> gprime;              // canonical element indices of G'
    InstanceOptions options;
};

/* The realized instance: field, group, integral structure, subfield. */
struct InstanceData {
    InstanceSpec spec;
    NumberField E;
    GaloisGroup G;
    Lattice OE;
    SubfieldData L;
};

/* Parse the JSON text of an instance file (schema "hgw-instance/1"; all
 * integers and rationals are strings).  Parse and schema problems raise
 * malformed_input with a byte offset where available. */
InstanceSpec parse_instance_json(const std::string& text);

InstanceSpec load_instance_file(const std::string& path);

/* Build and fully validate the instance.  The first violated invariant
 * raises a typed error: invalid_automorphism (image not a root, named by
 * generator), not_galois (closure too small), validation (integral basis
 * problems, discriminant mismatch), invalid_subgroup (bad gprime). */
InstanceData realize_instance(const InstanceSpec& spec);

/* All validation failures at once (empty = valid), for reporting. */
std::vector<std::string> validate_instance(const InstanceSpec& spec);

/* Built-in catalog. */
std::vector<std::string> catalog_names();
bool is_catalog_name(const std::string& name);
std::string catalog_json(const std::string& name);  // raw instance-file text
InstanceSpec catalog_instance(const std::string& name);

/* Resolve a CLI argument: catalog name first, then filesystem path. */
InstanceSpec resolve_instance(const std::string& name_or_path);

} // namespace hgw

#endif
