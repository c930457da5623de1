#ifndef HGW_PIPELINE_HPP
#define HGW_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hgw/descent.hpp"
#include "hgw/freeness.hpp"
#include "hgw/instance.hpp"
#include "hgw/orders.hpp"

namespace hgw {

struct RunOptions {
    std::vector<Int> extra_primes;  // forced in addition to the instance's own
    std::optional<Int> scan_budget;
    std::optional<int> global_search_bound;
    std::optional<int> max_points;
    int threads = 1;
};

struct PrimeRecord {
    Int p;
    std::vector<std::string> reasons;  // sorted: divides-degree/-disc/-index, forced
    bool unramified = false;
    long index_valuation = 0;          // v_p([assoc : fixed-point order])
    bool fpo_hopf_local = false;       // fixed-point order is a Hopf order at p
    TamenessRecord tame;
    bool pmax_known = false;           // maximality is only decided for commutative H
    bool pmax = false;
    std::string local_status;          // free | not-free | inconclusive
    std::vector<Int> local_witness;    // residue classes, when free
    Int lifted_index = 0;              // [O_L : assoc·lift(witness)], when free
};

struct StructureRecord {
    int index = 0;
    std::string fingerprint;
    int order_N = 0;
    bool commutative = false;
    bool classical = false;                 // N equals the translation image
    std::vector<std::string> cycles;        // elements of N in cycle notation
    bool dim_ok = false;
    bool hopf_axioms = false;
    bool module_algebra = false;
    std::string galois_det;                 // exact nonzero rational
    Lattice fpo;                            // H-coordinates
    Lattice assoc;
    Int inclusion_index = 0;
    Int disc_fpo = 0;
    Int disc_assoc = 0;
    bool fpo_hopf_global = false;
    std::optional<Int> group_ring_index;    // [assoc : Z-span of N], when N is G-fixed
    std::optional<bool> orbit_span_matches; // orbit sums rebuild the fixed-point order
    bool critical_conclusive = false;
    std::vector<Int> theta0;                // critical-set sweep witness (OL coords)
    Int theta0_index = 0;
    std::vector<PrimeRecord> primes;        // sorted by p
    std::optional<std::vector<Int>> global_generator;  // OL coordinates
    std::vector<TheoremVerdict> verdicts;
    bool inconclusive_present = false;
};

struct Report {
    std::string instance;
    int degree_E = 0;
    int degree_L = 0;
    std::string group;  // fingerprint of the Galois group
    Int disc_E = 0;
    Int disc_L = 0;
    bool domestic = false;
    int structure_count = 0;
    std::vector<StructureRecord> structures;
    // workload counters; wall-clock time is deliberately excluded so report
    // bytes are identical across runs and thread counts
    long stat_primes_checked = 0;
    long stat_verdicts = 0;
};

std::vector<PermGroup> enumerate_structures(const InstanceData& data, int max_points);

Report run_pipeline(const InstanceData& data, const RunOptions& opt);

/* 0: all applicable verdicts pass; 1: an applicable verdict fails;
 * 2: inconclusive results present (and nothing failed). */
int report_exit_code(const Report& r);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

/* JSON description of one structure: basis and structure constants. */
std::string render_structure_json(const InstanceData& data, int structure_index,
                                  int max_points);

} // namespace hgw

#endif
