/* Acceptance gate: eight criteria, one verdict line each, exit 0 only if all
 * pass.  Everything is exact; no tolerances appear anywhere. */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgw/freeness.hpp"
#include "hgw/orders.hpp"
#include "hgw/pipeline.hpp"
#include "tests/helpers.hpp"

using namespace hgw;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool ok = true;
    std::string first_problem;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_problem = what;
        }
    }
};

struct Gate {
    std::vector<Criterion> rows;
    Criterion* current = nullptr;

    template <typename F>
    void run(int number, const std::string& title, F&& body) {
        Criterion c{number, title};
        current = &c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
            c.ok = false;
            if (c.first_problem.empty()) c.first_problem = std::string("exception: ") + e.what();
        }
        rows.push_back(c);
        current = nullptr;
    }

    int finish() const {
        bool all = true;
        for (const Criterion& c : rows) {
            std::cout << "criterion " << c.number << ": " << (c.ok ? "PASS" : "FAIL") << " - "
                      << c.title;
            if (!c.ok) std::cout << " [" << c.first_problem << "]";
            std::cout << "\n";
            all = all && c.ok;
        }
        std::cout << (all ? "acceptance: all criteria passed\n"
                          : "acceptance: FAILURES present\n");
        return all ? 0 : 1;
    }
};

struct BuiltStructure {
    HopfAlgebra H;
    ActionTable T;
    Lattice assoc, fpo;
};

struct BuiltInstance {
    const InstanceData* d;
    CosetSpace X;
    std::vector<Perm> lambda;
    std::vector<PermGroup> structures;
    QMat Lbasis;
    std::vector<BuiltStructure> built;
};

const BuiltInstance& built(const std::string& name) {
    static std::map<std::string, BuiltInstance> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const InstanceData& d = hgwtest::data(name);
    BuiltInstance b{&d, hgwtest::cosets(d), {}, {}, {}, {}};
    b.lambda = lambda_embedding(d.G.table, b.X);
    b.structures = enumerate_structures(d, 8);
    b.Lbasis = d.L.OL.qrows();
    for (const PermGroup& N : b.structures) {
        BuiltStructure s;
        s.H = descend_group_algebra(d.E, d.G, b.X, b.lambda, N);
        s.T = build_action_table(d.E, d.G, b.X, b.lambda, s.H, b.Lbasis);
        s.assoc = associated_order(s.H, s.T);
        s.fpo = fixed_point_order(d.E, s.H, d.OE);
        b.built.push_back(std::move(s));
    }
    return cache.emplace(name, std::move(b)).first->second;
}

const Report& report(const std::string& name) {
    static std::map<std::string, Report> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, run_pipeline(hgwtest::data(name), RunOptions{})).first;
    return it->second;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + HG_CLI_PATH + "\" " + args;
    int rc = std::system(cmd.c_str());
    return rc;
}

const std::vector<std::string> kAll = {"cyclo5", "biquad", "cubic2", "quadi"};

} // namespace

int main() {
    Gate gate;

    gate.run(1, "enumeration matches an independent brute-force subgroup scan", [](Criterion& c) {
        for (const char* name : {"cyclo5", "biquad", "cubic2"}) {
            const BuiltInstance& b = built(name);
            std::set<std::vector<Perm>> got;
            for (const PermGroup& N : b.structures) got.insert(N.elements);
            std::set<std::vector<Perm>> oracle = hgwtest::brute_force_structures(b.lambda);
            c.require(got == oracle, std::string(name) + ": sets differ");
        }
        c.require(built("cubic2").structures.size() == 1, "cubic2: expected exactly 1 structure");
        c.require(built("cyclo5").structures.size() == 2, "cyclo5: expected 2 structures");
        c.require(built("biquad").structures.size() == 4, "biquad: expected 4 structures");
    });

    gate.run(2, "descent: dimension, Hopf axioms, bijective Galois map, module algebra",
             [](Criterion& c) {
                 for (const std::string& name : kAll) {
                     const BuiltInstance& b = built(name);
                     for (const BuiltStructure& s : b.built) {
                         c.require(s.H.n == b.d->L.degree, name + ": wrong dimension");
                         c.require(hopf_axioms_hold(s.H), name + ": Hopf axioms broken");
                         c.require(galois_map_det(b.d->E, s.H, s.T, b.Lbasis) != 0,
                                   name + ": singular Galois map");
                         c.require(module_algebra_identities(b.d->E, s.H, s.T, b.Lbasis),
                                   name + ": module-algebra identity broken");
                     }
                 }
             });

    gate.run(3, "fixed-point order sits inside the associated order with finite index",
             [](Criterion& c) {
                 for (const std::string& name : kAll) {
                     const BuiltInstance& b = built(name);
                     for (const BuiltStructure& s : b.built) {
                         InclusionIndex inc = inclusion_and_index(s.fpo, s.assoc);
                         c.require(inc.contained, name + ": not contained");
                         c.require(inc.index >= 1, name + ": nonpositive index");
                     }
                 }
             });

    gate.run(4, "unramified primes: coprime index, local Hopf order, tame, locally free",
             [](Criterion& c) {
                 for (const char* name : {"cyclo5", "biquad"}) {
                     const BuiltInstance& b = built(name);
                     for (const BuiltStructure& s : b.built) {
                         Int idx = inclusion_and_index(s.fpo, s.assoc).index;
                         for (long pl : {2L, 3L, 7L}) {
                             Int p(pl);
                             if (!is_unramified(p, b.d->L.disc)) continue;
                             c.require(!divides(p, idx),
                                       std::string(name) + ": p divides the inclusion index");
                             c.require(p_is_hopf_order(s.H, s.fpo, p),
                                       std::string(name) + ": fixed-point order not Hopf at p");
                             TamenessRecord t =
                                 tameness(b.d->E, b.d->L, s.H, s.T, s.assoc, p);
                             c.require(t.trace_ideal_p_unit,
                                       std::string(name) + ": trace ideal not a p-unit");
                             c.require(local_free(s.H, s.T, s.assoc, p).free,
                                       std::string(name) + ": not locally free at p");
                         }
                     }
                 }
             });

    gate.run(5, "ramified tame prime 2 on the cubic: zero valuation, p-maximal, locally free",
             [](Criterion& c) {
                 const BuiltInstance& b = built("cubic2");
                 const BuiltStructure& s = b.built[0];
                 Int idx = inclusion_and_index(s.fpo, s.assoc).index;
                 c.require(valuation(Rat(idx), Int(2)) == 0, "index has positive 2-valuation");
                 c.require(p_maximal(s.H, s.assoc, 2).maximal, "associated order not 2-maximal");
                 c.require(local_free(s.H, s.T, s.assoc, 2).free, "not locally free at 2");
             });

    gate.run(6, "domestic extensions: orders coincide and O_L is locally free everywhere",
             [](Criterion& c) {
                 for (const char* name : {"cyclo5", "biquad"}) {
                     const Report& r = report(name);
                     c.require(r.domestic, std::string(name) + ": not flagged domestic");
                     for (const StructureRecord& s : r.structures) {
                         if (!s.commutative) continue;
                         c.require(s.inclusion_index == 1,
                                   std::string(name) + ": inclusion index exceeds 1");
                         for (const PrimeRecord& pr : s.primes)
                             c.require(pr.local_status == "free",
                                       std::string(name) + ": a listed prime is not free");
                     }
                 }
                 // the prime-power + tame specialization applies to the quartic
                 // cyclotomic and must pass on every structure
                 for (const StructureRecord& s : report("cyclo5").structures) {
                     bool seen = false;
                     for (const TheoremVerdict& v : s.verdicts)
                         if (v.rule == "prime-power-tame") {
                             seen = true;
                             c.require(v.applicable, "prime-power-tame not applicable");
                             c.require(v.conclusion() == "pass", "prime-power-tame not passing");
                         }
                     c.require(seen, "prime-power-tame verdict missing");
                 }
             });

    gate.run(7, "classical cross-check: tame group ring vs wild strict inclusion, exit 0",
             [](Criterion& c) {
                 const BuiltInstance& b5 = built("cyclo5");
                 bool found_classical = false;
                 for (size_t i = 0; i < b5.structures.size(); i++) {
                     if (!(b5.structures[i] == generate(4, b5.lambda))) continue;
                     found_classical = true;
                     const BuiltStructure& s = b5.built[i];
                     auto zg = group_ring_lattice(s.H);
                     c.require(zg.has_value(), "cyclo5 classical: no group-ring lattice");
                     if (zg) {
                         c.require(*zg == s.assoc, "cyclo5 classical: A_H is not the group ring");
                         c.require(inclusion_and_index(*zg, s.assoc).index == 1,
                                   "cyclo5 classical: group-ring index is not 1");
                     }
                     auto gg = global_generator_search(s.H, s.T, s.assoc, 1);
                     c.require(gg.has_value(), "cyclo5 classical: no generator at height 1");
                 }
                 c.require(found_classical, "cyclo5: classical structure not found");

                 const Report& rq = report("quadi");
                 const StructureRecord& sq = rq.structures[0];
                 c.require(sq.group_ring_index.has_value() && *sq.group_ring_index == 2,
                           "quadi: [A_H : Z[G]] != 2");
                 int applicable = 0;
                 for (const TheoremVerdict& v : sq.verdicts)
                     if (v.applicable) applicable++;
                 c.require(applicable == 0, "quadi: unexpected applicable verdict");
                 c.require(report_exit_code(rq) == 0, "quadi: exit code is not 0");
             });

    gate.run(8, "consistency: discriminant chains, witness lifts, byte-identical reports",
             [](Criterion& c) {
                 for (const std::string& name : kAll) {
                     const Report& r = report(name);
                     for (const StructureRecord& s : r.structures) {
                         c.require(s.disc_fpo ==
                                       s.disc_assoc * s.inclusion_index * s.inclusion_index,
                                   name + ": discriminant chain broken");
                         for (const PrimeRecord& pr : s.primes)
                             if (pr.local_status == "free")
                                 c.require(pr.lifted_index != 0 &&
                                               !divides(pr.p, pr.lifted_index),
                                           name + ": lifted witness index not coprime to p");
                     }
                 }
                 namespace fs = std::filesystem;
                 fs::path dir = fs::temp_directory_path();
                 fs::path f1 = dir / "hgw-acc-threads1.json";
                 fs::path f3 = dir / "hgw-acc-threads3.json";
                 fs::path f1b = dir / "hgw-acc-threads1b.json";
                 for (const std::string& name : {std::string("biquad"), std::string("cubic2")}) {
                     int rc1 = run_cli("report " + name + " --format json --threads 1 -o \"" +
                                       f1.string() + "\"");
                     int rc3 = run_cli("report " + name + " --format json --threads 3 -o \"" +
                                       f3.string() + "\"");
                     int rc1b = run_cli("report " + name + " --format json --threads 1 -o \"" +
                                        f1b.string() + "\"");
                     c.require(rc1 == 0 && rc3 == 0 && rc1b == 0,
                               name + ": CLI run failed");
                     std::string b1 = slurp(f1), b3 = slurp(f3), b1b = slurp(f1b);
                     c.require(!b1.empty(), name + ": empty report");
                     c.require(b1 == b3, name + ": thread counts changed the bytes");
                     c.require(b1 == b1b, name + ": repeat run changed the bytes");
                 }
                 std::error_code ec;
                 fs::remove(f1, ec);
                 fs::remove(f3, ec);
                 fs::remove(f1b, ec);
             });

    return gate.finish();
}
