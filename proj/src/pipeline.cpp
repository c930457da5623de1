#include "hgw/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace hgw {

using ojson = nlohmann::ordered_json;

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string int_vec_string(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); i++) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::vector<std::string> int_vec_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    for (const Int& x : v) out.push_back(x.get_str());
    return out;
}

std::vector<std::string> rat_vec_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

/* L/Q is an abelian Galois extension iff the translation action of G on
 * G/G' is that of an abelian group of order [G:G']. */
bool abelian_extension(const CosetSpace& X, const std::vector<Perm>& lambda) {
    std::vector<Perm> el = lambda;
    std::sort(el.begin(), el.end());
    el.erase(std::unique(el.begin(), el.end()), el.end());
    if ((int)el.size() != X.npoints) return false;
    PermGroup lg;
    lg.n = X.npoints;
    lg.elements = el;
    return is_abelian(lg);
}

StructureRecord analyze_structure(const InstanceData& d, const CosetSpace& X,
                                  const std::vector<Perm>& lambda, const PermGroup& N,
                                  int idx, const RunOptions& opt) {
    StructureRecord rec;
    rec.index = idx;
    GroupFingerprint fp = group_fingerprint(N);
    rec.fingerprint = fp.to_string();
    rec.order_N = fp.order;
    for (const Perm& pm : N.elements) rec.cycles.push_back(cycle_string(pm));
    {
        std::vector<Perm> lg = lambda;
        std::sort(lg.begin(), lg.end());
        lg.erase(std::unique(lg.begin(), lg.end()), lg.end());
        rec.classical = (lg == N.elements);
    }

    HopfAlgebra H = descend_group_algebra(d.E, d.G, X, lambda, N);
    rec.commutative = H.commutative;
    rec.dim_ok = (H.n == X.npoints);
    rec.hopf_axioms = hopf_axioms_hold(H);

    QMat Lbasis = d.L.OL.qrows();
    ActionTable T = build_action_table(d.E, d.G, X, lambda, H, Lbasis);
    rec.galois_det = rat_to_string(galois_map_det(d.E, H, T, Lbasis));
    rec.module_algebra = module_algebra_identities(d.E, H, T, Lbasis);

    rec.assoc = associated_order(H, T);
    rec.fpo = fixed_point_order(d.E, H, d.OE);
    InclusionIndex inc = inclusion_and_index(rec.fpo, rec.assoc);
    if (!inc.contained)
        fail(errc::internal_inconsistency, "fixed-point order escaped the associated order");
    rec.inclusion_index = inc.index;
    rec.disc_fpo = disc_order(H, rec.fpo);
    rec.disc_assoc = disc_order(H, rec.assoc);
    rec.fpo_hopf_global = is_hopf_order(H, rec.fpo);
    if (auto gr = group_ring_lattice(H)) {
        InclusionIndex gi = inclusion_and_index(*gr, rec.assoc);
        if (gi.contained) rec.group_ring_index = gi.index;
    }
    try {
        OrbitSpanResult osp = orbit_sum_span(d.E, d.G, lambda, N, H, d.OE);
        rec.orbit_span_matches = (osp.span == rec.fpo);
    } catch (const error& e) {
        if (e.kind != errc::unsupported_case) throw;
        rec.orbit_span_matches = std::nullopt;
    }

    int m = d.L.degree;
    Int budget = opt.scan_budget ? *opt.scan_budget : d.spec.options.scan_budget;
    int gbound =
        opt.global_search_bound ? *opt.global_search_bound : d.spec.options.global_search_bound;

    CriticalSet cs =
        critical_primes(H, T, rec.assoc, m, d.L.disc, d.spec.options.sweep_bound);
    rec.critical_conclusive = cs.conclusive;
    if (cs.conclusive) {
        rec.theta0 = cs.theta0;
        rec.theta0_index = cs.theta0_index;
    } else {
        rec.inconclusive_present = true;
    }

    std::map<Int, std::vector<std::string>> pset;
    for (const CriticalPrime& cp : cs.primes) pset[cp.p] = cp.reasons;
    std::vector<Int> forced = d.spec.options.forced_primes;
    forced.insert(forced.end(), opt.extra_primes.begin(), opt.extra_primes.end());
    for (const Int& p : forced) {
        std::vector<std::string>& rs = pset[p];
        if (std::find(rs.begin(), rs.end(), "forced") == rs.end()) rs.push_back("forced");
    }

    std::vector<ZMat> action = integral_action_matrices(H, T, rec.assoc);
    for (auto& [p, reasons] : pset) {
        PrimeRecord pr;
        pr.p = p;
        pr.reasons = reasons;
        std::sort(pr.reasons.begin(), pr.reasons.end());
        pr.unramified = is_unramified(p, d.L.disc);
        pr.index_valuation = valuation(Rat(rec.inclusion_index), p);
        pr.fpo_hopf_local = p_is_hopf_order(H, rec.fpo, p);
        pr.tame = tameness(d.E, d.L, H, T, rec.fpo, p);
        if (H.commutative) {
            pr.pmax_known = true;
            pr.pmax = p_maximal(H, rec.assoc, p).maximal;
        }
        try {
            LocalFreeResult lf = local_free(H, T, rec.assoc, p, budget);
            if (lf.free) {
                pr.local_status = "free";
                pr.local_witness = lf.witness;
                pr.lifted_index = generator_index(action, lf.witness);
                if (sgn(pr.lifted_index) == 0 || divides(p, pr.lifted_index))
                    fail(errc::internal_inconsistency,
                         "residue witness lifted to an index divisible by p");
            } else {
                pr.local_status = "not-free";
            }
        } catch (const error& e) {
            if (e.kind != errc::resource_limit) throw;
            pr.local_status = "inconclusive";
            rec.inconclusive_present = true;
        }
        rec.primes.push_back(std::move(pr));
    }

    rec.global_generator = global_generator_search(H, T, rec.assoc, gbound);
    if (rec.global_generator)
        for (const PrimeRecord& pr : rec.primes)
            if (pr.local_status == "not-free")
                fail(errc::internal_inconsistency,
                     "global generator next to a proven non-free prime");

    bool abel = abelian_extension(X, lambda);
    bool domestic = is_domestic(m, d.L.disc);

    for (const PrimeRecord& pr : rec.primes) {
        TheoremVerdict v1;
        v1.rule = "unramified-prime";
        v1.prime = pr.p.get_str();
        v1.applicable = abel && pr.unramified;
        if (!v1.applicable) {
            v1.detail = "hypotheses: abelian Galois extension, p unramified";
        } else if (pr.local_status == "inconclusive") {
            v1.inconclusive = true;
            v1.detail = "local scan hit the budget";
        } else {
            bool a = (pr.index_valuation == 0);
            bool b = pr.fpo_hopf_local;
            bool c = pr.tame.tame();
            bool e = (pr.local_status == "free");
            v1.pass = a && b && c && e;
            v1.detail = "p-part of inclusion index trivial: " + yn(a) +
                        "; fixed-point order Hopf at p: " + yn(b) + "; tame: " + yn(c) +
                        "; locally free: " + yn(e);
        }
        rec.verdicts.push_back(v1);

        TheoremVerdict v2;
        v2.rule = "coprime-degree-prime";
        v2.prime = pr.p.get_str();
        v2.applicable = rec.commutative && !divides(pr.p, Int(m));
        if (!v2.applicable) {
            v2.detail = "hypotheses: commutative algebra, p not dividing the degree";
        } else if (pr.local_status == "inconclusive") {
            v2.inconclusive = true;
            v2.detail = "local scan hit the budget";
        } else {
            bool a = (pr.index_valuation == 0);
            bool b = pr.pmax;
            bool e = (pr.local_status == "free");
            v2.pass = a && b && e;
            v2.detail = "p-part of inclusion index trivial: " + yn(a) +
                        "; associated order p-maximal: " + yn(b) + "; locally free: " + yn(e);
        }
        rec.verdicts.push_back(v2);
    }

    auto critical_free = [&]() -> std::pair<bool, bool> {  // (all free, any inconclusive)
        bool all = true, inc2 = false;
        for (const CriticalPrime& cp : cs.primes) {
            for (const PrimeRecord& pr : rec.primes)
                if (pr.p == cp.p) {
                    if (pr.local_status == "inconclusive") inc2 = true;
                    else if (pr.local_status != "free") all = false;
                }
        }
        return {all, inc2};
    };

    {
        TheoremVerdict v3;
        v3.rule = "domestic-global";
        v3.prime = "-";
        v3.applicable = abel && rec.commutative && domestic;
        if (!v3.applicable) {
            v3.detail = "hypotheses: abelian Galois extension, commutative algebra, domestic";
        } else if (!cs.conclusive) {
            v3.inconclusive = true;
            v3.detail = "critical prime set inconclusive";
        } else {
            auto [all_free, any_inc] = critical_free();
            if (any_inc) {
                v3.inconclusive = true;
                v3.detail = "a critical prime scan hit the budget";
            } else {
                bool a = (rec.inclusion_index == 1);
                v3.pass = a && all_free;
                v3.detail = "orders coincide (index 1): " + yn(a) +
                            "; locally free at every critical prime: " + yn(all_free);
            }
        }
        rec.verdicts.push_back(v3);
    }

    {
        TheoremVerdict v4;
        v4.rule = "prime-power-tame";
        v4.prime = "-";
        bool ppow = is_prime_power(Int(m));
        bool tame_all = true;
        for (const auto& [p, e] : factor(abs(d.L.disc))) {
            bool found = false;
            for (const PrimeRecord& pr : rec.primes)
                if (pr.p == p) {
                    found = true;
                    if (!pr.tame.trace_ideal_p_unit) tame_all = false;
                }
            if (!found) {
                TamenessRecord tr = tameness(d.E, d.L, H, T, rec.fpo, p);
                if (!tr.trace_ideal_p_unit) tame_all = false;
            }
        }
        v4.applicable = abel && ppow && tame_all;
        if (!v4.applicable) {
            v4.detail =
                "hypotheses: abelian Galois extension, prime-power degree, tame at every "
                "ramified prime";
        } else if (!cs.conclusive) {
            v4.inconclusive = true;
            v4.detail = "critical prime set inconclusive";
        } else {
            auto [all_free, any_inc] = critical_free();
            if (any_inc) {
                v4.inconclusive = true;
                v4.detail = "a critical prime scan hit the budget";
            } else {
                bool a = (rec.inclusion_index == 1);
                v4.pass = a && all_free;
                v4.detail = "orders coincide (index 1): " + yn(a) +
                            "; locally free at every critical prime: " + yn(all_free);
            }
        }
        rec.verdicts.push_back(v4);
    }
    return rec;
}

} // namespace

std::vector<PermGroup> enumerate_structures(const InstanceData& d, int max_points) {
    CosetSpace X = coset_space(d.G.table, d.spec.gprime);
    std::vector<Perm> lambda = lambda_embedding(d.G.table, X);
    return enumerate_regular_normalized(lambda, max_points);
}

Report run_pipeline(const InstanceData& d, const RunOptions& opt) {
    Report r;
    r.instance = d.spec.name;
    r.degree_E = d.E.deg;
    r.degree_L = d.L.degree;
    r.disc_E = d.spec.declared_disc;
    r.disc_L = d.L.disc;
    r.domestic = is_domestic(d.L.degree, d.L.disc);

    CosetSpace X = coset_space(d.G.table, d.spec.gprime);
    std::vector<Perm> lambda = lambda_embedding(d.G.table, X);
    {
        std::vector<Perm> el = lambda;
        std::sort(el.begin(), el.end());
        el.erase(std::unique(el.begin(), el.end()), el.end());
        PermGroup lg;
        lg.n = X.npoints;
        lg.elements = el;
        r.group = group_fingerprint(lg).to_string();
    }

    int maxp = opt.max_points ? *opt.max_points : d.spec.options.max_points;
    std::vector<PermGroup> structures = enumerate_regular_normalized(lambda, maxp);
    r.structure_count = (int)structures.size();
    r.structures.resize(structures.size());

    int nthreads = std::max(1, std::min(opt.threads, 64));
    nthreads = std::min<int>(nthreads, (int)structures.size() == 0 ? 1 : (int)structures.size());
    if (nthreads <= 1) {
        for (size_t i = 0; i < structures.size(); i++)
            r.structures[i] = analyze_structure(d, X, lambda, structures[i], (int)i, opt);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errs(structures.size());
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= structures.size()) break;
                try {
                    r.structures[i] = analyze_structure(d, X, lambda, structures[i], (int)i, opt);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (const auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    for (const StructureRecord& s : r.structures) {
        r.stat_primes_checked += (long)s.primes.size();
        r.stat_verdicts += (long)s.verdicts.size();
    }
    return r;
}

int report_exit_code(const Report& r) {
    bool inconclusive = false;
    for (const StructureRecord& s : r.structures) {
        if (s.inconclusive_present) inconclusive = true;
        for (const TheoremVerdict& v : s.verdicts) {
            if (v.applicable && v.inconclusive) inconclusive = true;
            if (v.applicable && !v.inconclusive && !v.pass) return 1;
        }
    }
    return inconclusive ? 2 : 0;
}

/* ------------------------------------------------------- renderers ---- */

namespace {

ojson lattice_json(const Lattice& L) {
    ojson rows = ojson::array();
    for (int i = 0; i < L.rank(); i++) rows.push_back(rat_vec_strings(L.qrow(i)));
    return rows;
}

ojson verdict_json(const TheoremVerdict& v) {
    ojson o;
    o["rule"] = v.rule;
    o["prime"] = v.prime;
    o["applicable"] = v.applicable;
    o["conclusion"] = v.conclusion();
    o["detail"] = v.detail;
    return o;
}

} // namespace

std::string render_json(const Report& r) {
    ojson o;
    o["schema"] = "hgw-report/1";
    o["instance"] = r.instance;
    o["field"] = {{"degree", r.degree_E}, {"disc", r.disc_E.get_str()}};
    o["extension"] = {{"degree", r.degree_L},
                      {"disc", r.disc_L.get_str()},
                      {"group", r.group},
                      {"domestic", r.domestic}};
    o["structure_count"] = r.structure_count;
    ojson sl = ojson::array();
    for (const StructureRecord& s : r.structures) {
        ojson js;
        js["index"] = s.index;
        js["fingerprint"] = s.fingerprint;
        js["order"] = s.order_N;
        js["commutative"] = s.commutative;
        js["classical"] = s.classical;
        js["elements"] = s.cycles;
        js["descent"] = {{"dim_ok", s.dim_ok},
                         {"hopf_axioms", s.hopf_axioms},
                         {"module_algebra", s.module_algebra},
                         {"galois_map_det", s.galois_det}};
        ojson jo;
        jo["fixed_point"] = lattice_json(s.fpo);
        jo["associated"] = lattice_json(s.assoc);
        jo["inclusion_index"] = s.inclusion_index.get_str();
        jo["disc_fixed_point"] = s.disc_fpo.get_str();
        jo["disc_associated"] = s.disc_assoc.get_str();
        jo["fixed_point_hopf"] = s.fpo_hopf_global;
        if (s.group_ring_index) jo["group_ring_index"] = s.group_ring_index->get_str();
        if (s.orbit_span_matches) jo["orbit_span_matches"] = *s.orbit_span_matches;
        js["orders"] = jo;
        ojson jf;
        jf["critical_conclusive"] = s.critical_conclusive;
        if (s.critical_conclusive) {
            jf["theta0"] = int_vec_strings(s.theta0);
            jf["theta0_index"] = s.theta0_index.get_str();
        }
        ojson jp = ojson::array();
        for (const PrimeRecord& pr : s.primes) {
            ojson e;
            e["p"] = pr.p.get_str();
            e["reasons"] = pr.reasons;
            e["unramified"] = pr.unramified;
            e["index_valuation"] = pr.index_valuation;
            e["fixed_point_hopf_local"] = pr.fpo_hopf_local;
            e["tame"] = {{"invariants_are_base", pr.tame.invariants_are_base},
                         {"rank_equal", pr.tame.rank_equal},
                         {"faithful", pr.tame.faithful},
                         {"trace_ideal_p_unit", pr.tame.trace_ideal_p_unit},
                         {"trace_gcd", pr.tame.trace_gcd.get_str()},
                         {"t_witness", int_vec_strings(pr.tame.t_witness)}};
            if (pr.pmax_known) e["p_maximal"] = pr.pmax;
            ojson lo;
            lo["status"] = pr.local_status;
            if (pr.local_status == "free") {
                lo["witness"] = int_vec_strings(pr.local_witness);
                lo["lifted_index"] = pr.lifted_index.get_str();
            }
            e["local"] = lo;
            jp.push_back(e);
        }
        jf["primes"] = jp;
        if (s.global_generator)
            jf["global_generator"] = int_vec_strings(*s.global_generator);
        else
            jf["global_generator"] = nullptr;
        js["freeness"] = jf;
        ojson jv = ojson::array();
        for (const TheoremVerdict& v : s.verdicts) jv.push_back(verdict_json(v));
        js["verdicts"] = jv;
        sl.push_back(js);
    }
    o["structures"] = sl;
    o["stats"] = {{"primes_checked", r.stat_primes_checked}, {"verdicts", r.stat_verdicts}};
    return o.dump(2) + "\n";
}

namespace {

std::string render_table(const std::vector<std::vector<std::string>>& rows, int indent) {
    if (rows.empty()) return "";
    std::vector<size_t> w;
    for (const auto& row : rows) {
        if (w.size() < row.size()) w.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); c++) w[c] = std::max(w[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        out.append((size_t)indent, ' ');
        for (size_t c = 0; c < row.size(); c++) {
            std::string cell = row[c];
            if (c + 1 < row.size()) cell.append(w[c] - cell.size() + 2, ' ');
            out += cell;
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "instance " << r.instance << ": [E:Q] = " << r.degree_E << ", [L:Q] = " << r.degree_L
       << ", Galois group " << r.group << "\n";
    os << "disc(O_E) = " << r.disc_E.get_str() << "   disc(O_L) = " << r.disc_L.get_str()
       << "   domestic: " << yn(r.domestic) << "\n";
    os << "structures: " << r.structure_count << "\n";
    for (const StructureRecord& s : r.structures) {
        os << "\nstructure " << s.index << ": " << s.fingerprint
           << "  classical: " << yn(s.classical) << "  commutative: " << yn(s.commutative)
           << "\n";
        os << "  elements:";
        for (const std::string& c : s.cycles) os << " " << c;
        os << "\n";
        os << "  descent: dimension " << yn(s.dim_ok) << "; axioms " << yn(s.hopf_axioms)
           << "; module-algebra " << yn(s.module_algebra) << "; galois-map det "
           << s.galois_det << "\n";
        os << "  orders: [associated : fixed-point] = " << s.inclusion_index.get_str()
           << "; disc fixed-point = " << s.disc_fpo.get_str()
           << "; disc associated = " << s.disc_assoc.get_str() << "; fixed-point Hopf: "
           << yn(s.fpo_hopf_global) << "\n";
        if (s.group_ring_index)
            os << "  group ring: [associated : span of N] = " << s.group_ring_index->get_str()
               << "\n";
        if (s.orbit_span_matches)
            os << "  orbit sums rebuild the fixed-point order: " << yn(*s.orbit_span_matches)
               << "\n";
        os << "  associated order basis (H-coordinates):\n";
        {
            std::vector<std::vector<std::string>> rows;
            for (int i = 0; i < s.assoc.rank(); i++) rows.push_back(rat_vec_strings(s.assoc.qrow(i)));
            os << render_table(rows, 4);
        }
        if (s.critical_conclusive)
            os << "  critical sweep: theta0 = " << int_vec_string(s.theta0) << " with index "
               << s.theta0_index.get_str() << "\n";
        else
            os << "  critical sweep: INCONCLUSIVE within the height bound\n";
        {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"p", "reasons", "unramified", "v_p(index)", "hopf@p", "tame",
                            "p-maximal", "local", "witness"});
            for (const PrimeRecord& pr : s.primes) {
                std::string reasons;
                for (size_t i = 0; i < pr.reasons.size(); i++)
                    reasons += (i ? "," : "") + pr.reasons[i];
                rows.push_back({pr.p.get_str(), reasons, yn(pr.unramified),
                                std::to_string(pr.index_valuation), yn(pr.fpo_hopf_local),
                                yn(pr.tame.tame()), pr.pmax_known ? yn(pr.pmax) : "-",
                                pr.local_status,
                                pr.local_status == "free" ? int_vec_string(pr.local_witness)
                                                          : "-"});
            }
            os << render_table(rows, 2);
        }
        if (s.global_generator)
            os << "  global generator: " << int_vec_string(*s.global_generator)
               << " (integral-basis coordinates)\n";
        else
            os << "  global generator: none found within the height bound\n";
        {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"rule", "p", "conclusion", "detail"});
            for (const TheoremVerdict& v : s.verdicts)
                rows.push_back({v.rule, v.prime, v.conclusion(), v.detail});
            os << render_table(rows, 2);
        }
    }
    os << "\nprimes checked: " << r.stat_primes_checked << "; verdicts: " << r.stat_verdicts
       << "\n";
    return os.str();
}

std::string render_structure_json(const InstanceData& d, int structure_index, int max_points) {
    CosetSpace X = coset_space(d.G.table, d.spec.gprime);
    std::vector<Perm> lambda = lambda_embedding(d.G.table, X);
    std::vector<PermGroup> structures = enumerate_regular_normalized(lambda, max_points);
    if (structure_index < 0 || structure_index >= (int)structures.size())
        fail(errc::invalid_argument,
             "structure index " + std::to_string(structure_index) + " out of range (0.." +
                 std::to_string(structures.size() ? structures.size() - 1 : 0) + ")");
    const PermGroup& N = structures[structure_index];
    HopfAlgebra H = descend_group_algebra(d.E, d.G, X, lambda, N);

    ojson o;
    o["schema"] = "hgw-structure/1";
    o["instance"] = d.spec.name;
    o["index"] = structure_index;
    o["fingerprint"] = group_fingerprint(N).to_string();
    o["commutative"] = H.commutative;
    o["dimension"] = H.n;
    o["ambient_degree"] = H.d;
    ojson cyc = ojson::array();
    for (const Perm& pm : N.elements) cyc.push_back(cycle_string(pm));
    o["elements"] = cyc;
    ojson basis = ojson::array();
    for (int i = 0; i < H.n; i++) basis.push_back(rat_vec_strings(H.basis.row(i)));
    o["basis"] = basis;
    o["unit"] = rat_vec_strings(H.unit);
    o["counit"] = rat_vec_strings(H.counit);
    ojson mult = ojson::array();
    ojson comult = ojson::array();
    for (int i = 0; i < H.n; i++) {
        ojson mi = ojson::array(), ci = ojson::array();
        for (int j = 0; j < H.n; j++) {
            ojson mj = ojson::array(), cj = ojson::array();
            for (int k = 0; k < H.n; k++) {
                mj.push_back(rat_to_string(H.mult_c(i, j, k)));
                cj.push_back(rat_to_string(H.comult_c(i, j, k)));
            }
            mi.push_back(mj);
            ci.push_back(cj);
        }
        mult.push_back(mi);
        comult.push_back(ci);
    }
    o["multiplication"] = mult;
    o["comultiplication"] = comult;
    ojson anti = ojson::array();
    for (int i = 0; i < H.n; i++) anti.push_back(rat_vec_strings(H.antipode.row(i)));
    o["antipode"] = anti;
    return o.dump(2) + "\n";
}

} // namespace hgw
