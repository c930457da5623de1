#include <doctest.h>

#include <json.hpp>
#include <set>

#include "hgw/pipeline.hpp"
#include "tests/helpers.hpp"

using namespace hgw;

namespace {

const Report& report(const std::string& name) {
    static std::map<std::string, Report> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, run_pipeline(hgwtest::data(name), RunOptions{})).first;
    return it->second;
}

} // namespace

TEST_CASE("structure counts across the catalog") {
    CHECK(report("cyclo5").structure_count == 2);
    CHECK(report("biquad").structure_count == 4);
    CHECK(report("cubic2").structure_count == 1);
    CHECK(report("quadi").structure_count == 1);
}

TEST_CASE("every catalog verdict passes or does not apply, so exit codes are 0") {
    for (const char* name : {"quadi", "cyclo5", "biquad", "cubic2"}) {
        CAPTURE(name);
        const Report& r = report(name);
        CHECK(report_exit_code(r) == 0);
        for (const StructureRecord& s : r.structures) {
            CHECK(s.dim_ok);
            CHECK(s.hopf_axioms);
            CHECK(s.module_algebra);
            CHECK(!s.inconclusive_present);
            CHECK(s.inclusion_index >= 1);
            CHECK(s.critical_conclusive);
            CHECK(s.theta0_index >= 1);
            // discriminant chain on the computed order pair
            CHECK(s.disc_fpo == s.disc_assoc * s.inclusion_index * s.inclusion_index);
            for (const TheoremVerdict& v : s.verdicts) {
                CHECK((v.conclusion() == "pass" || v.conclusion() == "n/a"));
            }
            for (const PrimeRecord& pr : s.primes) {
                CHECK((pr.local_status == "free" || pr.local_status == "not-free" ||
                       pr.local_status == "inconclusive"));
                if (pr.local_status == "free") {
                    CHECK(pr.lifted_index != 0);
                    CHECK(!divides(pr.p, pr.lifted_index));
                }
            }
        }
    }
}

TEST_CASE("cyclotomic report: domestic flag, tame verdicts, classical group ring") {
    const Report& r = report("cyclo5");
    CHECK(r.degree_E == 4);
    CHECK(r.degree_L == 4);
    CHECK(r.disc_L == 125);
    CHECK(r.domestic);
    int classical_count = 0;
    for (const StructureRecord& s : r.structures) {
        CHECK(s.commutative);
        CHECK(s.inclusion_index == 1);  // domestic: the orders coincide
        if (s.classical) {
            classical_count++;
            REQUIRE(s.group_ring_index.has_value());
            CHECK(*s.group_ring_index == 1);
        }
        REQUIRE(s.orbit_span_matches.has_value());
        CHECK(*s.orbit_span_matches);
        REQUIRE(s.global_generator.has_value());
        // prime records: 2 and 5 critical, 3 and 7 forced
        std::set<std::string> ps;
        for (const PrimeRecord& pr : s.primes) ps.insert(pr.p.get_str());
        CHECK(ps == std::set<std::string>{"2", "3", "5", "7"});
        for (const PrimeRecord& pr : s.primes) {
            CHECK(pr.local_status == "free");
            if (pr.p != 5) {
                CHECK(pr.unramified);
                CHECK(pr.fpo_hopf_local);
                CHECK(pr.tame.tame());
            }
        }
        // the prime-power tame rule applies globally and passes
        bool saw_prime_power_rule = false;
        for (const TheoremVerdict& v : s.verdicts)
            if (v.rule == "prime-power-tame") {
                saw_prime_power_rule = true;
                CHECK(v.applicable);
                CHECK(v.conclusion() == "pass");
            }
        CHECK(saw_prime_power_rule);
    }
    CHECK(classical_count == 1);
}

TEST_CASE("quadratic report: wild control with no applicable verdicts") {
    const Report& r = report("quadi");
    CHECK(!r.domestic);
    const StructureRecord& s = r.structures[0];
    CHECK(s.classical);
    REQUIRE(s.group_ring_index.has_value());
    CHECK(*s.group_ring_index == 2);
    CHECK(s.inclusion_index == 2);
    CHECK(s.disc_fpo == 4);
    CHECK(s.disc_assoc == 1);
    for (const TheoremVerdict& v : s.verdicts) CHECK(!v.applicable);
    CHECK(report_exit_code(r) == 0);  // not applicable is not failure
    REQUIRE(s.global_generator.has_value());
    // wild prime 2: not tame, yet still locally free over the associated order
    REQUIRE(s.primes.size() == 1);
    CHECK(s.primes[0].p == 2);
    CHECK(!s.primes[0].unramified);
    CHECK(!s.primes[0].tame.tame());
    CHECK(s.primes[0].local_status == "free");
}

TEST_CASE("sextic report: tame at 2 with passing verdict, wild at 3 not applicable") {
    const Report& r = report("cubic2");
    const StructureRecord& s = r.structures[0];
    CHECK(s.commutative);
    CHECK(!s.classical);  // N is not the translation image pointwise-fixed case
    CHECK(s.inclusion_index == 9);
    CHECK(s.disc_fpo == 81);
    CHECK(s.disc_assoc == 1);
    std::map<std::string, const PrimeRecord*> by_p;
    for (const PrimeRecord& pr : s.primes) by_p[pr.p.get_str()] = &pr;
    REQUIRE(by_p.count("2"));
    REQUIRE(by_p.count("3"));
    CHECK(by_p["2"]->index_valuation == 0);
    CHECK(by_p["2"]->pmax_known);
    CHECK(by_p["2"]->pmax);
    CHECK(by_p["2"]->local_status == "free");
    CHECK(by_p["2"]->tame.tame());
    CHECK(by_p["3"]->index_valuation == 2);
    CHECK(!by_p["3"]->tame.tame());
    CHECK(by_p["3"]->local_status == "free");
    // coprime-degree rule applies at 2 and passes; nothing applies at 3
    for (const TheoremVerdict& v : s.verdicts) {
        if (v.rule == "coprime-degree-prime" && v.prime == "2") {
            CHECK(v.applicable);
            CHECK(v.conclusion() == "pass");
        }
        if (v.prime == "3") CHECK(!v.applicable);
    }
}

TEST_CASE("biquadratic report: all four structures are free at every listed prime") {
    const Report& r = report("biquad");
    CHECK(r.domestic);
    CHECK(r.disc_L == 225);
    for (const StructureRecord& s : r.structures) {
        CHECK(s.commutative);
        CHECK(s.inclusion_index == 1);
        for (const PrimeRecord& pr : s.primes) CHECK(pr.local_status == "free");
        bool saw_domestic = false;
        for (const TheoremVerdict& v : s.verdicts)
            if (v.rule == "domestic-global") {
                saw_domestic = true;
                CHECK(v.applicable);
                CHECK(v.conclusion() == "pass");
            }
        CHECK(saw_domestic);
    }
}

TEST_CASE("proof-chain implications hold on every prime record") {
    for (const char* name : {"quadi", "cyclo5", "biquad", "cubic2"}) {
        CAPTURE(name);
        const Report& r = report(name);
        for (const StructureRecord& s : r.structures) {
            for (const PrimeRecord& pr : s.primes) {
                // tame + locally Hopf fixed-point order forces local freeness
                // over the associated order and a p-trivial inclusion index
                if (pr.tame.tame() && pr.fpo_hopf_local) {
                    CHECK(pr.local_status == "free");
                    CHECK(pr.index_valuation == 0);
                }
                // commutative H and p coprime to the degree force p-maximality
                // of the associated order and local freeness
                if (s.commutative && !divides(pr.p, Int(r.degree_L))) {
                    CHECK(pr.pmax_known);
                    CHECK(pr.pmax);
                    CHECK(pr.local_status == "free");
                }
            }
        }
    }
    // the quartic cyclotomic at 2 must make the unramified rule pass on
    // every structure
    for (const StructureRecord& s : report("cyclo5").structures) {
        bool seen = false;
        for (const TheoremVerdict& v : s.verdicts)
            if (v.rule == "unramified-prime" && v.prime == "2") {
                seen = true;
                CHECK(v.applicable);
                CHECK(v.conclusion() == "pass");
            }
        CHECK(seen);
    }
}

TEST_CASE("forced extra primes appear with the forced reason and pass") {
    RunOptions opt;
    opt.extra_primes = {Int(11)};
    Report r = run_pipeline(hgwtest::data("cyclo5"), opt);
    const Report& base = report("cyclo5");
    for (size_t i = 0; i < r.structures.size(); i++) {
        const StructureRecord& s = r.structures[i];
        const PrimeRecord* p11 = nullptr;
        for (const PrimeRecord& pr : s.primes)
            if (pr.p == 11) p11 = &pr;
        REQUIRE(p11 != nullptr);
        CHECK(p11->reasons == std::vector<std::string>{"forced"});
        CHECK(p11->unramified);
        CHECK(p11->index_valuation == 0);
        CHECK(p11->local_status == "free");
        // adding a prime must not change any existing verdict
        std::map<std::pair<std::string, std::string>, std::string> base_verdicts;
        for (const TheoremVerdict& v : base.structures[i].verdicts)
            base_verdicts[{v.rule, v.prime}] = v.conclusion();
        for (const TheoremVerdict& v : s.verdicts) {
            auto it = base_verdicts.find({v.rule, v.prime});
            if (it != base_verdicts.end()) CHECK(it->second == v.conclusion());
        }
        CHECK(s.verdicts.size() >= base.structures[i].verdicts.size());
    }
    CHECK(r.stat_primes_checked > base.stat_primes_checked);
    CHECK(report_exit_code(r) == 0);
}

TEST_CASE("a tiny scan budget yields inconclusive records and exit code 2") {
    RunOptions opt;
    opt.scan_budget = Int(1);
    Report r = run_pipeline(hgwtest::data("quadi"), opt);
    const StructureRecord& s = r.structures[0];
    REQUIRE(s.primes.size() == 1);
    CHECK(s.primes[0].local_status == "inconclusive");
    CHECK(s.inconclusive_present);
    CHECK(report_exit_code(r) == 2);
}

TEST_CASE("exit-code policy on synthetic reports") {
    Report r;
    r.structures.emplace_back();
    CHECK(report_exit_code(r) == 0);
    TheoremVerdict fail_v;
    fail_v.applicable = true;
    fail_v.pass = false;
    r.structures[0].verdicts.push_back(fail_v);
    CHECK(report_exit_code(r) == 1);
    r.structures[0].verdicts[0].inconclusive = true;  // inconclusive, not failed
    CHECK(report_exit_code(r) == 2);
    r.structures[0].verdicts[0].applicable = false;
    CHECK(report_exit_code(r) == 0);
    r.structures[0].inconclusive_present = true;
    CHECK(report_exit_code(r) == 2);
}

TEST_CASE("reports are byte-identical across thread counts and repeat runs") {
    const InstanceData& d = hgwtest::data("biquad");
    RunOptions one;
    RunOptions four;
    four.threads = 4;
    std::string j1 = render_json(run_pipeline(d, one));
    std::string j1b = render_json(run_pipeline(d, one));
    std::string j4 = render_json(run_pipeline(d, four));
    CHECK(j1 == j1b);
    CHECK(j1 == j4);
    CHECK(render_text(run_pipeline(d, one)) == render_text(run_pipeline(d, four)));
}

TEST_CASE("rendered JSON parses and mirrors the report fields") {
    const Report& r = report("cyclo5");
    nlohmann::json j = nlohmann::json::parse(render_json(r));
    CHECK(j["schema"] == "hgw-report/1");
    CHECK(j["instance"] == "cyclo5");
    CHECK(j["field"]["disc"] == "125");
    CHECK(j["extension"]["domestic"] == true);
    CHECK(j["structure_count"] == 2);
    REQUIRE(j["structures"].is_array());
    REQUIRE(j["structures"].size() == 2);
    for (const auto& js : j["structures"]) {
        CHECK(js["descent"]["hopf_axioms"] == true);
        CHECK(js["orders"]["inclusion_index"] == "1");
        for (const auto& jp : js["freeness"]["primes"])
            CHECK(jp["local"]["status"] == "free");
        for (const auto& jv : js["verdicts"]) {
            std::string c = jv["conclusion"];
            CHECK((c == "pass" || c == "n/a"));
        }
    }
    CHECK(j["stats"]["verdicts"].is_number());
}

TEST_CASE("per-structure JSON dump carries exact string tensors") {
    std::string text = render_structure_json(hgwtest::data("quadi"), 0, 8);
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["schema"] == "hgw-structure/1");
    CHECK(j["dimension"] == 2);
    // tensors are rational strings; the unit is a coordinate vector
    REQUIRE(j["unit"].is_array());
    bool has_one = false;
    for (const auto& c : j["unit"])
        if (c == "1") has_one = true;
    CHECK(has_one);
}

TEST_CASE("text rendering is stable and contains the headline facts") {
    const Report& r = report("cubic2");
    std::string t = render_text(r);
    CHECK(t.find("cubic2") != std::string::npos);
    CHECK(t.find("structures: 1") != std::string::npos);
    CHECK(t.find("pass") != std::string::npos);
    // no trailing spaces anywhere (byte-stable tables)
    CHECK(t.find(" \n") == std::string::npos);
}

TEST_CASE("the enumeration ceiling propagates as a resource error") {
    auto k = hgwtest::thrown_kind([&] {
        RunOptions opt;
        opt.max_points = 2;
        run_pipeline(hgwtest::data("cyclo5"), opt);
    });
    CHECK(k == errc::resource_limit);
}
