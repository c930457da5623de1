#include "hgw/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hgw {

using nlohmann::json;

/* ------------------------------------------------ built-in catalog ---- */

namespace {

struct CatalogEntry {
    const char* name;
    const char* text;
};

const char* const kCyclo5 = R"json({
  "schema": "hgw-instance/1",
  "name": "cyclo5",
  "description": "Cyclotomic field of conductor 5: cyclic quartic extension, tame everywhere above its degree.",
  "min_poly": ["1", "1", "1", "1", "1"],
  "automorphism_gens": [["0", "0", "1", "0"]],
  "integral_basis": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "0"],
    ["0", "0", "0", "1"]
  ],
  "disc": "125",
  "gprime": [3],
  "options": { "forced_primes": ["2", "3", "7"] }
}
)json";

const char* const kBiquad = R"json({
  "schema": "hgw-instance/1",
  "name": "biquad",
  "description": "Biquadratic field generated by sqrt(-3)+sqrt(5): Klein four group, ramified only at 3 and 5.",
  "min_poly": ["64", "0", "-4", "0", "1"],
  "automorphism_gens": [
    ["0", "1/2", "0", "-1/8"],
    ["0", "-1/2", "0", "1/8"]
  ],
  "integral_basis": [
    ["1", "0", "0", "0"],
    ["0", "1/2", "0", "0"],
    ["0", "1/4", "1/8", "0"],
    ["1/2", "1/8", "0", "1/32"]
  ],
  "disc": "225",
  "gprime": [3],
  "options": { "forced_primes": ["2", "3", "7"] }
}
)json";

const char* const kCubic2 = R"json({
  "schema": "hgw-instance/1",
  "name": "cubic2",
  "description": "Splitting field of x^3-2 over its non-normal cubic subfield Q(cbrt(2)): smallest nonabelian case.",
  "min_poly": ["9", "9", "0", "3", "6", "3", "1"],
  "automorphism_gens": [
    ["-1", "0", "4/3", "0", "0", "-1/9"],
    ["3", "1", "-4/3", "4/3", "2/3", "4/9"]
  ],
  "integral_basis": [
    ["1", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "1/3", "0", "0"],
    ["0", "2/3", "1/3", "0", "1/9", "0"],
    ["0", "0", "2/3", "0", "0", "1/9"]
  ],
  "disc": "-34992",
  "gprime": [3, 5],
  "options": { "forced_primes": ["2"] }
}
)json";

const char* const kQuadi = R"json({
  "schema": "hgw-instance/1",
  "name": "quadi",
  "description": "Gaussian rationals: wildly ramified quadratic extension, the out-of-hypothesis control.",
  "min_poly": ["1", "0", "1"],
  "automorphism_gens": [["0", "-1"]],
  "integral_basis": [
    ["1", "0"],
    ["0", "1"]
  ],
  "disc": "-4",
  "gprime": [1],
  "options": {}
}
)json";

const CatalogEntry kCatalog[] = {
    {"cyclo5", kCyclo5},
    {"biquad", kBiquad},
    {"cubic2", kCubic2},
    {"quadi", kQuadi},
};

/* ---------------------------------------------- schema helpers ---- */

[[noreturn]] void schema_fail(const std::string& what) {
    fail(errc::malformed_input, "instance schema: " + what);
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) schema_fail(std::string("missing key \"") + key + "\"");
    return *it;
}

std::string jstring(const json& j, const std::string& ctx) {
    if (!j.is_string()) schema_fail(ctx + " must be a string");
    return j.get<std::string>();
}

Int jint(const json& j, const std::string& ctx) {
    return int_from_string(jstring(j, ctx));
}

Rat jrat(const json& j, const std::string& ctx) {
    return rat_from_string(jstring(j, ctx));
}

std::vector<Rat> jrat_vector(const json& j, const std::string& ctx) {
    if (!j.is_array()) schema_fail(ctx + " must be an array");
    std::vector<Rat> v;
    for (size_t i = 0; i < j.size(); i++) v.push_back(jrat(j[i], ctx + " entry"));
    return v;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& ctx) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) schema_fail("unknown key \"" + it.key() + "\" in " + ctx);
}

} // namespace

InstanceSpec parse_instance_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::malformed_input,
             "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) schema_fail("top level must be an object");
    check_keys(j,
               {"schema", "name", "description", "min_poly", "automorphism_gens",
                "integral_basis", "disc", "gprime", "options"},
               "the instance object");
    std::string schema = jstring(field(j, "schema"), "\"schema\"");
    if (schema != "hgw-instance/1")
        schema_fail("unsupported schema \"" + schema + "\" (expected \"hgw-instance/1\")");

    InstanceSpec s;
    s.name = jstring(field(j, "name"), "\"name\"");
    if (s.name.empty()) schema_fail("\"name\" must be nonempty");

    const json& mp = field(j, "min_poly");
    if (!mp.is_array() || mp.size() < 2) schema_fail("\"min_poly\" must list at least two coefficients");
    for (size_t i = 0; i < mp.size(); i++) s.min_poly.push_back(jint(mp[i], "\"min_poly\" entry"));

    const json& ag = field(j, "automorphism_gens");
    if (!ag.is_array() || ag.empty()) schema_fail("\"automorphism_gens\" must be a nonempty array");
    for (size_t i = 0; i < ag.size(); i++)
        s.automorphism_gens.push_back(jrat_vector(ag[i], "automorphism generator"));

    const json& ib = field(j, "integral_basis");
    if (!ib.is_array() || ib.empty()) schema_fail("\"integral_basis\" must be a nonempty array");
    {
        std::vector<std::vector<Rat>> rows;
        for (size_t i = 0; i < ib.size(); i++)
            rows.push_back(jrat_vector(ib[i], "integral basis row"));
        size_t width = rows[0].size();
        for (const auto& r : rows)
            if (r.size() != width) schema_fail("integral basis rows have unequal lengths");
        s.integral_basis = QMat((int)rows.size(), (int)width);
        for (int r = 0; r < s.integral_basis.m; r++) s.integral_basis.set_row(r, rows[r]);
    }

    s.declared_disc = jint(field(j, "disc"), "\"disc\"");

    const json& gp = field(j, "gprime");
    if (!gp.is_array() || gp.empty()) schema_fail("\"gprime\" must be a nonempty array");
    for (size_t i = 0; i < gp.size(); i++) {
        if (!gp[i].is_number_integer()) schema_fail("\"gprime\" entries must be integers");
        s.gprime.push_back(gp[i].get<int>());
    }

    if (j.contains("options")) {
        const json& op = j["options"];
        if (!op.is_object()) schema_fail("\"options\" must be an object");
        check_keys(op,
                   {"forced_primes", "sweep_bound", "global_search_bound", "scan_budget",
                    "max_points"},
                   "\"options\"");
        if (op.contains("forced_primes")) {
            const json& fp = op["forced_primes"];
            if (!fp.is_array()) schema_fail("\"forced_primes\" must be an array");
            for (size_t i = 0; i < fp.size(); i++)
                s.options.forced_primes.push_back(jint(fp[i], "forced prime"));
            std::sort(s.options.forced_primes.begin(), s.options.forced_primes.end());
            s.options.forced_primes.erase(
                std::unique(s.options.forced_primes.begin(), s.options.forced_primes.end()),
                s.options.forced_primes.end());
        }
        if (op.contains("sweep_bound")) {
            if (!op["sweep_bound"].is_number_integer()) schema_fail("\"sweep_bound\" must be an integer");
            s.options.sweep_bound = op["sweep_bound"].get<int>();
        }
        if (op.contains("global_search_bound")) {
            if (!op["global_search_bound"].is_number_integer())
                schema_fail("\"global_search_bound\" must be an integer");
            s.options.global_search_bound = op["global_search_bound"].get<int>();
        }
        if (op.contains("scan_budget"))
            s.options.scan_budget = jint(op["scan_budget"], "\"scan_budget\"");
        if (op.contains("max_points")) {
            if (!op["max_points"].is_number_integer()) schema_fail("\"max_points\" must be an integer");
            s.options.max_points = op["max_points"].get<int>();
        }
    }
    return s;
}

InstanceSpec load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::malformed_input, "cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_json(buf.str());
}

InstanceData realize_instance(const InstanceSpec& spec) {
    InstanceData d;
    d.spec = spec;
    d.E = NumberField::create(spec.min_poly);
    int deg = d.E.deg;

    std::vector<Automorphism> gens;
    for (size_t i = 0; i < spec.automorphism_gens.size(); i++) {
        if ((int)spec.automorphism_gens[i].size() != deg)
            fail(errc::malformed_input, "automorphism generator " + std::to_string(i) +
                                            " has length != field degree");
        gens.push_back({spec.automorphism_gens[i]});
    }
    d.G = build_galois_group(d.E, gens);

    if (spec.integral_basis.m != deg || spec.integral_basis.n != deg)
        fail(errc::malformed_input, "integral basis must be a degree x degree matrix");
    d.OE = Lattice::from_rows(spec.integral_basis);
    if (d.OE.rank() != deg) fail(errc::validation, "integral basis is not of full rank");
    for (int k = 0; k < deg; k++) {
        Elem e(deg);
        e[k] = 1;
        if (!d.OE.contains(e))
            fail(errc::validation, "integral basis does not contain the power basis");
    }
    for (int i = 0; i < deg; i++)
        for (int j = i; j < deg; j++)
            if (!d.OE.contains(d.E.mul(d.OE.qrow(i), d.OE.qrow(j))))
                fail(errc::validation, "integral basis is not multiplicatively closed");
    for (int g = 0; g < d.G.order(); g++)
        for (int i = 0; i < deg; i++)
            if (!d.OE.contains(apply(d.E, d.G.elements[g], d.OE.qrow(i))))
                fail(errc::validation, "integral basis is not stable under the automorphisms");
    Int disc = trace_form_disc(d.E, d.OE);
    if (disc != spec.declared_disc)
        fail(errc::validation, "trace-form determinant " + disc.get_str() +
                                   " differs from the declared discriminant " +
                                   spec.declared_disc.get_str());

    for (int idx : spec.gprime)
        if (idx < 0 || idx >= d.G.order())
            fail(errc::invalid_subgroup, "gprime index " + std::to_string(idx) +
                                             " out of range for a group of order " +
                                             std::to_string(d.G.order()));
    d.L = fixed_field(d.E, d.G, spec.gprime, d.OE);

    for (const Int& p : spec.options.forced_primes)
        if (!is_prime(p))
            fail(errc::validation, "forced prime " + p.get_str() + " is not prime");
    if (spec.options.sweep_bound < 1 || spec.options.global_search_bound < 1 ||
        spec.options.max_points < 1 || sgn(spec.options.scan_budget) <= 0)
        fail(errc::validation, "option bounds must be positive");
    return d;
}

std::vector<std::string> validate_instance(const InstanceSpec& spec) {
    std::vector<std::string> out;
    NumberField E;
    GaloisGroup G;
    try {
        E = NumberField::create(spec.min_poly);
        std::vector<Automorphism> gens;
        for (size_t i = 0; i < spec.automorphism_gens.size(); i++) {
            if ((int)spec.automorphism_gens[i].size() != E.deg)
                fail(errc::malformed_input, "automorphism generator " + std::to_string(i) +
                                                " has length != field degree");
            gens.push_back({spec.automorphism_gens[i]});
        }
        G = build_galois_group(E, gens);
    } catch (const error& e) {
        out.push_back(e.what());
        return out;  // nothing downstream is checkable
    }
    int deg = E.deg;

    Lattice OE;
    bool basis_ok = false;
    if (spec.integral_basis.m != deg || spec.integral_basis.n != deg) {
        out.push_back("integral basis must be a degree x degree matrix");
    } else {
        OE = Lattice::from_rows(spec.integral_basis);
        if (OE.rank() != deg)
            out.push_back("integral basis is not of full rank");
        else
            basis_ok = true;
    }
    if (basis_ok) {
        bool has_powers = true, closed = true, stable = true;
        for (int k = 0; k < deg; k++) {
            Elem e(deg);
            e[k] = 1;
            if (!OE.contains(e)) has_powers = false;
        }
        for (int i = 0; i < deg; i++)
            for (int j = i; j < deg; j++)
                if (!OE.contains(E.mul(OE.qrow(i), OE.qrow(j)))) closed = false;
        for (int g = 0; g < G.order(); g++)
            for (int i = 0; i < deg; i++)
                if (!OE.contains(apply(E, G.elements[g], OE.qrow(i)))) stable = false;
        if (!has_powers) out.push_back("integral basis does not contain the power basis");
        if (!closed) out.push_back("integral basis is not multiplicatively closed");
        if (!stable) out.push_back("integral basis is not stable under the automorphisms");
        Int disc = trace_form_disc(E, OE);
        if (disc != spec.declared_disc)
            out.push_back("trace-form determinant " + disc.get_str() +
                          " differs from the declared discriminant " +
                          spec.declared_disc.get_str());
        try {
            fixed_field(E, G, spec.gprime, OE);
        } catch (const error& e) {
            out.push_back(e.what());
        }
    }
    for (const Int& p : spec.options.forced_primes)
        if (!is_prime(p)) out.push_back("forced prime " + p.get_str() + " is not prime");
    if (spec.options.sweep_bound < 1 || spec.options.global_search_bound < 1 ||
        spec.options.max_points < 1 || sgn(spec.options.scan_budget) <= 0)
        out.push_back("option bounds must be positive");
    return out;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> v;
    for (const auto& e : kCatalog) v.push_back(e.name);
    return v;
}

bool is_catalog_name(const std::string& name) {
    for (const auto& e : kCatalog)
        if (name == e.name) return true;
    return false;
}

std::string catalog_json(const std::string& name) {
    for (const auto& e : kCatalog)
        if (name == e.name) return e.text;
    std::string names;
    for (const auto& e : kCatalog) names += std::string(" ") + e.name;
    fail(errc::invalid_argument, "unknown catalog instance \"" + name + "\"; built-ins:" + names);
}

InstanceSpec catalog_instance(const std::string& name) {
    return parse_instance_json(catalog_json(name));
}

InstanceSpec resolve_instance(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path)) return catalog_instance(name_or_path);
    return load_instance_file(name_or_path);
}

} // namespace hgw
