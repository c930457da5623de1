#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgw/instance.hpp"
#include "hgw/pipeline.hpp"

namespace {

std::vector<hgw::Int> parse_prime_list(const std::string& csv) {
    std::vector<hgw::Int> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) continue;
        hgw::Int p = hgw::int_from_string(cur);
        if (!hgw::is_prime(p))
            hgw::fail(hgw::errc::invalid_argument, "--primes entry " + cur + " is not prime");
        out.push_back(p);
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) hgw::fail(hgw::errc::invalid_argument, "cannot write output file: " + out_path);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf-Galois workbench: enumerate structures on explicit extensions of Q,\n"
                 "descend their Hopf algebras, compute associated orders as exact lattices,\n"
                 "and decide local freeness of the ring of integers."};
    app.require_subcommand(0, 1);

    bool list_catalog = false;
    app.add_flag("--catalog", list_catalog, "list built-in instances and exit");

    std::string instance_arg, format = "text", out_path, primes_csv;
    int structure_index = 0;
    int max_points = -1, global_search = -1, threads = 1;
    std::string scan_budget;

    auto add_common = [&](CLI::App* sub, bool with_pipeline_opts) {
        sub->add_option("instance", instance_arg, "catalog name or instance-file path")
            ->required();
        sub->add_option("--max-points", max_points, "enumeration ceiling on |G/G'|");
        if (with_pipeline_opts) {
            sub->add_option("--primes", primes_csv, "comma-separated primes to force-check");
            sub->add_option("--global-search", global_search,
                            "height bound for the global generator sweep");
            sub->add_option("--scan-budget", scan_budget,
                            "residue-scan ceiling p^rank (integer)");
            sub->add_option("--threads", threads, "worker threads for per-structure fan-out");
            sub->add_option("--format", format, "output format: text or json")
                ->check(CLI::IsMember({"text", "json"}));
            sub->add_option("-o,--output", out_path, "write the report to a file");
        }
    };

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list the Hopf-Galois structures");
    add_common(cmd_enum, false);

    CLI::App* cmd_build = app.add_subcommand("build", "emit one descended algebra in full");
    add_common(cmd_build, false);
    cmd_build->add_option("--structure", structure_index, "structure index from `enumerate`");
    cmd_build->add_option("-o,--output", out_path, "write the description to a file");

    CLI::App* cmd_check = app.add_subcommand("check", "run the full verification pipeline");
    add_common(cmd_check, true);

    CLI::App* cmd_report = app.add_subcommand("report", "run the pipeline and render a report");
    add_common(cmd_report, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_catalog) {
            for (const std::string& name : hgw::catalog_names()) {
                hgw::InstanceSpec s = hgw::catalog_instance(name);
                std::cout << name << ": degree " << (s.min_poly.size() - 1) << ", disc "
                          << s.declared_disc.get_str() << "\n";
            }
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 3;
        }

        hgw::InstanceSpec spec = hgw::resolve_instance(instance_arg);
        hgw::InstanceData data = hgw::realize_instance(spec);
        int maxp = max_points > 0 ? max_points : spec.options.max_points;

        if (cmd_enum->parsed()) {
            std::vector<hgw::PermGroup> hits = hgw::enumerate_structures(data, maxp);
            std::cout << "instance " << spec.name << ": " << hits.size()
                      << " Hopf-Galois structure(s) on " << (hits.empty() ? 0 : hits[0].n)
                      << " point(s)\n";
            for (size_t i = 0; i < hits.size(); i++) {
                std::cout << "  " << i << ": " << hgw::group_fingerprint(hits[i]).to_string()
                          << "  commutative=" << (hgw::is_abelian(hits[i]) ? "yes" : "no")
                          << "\n";
            }
            return 0;
        }
        if (cmd_build->parsed()) {
            emit(hgw::render_structure_json(data, structure_index, maxp), out_path);
            return 0;
        }

        hgw::RunOptions opt;
        opt.threads = threads;
        if (max_points > 0) opt.max_points = max_points;
        if (global_search > 0) opt.global_search_bound = global_search;
        if (!scan_budget.empty()) opt.scan_budget = hgw::int_from_string(scan_budget);
        if (!primes_csv.empty()) opt.extra_primes = parse_prime_list(primes_csv);

        hgw::Report rep = hgw::run_pipeline(data, opt);
        emit(format == "json" ? hgw::render_json(rep) : hgw::render_text(rep), out_path);
        return hgw::report_exit_code(rep);
    } catch (const hgw::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
