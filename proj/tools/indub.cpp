#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "indub/errors.hpp"
#include "indub/graph.hpp"
#include "indub/graph6.hpp"
#include "indub/partition.hpp"
#include "indub/report.hpp"
#include "indub/verify.hpp"

using namespace indub;
using nlohmann::json;

namespace {

struct Source {
    std::string file;
    std::string family;
};

Graph load_graph(const Source& src)
{
    if (!src.family.empty()) {
        if (!src.file.empty()) throw PreconditionError("give either an input file or --family, not both");
        return generate(FamilySpec::parse(src.family));
    }
    if (src.file.empty() || src.file == "-") return read_graph(std::cin);
    std::ifstream in(src.file);
    if (!in) throw PreconditionError("cannot open '" + src.file + "'");
    return read_graph(in);
}

int cmd_analyze(const Source& src, double tol, const std::string& format)
{
    const auto report = run_analyze(load_graph(src), {.tol = tol});
    if (format == "text")
        write_text(std::cout, report);
    else
        std::cout << json(report).dump(2) << '\n';
    if (report.status == "consistency_error") std::cerr << "consistency error: " << report.error << '\n';
    return exit_code(report);
}

int cmd_generate(const std::string& family, const std::string& format)
{
    const auto spec = FamilySpec::parse(family);
    const auto g = generate(spec);
    if (format == "json") {
        json edges = json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
        std::cout << json{{"family", spec.to_string()}, {"n", g.order()}, {"graph6", write_graph6(g)}, {"edges", edges}}
                         .dump()
                  << '\n';
    } else {
        std::cout << write_graph6(g) << '\n';
    }
    return exit_ok;
}

int cmd_census(const std::string& file, const CensusOptions& options)
{
    CensusSummary summary;
    if (file.empty() || file == "-") {
        summary = run_census(std::cin, std::cout, std::cerr, options);
    } else {
        std::ifstream in(file);
        if (!in) throw PreconditionError("cannot open '" + file + "'");
        summary = run_census(in, std::cout, std::cerr, options);
    }
    std::cout.flush();
    std::cerr << summary_json(summary).dump() << '\n';
    if (summary.consistency_errors) return exit_consistency;
    return summary.parse_failures ? exit_parse : exit_ok;
}

int cmd_verify(const std::string& claim, const Source& src, const std::string& partition_file, double tol,
               const std::string& format)
{
    const auto g = load_graph(src);
    std::optional<Partition> pi;
    if (!partition_file.empty()) {
        std::ifstream in(partition_file);
        if (!in) throw PreconditionError("cannot open '" + partition_file + "'");
        pi = parse_partition(in, g.order());
    }
    const auto r = verify_claim(claim, g, pi, tol);
    if (format == "text") {
        std::cout << r.claim << ": " << (!r.applicable ? "not applicable" : r.holds ? "holds" : "FAILS");
        if (!r.note.empty()) std::cout << " (" << r.note << ")";
        std::cout << '\n';
        for (const auto& [name, ok] : r.checks) std::cout << "  [" << (ok ? "ok" : "no") << "] " << name << '\n';
    } else {
        json checks = json::array();
        for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"holds", ok}});
        std::cout << json{{"claim", r.claim},
                          {"graph6", write_graph6(g)},
                          {"applicable", r.applicable},
                          {"holds", r.holds},
                          {"note", r.note},
                          {"checks", checks}}
                         .dump(2)
                  << '\n';
    }
    if (!r.applicable) return exit_precondition;
    return r.holds ? exit_ok : exit_consistency;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Full indubitable partitions and spectral idempotents of regular graphs"};
    app.require_subcommand(1);

    double tol = kDefaultTolerance;
    std::string format = "json";
    Source src;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", tol, "clustering tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* analyze = app.add_subcommand("analyze", "analyse one graph (graph6 or edge list)");
    analyze->add_option("input", src.file, "input file, '-' or omitted for stdin");
    analyze->add_option("--family", src.family, "generate the graph instead, e.g. grid:3,4");
    add_common(analyze);

    std::string family;
    auto* gen = app.add_subcommand("generate", "print a family member as graph6 (text) or JSON");
    gen->add_option("--family", family, "family spec, e.g. crown:4")->required();
    std::string gen_format = "text";
    gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"json", "text"}));

    CensusOptions census_options;
    std::string census_file;
    auto* census = app.add_subcommand("census", "stream graph6 lines and report full partitions");
    census->add_option("input", census_file, "graph6 file, '-' or omitted for stdin");
    census->add_option("--tol", census_options.tol, "clustering tolerance")->check(CLI::PositiveNumber);
    census->add_flag("--all", census_options.all, "emit a record for every graph");
    census->add_option("--jobs", census_options.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string claim;
    std::string partition_file;
    bool list_claims = false;
    auto* verify = app.add_subcommand("verify", "check a named claim on one graph");
    verify->add_option("claim", claim, "claim name (see --list)");
    verify->add_option("input", src.file, "input file, '-' or omitted for stdin");
    verify->add_option("--family", src.family, "generate the graph instead");
    verify->add_option("--partition", partition_file, "partition file, one cell per line");
    verify->add_flag("--list", list_claims, "list the available claims");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze) return cmd_analyze(src, tol, format);
        if (*gen) return cmd_generate(family, gen_format);
        if (*census) return cmd_census(census_file, census_options);
        if (*verify) {
            if (list_claims) {
                for (const auto& c : claim_catalogue())
                    std::cout << c.name << (c.needs_partition ? " (needs --partition)" : "") << "\n    " << c.summary
                              << '\n';
                return exit_ok;
            }
            if (claim.empty()) {
                std::cerr << "verify: a claim name is required (see --list)\n";
                return exit_usage;
            }
            return cmd_verify(claim, src, partition_file, tol, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return exit_consistency;
    } catch (const StructuralViolation& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return exit_consistency;
    }
    return exit_usage;
}
