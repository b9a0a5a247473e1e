#include "indub/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <thread>

#include "indub/errors.hpp"
#include "indub/graph6.hpp"

namespace indub {

using nlohmann::json;

namespace {

std::vector<ClassificationRecord> applicable_classifications(const Graph& g, const Spectrum& spec,
                                                             const BasicProfile& profile,
                                                             const std::optional<IntersectionArray>& array)
{
    std::vector<ClassificationRecord> out;
    if (spec.classes.size() == 4) out.push_back({"four_eigenvalue", classify_four_eigenvalue(g, spec)});
    if (spec.classes.size() == 5 && profile.bipartition)
        out.push_back({"bipartite_five_eigenvalue", classify_bipartite_five_eigenvalue(g, spec)});
    if (array && array->b.front() > 2 && array->diameter() >= 2)
        for (auto& c : classify_drg_full_partition(g, spec)) out.push_back({"distance_regular", std::move(c)});
    return out;
}

FullPartitionRecord to_record(const IndubitableReport& r)
{
    return {r.exact_eigenvalue, r.multiplicity, r.params.a, r.params.b, r.partition.cells()};
}

json eigenvalue_json(double value, bool exact)
{
    if (exact) return static_cast<std::int64_t>(std::llround(value));
    return value;
}

json partition_json(const FullPartitionRecord& p)
{
    return {{"eigenvalue", p.eigenvalue}, {"multiplicity", p.multiplicity}, {"a", p.a}, {"b", p.b},
            {"cells", p.cells}};
}

FullPartitionRecord partition_from_json(const json& j)
{
    FullPartitionRecord p;
    j.at("eigenvalue").get_to(p.eigenvalue);
    j.at("multiplicity").get_to(p.multiplicity);
    j.at("a").get_to(p.a);
    j.at("b").get_to(p.b);
    j.at("cells").get_to(p.cells);
    return p;
}

json classification_json(const Classification& c)
{
    json checks = json::array();
    for (const auto& [name, ok] : c.checks) checks.push_back({{"name", name}, {"holds", ok}});
    json out{{"verdict", std::string(to_string(c.verdict))},
             {"witness", c.witness},
             {"reordering", c.reordering},
             {"shape", c.shape},
             {"multiplicity", c.multiplicity},
             {"checks", checks}};
    out["eigenvalue"] = c.eigenvalue ? json(*c.eigenvalue) : json(nullptr);
    return out;
}

Classification classification_from_json(const json& j)
{
    Classification c;
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    j.at("witness").get_to(c.witness);
    j.at("reordering").get_to(c.reordering);
    j.at("shape").get_to(c.shape);
    j.at("multiplicity").get_to(c.multiplicity);
    if (!j.at("eigenvalue").is_null()) c.eigenvalue = j.at("eigenvalue").get<std::int64_t>();
    for (const auto& item : j.at("checks"))
        c.checks.emplace_back(item.at("name").get<std::string>(), item.at("holds").get<bool>());
    return c;
}

} // namespace

AnalysisReport run_analyze(const Graph& g, const AnalyzeOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.n = g.order();
    r.graph6 = write_graph6(g);
    r.tolerance = options.tol;
    const auto profile = basic_profile(g);
    r.connected = profile.connected;
    r.regular_degree = profile.regular_degree;
    r.bipartite = profile.bipartition.has_value();

    auto finish = [&] {
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                          .count();
        return r;
    };
    if (!profile.connected) {
        r.status = "not_connected";
        return finish();
    }
    if (!profile.regular_degree) {
        r.status = "not_regular";
        return finish();
    }

    try {
        const auto spec = spectrum(g, options.tol);
        r.ambiguous_clustering = spec.ambiguous;
        const auto census = full_indubitable_census(g, spec);
        const double k = static_cast<double>(*profile.regular_degree);
        for (std::size_t c = 0; c < spec.classes.size(); ++c) {
            const auto& cls = spec.classes[c];
            EigenRecord rec;
            rec.value = cls.value;
            rec.multiplicity = cls.multiplicity;
            rec.hadamard_dim = census.hadamard_dims[c];
            const auto e = spectral_idempotent(g, spec, c);
            if (options.rational_check && cls.integer_value) {
                const auto rv = rational_validation(g, spec, c, e);
                if (rv.applicable && !rv.valid)
                    throw ConsistencyError("idempotent disagrees with its exact rational form");
                rec.exact = rv.applicable;
            }
            if (rec.exact) rec.value = static_cast<double>(*cls.integer_value);
            if (cls.multiplicity == 1 && std::abs(cls.value - k) > spec.threshold)
                rec.constant_diagonal = constant_diagonal_check(e, options.tol);
            if (auto it = census.full.find(c); it != census.full.end())
                rec.full_partition = to_record(it->second);
            r.spectrum.push_back(std::move(rec));
        }
        r.intersection_array = intersection_array(g);
        r.classifications = applicable_classifications(g, spec, profile, r.intersection_array);
    } catch (const ConsistencyError& err) {
        r.status = "consistency_error";
        r.error = err.what();
    } catch (const StructuralViolation& err) {
        r.status = "consistency_error";
        r.error = err.what();
    }
    return finish();
}

int exit_code(const AnalysisReport& report)
{
    if (report.status == "ok") return exit_ok;
    if (report.status == "consistency_error") return exit_consistency;
    return exit_precondition;
}

void to_json(json& j, const AnalysisReport& r)
{
    json spectrum = json::array();
    for (const auto& e : r.spectrum) {
        json item{{"value", eigenvalue_json(e.value, e.exact)},
                  {"exact", e.exact},
                  {"multiplicity", e.multiplicity},
                  {"hadamard_dim", e.hadamard_dim}};
        item["constant_diagonal"] = e.constant_diagonal ? json(*e.constant_diagonal) : json(nullptr);
        item["full_partition"] = e.full_partition ? partition_json(*e.full_partition) : json(nullptr);
        spectrum.push_back(std::move(item));
    }
    json classifications = json::array();
    for (const auto& c : r.classifications) {
        auto item = classification_json(c.result);
        item["kind"] = c.kind;
        classifications.push_back(std::move(item));
    }
    j = json{{"schema", r.schema},
             {"graph",
              {{"n", r.n},
               {"graph6", r.graph6},
               {"connected", r.connected},
               {"regular_degree", r.regular_degree ? json(*r.regular_degree) : json(nullptr)},
               {"bipartite", r.bipartite}}},
             {"status", r.status},
             {"error", r.error},
             {"tolerance", r.tolerance},
             {"ambiguous_clustering", r.ambiguous_clustering},
             {"spectrum", spectrum},
             {"classifications", classifications},
             {"timing_ms", r.timing_ms}};
    if (r.intersection_array)
        j["intersection_array"] = {{"b", r.intersection_array->b}, {"c", r.intersection_array->c}};
    else
        j["intersection_array"] = nullptr;
}

void from_json(const json& j, AnalysisReport& r)
{
    r = AnalysisReport{};
    j.at("schema").get_to(r.schema);
    if (r.schema != kAnalysisSchema) throw ParseError("unsupported report schema '" + r.schema + "'", 0);
    const auto& g = j.at("graph");
    g.at("n").get_to(r.n);
    g.at("graph6").get_to(r.graph6);
    g.at("connected").get_to(r.connected);
    if (!g.at("regular_degree").is_null()) r.regular_degree = g.at("regular_degree").get<std::size_t>();
    g.at("bipartite").get_to(r.bipartite);
    j.at("status").get_to(r.status);
    j.at("error").get_to(r.error);
    j.at("tolerance").get_to(r.tolerance);
    j.at("ambiguous_clustering").get_to(r.ambiguous_clustering);
    for (const auto& item : j.at("spectrum")) {
        EigenRecord e;
        e.value = item.at("value").get<double>();
        item.at("exact").get_to(e.exact);
        item.at("multiplicity").get_to(e.multiplicity);
        item.at("hadamard_dim").get_to(e.hadamard_dim);
        if (!item.at("constant_diagonal").is_null()) e.constant_diagonal = item.at("constant_diagonal").get<bool>();
        if (!item.at("full_partition").is_null()) e.full_partition = partition_from_json(item.at("full_partition"));
        r.spectrum.push_back(std::move(e));
    }
    if (!j.at("intersection_array").is_null()) {
        IntersectionArray a;
        j.at("intersection_array").at("b").get_to(a.b);
        j.at("intersection_array").at("c").get_to(a.c);
        r.intersection_array = std::move(a);
    }
    for (const auto& item : j.at("classifications"))
        r.classifications.push_back({item.at("kind").get<std::string>(), classification_from_json(item)});
    j.at("timing_ms").get_to(r.timing_ms);
}

void write_text(std::ostream& out, const AnalysisReport& r)
{
    out << "graph " << r.graph6 << "  n=" << r.n;
    if (r.regular_degree) out << " k=" << *r.regular_degree;
    out << (r.connected ? " connected" : " disconnected") << (r.bipartite ? " bipartite" : "") << '\n';
    out << "status " << r.status;
    if (!r.error.empty()) out << " (" << r.error << ")";
    out << '\n';
    if (r.spectrum.empty()) return;
    out << "eigenvalues (tolerance " << r.tolerance << (r.ambiguous_clustering ? ", ambiguous clustering" : "")
        << "):\n";
    for (const auto& e : r.spectrum) {
        out << "  ";
        if (e.exact)
            out << std::llround(e.value);
        else
            out << std::setprecision(12) << (std::abs(e.value) < r.tolerance ? 0.0 : e.value) << " (approx)";
        out << "^" << e.multiplicity << "  hadamard_dim=" << e.hadamard_dim;
        if (e.constant_diagonal) out << "  constant_diagonal=" << (*e.constant_diagonal ? "yes" : "no");
        if (e.full_partition) {
            const auto& p = *e.full_partition;
            out << "  full partition (a,b)=(" << p.a << "," << p.b << ") cells:";
            for (const auto& cell : p.cells) {
                out << " {";
                for (std::size_t i = 0; i < cell.size(); ++i) out << (i ? "," : "") << cell[i];
                out << "}";
            }
        }
        out << '\n';
    }
    if (r.intersection_array) {
        out << "distance-regular, intersection array (";
        for (std::size_t i = 0; i < r.intersection_array->b.size(); ++i) out << (i ? "," : "") << r.intersection_array->b[i];
        out << "; ";
        for (std::size_t i = 0; i < r.intersection_array->c.size(); ++i) out << (i ? "," : "") << r.intersection_array->c[i];
        out << ")\n";
    }
    for (const auto& c : r.classifications)
        out << c.kind << ": " << to_string(c.result.verdict) << " [" << c.result.witness << "]\n";
    out << "time " << std::fixed << std::setprecision(3) << r.timing_ms << " ms\n";
}

std::optional<json> census_record(const Graph& g, const std::string& graph6, const CensusOptions& options)
{
    const auto profile = basic_profile(g);
    json record{{"graph6", graph6}, {"n", g.order()}, {"connected", profile.connected}};
    record["k"] = profile.regular_degree ? json(*profile.regular_degree) : json(nullptr);
    if (!profile.connected || !profile.regular_degree) {
        if (!options.all) return std::nullopt;
        record["status"] = profile.connected ? "not_regular" : "not_connected";
        return record;
    }
    const auto spec = spectrum(g, options.tol);
    const auto census = full_indubitable_census(g, spec);
    if (census.full.empty() && !options.all) return std::nullopt;

    json partitions = json::array();
    for (const auto& [cls, report] : census.full) partitions.push_back(partition_json(to_record(report)));
    json verdicts = json::array();
    for (const auto& c : applicable_classifications(g, spec, profile, intersection_array(g)))
        verdicts.push_back({{"kind", c.kind}, {"verdict", std::string(to_string(c.result.verdict))}});
    record["classes"] = spec.classes.size();
    record["full_partitions"] = partitions;
    record["verdicts"] = verdicts;
    record["status"] = "ok";
    return record;
}

namespace {

struct LineResult {
    std::optional<std::string> output;
    std::string parse_error;
    bool analyzed = false;
    bool consistency_error = false;
    std::size_t n = 0, k = 0, full = 0;
};

LineResult process_line(const std::string& line, const CensusOptions& options)
{
    LineResult out;
    std::optional<Graph> g;
    try {
        g = parse_graph6(line);
    } catch (const Error& err) {
        out.parse_error = err.what();
        return out;
    }
    std::string g6 = line;
    while (!g6.empty() && (g6.back() == '\r' || g6.back() == ' ')) g6.pop_back();
    try {
        const auto record = census_record(*g, g6, options);
        const auto profile = basic_profile(*g);
        if (profile.connected && profile.regular_degree) {
            out.analyzed = true;
            out.n = g->order();
            out.k = *profile.regular_degree;
            out.full = record && record->contains("full_partitions") ? record->at("full_partitions").size() : 0;
        }
        if (record) out.output = record->dump();
    } catch (const Error& err) {
        out.consistency_error = true;
        out.output = json{{"graph6", g6}, {"n", g->order()}, {"status", "consistency_error"},
                          {"error", err.what()}}
                         .dump();
    }
    return out;
}

} // namespace

CensusSummary run_census(std::istream& in, std::ostream& out, std::ostream& log, const CensusOptions& options)
{
    CensusSummary summary;
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    const std::size_t batch = std::max<std::size_t>(1, options.batch);
    std::vector<std::string> lines;
    std::vector<std::size_t> line_numbers;
    std::size_t line_no = 0;

    auto flush = [&] {
        std::vector<LineResult> results(lines.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < lines.size(); i = next++) results[i] = process_line(lines[i], options);
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < std::min(jobs, lines.size()); ++t) pool.emplace_back(worker);
        }
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            if (!r.parse_error.empty()) {
                ++summary.parse_failures;
                log << "line " << line_numbers[i] << ": " << r.parse_error << '\n';
                continue;
            }
            if (r.consistency_error) {
                ++summary.consistency_errors;
                log << "line " << line_numbers[i] << ": consistency error\n";
            }
            if (r.analyzed) {
                ++summary.connected_regular;
                ++summary.counts[{r.n, r.k, r.full}];
            }
            if (r.output) {
                out << *r.output << '\n';
                ++summary.records;
            }
        }
        lines.clear();
        line_numbers.clear();
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++summary.lines;
        lines.push_back(line);
        line_numbers.push_back(line_no);
        if (lines.size() >= batch) flush();
    }
    flush();
    return summary;
}

json summary_json(const CensusSummary& s)
{
    json counts = json::array();
    for (const auto& [key, count] : s.counts) {
        const auto& [n, k, full] = key;
        counts.push_back({{"n", n}, {"k", k}, {"full_partitions", full}, {"graphs", count}});
    }
    return {{"lines", s.lines},
            {"parse_failures", s.parse_failures},
            {"connected_regular", s.connected_regular},
            {"records", s.records},
            {"consistency_errors", s.consistency_errors},
            {"counts", counts}};
}

} // namespace indub
