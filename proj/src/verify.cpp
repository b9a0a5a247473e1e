#include "indub/verify.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "indub/classify.hpp"
#include "indub/errors.hpp"
#include "indub/scheme.hpp"

namespace indub {

namespace {

struct Context {
    const Graph& g;
    const std::optional<Partition>& pi;
    double tol;
    ClaimResult& out;

    void check(std::string name, bool ok)
    {
        out.checks.emplace_back(std::move(name), ok);
        out.holds = out.holds && ok;
    }
    void not_applicable(std::string why)
    {
        out.applicable = false;
        out.note = std::move(why);
    }
};

std::string value_text(double x)
{
    const auto r = std::llround(x);
    if (std::abs(x - static_cast<double>(r)) < 1e-9) return std::to_string(r);
    return std::to_string(x);
}

bool is_degree_class(const Spectrum& spec, std::size_t c, std::size_t k)
{
    return std::abs(spec.classes[c].value - static_cast<double>(k)) <= spec.threshold;
}

void idempotent_roundtrip(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        if (is_degree_class(spec, c, k)) continue;
        const auto label = "lambda=" + value_text(spec.classes[c].value);
        const auto e = spectral_idempotent(ctx.g, spec, c);
        const auto report = partition_from_idempotent(ctx.g, spec, c);
        ctx.check(label + ": hadamard_dim==2 iff partition", (hadamard_dim(e, ctx.tol) == 2) == report.has_value());
        if (!report) continue;
        const auto rebuilt = idempotent_from_partition(ctx.g, spec, report->partition, spec.classes[c].value);
        ctx.check(label + ": reconstruction within 1e-8", max_abs(rebuilt.matrix - e.matrix) <= 1e-8);
    }
}

void two_valued_entries(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    const std::size_t v = ctx.g.order();
    bool any = false;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        if (is_degree_class(spec, c, k)) continue;
        const auto d = two_valued_decomposition(spectral_idempotent(ctx.g, spec, c), v, ctx.tol);
        if (!d) continue;
        any = true;
        const auto label = "lambda=" + value_text(spec.classes[c].value);
        const double m = static_cast<double>(d->rank);
        ctx.check(label + ": theta0 = m/v", std::abs(d->theta0 - m / static_cast<double>(v)) < 1e-10);
        ctx.check(label + ": theta1 = -1/v", std::abs(d->theta1 + 1.0 / static_cast<double>(v)) < 1e-10);
        bool equal = d->classes.size() == d->rank + 1 && v % (d->rank + 1) == 0;
        for (const auto& cls : d->classes) equal = equal && cls.size() == v / (d->rank + 1);
        ctx.check(label + ": classes of size v/(m+1)", equal);
    }
    if (!any) ctx.out.note = "no two-valued idempotent";
}

void bipartite_minus_k(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto profile = basic_profile(ctx.g);
    if (!profile.bipartition) return ctx.not_applicable("graph is not bipartite");
    const auto spec = spectrum(ctx.g, ctx.tol);
    const auto c = spec.find_class(-static_cast<double>(k));
    ctx.check("-k is an eigenvalue", c.has_value());
    if (!c) return;
    const auto report = partition_from_idempotent(ctx.g, spec, *c);
    ctx.check("full partition at -k", report.has_value());
    if (!report) return;
    ctx.check("two cells", report->partition.cell_count() == 2);
    ctx.check("parameters (0,k)", report->params == IndubitableParams{0, static_cast<std::int64_t>(k)});

    Permutation order(profile.bipartition->first.begin(), profile.bipartition->first.end());
    order.insert(order.end(), profile.bipartition->second.begin(), profile.bipartition->second.end());
    const auto v = static_cast<Eigen::Index>(ctx.g.order());
    const RealMatrix two_i_minus_j = 2.0 * RealMatrix::Identity(2, 2) - RealMatrix::Ones(2, 2);
    const RealMatrix expected = kron(two_i_minus_j, RealMatrix(RealMatrix::Ones(v / 2, v / 2))) /
                                static_cast<double>(v);
    const auto e = spectral_idempotent(ctx.g, spec, *c);
    ctx.check("E_{-k} block form within 1e-10",
              profile.bipartition->first.size() * 2 == ctx.g.order() &&
                  max_abs(RealMatrix(permute_symmetric(e.matrix, order)) - expected) <= 1e-10);
}

void no_zero_partition(Context& ctx)
{
    require_connected_regular(ctx.g);
    if (!basic_profile(ctx.g).bipartition) return ctx.not_applicable("graph is not bipartite");
    const auto spec = spectrum(ctx.g, ctx.tol);
    const auto c = spec.find_class(0.0);
    if (!c) return ctx.not_applicable("0 is not an eigenvalue");
    const auto e = spectral_idempotent(ctx.g, spec, *c);
    ctx.check("no full partition at 0", !partition_from_idempotent(ctx.g, spec, *c).has_value());
    ctx.check("E_0 has at least three entry values", entry_classes(e.matrix, ctx.tol).values.size() >= 3);
}

void simple_eigenvalue_diagonal(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    bool any = false;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        if (spec.classes[c].multiplicity != 1 || is_degree_class(spec, c, k)) continue;
        any = true;
        const auto e = spectral_idempotent(ctx.g, spec, c);
        const bool constant = constant_diagonal_check(e, ctx.tol);
        const bool full = partition_from_idempotent(ctx.g, spec, c).has_value();
        ctx.check("lambda=" + value_text(spec.classes[c].value) + ": full iff constant diagonal (" +
                      (constant ? "constant" : "not constant") + ")",
                  constant == full);
    }
    if (!any) ctx.not_applicable("no simple eigenvalue other than the degree");
}

void partition_uniqueness(Context& ctx)
{
    require_connected_regular(ctx.g);
    const auto params = indubitable_params(ctx.g, *ctx.pi);
    if (!params) return ctx.not_applicable("partition is not indubitable");
    const auto spec = spectrum(ctx.g, ctx.tol);
    const auto lambda = static_cast<double>(params->a - params->b);
    const auto c = spec.find_class(lambda);
    ctx.check("a - b is an eigenvalue", c.has_value());
    if (!c) return;
    if (spec.classes[*c].multiplicity + 1 != ctx.pi->cell_count())
        return ctx.not_applicable("partition is not full");
    const auto report = partition_from_idempotent(ctx.g, spec, *c);
    ctx.check("idempotent yields a partition", report.has_value());
    if (report) ctx.check("same partition as the idempotent", report->partition == *ctx.pi);
}

void parameter_identities(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    const auto census = full_indubitable_census(ctx.g, spec);
    if (census.full.empty()) ctx.out.note = "no full indubitable partition";
    for (const auto& [c, report] : census.full) {
        const auto label = "lambda=" + std::to_string(report.exact_eigenvalue);
        const auto r = static_cast<std::int64_t>(report.partition.cell_count()) - 1;
        const auto [a, b] = predicted_params(static_cast<std::int64_t>(k), spec.classes[c].value, r);
        ctx.check(label + ": a predicted", std::abs(a - static_cast<double>(report.params.a)) <= 1e-8);
        ctx.check(label + ": b predicted", std::abs(b - static_cast<double>(report.params.b)) <= 1e-8);
        ctx.check(label + ": (m+1) | v", ctx.g.order() % (report.multiplicity + 1) == 0);
    }
}

void two_partition_structure(Context& ctx)
{
    require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    const auto census = full_indubitable_census(ctx.g, spec);
    if (census.full.size() < 2) return ctx.not_applicable("fewer than two full indubitable partitions");
    for (auto i = census.full.begin(); i != census.full.end(); ++i) {
        for (auto j = std::next(i); j != census.full.end(); ++j) {
            const auto label = std::to_string(i->second.exact_eigenvalue) + "," +
                               std::to_string(j->second.exact_eigenvalue);
            const auto r = two_partition_analysis(ctx.g, spec, i->first, j->first);
            ctx.check(label + ": analysis ran", r.has_value());
            if (!r) continue;
            ctx.check(label + ": (m+1)(m'+1) | v", ctx.g.order() % ((r->m1 + 1) * (r->m2 + 1)) == 0);
            ctx.check(label + ": KK' = lJ", r->product_identity);
            ctx.check(label + ": block forms", r->block_form_verified);
        }
    }
}

void record_classification(Context& ctx, const Classification& c, const std::string& prefix)
{
    for (const auto& [name, ok] : c.checks) ctx.out.checks.emplace_back(prefix + name, ok);
    ctx.check(prefix + "witness verified", check_witness(ctx.g, c));
    if (!ctx.out.note.empty()) ctx.out.note += "; ";
    ctx.out.note += prefix + std::string(to_string(c.verdict));
}

void four_eigenvalue_grid(Context& ctx)
{
    require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    if (spec.classes.size() != 4) return ctx.not_applicable("graph does not have four eigenvalues");
    const auto c = classify_four_eigenvalue(ctx.g, spec);
    record_classification(ctx, c, "");
    if (c.verdict == Verdict::grid || c.verdict == Verdict::grid_complement)
        ctx.check("cell counts differ", c.shape.size() == 2 && c.shape[0] != c.shape[1]);
}

void bipartite_five_eigenvalue(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    if (!basic_profile(ctx.g).bipartition || spec.classes.size() != 5)
        return ctx.not_applicable("graph is not bipartite with five eigenvalues");
    const auto c = classify_bipartite_five_eigenvalue(ctx.g, spec);
    record_classification(ctx, c, "");
    if (c.verdict == Verdict::bipartite_double_multipartite)
        ctx.check("lambda = -k/m", c.eigenvalue && *c.eigenvalue * static_cast<std::int64_t>(c.multiplicity) ==
                                                      -static_cast<std::int64_t>(k));
}

void distance_regular_branches(Context& ctx)
{
    const auto k = require_connected_regular(ctx.g);
    const auto array = intersection_array(ctx.g);
    if (!array || k <= 2 || array->diameter() < 2)
        return ctx.not_applicable("not distance-regular with valency > 2 and diameter >= 2");
    const auto spec = spectrum(ctx.g, ctx.tol);
    const auto all = classify_drg_full_partition(ctx.g, spec);
    for (const auto& c : all)
        record_classification(ctx, c, c.eigenvalue ? "lambda=" + std::to_string(*c.eigenvalue) + ": " : "");

    if (basic_profile(ctx.g).bipartition && spec.classes.size() == 4) {
        const auto census = full_indubitable_census(ctx.g, spec);
        for (const auto& [c, report] : census.full) {
            if (report.exact_eigenvalue == -static_cast<std::int64_t>(k)) continue;
            const auto m = static_cast<std::int64_t>(report.multiplicity);
            const IntersectionArray expected{{m, m - 1, 1}, {1, m - 1, m}};
            ctx.check("array (m,m-1,1;1,m-1,m)", *array == expected);
        }
    }
}

void three_class_scheme(Context& ctx)
{
    require_connected_regular(ctx.g);
    const auto spec = spectrum(ctx.g, ctx.tol);
    const bool full = three_class_detection(ctx.g, spec, *ctx.pi);
    ctx.out.checks.emplace_back("full", full);
    ctx.out.note = full ? "full, 3-class scheme closes" : "not full, 3-class basis does not close";
}

using Runner = std::function<void(Context&)>;

struct Claim {
    ClaimInfo info;
    Runner run;
};

const std::vector<Claim>& claims()
{
    static const std::vector<Claim> table{
        {{"idempotent-roundtrip", "two entry values iff full partition; partition rebuilds E", false},
         idempotent_roundtrip},
        {{"two-valued-entries", "two-valued idempotents have entries m/v, -1/v and equal classes", false},
         two_valued_entries},
        {{"bipartite-minus-k", "bipartite graphs: full (0,k) partition at -k and its block form", false},
         bipartite_minus_k},
        {{"no-zero-partition", "bipartite graphs: no full partition at eigenvalue 0", false}, no_zero_partition},
        {{"simple-eigenvalue-diagonal", "simple eigenvalues: full iff constant diagonal", false},
         simple_eigenvalue_diagonal},
        {{"partition-uniqueness", "a full indubitable partition equals the one read from E", true},
         partition_uniqueness},
        {{"parameter-identities", "a and b follow from k, lambda and the cell count", false},
         parameter_identities},
        {{"two-partition-structure", "two full partitions meet in equal cells with Kronecker block forms", false},
         two_partition_structure},
        {{"four-eigenvalue-grid", "four eigenvalues: grid conditions hold together or not at all", false},
         four_eigenvalue_grid},
        {{"bipartite-five-eigenvalue", "bipartite with five eigenvalues: double of complete multipartite", false},
         bipartite_five_eigenvalue},
        {{"distance-regular-branches", "each full partition of a DRG matches a known branch", false},
         distance_regular_branches},
        {{"three-class-scheme", "a (0,b) partition is full iff {I, K-I, A, J-K-A} closes", true},
         three_class_scheme},
    };
    return table;
}

} // namespace

const std::vector<ClaimInfo>& claim_catalogue()
{
    static const std::vector<ClaimInfo> out = [] {
        std::vector<ClaimInfo> v;
        for (const auto& c : claims()) v.push_back(c.info);
        return v;
    }();
    return out;
}

ClaimResult verify_claim(std::string_view claim, const Graph& g, const std::optional<Partition>& pi,
                         double tol)
{
    const Claim* found = nullptr;
    for (const auto& c : claims())
        if (c.info.name == claim) found = &c;
    if (!found) throw PreconditionError("unknown claim '" + std::string(claim) + "'");
    if (found->info.needs_partition && !pi)
        throw PreconditionError("claim '" + std::string(claim) + "' needs a partition");

    ClaimResult out;
    out.claim = std::string(claim);
    Context ctx{g, pi, tol, out};
    try {
        found->run(ctx);
    } catch (const PreconditionError& err) {
        out.applicable = false;
        out.note = err.what();
    } catch (const ConsistencyError& err) {
        out.holds = false;
        out.note = err.what();
    } catch (const StructuralViolation& err) {
        out.holds = false;
        out.note = err.what();
    }
    if (!out.applicable) out.holds = false;
    return out;
}

} // namespace indub
