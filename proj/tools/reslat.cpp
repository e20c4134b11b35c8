#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reslat/enumerate.hpp"
#include "reslat/filters.hpp"
#include "reslat/graph.hpp"
#include "reslat/io.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::optional<reslat::ResiduatedLattice> load(const std::string &path, int &code)
{
    reslat::ParseResult parsed = reslat::parse_algebra_file(path);
    for (const auto &d : parsed.diagnostics)
        std::cerr << path << ": " << d << "\n";
    if (!parsed.report.ok)
        std::cerr << reslat::format_report(parsed.report, parsed.names);
    if (!parsed) {
        code = exit_negative;
        return std::nullopt;
    }
    code = exit_ok;
    return std::move(parsed.algebra);
}

int default_jobs()
{
    if (const char *env = std::getenv("RESLAT_JOBS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 1;
}

reslat::LabeledGraph build_graph(const reslat::ResiduatedLattice &a,
                                 const std::string &kind, bool nonzero_only)
{
    if (kind == "zerodiv")
        return reslat::zero_divisor_graph(a, !nonzero_only);
    return reslat::comaximal_filter_graph(a);
}

int cmd_validate(const std::string &file)
{
    int code;
    auto a = load(file, code);
    if (!a)
        return code;
    std::cout << "ok\n";
    return exit_ok;
}

int cmd_classify(const std::string &file)
{
    int code;
    auto a = load(file, code);
    if (!a)
        return code;
    reslat::ClassFlags f = reslat::classify(*a);
    auto put = [](const char *k, bool v) { std::cout << k << " " << (v ? "true" : "false") << "\n"; };
    put("prelinear", f.prelinear);
    put("divisible", f.divisible);
    put("involutive", f.involutive);
    put("idempotent", f.idempotent);
    put("mtl", f.mtl);
    put("bl", f.bl);
    put("godel", f.godel);
    put("mv", f.mv);
    put("heyting", f.heyting);
    return exit_ok;
}

std::string member_list(const reslat::ResiduatedLattice &a, const reslat::Filter &f)
{
    std::string out = "{";
    bool first = true;
    for (reslat::Elem e : f.elements()) {
        if (!first)
            out += ",";
        first = false;
        out += a.name(e);
    }
    return out + "}";
}

int cmd_filters(const std::string &file)
{
    int code;
    auto a = load(file, code);
    if (!a)
        return code;
    reslat::FilterLattice fl = reslat::all_filters(*a);
    for (size_t i = 0; i < fl.all.size(); ++i) {
        const auto &f = fl.all[i];
        std::cout << "F" << (i + 1) << " " << member_list(*a, f) << " <"
                  << a->name(reslat::idempotent_generator(*a, f)) << ">";
        for (int m : fl.maximal_indices)
            if (m == static_cast<int>(i))
                std::cout << " maximal";
        for (int p : fl.prime_indices)
            if (p == static_cast<int>(i))
                std::cout << " prime";
        if (fl.radical_index == static_cast<int>(i))
            std::cout << " radical";
        std::cout << "\n";
    }
    return exit_ok;
}

int cmd_graph(const std::string &file, const std::string &kind, bool nonzero_only,
              const std::string &dot_path)
{
    int code;
    auto a = load(file, code);
    if (!a)
        return code;
    reslat::LabeledGraph g = build_graph(*a, kind, nonzero_only);
    std::string dot = reslat::export_dot(g);
    if (dot_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(dot_path);
        if (!out) {
            std::cerr << "cannot write '" << dot_path << "'\n";
            return exit_usage;
        }
        out << dot;
        std::cout << "vertices " << g.n << " edges " << g.edge_count() << "\n";
    }
    return exit_ok;
}

int cmd_invariants(const std::string &file, const std::string &kind, bool nonzero_only)
{
    int code;
    auto a = load(file, code);
    if (!a)
        return code;
    reslat::FilterLattice fl = reslat::all_filters(*a);
    reslat::LabeledGraph g = kind == "zerodiv"
                                 ? reslat::zero_divisor_graph(*a, !nonzero_only)
                                 : reslat::comaximal_filter_graph(*a, fl);
    reslat::GraphInvariants inv = reslat::invariants(g, *a, fl);
    std::cout << reslat::invariants_json(inv) << "\n";
    return exit_ok;
}

int cmd_iso(const std::string &file1, const std::string &file2, bool graphs)
{
    int code;
    auto a = load(file1, code);
    if (!a)
        return code;
    auto b = load(file2, code);
    if (!b)
        return code;
    if (graphs) {
        reslat::LabeledGraph ga = reslat::comaximal_filter_graph(*a);
        reslat::LabeledGraph gb = reslat::comaximal_filter_graph(*b);
        auto map = reslat::graph_isomorphic(ga, gb);
        if (!map) {
            std::cout << "graphs not isomorphic\n";
            return exit_negative;
        }
        for (int v = 0; v < ga.n; ++v)
            std::cout << ga.labels[v] << " -> " << gb.labels[(*map)[v]] << "\n";
        return exit_ok;
    }
    auto map = reslat::are_isomorphic(*a, *b);
    if (!map) {
        std::cout << "not isomorphic\n";
        return exit_negative;
    }
    for (int x = 0; x < a->size(); ++x)
        std::cout << a->name(x) << " -> " << b->name((*map)[x]) << "\n";
    return exit_ok;
}

int cmd_enumerate(int size, const std::string &cls, int jobs, const std::string &catalog,
                  double budget)
{
    auto wanted = reslat::class_from_name(cls);
    if (!wanted) {
        std::cerr << "unknown class '" << cls << "'\n";
        return exit_usage;
    }
    reslat::EnumerateOptions opt;
    opt.jobs = jobs;
    opt.budget_seconds = budget;
    opt.progress = true;
    reslat::SizeCensus sc = reslat::enumerate_size(size, opt);
    if (sc.skipped) {
        std::cerr << "budget exceeded; size " << size << " skipped\n";
        return exit_budget;
    }
    std::ostream *out = &std::cout;
    std::ofstream file_out;
    if (!catalog.empty()) {
        file_out.open(catalog);
        if (!file_out) {
            std::cerr << "cannot write '" << catalog << "'\n";
            return exit_usage;
        }
        out = &file_out;
    }
    for (const auto &rec : sc.records)
        if (reslat::in_class(rec.flags, *wanted))
            *out << reslat::catalog_line(rec) << "\n";
    return exit_ok;
}

void print_census_table(const std::vector<reslat::CensusRow> &rows, bool nonnull)
{
    using reslat::AlgebraClass;
    static const AlgebraClass classes[] = {AlgebraClass::all, AlgebraClass::mtl,
                                           AlgebraClass::bl, AlgebraClass::heyting,
                                           AlgebraClass::godel, AlgebraClass::mv};
    std::cout << std::left << std::setw(9) << "class";
    for (const auto &row : rows)
        std::cout << std::right << std::setw(8) << row.size;
    std::cout << "\n";
    for (AlgebraClass c : classes) {
        std::cout << std::left << std::setw(9) << reslat::class_name(c);
        for (const auto &row : rows) {
            if (row.skipped) {
                std::cout << std::right << std::setw(8) << "-";
                continue;
            }
            long v = nonnull ? row.nonnull.at(c) : row.counts.at(c);
            std::cout << std::right << std::setw(8) << v;
        }
        std::cout << "\n";
    }
}

int cmd_census(int max_size, int jobs, double budget, const std::string &catalog)
{
    reslat::EnumerateOptions opt;
    opt.jobs = jobs;
    opt.budget_seconds = budget;
    opt.progress = true;
    reslat::CensusResult result = reslat::census(max_size, opt);

    if (!catalog.empty()) {
        std::ofstream out(catalog);
        if (!out) {
            std::cerr << "cannot write '" << catalog << "'\n";
            return exit_usage;
        }
        for (const auto &sc : result.sizes)
            for (const auto &rec : sc.records)
                out << reslat::catalog_line(rec) << "\n";
    }

    std::cout << "Residuated lattices per size\n";
    print_census_table(result.rows, false);
    std::cout << "\nNon-null comaximal filter graphs per size\n";
    print_census_table(result.rows, true);
    std::cout << "\nShape multisets (non-null comaximal graphs)\n";
    for (const auto &row : result.rows) {
        if (row.skipped) {
            std::cout << "size " << row.size << ": skipped (budget)\n";
            continue;
        }
        for (const auto &[cls, shapes] : row.shapes) {
            if (shapes.empty())
                continue;
            std::cout << "size " << row.size << " " << reslat::class_name(cls) << ":";
            for (const auto &[key, count] : shapes)
                std::cout << " " << reslat::shape_name_for_key(key) << ":" << count;
            std::cout << "\n";
        }
    }
    return result.budget_exceeded ? exit_budget : exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"finite residuated lattices: filters, comaximal filter graphs, census"};
    app.require_subcommand(1);

    std::string file, file2, kind = "comaximal", dot_path, catalog, cls = "all";
    bool nonzero_only = false, graphs = false;
    int size = 0, max_size = 0, jobs = default_jobs();
    double budget = 0;

    auto *validate = app.add_subcommand("validate", "check a .lat file against every axiom");
    validate->add_option("file", file)->required();

    auto *classify = app.add_subcommand("classify", "print subvariety flags");
    classify->add_option("file", file)->required();

    auto *filters = app.add_subcommand("filters", "list the filter lattice");
    filters->add_option("file", file)->required();

    auto *graph = app.add_subcommand("graph", "emit a graph as DOT");
    graph->add_option("file", file)->required();
    graph->add_option("--kind", kind)->check(CLI::IsMember({"comaximal", "zerodiv"}));
    graph->add_flag("--nonzero-only", nonzero_only, "drop 0 from the zero-divisor graph");
    graph->add_option("--dot", dot_path, "write DOT here instead of stdout");

    auto *invariants = app.add_subcommand("invariants", "exact graph invariants as JSON");
    invariants->add_option("file", file)->required();
    invariants->add_option("--kind", kind)->check(CLI::IsMember({"comaximal", "zerodiv"}));
    invariants->add_flag("--nonzero-only", nonzero_only);

    auto *iso = app.add_subcommand("iso", "decide algebra (or graph) isomorphism");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    iso->add_flag("--graphs", graphs, "compare comaximal filter graphs instead");

    auto *enumerate = app.add_subcommand("enumerate", "enumerate one size, emit catalog lines");
    enumerate->add_option("--size", size)->required();
    enumerate->add_option("--class", cls);
    enumerate->add_option("--jobs", jobs);
    enumerate->add_option("--catalog", catalog);
    enumerate->add_option("--budget", budget, "wall-clock seconds");

    auto *census = app.add_subcommand("census", "counts and shape multisets for sizes 1..N");
    census->add_option("--max", max_size)->required();
    census->add_option("--jobs", jobs);
    census->add_option("--budget", budget, "wall-clock seconds");
    census->add_option("--catalog", catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(file);
        if (classify->parsed())
            return cmd_classify(file);
        if (filters->parsed())
            return cmd_filters(file);
        if (graph->parsed())
            return cmd_graph(file, kind, nonzero_only, dot_path);
        if (invariants->parsed())
            return cmd_invariants(file, kind, nonzero_only);
        if (iso->parsed())
            return cmd_iso(file, file2, graphs);
        if (enumerate->parsed())
            return cmd_enumerate(size, cls, jobs, catalog, budget);
        if (census->parsed())
            return cmd_census(max_size, jobs, budget, catalog);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
