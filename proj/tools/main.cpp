#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "distinguo/bounds.hpp"
#include "distinguo/colouring.hpp"
#include "distinguo/construct.hpp"
#include "distinguo/dot.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/oracle.hpp"
#include "distinguo/verify.hpp"

namespace {

using namespace distinguo;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

struct GraphInput {
    std::string file;
    std::string family;
    std::string format = "edge-list";

    void add_flags(CLI::App* cmd, bool required) {
        auto* in = cmd->add_option("--in", file, "graph file");
        auto* fam = cmd->add_option("--family", family,
                                    "family spec, e.g. star:9 or complete_bipartite:4,4");
        cmd->add_option("--format", format, "input format: edge-list or graph6")
            ->check(CLI::IsMember({"edge-list", "graph6"}));
        in->excludes(fam);
        fam->excludes(in);
        if (required) {
            // one of the two must be present; checked in load()
        }
    }

    bool present() const { return !file.empty() || !family.empty(); }

    std::string id() const { return !family.empty() ? family : file; }

    SimpleGraph load() const {
        if (!family.empty())
            return parse_family_spec(family);
        if (file.empty())
            throw InputError("no input: pass --in or --family");
        return parse_graph(read_file(file),
                           format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
    }
};

ConstraintSet constraints_from(bool type1, bool type2, bool distinguishing) {
    if (type1 == type2)
        throw InputError("pick exactly one of --type1 / --type2");
    return type1 ? ConstraintSet::type1(distinguishing) : ConstraintSet::type2(distinguishing);
}

bool graph_is_complete(const SimpleGraph& g) {
    const long n = g.vertex_count();
    return 2L * g.edge_count() == n * (n - 1);
}

int complete_order_for(const GraphInput& input) {
    SimpleGraph g = input.load();
    if (!graph_is_complete(g))
        throw InputError("this algorithm needs a complete graph input");
    return g.vertex_count();
}

int run_gen(const GraphInput& input, const std::string& out, const std::string& out_format) {
    SimpleGraph g = input.load();
    write_output(out, out_format == "graph6" ? emit_graph6(g) + "\n" : emit_edge_list(g));
    return kExitOk;
}

int run_colour(const GraphInput& input, const std::string& algo, std::optional<int> chi,
               const std::string& out, const std::string& trace_path) {
    ArcColouring coloured = [&]() {
        if (algo == "distinguishing" || algo == "thm4") {
            ConstructionTrace trace;
            ArcColouring c = colour_distinguishing_type1(input.load(), &trace);
            if (!trace_path.empty())
                write_output(trace_path, emit_trace(trace));
            return c;
        }
        if (!trace_path.empty())
            throw InputError("--trace only applies to --algo distinguishing");
        if (algo == "minimum") {
            SimpleGraph g = input.load();
            if (g.vertex_count() > 16 && !chi)
                std::cerr << "note: n > 16, chromatic number taken from a greedy "
                             "colouring; the palette size is an upper bound\n";
            return colour_type1_minimum(g, chi);
        }
        if (algo == "family") {
            if (input.family.empty())
                throw InputError("--algo family needs --family input");
            SimpleGraph g = parse_family_spec(input.family); // validates the family string
            const auto name = input.family.substr(0, input.family.find(':'));
            const int param = g.vertex_count();
            if (name == "path")
                return colour_family_distinguishing(FamilyKind::Path, param);
            if (name == "cycle")
                return colour_family_distinguishing(FamilyKind::Cycle, param);
            if (name == "star")
                return colour_family_distinguishing(FamilyKind::Star, param - 1);
            if (name == "complete")
                return colour_family_distinguishing(FamilyKind::Complete, param);
            throw InputError("--algo family supports path, cycle, star, complete");
        }
        if (algo == "type2")
            return colour_type2_complete(complete_order_for(input));
        if (algo == "type2-distinguishing")
            return colour_distinguishing_type2_complete(complete_order_for(input));
        throw InputError("unknown algorithm '" + algo + "'");
    }();
    write_output(out, emit_colouring(coloured));
    return kExitOk;
}

int run_verify(const std::string& file, bool type1, bool type2, bool distinguishing,
               std::optional<std::uint64_t> budget) {
    const ConstraintSet cs = constraints_from(type1, type2, distinguishing);
    ArcColouring c = parse_colouring(read_file(file));
    if (!c.total())
        throw InputError("colouring file leaves arcs uncoloured");
    bool ok = true;
    if (cs.forbid_two_cycle)
        for (auto [u, v] : monochromatic_two_cycles(c)) {
            std::cout << "monochromatic 2-cycle: " << u + 1 << " <-> " << v + 1 << "\n";
            ok = false;
        }
    if (cs.forbid_two_path)
        for (auto [u, v, w] : monochromatic_two_paths(c)) {
            std::cout << "monochromatic 2-path: " << u + 1 << " -> " << v + 1 << " -> "
                      << w + 1 << "\n";
            ok = false;
        }
    if (cs.require_distinguishing) {
        auto verdict = is_distinguishing(c, budget.value_or(default_node_budget()));
        if (!verdict.exact)
            throw BudgetError("distinguishing check exceeded its node budget (" +
                              std::to_string(verdict.nodes) + " nodes)");
        if (!verdict.distinguishing) {
            std::cout << "colour-preserving automorphism:";
            for (int v = 0; v < c.graph().vertex_count(); ++v)
                std::cout << " " << v + 1 << "->" << verdict.witness->image[v] + 1;
            std::cout << "\n";
            ok = false;
        }
    }
    std::cout << (ok ? "ok" : "violations found") << "\n";
    return ok ? kExitOk : kExitViolation;
}

int run_index(const GraphInput& input, bool type1, bool type2, bool distinguishing,
              std::optional<std::uint64_t> budget, bool oversize) {
    const ConstraintSet cs = constraints_from(type1, type2, distinguishing);
    SearchOptions opts;
    if (budget)
        opts.node_budget = *budget;
    opts.allow_oversize = oversize;
    auto result = exact_index(input.load(), cs, opts);
    std::cout << result.k << "\n";
    if (!result.proven_optimal)
        std::cerr << "note: some smaller palette only exceeded its budget; " << result.k
                  << " is an upper bound\n";
    return kExitOk;
}

const char* status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found:
        return "found";
    case SearchStatus::ProvenImpossible:
        return "proven-impossible";
    case SearchStatus::BudgetExceeded:
        return "budget-exceeded";
    }
    return "?";
}

int run_oracle_search(const GraphInput& input, int k, bool type1, bool type2,
                      bool distinguishing, const std::string& certificate,
                      std::optional<std::uint32_t> seed, std::optional<std::uint64_t> budget,
                      bool oversize) {
    const ConstraintSet cs = constraints_from(type1, type2, distinguishing);
    SearchOptions opts;
    if (budget)
        opts.node_budget = *budget;
    opts.value_seed = seed;
    opts.allow_oversize = oversize;
    auto result = search_colouring(input.load(), k, cs, opts);
    std::string cert_cell = "-";
    if (result.status == SearchStatus::Found && !certificate.empty()) {
        write_output(certificate, emit_colouring(*result.colouring));
        cert_cell = certificate;
    }
    std::cout << input.id() << "," << cs.label() << "," << k << "," << cert_cell << ","
              << status_name(result.status) << "\n";
    switch (result.status) {
    case SearchStatus::Found:
        return kExitOk;
    case SearchStatus::ProvenImpossible:
        return kExitViolation;
    case SearchStatus::BudgetExceeded:
        return kExitUsage;
    }
    return kExitUsage;
}

int run_oracle_conjecture(int n_min, int n_max, const std::string& out,
                          std::optional<std::uint64_t> budget) {
    std::ostringstream csv;
    csv << "graph-id,constraint-set,k,certificate-file,proof-status\n";
    bool all_agree = true;
    for (int n = n_min; n <= n_max; ++n) {
        SearchOptions opts;
        if (budget)
            opts.node_budget = *budget;
        opts.allow_oversize = true;
        auto lhs = exact_index(complete_graph(n), ConstraintSet::type2(true), opts);
        csv << "K" << n << "," << ConstraintSet::type2(true).label() << "," << lhs.k << ",-,"
            << (lhs.proven_optimal ? "proven" : "upper-bound") << "\n";
        const int q = (n + 1) / 2;
        int rhs_k;
        std::string rhs_status = "proven";
        if (q >= 2) {
            auto rhs = exact_index(complete_graph(q), ConstraintSet::type2(false), opts);
            rhs_k = rhs.k;
            if (!rhs.proven_optimal)
                rhs_status = "upper-bound";
            csv << "K" << q << "," << ConstraintSet::type2(false).label() << "," << rhs.k
                << ",-," << rhs_status << "\n";
        } else {
            rhs_k = 0; // a single vertex has no arcs
            csv << "K1," << ConstraintSet::type2(false).label() << ",0,-,proven\n";
        }
        const bool agree = lhs.k == rhs_k + 1;
        const bool decided = lhs.proven_optimal && rhs_status == "proven";
        all_agree = all_agree && (agree || !decided);
        csv << "# conjecture n=" << n << " lhs=" << lhs.k << " rhs=" << rhs_k + 1
            << " agreement=" << (decided ? (agree ? "yes" : "no") : "unknown") << "\n";
    }
    write_output(out, csv.str());
    return all_agree ? kExitOk : kExitViolation;
}

int run_dot(const GraphInput& input, const std::string& colouring_file,
            std::optional<int> highlight, const std::string& out) {
    std::string text;
    if (!colouring_file.empty()) {
        ArcColouring c = parse_colouring(read_file(colouring_file));
        if (input.present() && !(c.graph() == input.load()))
            throw InputError("--colouring does not match the graph input");
        text = dot_emit(c.graph(), &c, highlight);
    } else {
        if (highlight)
            throw InputError("--highlight needs --colouring");
        text = dot_emit(input.load());
    }
    write_output(out, text);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper and distinguishing arc colourings of symmetric digraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph and write it out");
    GraphInput gen_in;
    std::string gen_out, gen_format = "edge-list";
    gen_in.add_flags(gen, true);
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--out-format", gen_format, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));

    // colour
    auto* colour = app.add_subcommand("colour", "run a constructor, write a colouring file");
    GraphInput colour_in;
    std::string algo = "distinguishing", colour_out, trace_path;
    std::optional<int> chi;
    colour_in.add_flags(colour, true);
    colour->add_option("--algo", algo,
                       "distinguishing (alias thm4), minimum, family, type2, "
                       "type2-distinguishing");
    colour->add_option("--chi", chi, "chromatic number hint for --algo minimum");
    colour->add_option("--out", colour_out, "output colouring file (default stdout)");
    colour->add_option("--trace", trace_path, "write a construction trace");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a colouring file");
    std::string verify_file;
    bool v_type1 = false, v_type2 = false, v_dist = false;
    std::optional<std::uint64_t> v_budget;
    verify->add_option("file", verify_file, "colouring file")->required();
    verify->add_flag("--type1", v_type1, "forbid monochromatic 2-cycles and 2-paths");
    verify->add_flag("--type2", v_type2, "forbid monochromatic 2-paths only");
    verify->add_flag("--distinguishing", v_dist, "require a distinguishing colouring");
    verify->add_option("--budget", v_budget, "node budget for the automorphism search");

    // index
    auto* index = app.add_subcommand("index", "exact chromatic index by exhaustive search");
    GraphInput index_in;
    bool i_type1 = false, i_type2 = false, i_dist = false, i_oversize = false;
    std::optional<std::uint64_t> i_budget;
    index_in.add_flags(index, true);
    index->add_flag("--type1", i_type1, "type I constraints");
    index->add_flag("--type2", i_type2, "monochromatic 2-paths only");
    index->add_flag("--distinguishing", i_dist, "require distinguishing");
    index->add_option("--budget", i_budget, "node budget per search");
    index->add_flag("--allow-oversize", i_oversize, "waive the arc-count limits");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "oracle experiments");
    oracle->require_subcommand(1);
    auto* osearch = oracle->add_subcommand("search", "search for one colouring, emit CSV");
    GraphInput os_in;
    int os_k = 0;
    bool os_type1 = false, os_type2 = false, os_dist = false, os_oversize = false;
    std::string os_cert;
    std::optional<std::uint32_t> os_seed;
    std::optional<std::uint64_t> os_budget;
    os_in.add_flags(osearch, true);
    osearch->add_option("--k", os_k, "palette size")->required();
    osearch->add_flag("--type1", os_type1, "type I constraints");
    osearch->add_flag("--type2", os_type2, "monochromatic 2-paths only");
    osearch->add_flag("--distinguishing", os_dist, "require distinguishing");
    osearch->add_option("--certificate", os_cert, "write the found colouring here");
    osearch->add_option("--seed", os_seed, "randomised value order seed");
    osearch->add_option("--budget", os_budget, "node budget");
    osearch->add_flag("--allow-oversize", os_oversize, "waive the arc-count limits");

    auto* oconj = oracle->add_subcommand(
        "conjecture", "compare the type-2 distinguishing index of K_n with the "
                      "type-2 index of the half-order complete graph plus one");
    int oc_min = 3, oc_max = 7;
    std::string oc_out;
    std::optional<std::uint64_t> oc_budget;
    oconj->add_option("--min", oc_min, "smallest n");
    oconj->add_option("--max", oc_max, "largest n");
    oconj->add_option("--out", oc_out, "CSV output file (default stdout)");
    oconj->add_option("--budget", oc_budget, "node budget per search");

    // dot
    auto* dot = app.add_subcommand("dot", "emit DOT for a graph or coloured digraph");
    GraphInput dot_in;
    std::string dot_colouring, dot_out;
    std::optional<int> dot_highlight;
    dot_in.add_flags(dot, false);
    dot->add_option("--colouring", dot_colouring, "colouring file");
    dot->add_option("--highlight", dot_highlight, "emit only arcs of this colour");
    dot->add_option("--out", dot_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return run_gen(gen_in, gen_out, gen_format);
        if (colour->parsed())
            return run_colour(colour_in, algo, chi, colour_out, trace_path);
        if (verify->parsed())
            return run_verify(verify_file, v_type1, v_type2, v_dist, v_budget);
        if (index->parsed())
            return run_index(index_in, i_type1, i_type2, i_dist, i_budget, i_oversize);
        if (oracle->parsed()) {
            if (osearch->parsed())
                return run_oracle_search(os_in, os_k, os_type1, os_type2, os_dist, os_cert,
                                         os_seed, os_budget, os_oversize);
            return run_oracle_conjecture(oc_min, oc_max, oc_out, oc_budget);
        }
        if (dot->parsed())
            return run_dot(dot_in, dot_colouring, dot_highlight, dot_out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
