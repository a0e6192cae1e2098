#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eic/construct.hpp"
#include "eic/ei.hpp"
#include "eic/io.hpp"
#include "eic/search.hpp"
#include "eic/sections.hpp"
#include "eic/verify.hpp"

namespace {

using namespace eic;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string format_file(const HypergraphFile& file, const std::string& format) {
    return format == "json" ? serialize_json(file) + "\n" : serialize_text(file);
}

HypergraphFile to_file(const ConstructionOutput& out) {
    HypergraphFile file;
    file.hypergraph = out.hypergraph;
    if (!out.cycle.is_canonical()) file.cycle = out.cycle;
    return file;
}

int run_construct(int n, const std::string& variant, bool unchecked,
                  const std::string& format, const std::string& out_path) {
    ConstructionOutput out;
    if (variant == "hypercycle3") {
        out = strong_hypercycle3(n);
    } else if (variant == "auto" && !unchecked) {
        out = construct(n);
    } else {
        EvenVariant v = variant == "lemma2" ? EvenVariant::lemma2
                       : variant == "lemma1" ? EvenVariant::lemma1
                                             : EvenVariant::automatic;
        out = construct_even(n, v, unchecked);
    }
    std::string text = "# recipe: " + to_string(out.recipe) +
                       (unchecked ? " (unchecked)" : "") + "\n";
    if (format == "json") text.clear();  // JSON has no comment syntax
    text += format_file(to_file(out), format);
    write_output(text, out_path);
    return 0;
}

int run_ei(const std::string& in_path, const std::string& format,
           const std::string& out_path) {
    HypergraphFile input = load_file(in_path);
    HypergraphFile result;
    result.hypergraph = edge_intersection_hypergraph(input.hypergraph);
    result.cycle = input.cycle;
    write_output(format_file(result, format), out_path);
    return 0;
}

CycleOrder pick_cycle(const HypergraphFile& file, const std::string& mode) {
    if (mode == "from-file") {
        if (!file.cycle) throw CLI::ValidationError("--cycle from-file needs a cycle line");
        return *file.cycle;
    }
    return CycleOrder::canonical(file.hypergraph.n);
}

int run_verify(const std::string& in_path, const std::string& cycle_mode) {
    HypergraphFile input = load_file(in_path);
    VerificationReport report =
        verify_cycle_realization(input.hypergraph, pick_cycle(input, cycle_mode));
    std::cout << to_string(report);
    return report.is_cycle_realization ? 0 : 1;
}

int run_certify(const std::string& in_path, const std::string& cycle_mode) {
    HypergraphFile input = load_file(in_path);
    std::cout << render_certificate(input.hypergraph, pick_cycle(input, cycle_mode));
    return 0;
}

int run_kprofile(const std::string& in_path) {
    HypergraphFile input = load_file(in_path);
    CycleOrder order = input.cycle_or_canonical();
    for (size_t i = 0; i < input.hypergraph.edges.size(); ++i) {
        const Hyperedge& e = input.hypergraph.edges[i];
        std::cout << 'e' << (i + 1) << ": sections {";
        std::vector<int> profile = section_profile(e, order);
        for (size_t p = 0; p < profile.size(); ++p)
            std::cout << (p ? "," : "") << profile[p];
        std::cout << "} k_e = " << half_generation_count(e, order) << '\n';
    }
    return 0;
}

int run_search_min(int n, int max_edges, std::optional<int> uniform_k, bool no_symmetry,
                   std::optional<long long> budget, const std::string& out_path) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.max_edges = max_edges;
    cfg.uniform_k = uniform_k;
    cfg.symmetry_reduction = !no_symmetry;
    cfg.node_budget = budget;
    SearchResult result = min_realization(cfg);

    std::cout << "nodes = " << result.nodes_explored << '\n';
    std::cout << "exhausted = " << (result.exhausted ? "yes" : "no") << '\n';
    if (!result.minimum) {
        std::cout << "minimum = unknown\n";
        return 1;
    }
    std::cout << "minimum = " << *result.minimum << '\n';
    std::cout << "witnesses = " << result.witnesses.size() << '\n';
    for (const Hyperedge& e : result.witnesses.front().edges)
        std::cout << "  " << to_string(e) << '\n';
    if (!out_path.empty())
        write_output(serialize_text({result.witnesses.front(), std::nullopt}), out_path);
    return 0;
}

// Exhibits the two known failure modes of applying the wrong even-n variant.
int run_remarks() {
    bool ok = true;
    auto show = [&ok](const ConstructionOutput& out, int a, int b,
                      const Hyperedge& expected) {
        Hyperedge inter;
        const Hyperedge& ea = out.hypergraph.edges[a - 1];
        const Hyperedge& eb = out.hypergraph.edges[b - 1];
        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                              std::back_inserter(inter));
        std::cout << to_string(out.recipe) << " n=" << out.hypergraph.n << ": e" << a
                  << " ∩ e" << b << " = " << to_string(inter);
        if (inter == expected) {
            std::cout << " (chord reproduced)\n";
        } else {
            std::cout << " (expected " << to_string(expected) << ")\n";
            ok = false;
        }
    };
    show(construct_even(24, EvenVariant::lemma2, true), 2, 7, {2, 13});
    show(construct_even(16, EvenVariant::lemma1, true), 1, 2, {1, 2, 3});
    show(construct_even(16, EvenVariant::lemma2, true), 1, 3, {1, 2, 3});
    return ok ? 0 : 1;
}

int run_relabel(const std::string& in_path, const std::string& format,
                const std::string& out_path) {
    HypergraphFile input = load_file(in_path);
    write_output(format_file(relabel_canonical(input), format), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraphs whose edge intersection hypergraph is a cycle"};
    app.require_subcommand(1);

    int n = 0, max_edges = 0;
    std::string variant = "auto", format = "text", out_path, in_path;
    std::string cycle_mode = "canonical";
    bool unchecked = false, no_symmetry = false;
    std::optional<int> uniform_k;
    std::optional<long long> budget;

    auto* c_construct = app.add_subcommand("construct", "build a cycle realization");
    c_construct->add_option("--n", n, "number of cycle vertices")->required();
    c_construct->add_option("--variant", variant)
        ->check(CLI::IsMember({"auto", "lemma1", "lemma2", "hypercycle3"}));
    c_construct->add_flag("--unchecked", unchecked, "skip verification (even-n variants)");
    c_construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c_construct->add_option("--out", out_path);

    auto* c_ei = app.add_subcommand("ei", "compute the edge intersection hypergraph");
    c_ei->add_option("--in", in_path)->required();
    c_ei->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c_ei->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "check EI(H) against a cycle");
    c_verify->add_option("--in", in_path)->required();
    c_verify->add_option("--cycle", cycle_mode)
        ->check(CLI::IsMember({"canonical", "from-file"}));

    auto* c_certify = app.add_subcommand("certify", "print the generating intersections");
    c_certify->add_option("--in", in_path)->required();
    c_certify->add_option("--cycle", cycle_mode)
        ->check(CLI::IsMember({"canonical", "from-file"}));

    auto* c_kprofile = app.add_subcommand("kprofile", "per-hyperedge section profile");
    c_kprofile->add_option("--in", in_path)->required();

    auto* c_search = app.add_subcommand("search-min", "exhaustive minimum search");
    c_search->add_option("--n", n)->required();
    c_search->add_option("--max-edges", max_edges);
    c_search->add_option("--uniform", uniform_k);
    c_search->add_flag("--no-symmetry", no_symmetry);
    c_search->add_option("--budget", budget);
    c_search->add_option("--out", out_path);

    auto* c_remarks = app.add_subcommand("remarks", "reproduce the known counterexamples");

    auto* c_relabel = app.add_subcommand("relabel-canonical", "rename to the canonical cycle");
    c_relabel->add_option("--in", in_path)->required();
    c_relabel->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c_relabel->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_construct))
            return run_construct(n, variant, unchecked, format, out_path);
        if (app.got_subcommand(c_ei)) return run_ei(in_path, format, out_path);
        if (app.got_subcommand(c_verify)) return run_verify(in_path, cycle_mode);
        if (app.got_subcommand(c_certify)) return run_certify(in_path, cycle_mode);
        if (app.got_subcommand(c_kprofile)) return run_kprofile(in_path);
        if (app.got_subcommand(c_search))
            return run_search_min(n, max_edges, uniform_k, no_symmetry, budget, out_path);
        if (app.got_subcommand(c_remarks)) return run_remarks();
        if (app.got_subcommand(c_relabel)) return run_relabel(in_path, format, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
