#include "eic/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eic/ei.hpp"
#include "eic/sections.hpp"

namespace eic {

VerificationReport verify_cycle_realization(const Hypergraph& h, const CycleOrder& order) {
    order.validate();
    VerificationReport report;
    report.edge_count = h.edges.size();

    Hypergraph ei = edge_intersection_hypergraph(h);
    std::vector<Hyperedge> target = cycle_edges(order);
    std::set<Hyperedge> target_set(target.begin(), target.end());
    std::set<Hyperedge> ei_set(ei.edges.begin(), ei.edges.end());

    for (const Hyperedge& e : target)
        if (!ei_set.count(e)) report.missing_edges.push_back(e);
    for (const Hyperedge& e : ei.edges) {
        if (e.size() >= 3) report.oversized.push_back(e);
        if (is_chord(e, order)) report.chords.push_back(e);
    }
    report.is_cycle_realization =
        report.missing_edges.empty() && report.chords.empty() && report.oversized.empty();

    if (!h.edges.empty()) {
        const int k = static_cast<int>(h.edges.front().size());
        if (is_k_uniform(h, k)) report.uniformity = k;
    }
    if (h.n > 0) {
        const int r = degree(h, 1);
        if (is_r_regular(h, r)) report.regularity = r;
    }
    for (const Hyperedge& e : h.edges)
        if (static_cast<int>(e.size()) < h.n)
            report.sum_ke += half_generation_count(e, order);
    return report;
}

VerificationReport check_theorem2_claims(const ConstructionOutput& out) {
    if (out.recipe != Recipe::lemma1 && out.recipe != Recipe::lemma2 &&
        out.recipe != Recipe::lemma3)
        throw std::invalid_argument("check_theorem2_claims: recipe not covered");

    VerificationReport report = verify_cycle_realization(out.hypergraph, out.cycle);
    const int n = out.hypergraph.n;
    const size_t expected_edges = out.recipe == Recipe::lemma3
                                      ? static_cast<size_t>((n + 1) / 2)
                                      : static_cast<size_t>(n / 2);
    auto fail = [&report](const std::string& msg) { report.claim_failures.push_back(msg); };

    if (report.edge_count != expected_edges)
        fail("edge count is " + std::to_string(report.edge_count) + ", expected " +
             std::to_string(expected_edges));
    if (report.regularity != 3) fail("hypergraph is not 3-regular");
    if (out.recipe == Recipe::lemma3) {
        size_t size3 = 0, size6 = 0;
        for (const Hyperedge& e : out.hypergraph.edges) {
            if (e.size() == 3) ++size3;
            else if (e.size() == 6) ++size6;
        }
        if (size3 != 1 || size3 + size6 != report.edge_count)
            fail("size profile is not one 3-edge plus 6-edges");
    } else if (report.uniformity != 6) {
        fail("hypergraph is not 6-uniform");
    }
    return report;
}

std::string render_certificate(const Hypergraph& h, const CycleOrder& order) {
    if (!verify_cycle_realization(h, order).is_cycle_realization)
        throw std::invalid_argument("render_certificate: input is not a cycle realization");

    GenerationCertificate cert = generation_certificate(h);
    std::ostringstream out;
    const int n = order.n();
    for (int i = 0; i < n; ++i) {
        Vertex u = order.sequence[i];
        Vertex v = order.sequence[(i + 1) % n];
        Hyperedge key = {std::min(u, v), std::max(u, v)};
        const auto& pairs = cert.entries.at(key);
        out << 'e' << pairs.front().first << " ∩ e" << pairs.front().second << " = {"
            << u << ',' << v << "}\n";
    }
    return out.str();
}

std::string to_string(const VerificationReport& report) {
    std::ostringstream out;
    out << "cycle realization: " << (report.is_cycle_realization ? "yes" : "no") << '\n';
    out << "hyperedges: " << report.edge_count << '\n';
    if (report.uniformity) out << "uniform: " << *report.uniformity << '\n';
    if (report.regularity) out << "regular: " << *report.regularity << '\n';
    out << "sum k_e: " << report.sum_ke << '\n';
    auto list = [&out](const char* label, const std::vector<Hyperedge>& edges) {
        if (edges.empty()) return;
        out << label << ':';
        for (const Hyperedge& e : edges) out << ' ' << to_string(e);
        out << '\n';
    };
    list("missing cycle edges", report.missing_edges);
    list("chords", report.chords);
    list("oversized intersections", report.oversized);
    for (const std::string& msg : report.claim_failures) out << "claim failed: " << msg << '\n';
    return out.str();
}

}  // namespace eic
