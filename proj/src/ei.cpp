#include "eic/ei.hpp"

#include <algorithm>
#include <set>

namespace eic {

namespace {

Hyperedge intersect(const Hyperedge& a, const Hyperedge& b) {
    Hyperedge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

Hypergraph edge_intersection_hypergraph(const Hypergraph& h) {
    std::set<Hyperedge> acc;
    const size_t m = h.edges.size();
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            Hyperedge cap = intersect(h.edges[i], h.edges[j]);
            if (cap.size() >= 2) acc.insert(std::move(cap));
        }
    }
    Hypergraph out;
    out.n = h.n;
    out.edges.assign(acc.begin(), acc.end());
    return out;
}

GenerationCertificate generation_certificate(const Hypergraph& h) {
    GenerationCertificate cert;
    const size_t m = h.edges.size();
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            Hyperedge cap = intersect(h.edges[i], h.edges[j]);
            if (cap.size() >= 2)
                cert.entries[std::move(cap)].emplace_back(static_cast<int>(i + 1),
                                                          static_cast<int>(j + 1));
        }
    }
    for (auto& [edge, pairs] : cert.entries) std::sort(pairs.begin(), pairs.end());
    return cert;
}

}  // namespace eic
