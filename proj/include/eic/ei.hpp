#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eic/hypergraph.hpp"

namespace eic {

// For each EI edge, the list of 1-based hyperedge index pairs (a, b), a < b,
// with edges[a-1] ∩ edges[b-1] equal to that edge. Pairs are in lexicographic
// order.
struct GenerationCertificate {
    std::map<Hyperedge, std::vector<std::pair<int, int>>> entries;
};

// The edge intersection hypergraph: all pairwise intersections of distinct
// hyperedges with at least two vertices, de-duplicated. Handles nested
// hyperedges (e ⊂ e'): the smaller edge is then itself an EI edge.
// Output edges are in lexicographic order.
Hypergraph edge_intersection_hypergraph(const Hypergraph& h);

GenerationCertificate generation_certificate(const Hypergraph& h);

}  // namespace eic
