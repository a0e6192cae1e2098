#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eic/hypergraph.hpp"

namespace eic {

// Exhaustive search for the minimum number of hyperedges realizing the
// canonical C_n as an edge intersection hypergraph.
struct SearchConfig {
    int n = 0;
    int max_edges = 0;                   // 0 means n + 2
    std::optional<int> uniform_k;        // restrict candidates to this size
    std::optional<int> max_edge_size;    // cap on candidate size
    bool symmetry_reduction = false;     // optional, never changes the minimum
    std::optional<long long> node_budget;

    // Pruning toggles; exist so tests can show each rule is conservative.
    bool prune_intersections = true;     // P1: partial selections stay chord-free
    bool prune_bound = true;             // P2: coverage bound on remaining picks
};

struct SearchResult {
    std::optional<int> minimum;          // absent if the budget ran out first
    std::vector<Hypergraph> witnesses;   // lexicographic order, possibly capped
    long long nodes_explored = 0;
    bool exhausted = false;
};

// All subsets of {1..n} with admissible size, in lexicographic order.
// Throws std::invalid_argument when the constraints leave no candidates.
std::vector<Hyperedge> candidate_edges(const SearchConfig& cfg);

// Iterative deepening over the selection cardinality with depth-first search
// over candidate_edges. Throws std::invalid_argument when n exceeds the hard
// limit (8 unrestricted, 16 with a uniformity constraint).
SearchResult min_realization(const SearchConfig& cfg);

}  // namespace eic
