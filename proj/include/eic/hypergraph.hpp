#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eic {

// Vertices are 1-based and live in {1..n} of the owning structure.
using Vertex = int;

// A hyperedge is a strictly increasing sequence of vertices
// (set identity = sequence identity).
using Hyperedge = std::vector<Vertex>;

// Sorts and de-duplicates; the canonical form of a vertex set.
Hyperedge make_edge(std::vector<Vertex> vertices);

// 1-based residue: maps any integer to {1..n}, with period n.
// Throws std::invalid_argument if n == 0.
Vertex normalize_vertex(long long v, int n);

struct Hypergraph {
    int n = 0;
    std::vector<Hyperedge> edges;

    // Throws std::invalid_argument on duplicate hyperedges, unsorted or
    // repeated vertices, or vertices outside 1..n.
    void validate() const;

    bool operator==(const Hypergraph&) const = default;
};

// A cyclic vertex sequence; permutation of (1..n).
struct CycleOrder {
    std::vector<Vertex> sequence;

    int n() const { return static_cast<int>(sequence.size()); }

    static CycleOrder canonical(int n);

    // Throws std::invalid_argument unless sequence is a permutation of 1..n, n >= 3.
    void validate() const;

    // Successor of v along the cycle.
    Vertex successor(Vertex v) const;

    // Position of v in the sequence (0-based).
    int position(Vertex v) const;

    bool is_canonical() const;

    bool operator==(const CycleOrder&) const = default;
};

// The n unordered pairs of cyclically adjacent vertices, as sorted 2-element
// hyperedges in lexicographic order. Throws std::invalid_argument for n < 3.
std::vector<Hyperedge> cycle_edges(const CycleOrder& order);

// Number of hyperedges containing v. Throws std::invalid_argument if v is
// outside 1..n.
int degree(const Hypergraph& h, Vertex v);

// An edgeless hypergraph is k-uniform for every k.
bool is_k_uniform(const Hypergraph& h, int k);

bool is_r_regular(const Hypergraph& h, int r);

std::string to_string(const Hyperedge& e);

}  // namespace eic
