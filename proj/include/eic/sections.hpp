#pragma once

#include <vector>

#include "eic/hypergraph.hpp"

namespace eic {

struct Section {
    Vertex start = 0;
    int length = 0;

    bool operator==(const Section&) const = default;
};

// Maximal runs of cyclically consecutive vertices of a hyperedge along a
// cycle order, sorted by start vertex. Total length equals |e|.
struct SectionDecomposition {
    std::vector<Section> sections;
};

// Throws std::domain_error when |e| == n (no section boundaries exist) and
// std::invalid_argument when e is not a subset of the order's vertices.
SectionDecomposition section_decomposition(const Hyperedge& e, const CycleOrder& order);

// k_e: the number of cycle edges contained in e, i.e. sum of (length - 1)
// over the sections.
int half_generation_count(const Hyperedge& e, const CycleOrder& order);

// Section lengths, largest first.
std::vector<int> section_profile(const Hyperedge& e, const CycleOrder& order);

// A chord is any vertex set of size >= 2 that is not a cycle edge.
// Throws std::invalid_argument for |s| < 2.
bool is_chord(const Hyperedge& s, const CycleOrder& order);

}  // namespace eic
