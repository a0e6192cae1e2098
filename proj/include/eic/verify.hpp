#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eic/construct.hpp"
#include "eic/hypergraph.hpp"

namespace eic {

// Diagnostics are collected, never thrown: a failed realization lists every
// defect it has.
struct VerificationReport {
    bool is_cycle_realization = false;
    std::vector<Hyperedge> missing_edges;  // cycle edges absent from EI
    std::vector<Hyperedge> chords;         // EI edges that are chords
    std::vector<Hyperedge> oversized;      // EI edges with size >= 3
    std::optional<int> uniformity;
    std::optional<int> regularity;
    size_t edge_count = 0;
    long sum_ke = 0;
    std::vector<std::string> claim_failures;  // filled by check_theorem2_claims

    bool claims_ok() const { return is_cycle_realization && claim_failures.empty(); }
};

VerificationReport verify_cycle_realization(const Hypergraph& h, const CycleOrder& order);

// verify_cycle_realization plus the exact edge-count, regularity and size
// profile the even/odd constructions promise. Throws std::invalid_argument
// for recipes other than lemma1/lemma2/lemma3.
VerificationReport check_theorem2_claims(const ConstructionOutput& out);

// One line per cycle edge in cyclic order: "e_a ∩ e_b = {i,j}" with the
// lexicographically least generating pair. Throws std::invalid_argument when
// h does not realize the cycle.
std::string render_certificate(const Hypergraph& h, const CycleOrder& order);

std::string to_string(const VerificationReport& report);

}  // namespace eic
