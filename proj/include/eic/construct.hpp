#pragma once

#include <string>
#include <vector>

#include "eic/hypergraph.hpp"

namespace eic {

enum class Recipe { hypercycle3, lemma1, lemma2, lemma3, small_n };

enum class GroupKind { four, five };

enum class CaseTag { I, II, III, IV };

// A block of 4 or 5 consecutive hyperedges whose first 3-sections overlap by
// shifts of one vertex.
struct GroupSpec {
    int group_index = 0;      // j~
    GroupKind kind = GroupKind::four;
    int base_edge_index = 0;  // j, 1-based
    CaseTag tag = CaseTag::III;

    bool operator==(const GroupSpec&) const = default;
};

enum class EvenVariant { automatic, lemma1, lemma2 };

struct ConstructionOutput {
    Hypergraph hypergraph;
    CycleOrder cycle;
    Recipe recipe = Recipe::hypercycle3;
    std::vector<GroupSpec> groups;      // empty when not group-based
    int k = 0;                          // n = 8k + l
    int l = 0;
    // First 3-section of each hyperedge, per edge index (even-n recipes only).
    std::vector<Hyperedge> first_sections;
};

std::string to_string(Recipe r);
std::string to_string(CaseTag t);

// Hyperedges {i, i+1, i+2} mod n for every i; realizes C_n for n >= 5.
// Throws std::out_of_range for n < 5.
ConstructionOutput strong_hypercycle3(int n);

// The group decomposition for even n >= 24: l/2 five-groups followed by
// (n - 5l)/8 four-groups, with per-group case tags.
// Throws std::out_of_range for odd n or n < 24.
std::vector<GroupSpec> group_layout(int n);

// Emits the n/2 six-element hyperedges of the closed-form even-n layout.
// Variant automatic selects lemma2 for n in {32,34,36,38}, else lemma1.
// With unchecked = true the n >= 24 precondition is relaxed (n even, n >= 16)
// and the output is NOT verified; this exists to exhibit the known failure
// modes of the wrong variant at small n.
ConstructionOutput construct_even(int n, EvenVariant variant = EvenVariant::automatic,
                                  bool unchecked = false);

// Odd n >= 25: takes the even construction on n-1 vertices, reroutes the
// cycle through a new vertex n between 3 and 4, and adds the hyperedge
// {3, n, 4}. The output cycle order is (1, 2, 3, n, 4, 5, ..., n-1).
ConstructionOutput construct_odd(int n);

// 3 <= n <= 23. n = 3 and n = 4 return fixed minimum witnesses; 5 <= n <= 23
// returns strong_hypercycle3(n).
ConstructionOutput construct_small(int n);

// Dispatcher over all recipes; self-verifies the result before returning
// (throws std::logic_error if the construction fails to realize its cycle).
ConstructionOutput construct(int n);

}  // namespace eic
