#include "eic/construct.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "eic/ei.hpp"

namespace eic {

std::string to_string(Recipe r) {
    switch (r) {
        case Recipe::hypercycle3: return "hypercycle3";
        case Recipe::lemma1: return "lemma1";
        case Recipe::lemma2: return "lemma2";
        case Recipe::lemma3: return "lemma3";
        case Recipe::small_n: return "small-n";
    }
    return "?";
}

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
    }
    return "?";
}

namespace {

// Valid for any even n >= 16 that is 8k + l with l in {0,2,4,6}; the public
// entry point restricts to n >= 24.
std::vector<GroupSpec> layout_impl(int n) {
    const int l = n % 8;
    const int five_groups = l / 2;
    const int four_groups = (n - 5 * l) / 8;
    std::vector<GroupSpec> groups;
    for (int jt = 0; jt < five_groups; ++jt) {
        GroupSpec g;
        g.group_index = jt;
        g.kind = GroupKind::five;
        g.base_edge_index = 5 * jt + 1;
        g.tag = (n != 30 && jt == five_groups - 1) ? CaseTag::II : CaseTag::I;
        groups.push_back(g);
    }
    for (int jt = five_groups; jt < five_groups + four_groups; ++jt) {
        GroupSpec g;
        g.group_index = jt;
        g.kind = GroupKind::four;
        g.base_edge_index = 4 * jt + l / 2 + 1;
        g.tag = (l >= 2 && jt == (n - l) / 8 - 1) ? CaseTag::IV : CaseTag::III;
        groups.push_back(g);
    }
    return groups;
}

Hyperedge reduce(std::array<int, 3> raw, int n) {
    Hyperedge e;
    for (int v : raw) e.push_back(normalize_vertex(v, n));
    return make_edge(std::move(e));
}

void self_verify(const ConstructionOutput& out) {
    Hypergraph ei = edge_intersection_hypergraph(out.hypergraph);
    std::vector<Hyperedge> target = cycle_edges(out.cycle);
    if (ei.edges != target)
        throw std::logic_error("construct: output does not realize its cycle");
}

}  // namespace

ConstructionOutput strong_hypercycle3(int n) {
    if (n < 5) throw std::out_of_range("strong_hypercycle3: requires n >= 5");
    ConstructionOutput out;
    out.recipe = Recipe::hypercycle3;
    out.cycle = CycleOrder::canonical(n);
    out.hypergraph.n = n;
    for (int i = 1; i <= n; ++i)
        out.hypergraph.edges.push_back(make_edge(
            {i, normalize_vertex(i + 1, n), normalize_vertex(i + 2, n)}));
    return out;
}

std::vector<GroupSpec> group_layout(int n) {
    if (n % 2 != 0 || n < 24)
        throw std::out_of_range("group_layout: requires even n >= 24");
    return layout_impl(n);
}

ConstructionOutput construct_even(int n, EvenVariant variant, bool unchecked) {
    const int min_n = unchecked ? 16 : 24;
    if (n % 2 != 0 || n < min_n)
        throw std::out_of_range("construct_even: requires even n >= " +
                                std::to_string(min_n));

    const bool k4 = (n >= 32 && n <= 38);
    bool swap_seconds;
    switch (variant) {
        case EvenVariant::automatic: swap_seconds = k4; break;
        case EvenVariant::lemma1: swap_seconds = false; break;
        case EvenVariant::lemma2: swap_seconds = true; break;
        default: throw std::invalid_argument("construct_even: bad variant");
    }

    ConstructionOutput out;
    out.recipe = swap_seconds ? Recipe::lemma2 : Recipe::lemma1;
    out.cycle = CycleOrder::canonical(n);
    out.k = n / 8;
    out.l = n % 8;
    out.groups = layout_impl(n);
    out.hypergraph.n = n;

    for (const GroupSpec& g : out.groups) {
        std::vector<std::array<int, 3>> firsts;
        std::vector<std::array<int, 3>> seconds;
        if (g.kind == GroupKind::five) {
            const int b = 10 * g.group_index;
            firsts = {{b + 1, b + 2, b + 3}, {b + 2, b + 3, b + 4},
                      {b + 3, b + 4, b + 5}, {b + 4, b + 5, b + 6},
                      {b + 5, b + 6, b + 7}};
            seconds = {{b + 8, b + 9, b + 10},
                       g.tag == CaseTag::I ? std::array<int, 3>{b + 19, b + 20, b + 21}
                                           : std::array<int, 3>{b + 17, b + 18, b + 19},
                       g.tag == CaseTag::I ? std::array<int, 3>{b + 16, b + 17, b + 18}
                                           : std::array<int, 3>{b + 14, b + 15, b + 16},
                       {b - 3, b - 2, b - 1},
                       {b, b + 1, b + 2}};
        } else {
            const int x = out.l == 0 ? 8 * g.group_index : 8 * g.group_index + out.l - 1;
            firsts = {{x + 1, x + 2, x + 3}, {x + 2, x + 3, x + 4},
                      {x + 3, x + 4, x + 5}, {x + 4, x + 5, x + 6}};
            seconds = {{x + 7, x + 8, x + 9},
                       g.tag == CaseTag::III ? std::array<int, 3>{x + 16, x + 17, x + 18}
                                             : std::array<int, 3>{x + 18, x + 19, x + 20},
                       g.tag == CaseTag::III ? std::array<int, 3>{x + 13, x + 14, x + 15}
                                             : std::array<int, 3>{x + 15, x + 16, x + 17},
                       {x - 2, x - 1, x}};
        }
        if (swap_seconds) std::swap(seconds[1], seconds[2]);

        for (size_t i = 0; i < firsts.size(); ++i) {
            Hyperedge first = reduce(firsts[i], n);
            Hyperedge second = reduce(seconds[i], n);
            Hyperedge e = first;
            e.insert(e.end(), second.begin(), second.end());
            out.hypergraph.edges.push_back(make_edge(std::move(e)));
            out.first_sections.push_back(std::move(first));
        }
    }
    return out;
}

ConstructionOutput construct_odd(int n) {
    if (n % 2 == 0 || n < 25)
        throw std::out_of_range("construct_odd: requires odd n >= 25");

    ConstructionOutput base = construct_even(n - 1);

    // The even construction must place vertex 3 exactly in the first three
    // hyperedges and vertex 4 exactly in hyperedges 2..4.
    auto holders = [&base](Vertex v) {
        std::vector<int> idx;
        for (size_t i = 0; i < base.hypergraph.edges.size(); ++i)
            if (std::binary_search(base.hypergraph.edges[i].begin(),
                                   base.hypergraph.edges[i].end(), v))
                idx.push_back(static_cast<int>(i + 1));
        return idx;
    };
    if (holders(3) != std::vector<int>{1, 2, 3} || holders(4) != std::vector<int>{2, 3, 4})
        throw std::logic_error("construct_odd: even base has unexpected shape");

    ConstructionOutput out;
    out.recipe = Recipe::lemma3;
    out.k = base.k;
    out.l = base.l;
    out.groups = base.groups;
    out.hypergraph.n = n;
    out.hypergraph.edges = base.hypergraph.edges;

    auto replace = [n](Hyperedge e, Vertex remove) {
        std::erase(e, remove);
        e.push_back(n);
        return make_edge(std::move(e));
    };
    out.hypergraph.edges[1] = replace(out.hypergraph.edges[1], 4);
    out.hypergraph.edges[2] = replace(out.hypergraph.edges[2], 3);
    out.hypergraph.edges.push_back({3, 4, n});

    // Cycle (1, 2, 3, n, 4, 5, ..., n-1).
    out.cycle.sequence = {1, 2, 3, n};
    for (int v = 4; v <= n - 1; ++v) out.cycle.sequence.push_back(v);
    return out;
}

ConstructionOutput construct_small(int n) {
    if (n < 3 || n > 23) throw std::out_of_range("construct_small: requires 3 <= n <= 23");
    if (n >= 5) return strong_hypercycle3(n);

    ConstructionOutput out;
    out.recipe = Recipe::small_n;
    out.cycle = CycleOrder::canonical(n);
    out.hypergraph.n = n;
    if (n == 3) {
        out.hypergraph.edges = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    } else {
        // Minimum witness for n = 4, frozen from the exhaustive search oracle
        // (lexicographically first witness of the minimum cardinality 5).
        out.hypergraph.edges = {{1, 2}, {1, 2, 3, 4}, {1, 4}, {2, 3}, {3, 4}};
    }
    return out;
}

ConstructionOutput construct(int n) {
    if (n < 3) throw std::out_of_range("construct: requires n >= 3");
    ConstructionOutput out;
    if (n <= 23)
        out = construct_small(n);
    else if (n % 2 == 0)
        out = construct_even(n);
    else
        out = construct_odd(n);
    self_verify(out);
    return out;
}

}  // namespace eic
