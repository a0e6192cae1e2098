#include "eic/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace eic {

namespace {

using Mask = std::uint32_t;

Mask edge_mask(const Hyperedge& e) {
    Mask m = 0;
    for (Vertex v : e) m |= Mask{1} << (v - 1);
    return m;
}

Hyperedge mask_edge(Mask m, int n) {
    Hyperedge e;
    for (Vertex v = 1; v <= n; ++v)
        if (m & (Mask{1} << (v - 1))) e.push_back(v);
    return e;
}

// Images of an edge under the dihedral group of the canonical C_n.
std::vector<Hyperedge> dihedral_orbit(const Hyperedge& e, int n) {
    std::vector<Hyperedge> orbit;
    for (int rot = 0; rot < n; ++rot) {
        Hyperedge image, mirrored;
        for (Vertex v : e) {
            image.push_back(normalize_vertex(v + rot, n));
            mirrored.push_back(normalize_vertex(rot - v, n));
        }
        orbit.push_back(make_edge(std::move(image)));
        orbit.push_back(make_edge(std::move(mirrored)));
    }
    return orbit;
}

struct Searcher {
    const SearchConfig& cfg;
    int n;
    int target = 0;
    std::vector<Mask> candidates;
    std::vector<int> cover_count;        // cycle edges contained in each candidate
    std::vector<int> suffix_max_cover;
    std::vector<int> cycle_edge_slot;    // 2-bit mask -> slot index, -1 otherwise
    std::vector<bool> first_level_ok;

    long long nodes = 0;
    bool budget_hit = false;
    std::vector<int> chosen;
    std::vector<Hypergraph> witnesses;

    explicit Searcher(const SearchConfig& config, const std::vector<Hyperedge>& cand_edges)
        : cfg(config), n(config.n) {
        cycle_edge_slot.assign(Mask{1} << n, -1);
        for (int i = 1; i <= n; ++i) {
            Hyperedge ce = {i, normalize_vertex(i + 1, n)};
            cycle_edge_slot[edge_mask(ce)] = i - 1;
        }
        for (const Hyperedge& e : cand_edges) {
            Mask m = edge_mask(e);
            candidates.push_back(m);
            int cover = 0;
            for (int i = 1; i <= n; ++i) {
                Hyperedge ce = {i, normalize_vertex(i + 1, n)};
                if ((edge_mask(ce) & m) == edge_mask(ce)) ++cover;
            }
            cover_count.push_back(cover);
        }
        suffix_max_cover.assign(candidates.size() + 1, 0);
        for (int i = static_cast<int>(candidates.size()) - 1; i >= 0; --i)
            suffix_max_cover[i] = std::max(suffix_max_cover[i + 1], cover_count[i]);

        first_level_ok.assign(candidates.size(), true);
        if (cfg.symmetry_reduction) {
            for (size_t i = 0; i < cand_edges.size(); ++i) {
                const Hyperedge& e = cand_edges[i];
                for (const Hyperedge& image : dihedral_orbit(e, n))
                    if (image < e) { first_level_ok[i] = false; break; }
            }
        }
    }

    bool over_budget() {
        if (cfg.node_budget && nodes > *cfg.node_budget) budget_hit = true;
        return budget_hit;
    }

    // covered: bitset over cycle-edge slots; violations: count of non-cycle
    // intersections of size >= 2 in the current selection.
    void dfs(int from, int depth, Mask covered, int violations) {
        if (depth == target) {
            if (violations == 0 && covered == (Mask{1} << n) - 1) {
                Hypergraph w;
                w.n = n;
                for (int idx : chosen) w.edges.push_back(mask_edge(candidates[idx], n));
                witnesses.push_back(std::move(w));
            }
            return;
        }
        const int remaining = target - depth;
        for (int i = from; i <= static_cast<int>(candidates.size()) - remaining; ++i) {
            if (depth == 0 && !first_level_ok[i]) continue;
            if (cfg.prune_bound) {
                const int uncovered = n - std::popcount(covered);
                // suffix_max_cover is non-increasing, so once the bound
                // fails no later candidate can help either
                if (uncovered > remaining * suffix_max_cover[i]) break;
            }
            ++nodes;
            if (over_budget()) return;

            Mask new_covered = covered;
            int new_violations = violations;
            bool rejected = false;
            for (int idx : chosen) {
                Mask inter = candidates[idx] & candidates[i];
                const int pc = std::popcount(inter);
                if (pc < 2) continue;
                const int slot = pc == 2 ? cycle_edge_slot[inter] : -1;
                if (slot >= 0) {
                    new_covered |= Mask{1} << slot;
                } else {
                    ++new_violations;
                    if (cfg.prune_intersections) { rejected = true; break; }
                }
            }
            if (rejected) continue;
            chosen.push_back(i);
            dfs(i + 1, depth + 1, new_covered, new_violations);
            chosen.pop_back();
            if (budget_hit) return;
        }
    }
};

}  // namespace

std::vector<Hyperedge> candidate_edges(const SearchConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("candidate_edges: n < 3");
    int lo = 2, hi = cfg.max_edge_size.value_or(cfg.n);
    if (cfg.uniform_k) lo = hi = *cfg.uniform_k;
    hi = std::min(hi, cfg.n);

    std::vector<Hyperedge> out;
    Hyperedge prefix;
    auto extend = [&](auto&& self, Vertex next) -> void {
        const int size = static_cast<int>(prefix.size());
        if (size >= lo && size <= hi) out.push_back(prefix);
        if (size == hi) return;
        for (Vertex v = next; v <= cfg.n; ++v) {
            prefix.push_back(v);
            self(self, v + 1);
            prefix.pop_back();
        }
    };
    extend(extend, 1);
    if (out.empty())
        throw std::invalid_argument("candidate_edges: constraints admit no candidates");
    return out;
}

SearchResult min_realization(const SearchConfig& cfg) {
    const int hard_limit = cfg.uniform_k ? 16 : 8;
    if (cfg.n < 3 || cfg.n > hard_limit)
        throw std::invalid_argument("min_realization: n outside the supported range");

    const std::vector<Hyperedge> cands = candidate_edges(cfg);
    const int max_edges = cfg.max_edges > 0 ? cfg.max_edges : cfg.n + 2;

    Searcher searcher(cfg, cands);
    SearchResult result;
    for (int m = 1; m <= max_edges; ++m) {
        searcher.target = m;
        searcher.dfs(0, 0, 0, 0);
        result.nodes_explored = searcher.nodes;
        if (!searcher.witnesses.empty()) {
            result.minimum = m;
            result.witnesses = std::move(searcher.witnesses);
            result.exhausted = !searcher.budget_hit;
            return result;
        }
        if (searcher.budget_hit) {
            result.exhausted = false;
            return result;
        }
    }
    result.exhausted = true;  // no realization within max_edges
    return result;
}

}  // namespace eic
