#include "eic/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eic {

Hyperedge make_edge(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Vertex normalize_vertex(long long v, int n) {
    if (n <= 0) throw std::invalid_argument("normalize_vertex: n must be positive");
    long long r = (v - 1) % n;
    if (r < 0) r += n;
    return static_cast<Vertex>(r + 1);
}

void Hypergraph::validate() const {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (const Hyperedge& e : edges) {
        if (e.empty()) throw std::invalid_argument("Hypergraph: empty hyperedge");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n)
                throw std::invalid_argument("Hypergraph: vertex out of range 1..n");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::invalid_argument("Hypergraph: hyperedge not strictly increasing");
        }
    }
    std::vector<Hyperedge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("Hypergraph: duplicate hyperedge");
}

CycleOrder CycleOrder::canonical(int n) {
    CycleOrder order;
    order.sequence.resize(n);
    std::iota(order.sequence.begin(), order.sequence.end(), 1);
    return order;
}

void CycleOrder::validate() const {
    const int m = n();
    if (m < 3) throw std::invalid_argument("CycleOrder: need at least 3 vertices");
    std::vector<bool> seen(m + 1, false);
    for (Vertex v : sequence) {
        if (v < 1 || v > m || seen[v])
            throw std::invalid_argument("CycleOrder: not a permutation of 1..n");
        seen[v] = true;
    }
}

Vertex CycleOrder::successor(Vertex v) const {
    const int p = position(v);
    return sequence[(p + 1) % n()];
}

int CycleOrder::position(Vertex v) const {
    for (int i = 0; i < n(); ++i)
        if (sequence[i] == v) return i;
    throw std::invalid_argument("CycleOrder: vertex not in sequence");
}

bool CycleOrder::is_canonical() const {
    for (int i = 0; i < n(); ++i)
        if (sequence[i] != i + 1) return false;
    return true;
}

std::vector<Hyperedge> cycle_edges(const CycleOrder& order) {
    const int m = order.n();
    if (m < 3) throw std::invalid_argument("cycle_edges: need at least 3 vertices");
    std::vector<Hyperedge> result;
    result.reserve(m);
    for (int i = 0; i < m; ++i) {
        Vertex a = order.sequence[i];
        Vertex b = order.sequence[(i + 1) % m];
        result.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(result.begin(), result.end());
    return result;
}

int degree(const Hypergraph& h, Vertex v) {
    if (v < 1 || v > h.n) throw std::invalid_argument("degree: vertex out of range");
    int d = 0;
    for (const Hyperedge& e : h.edges)
        d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    return d;
}

bool is_k_uniform(const Hypergraph& h, int k) {
    for (const Hyperedge& e : h.edges)
        if (static_cast<int>(e.size()) != k) return false;
    return true;
}

bool is_r_regular(const Hypergraph& h, int r) {
    for (Vertex v = 1; v <= h.n; ++v)
        if (degree(h, v) != r) return false;
    return true;
}

std::string to_string(const Hyperedge& e) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < e.size(); ++i) {
        if (i > 0) out << ',';
        out << e[i];
    }
    out << '}';
    return out.str();
}

}  // namespace eic
