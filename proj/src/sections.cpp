#include "eic/sections.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eic {

SectionDecomposition section_decomposition(const Hyperedge& e, const CycleOrder& order) {
    const int n = order.n();
    if (static_cast<int>(e.size()) >= n)
        throw std::domain_error("section_decomposition: |e| must be smaller than n");

    std::vector<bool> member(n, false);
    for (Vertex v : e) {
        if (v < 1 || v > n)
            throw std::invalid_argument("section_decomposition: vertex out of range");
        member[order.position(v)] = true;
    }

    SectionDecomposition dec;
    for (int p = 0; p < n; ++p) {
        if (!member[p] || member[(p + n - 1) % n]) continue;
        int len = 0;
        while (member[(p + len) % n]) ++len;
        dec.sections.push_back({order.sequence[p], len});
    }
    std::sort(dec.sections.begin(), dec.sections.end(),
              [](const Section& a, const Section& b) { return a.start < b.start; });
    return dec;
}

int half_generation_count(const Hyperedge& e, const CycleOrder& order) {
    int k = 0;
    for (const Section& s : section_decomposition(e, order).sections) k += s.length - 1;
    return k;
}

std::vector<int> section_profile(const Hyperedge& e, const CycleOrder& order) {
    std::vector<int> lengths;
    for (const Section& s : section_decomposition(e, order).sections)
        lengths.push_back(s.length);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

bool is_chord(const Hyperedge& s, const CycleOrder& order) {
    if (s.size() < 2) throw std::invalid_argument("is_chord: need at least 2 vertices");
    if (s.size() > 2) return true;
    return order.successor(s[0]) != s[1] && order.successor(s[1]) != s[0];
}

}  // namespace eic
