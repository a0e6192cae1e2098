#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "eic/hypergraph.hpp"

namespace eic {

// A hypergraph plus an optional cycle order, as stored on disk.
struct HypergraphFile {
    Hypergraph hypergraph;
    std::optional<CycleOrder> cycle;

    CycleOrder cycle_or_canonical() const {
        return cycle ? *cycle : CycleOrder::canonical(hypergraph.n);
    }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

// Text format:
//   # comment lines anywhere
//   n m
//   <m lines of ascending space-separated vertex ids>
//   cycle: v1 v2 ... vn        (optional)
std::string serialize_text(const HypergraphFile& file);
HypergraphFile parse_text(std::istream& in);
HypergraphFile parse_text(const std::string& text);

// JSON object {"n": ..., "edges": [[...], ...], "cycle": [...]}; the cycle
// field is present only when an order is stored.
std::string serialize_json(const HypergraphFile& file);
HypergraphFile parse_json(const std::string& text);

// Reads either format, keyed off the leading character.
HypergraphFile load_file(const std::string& path);

// Renames vertices so the stored cycle order becomes (1..n).
HypergraphFile relabel_canonical(const HypergraphFile& file);

}  // namespace eic
