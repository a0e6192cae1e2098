#include "eic/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace eic {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<int> parse_ints(const std::string& line, int line_no) {
    std::istringstream iss(line);
    std::vector<int> values;
    int v;
    while (iss >> v) values.push_back(v);
    std::string rest;
    if (iss.clear(), iss >> rest)
        throw ParseError(line_no, "unexpected token '" + rest + "'");
    return values;
}

void check_edge_line(const std::vector<int>& vs, int n, int line_no) {
    if (vs.empty()) throw ParseError(line_no, "empty hyperedge");
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 1 || vs[i] > n)
            throw ParseError(line_no, "vertex " + std::to_string(vs[i]) + " outside 1.." +
                                          std::to_string(n));
        if (i > 0 && vs[i] == vs[i - 1])
            throw ParseError(line_no, "duplicate vertex in hyperedge");
        if (i > 0 && vs[i] < vs[i - 1])
            throw ParseError(line_no, "hyperedge vertices not ascending");
    }
}

}  // namespace

std::string serialize_text(const HypergraphFile& file) {
    std::ostringstream out;
    out << file.hypergraph.n << ' ' << file.hypergraph.edges.size() << '\n';
    for (const Hyperedge& e : file.hypergraph.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    if (file.cycle) {
        out << "cycle:";
        for (Vertex v : file.cycle->sequence) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

HypergraphFile parse_text(std::istream& in) {
    HypergraphFile file;
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    int edges_read = 0;
    std::set<Hyperedge> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;

        if (n < 0) {
            std::vector<int> header = parse_ints(line, line_no);
            if (header.size() != 2 || header[0] < 0 || header[1] < 0)
                throw ParseError(line_no, "malformed header, expected 'n m'");
            n = header[0];
            m = header[1];
            file.hypergraph.n = n;
            continue;
        }
        if (line.rfind("cycle:", 0) == 0) {
            std::vector<int> seq = parse_ints(line.substr(6), line_no);
            CycleOrder order{seq};
            if (static_cast<int>(seq.size()) != n)
                throw ParseError(line_no, "cycle line must list all n vertices");
            try {
                order.validate();
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            file.cycle = std::move(order);
            continue;
        }
        if (edges_read >= m) throw ParseError(line_no, "more hyperedge lines than declared");
        std::vector<int> vs = parse_ints(line, line_no);
        check_edge_line(vs, n, line_no);
        if (!seen.insert(vs).second) throw ParseError(line_no, "duplicate hyperedge");
        file.hypergraph.edges.push_back(std::move(vs));
        ++edges_read;
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (edges_read != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " hyperedges, found " +
                                      std::to_string(edges_read));
    return file;
}

HypergraphFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_text(in);
}

std::string serialize_json(const HypergraphFile& file) {
    ordered_json j;
    j["n"] = file.hypergraph.n;
    j["edges"] = file.hypergraph.edges;
    if (file.cycle) j["cycle"] = file.cycle->sequence;
    return j.dump();
}

HypergraphFile parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError(1, "JSON object must have fields 'n' and 'edges'");

    HypergraphFile file;
    file.hypergraph.n = j.at("n").get<int>();
    std::set<Hyperedge> seen;
    for (const auto& edge : j.at("edges")) {
        std::vector<int> vs = edge.get<std::vector<int>>();
        check_edge_line(vs, file.hypergraph.n, 1);
        if (!seen.insert(vs).second) throw ParseError(1, "duplicate hyperedge");
        file.hypergraph.edges.push_back(std::move(vs));
    }
    if (j.contains("cycle")) {
        CycleOrder order{j.at("cycle").get<std::vector<int>>()};
        if (order.n() != file.hypergraph.n)
            throw ParseError(1, "cycle must list all n vertices");
        try {
            order.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(1, e.what());
        }
        file.cycle = std::move(order);
    }
    return file;
}

HypergraphFile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

HypergraphFile relabel_canonical(const HypergraphFile& file) {
    if (!file.cycle) return file;
    const CycleOrder& order = *file.cycle;
    std::vector<int> rename(file.hypergraph.n + 1, 0);
    for (int i = 0; i < order.n(); ++i) rename[order.sequence[i]] = i + 1;

    HypergraphFile out;
    out.hypergraph.n = file.hypergraph.n;
    for (const Hyperedge& e : file.hypergraph.edges) {
        Hyperedge renamed;
        for (Vertex v : e) renamed.push_back(rename[v]);
        out.hypergraph.edges.push_back(make_edge(std::move(renamed)));
    }
    out.cycle = CycleOrder::canonical(file.hypergraph.n);
    return out;
}

}  // namespace eic
