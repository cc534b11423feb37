#include "selfsim/export.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "selfsim/errors.hpp"

namespace selfsim {

ExportFormat parse_export_format(const std::string& name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "graph6") return ExportFormat::Graph6;
    if (name == "edgelist") return ExportFormat::EdgeList;
    if (name == "json") return ExportFormat::Json;
    throw std::invalid_argument("unsupported format: " + name);
}

std::string export_graph(const ExplicitGraph& graph, ExportFormat format) {
    switch (format) {
    case ExportFormat::Dot: return to_dot(graph);
    case ExportFormat::Graph6: return to_graph6(graph);
    case ExportFormat::EdgeList: return to_edge_list(graph);
    case ExportFormat::Json: return to_json(graph);
    }
    throw std::invalid_argument("unsupported format");
}

std::string to_graph6(const ExplicitGraph& graph) {
    const std::uint64_t n = graph.vertex_count();
    if (n > 258047)
        throw SizeLimitError("graph6 export limited to 258047 vertices here");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    // Upper-triangle bits in column order: x(0,1), x(0,2), x(1,2), x(0,3)...
    const std::uint64_t bit_count = n * (n - 1) / 2;
    std::vector<std::uint8_t> bits((bit_count + 7) / 8, 0);
    for (auto [u, v] : graph.edges()) {
        const std::uint64_t pos = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
        bits[pos / 8] |= static_cast<std::uint8_t>(0x80 >> (pos % 8));
    }
    for (std::uint64_t group = 0; group * 6 < bit_count; ++group) {
        std::uint8_t value = 0;
        for (int b = 0; b < 6; ++b) {
            const std::uint64_t pos = group * 6 + b;
            value = static_cast<std::uint8_t>(value << 1);
            if (pos < bit_count && (bits[pos / 8] & (0x80 >> (pos % 8)))) value |= 1;
        }
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

ExplicitGraph parse_graph6(const std::string& text) {
    std::size_t at = 0;
    auto need = [&](std::size_t count) {
        if (text.size() < at + count) throw ParseError("truncated graph6 string");
    };
    auto sixbits = [&]() {
        need(1);
        const int value = static_cast<unsigned char>(text[at++]) - 63;
        if (value < 0 || value > 63) throw ParseError("graph6 byte out of range");
        return static_cast<std::uint64_t>(value);
    };
    need(1);
    std::uint64_t n;
    if (static_cast<unsigned char>(text[at]) == 126) {
        ++at;
        n = (sixbits() << 12) | (sixbits() << 6) | sixbits();
    } else {
        n = sixbits();
    }
    if (n == 0) throw ParseError("graph6 with zero vertices");
    const std::uint64_t bit_count = n * (n - 1) / 2;
    std::vector<ExplicitGraph::Edge> edges;
    std::uint64_t pos = 0;
    std::uint32_t i = 0, j = 1;
    std::uint64_t group = 0;
    for (; pos < bit_count; ++pos) {
        if (pos % 6 == 0) group = sixbits();
        if ((group >> (5 - pos % 6)) & 1) edges.emplace_back(i, j);
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    if (at != text.size()) throw ParseError("trailing bytes after graph6 data");
    return ExplicitGraph::from_edges(n, std::move(edges));
}

std::string to_edge_list(const ExplicitGraph& graph) {
    std::ostringstream out;
    for (auto [u, v] : graph.edges()) out << u << " " << v << "\n";
    return out.str();
}

ExplicitGraph parse_edge_list(const std::string& text, std::uint64_t vertex_count) {
    std::istringstream in(text);
    std::vector<ExplicitGraph::Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream iss(line);
        std::uint32_t u, v;
        std::string rest;
        if (!(iss >> u >> v) || (iss >> rest))
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected two indices");
        edges.emplace_back(u, v);
    }
    return ExplicitGraph::from_edges(vertex_count, std::move(edges));
}

namespace {

std::string coordinate_label(const ExplicitGraph& graph, std::uint64_t v) {
    const Vertex coords = graph.decode(v);
    std::string label;
    for (std::size_t s = 0; s < coords.size(); ++s) {
        if (s > 0) label.push_back('.');
        label += std::to_string(coords[s]);
    }
    return label;
}

} // namespace

std::string to_dot(const ExplicitGraph& graph) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::uint64_t v = 0; v < graph.vertex_count(); ++v)
        out << "  \"" << coordinate_label(graph, v) << "\";\n";
    for (auto [u, v] : graph.edges())
        out << "  \"" << coordinate_label(graph, u) << "\" -- \""
            << coordinate_label(graph, v) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const ExplicitGraph& graph) {
    nlohmann::ordered_json j;
    j["vertexCount"] = graph.vertex_count();
    j["n"] = graph.base_size();
    j["k"] = graph.depth();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

} // namespace selfsim
