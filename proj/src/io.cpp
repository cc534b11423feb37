#include "selfsim/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "selfsim/chromatic.hpp"
#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

// Reads the next line that is not blank; returns false at end of input.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        return true;
    }
    return false;
}

int parse_int(const std::string& text, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + what +
                         ", got \"" + text + "\"");
    }
}

std::pair<int, int> parse_pair(const std::string& line, int line_no) {
    std::istringstream iss(line);
    std::string a, b, rest;
    if (!(iss >> a >> b) || (iss >> rest))
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected two integers, got \"" + line + "\"");
    return {parse_int(a, line_no, "an index"), parse_int(b, line_no, "an index")};
}

std::string strip_preset_prefix(const std::string& name) {
    constexpr const char* prefix = "preset:";
    if (name.rfind(prefix, 0) == 0) return name.substr(7);
    return name;
}

} // namespace

BaseGraph parse_base_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("empty base-graph input");
    const int n = parse_int(line, line_no, "the vertex count");
    std::vector<std::pair<int, int>> edges;
    while (next_line(in, line, line_no)) edges.push_back(parse_pair(line, line_no));
    try {
        return make_base_graph(n, edges);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid base graph: ") + e.what());
    }
}

Bundle parse_bundle(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("empty bundle input");
    const int n = parse_int(line, line_no, "the bundle side");
    bool symmetrize = false;
    std::vector<std::pair<int, int>> pairs;
    bool first_body_line = true;
    while (next_line(in, line, line_no)) {
        if (first_body_line && line == "symmetrize") {
            symmetrize = true;
            first_body_line = false;
            continue;
        }
        first_body_line = false;
        pairs.push_back(parse_pair(line, line_no));
    }
    try {
        return make_bundle(n, pairs, symmetrize);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid bundle: ") + e.what());
    }
}

bool is_base_preset(const std::string& name) {
    return name.rfind("kn:", 0) == 0;
}

BaseGraph base_preset(const std::string& name) {
    if (!is_base_preset(name)) throw ParseError("unknown base preset: " + name);
    const int n = parse_int(name.substr(3), 0, "a vertex count after kn:");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return make_base_graph(n, edges);
}

bool is_bundle_preset(const std::string& raw) {
    const std::string name = strip_preset_prefix(raw);
    if (name == "matching" || name == "full" || name == "jstar" || name == "mirror")
        return true;
    if (name.rfind("jr:", 0) == 0) return true;
    if (name.size() == 2 && name[0] == 'j' && name[1] >= '1' && name[1] <= '8')
        return true;
    return false;
}

Bundle bundle_preset(const std::string& raw, const BaseGraph& base) {
    const std::string name = strip_preset_prefix(raw);
    const int n = base.size();
    std::vector<std::pair<int, int>> pairs;
    if (name == "matching") {
        for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i);
        return make_bundle(n, pairs);
    }
    if (name == "full") {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) pairs.emplace_back(i, j);
        return make_bundle(n, pairs);
    }
    if (name == "jstar") {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) pairs.emplace_back(i, j);
        return make_bundle(n, pairs);
    }
    if (name == "mirror") {
        for (auto [i, j] : base.edges()) {
            pairs.emplace_back(i, j);
            pairs.emplace_back(j, i);
        }
        return make_bundle(n, pairs);
    }
    if (name.rfind("jr:", 0) == 0) {
        const int r = parse_int(name.substr(3), 0, "a loop count after jr:");
        if (r < 0 || r > n) throw ParseError("jr preset needs 0 <= r <= n");
        return jr_bundle(n, r);
    }
    if (name.size() == 2 && name[0] == 'j' && name[1] >= '1' && name[1] <= '8') {
        if (n != 2) throw ParseError("preset " + name + " requires n = 2");
        return k2_catalog()[static_cast<std::size_t>(name[1] - '1')].bundle;
    }
    throw ParseError("unknown bundle preset: " + raw);
}

BaseGraph load_base_graph(const std::string& source) {
    if (is_base_preset(source)) return base_preset(source);
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open base-graph file: " + source);
    return parse_base_graph(in);
}

Bundle load_bundle(const std::string& source, const BaseGraph& base) {
    if (is_bundle_preset(source)) return bundle_preset(source, base);
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open bundle file: " + source);
    Bundle bundle = parse_bundle(in);
    if (bundle.side() != base.size())
        throw ParseError("bundle side " + std::to_string(bundle.side()) +
                         " does not match base graph on " +
                         std::to_string(base.size()) + " vertices");
    return bundle;
}

std::string write_certificate(const Coloring& coloring) {
    std::ostringstream out;
    out << "palette " << coloring.palette << "\n";
    for (std::size_t v = 0; v < coloring.assignment.size(); ++v)
        out << v << " " << coloring.assignment[v] << "\n";
    return out.str();
}

Coloring parse_certificate(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("empty certificate");
    std::istringstream head(line);
    std::string keyword, value, rest;
    if (!(head >> keyword >> value) || keyword != "palette" || (head >> rest))
        throw ParseError("line 1: expected \"palette p\"");
    Coloring coloring;
    coloring.palette = parse_int(value, line_no, "a palette size");
    std::vector<std::pair<int, int>> entries;
    int max_vertex = -1;
    while (next_line(in, line, line_no)) {
        auto [v, c] = parse_pair(line, line_no);
        if (v < 0) throw ParseError("line " + std::to_string(line_no) +
                                    ": negative vertex index");
        entries.emplace_back(v, c);
        max_vertex = std::max(max_vertex, v);
    }
    coloring.assignment.assign(static_cast<std::size_t>(max_vertex + 1), -1);
    for (auto [v, c] : entries) coloring.assignment[static_cast<std::size_t>(v)] = c;
    for (std::size_t v = 0; v < coloring.assignment.size(); ++v)
        if (coloring.assignment[v] < 0)
            throw ParseError("certificate misses vertex " + std::to_string(v));
    return coloring;
}

} // namespace selfsim
