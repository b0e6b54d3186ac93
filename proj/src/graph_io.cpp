#include "graphpoly/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace graphpoly {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        std::string tok;
        while (in >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw parse_error(line.number, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Dart parse_dart(const Line& line, const std::string& tok, int m) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
        throw parse_error(line.number, "dart must look like +<eid> or -<eid>, got '" + tok + "'");
    int eid = parse_int(line, tok.substr(1), "edge id");
    if (eid < 0 || eid >= m)
        throw parse_error(line.number, "dart edge id " + std::to_string(eid) +
                                           " out of range for m=" + std::to_string(m));
    return dart_of(eid, tok[0] == '-');
}

} // namespace

GraphFile parse_graph_file(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    std::size_t at = 0;
    auto next_line = [&]() -> const Line& {
        if (at >= lines.size())
            throw parse_error(lines.empty() ? 1 : lines.back().number, "unexpected end of file");
        return lines[at++];
    };

    const Line& header = next_line();
    if (header.tokens[0] != "graph" || header.tokens.size() != 3)
        throw parse_error(header.number, "expected header 'graph <n> <m>'");
    const int n = parse_int(header, header.tokens[1], "vertex count");
    const int m = parse_int(header, header.tokens[2], "edge count");
    if (n < 0 || m < 0) throw parse_error(header.number, "counts must be non-negative");

    Multigraph g(n);
    for (int i = 0; i < m; ++i) {
        const Line& line = next_line();
        if (line.tokens[0] != "e" || line.tokens.size() != 3)
            throw parse_error(line.number, "expected edge line 'e <tail> <head>'");
        int tail = parse_int(line, line.tokens[1], "tail vertex");
        int head = parse_int(line, line.tokens[2], "head vertex");
        if (tail < 0 || tail >= n || head < 0 || head >= n)
            throw parse_error(line.number, "edge endpoint out of range for n=" + std::to_string(n));
        g.add_edge(tail, head);
    }

    GraphFile out{std::move(g), std::nullopt};
    if (at == lines.size()) return out;

    const Line& section = next_line();
    if (section.tokens[0] != "embedding" || section.tokens.size() != 1)
        throw parse_error(section.number, "expected 'embedding' or end of file");

    RotationSystem rot;
    rot.order.resize(static_cast<std::size_t>(n));
    std::vector<bool> have(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        const Line& line = next_line();
        if (line.tokens[0] != "rot" || line.tokens.size() < 2)
            throw parse_error(line.number, "expected 'rot <v> <dart>...'");
        int v = parse_int(line, line.tokens[1], "vertex id");
        if (v < 0 || v >= n)
            throw parse_error(line.number, "rot vertex " + std::to_string(v) + " out of range");
        if (have[static_cast<std::size_t>(v)])
            throw parse_error(line.number, "duplicate rot line for vertex " + std::to_string(v));
        have[static_cast<std::size_t>(v)] = true;
        for (std::size_t t = 2; t < line.tokens.size(); ++t)
            rot.order[static_cast<std::size_t>(v)].push_back(parse_dart(line, line.tokens[t], m));
    }
    if (at != lines.size()) throw parse_error(lines[at].number, "unexpected content after embedding");

    out.plane.emplace(out.graph, std::move(rot)); // validates darts, connectivity, Euler
    return out;
}

GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_file(buffer.str());
}

std::string render_graph_file(const Multigraph& g) {
    std::ostringstream out;
    out << "graph " << g.n() << " " << g.m() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.tail << " " << e.head << "\n";
    return out.str();
}

std::string render_graph_file(const PlaneGraph& pg) {
    std::ostringstream out;
    out << render_graph_file(pg.graph());
    out << "embedding\n";
    for (VertexId v = 0; v < pg.graph().n(); ++v) {
        out << "rot " << v;
        for (Dart d : pg.rotation().order[static_cast<std::size_t>(v)])
            out << " " << (dart_is_head(d) ? '-' : '+') << dart_edge(d);
        out << "\n";
    }
    return out.str();
}

} // namespace graphpoly
