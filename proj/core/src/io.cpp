#include "hypersparse/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace hypersparse {

namespace {

// Strips comments, skips blank lines.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

struct Header {
    std::size_t n, m;
    bool weighted;
};

Header read_header(std::istream& in, const std::string& magic) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty input");
    std::istringstream ss(line);
    std::string tag;
    Header h{};
    int w = 0;
    if (!(ss >> tag >> h.n >> h.m >> w) || tag != magic || (w != 0 && w != 1))
        throw ParseError("bad header, expected '" + magic + " <n> <m> <w>'");
    h.weighted = w == 1;
    return h;
}

std::vector<Vertex> parse_vertices(std::istringstream& ss, std::size_t n, std::size_t line_no) {
    std::vector<Vertex> out;
    long long v;
    while (ss >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id " +
                             std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
        out.push_back(static_cast<Vertex>(v));
    }
    if (!ss.eof()) throw ParseError("line " + std::to_string(line_no) + ": malformed vertex id");
    return out;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    Header hdr = read_header(in, "hgr");
    std::vector<Hyperedge> edges;
    edges.reserve(hdr.m);
    std::string line;
    for (std::size_t i = 0; i < hdr.m; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("expected " + std::to_string(hdr.m) + " edge lines, got " +
                             std::to_string(i));
        std::istringstream ss(line);
        Hyperedge e;
        if (hdr.weighted && !(ss >> e.weight))
            throw ParseError("line " + std::to_string(i + 2) + ": missing edge weight");
        e.vertices = parse_vertices(ss, hdr.n, i + 2);
        if (e.vertices.empty())
            throw ParseError("line " + std::to_string(i + 2) + ": empty hyperedge");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(hdr.n, std::move(edges), hdr.weighted);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "hgr " << h.vertex_count() << ' ' << h.edge_count() << ' ' << (h.weighted() ? 1 : 0)
        << '\n';
    out << std::setprecision(17);
    for (const auto& e : h.edges()) {
        if (h.weighted()) out << e.weight << ' ';
        for (std::size_t i = 0; i < e.vertices.size(); ++i)
            out << e.vertices[i] << (i + 1 == e.vertices.size() ? '\n' : ' ');
    }
}

DirectedHypergraph read_directed_hypergraph(std::istream& in) {
    Header hdr = read_header(in, "dhgr");
    std::vector<Hyperarc> arcs;
    arcs.reserve(hdr.m);
    std::string line;
    for (std::size_t i = 0; i < hdr.m; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("expected " + std::to_string(hdr.m) + " arc lines, got " +
                             std::to_string(i));
        auto bar = line.find('|');
        if (bar == std::string::npos)
            throw ParseError("line " + std::to_string(i + 2) + ": missing '|' separator");
        Hyperarc a;
        std::istringstream tail_ss(line.substr(0, bar));
        if (hdr.weighted && !(tail_ss >> a.weight))
            throw ParseError("line " + std::to_string(i + 2) + ": missing arc weight");
        a.tail = parse_vertices(tail_ss, hdr.n, i + 2);
        std::istringstream head_ss(line.substr(bar + 1));
        a.head = parse_vertices(head_ss, hdr.n, i + 2);
        arcs.push_back(std::move(a));
    }
    try {
        return DirectedHypergraph(hdr.n, std::move(arcs), hdr.weighted);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

void write_directed_hypergraph(std::ostream& out, const DirectedHypergraph& d) {
    out << "dhgr " << d.vertex_count() << ' ' << d.arc_count() << ' ' << (d.weighted() ? 1 : 0)
        << '\n';
    out << std::setprecision(17);
    for (const auto& a : d.arcs()) {
        if (d.weighted()) out << a.weight << ' ';
        for (Vertex v : a.tail) out << v << ' ';
        out << '|';
        for (Vertex v : a.head) out << ' ' << v;
        out << '\n';
    }
}

namespace {

template <typename T, typename Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return reader(in);
}

template <typename T, typename Writer>
void write_file(const std::string& path, const T& value, Writer writer) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    writer(out, value);
}

}  // namespace

Hypergraph read_hypergraph_file(const std::string& path) {
    return read_file<Hypergraph>(path, [](std::istream& in) { return read_hypergraph(in); });
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
    write_file(path, h, [](std::ostream& out, const Hypergraph& g) { write_hypergraph(out, g); });
}

DirectedHypergraph read_directed_hypergraph_file(const std::string& path) {
    return read_file<DirectedHypergraph>(
        path, [](std::istream& in) { return read_directed_hypergraph(in); });
}

void write_directed_hypergraph_file(const std::string& path, const DirectedHypergraph& d) {
    write_file(path, d,
               [](std::ostream& out, const DirectedHypergraph& g) { write_directed_hypergraph(out, g); });
}

}  // namespace hypersparse
