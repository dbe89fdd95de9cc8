#include "avd/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "avd/error.hpp"

namespace avd::io {

namespace {

/// Splits the next meaningful line into whitespace separated words.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& words) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto start = line.find_first_not_of(" \t");
            if (start == std::string::npos || line[start] == '#') continue;
            std::istringstream ss(line);
            words.clear();
            for (std::string w; ss >> w;) words.push_back(w);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + what);
    }

    int to_int(const std::string& word) const {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(word, &used);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + word + "'");
        }
        if (used != word.size()) fail("expected an integer, got '" + word + "'");
        return value;
    }

    void expect(const std::vector<std::string>& words, const char* keyword, std::size_t arity) const {
        if (words.front() != keyword) fail(std::string("expected '") + keyword + "', got '" + words.front() + "'");
        if (words.size() != arity + 1)
            fail(std::string("'") + keyword + "' takes " + std::to_string(arity) + " values");
    }

private:
    std::istream& in_;
    int number_ = 0;
};

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> w;
    if (!r.next(w)) r.fail("missing 'vertices N' header");
    r.expect(w, "vertices", 1);
    const int n = r.to_int(w[1]);
    if (n < 0) r.fail("negative vertex count");
    std::vector<std::pair<int, int>> edges;
    while (r.next(w)) {
        r.expect(w, "edge", 2);
        const int a = r.to_int(w[1]), b = r.to_int(w[2]);
        if (a < 0 || b < 0 || a >= n || b >= n) r.fail("edge endpoint out of range");
        if (a == b) r.fail("loop edge");
        edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "vertices " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

TotalColoring read_coloring(std::istream& in, const Graph& g) {
    LineReader r(in);
    std::vector<std::string> w;
    if (!r.next(w)) r.fail("missing 'colors K' header");
    r.expect(w, "colors", 1);
    const int k = r.to_int(w[1]);
    if (k < 0) r.fail("negative palette");
    TotalColoring f = TotalColoring::for_graph(g, k);
    auto color = [&](const std::string& word) {
        const int c = r.to_int(word);
        if (c < 0) r.fail("negative color");
        return c;
    };
    while (r.next(w)) {
        if (w.front() == "vcolor") {
            r.expect(w, "vcolor", 2);
            const int v = r.to_int(w[1]);
            if (!g.has_vertex(v)) r.fail("unknown vertex " + w[1]);
            f.set_vertex(v, color(w[2]));
        } else {
            r.expect(w, "ecolor", 3);
            const int a = r.to_int(w[1]), b = r.to_int(w[2]);
            if (!g.has_vertex(a) || !g.has_vertex(b)) r.fail("unknown vertex");
            auto e = g.edge_id(a, b);
            if (!e) r.fail("no edge " + w[1] + "-" + w[2] + " in the graph");
            f.set_edge(*e, color(w[3]));
        }
    }
    return f;
}

TotalColoring parse_coloring(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return read_coloring(in, g);
}

void write_coloring(std::ostream& out, const Graph& g, const TotalColoring& f) {
    if (!f.matches(g)) throw Error(ErrorCode::LengthMismatch, "coloring does not fit the graph");
    out << "colors " << f.palette() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "vcolor " << v << ' ' << f.vertex(v) << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "ecolor " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << f.edge(e) << '\n';
}

std::string format_coloring(const Graph& g, const TotalColoring& f) {
    std::ostringstream os;
    write_coloring(os, g, f);
    return os.str();
}

std::string format_provenance(const Corona& corona) {
    const auto& prov = corona.provenance;
    std::ostringstream os;
    for (Vertex v = 0; v < corona.graph.vertex_count(); ++v) {
        const VertexOrigin& o = prov.vertex_origin[static_cast<std::size_t>(v)];
        os << "vertex " << v << " origin ";
        if (o.kind == OriginKind::Center)
            os << "center " << o.center << '\n';
        else
            os << "outer " << o.copy << ' ' << o.outer_vertex << '\n';
    }
    for (EdgeId e = 0; e < corona.graph.edge_count(); ++e) {
        const EdgeClass& c = prov.edge_class[static_cast<std::size_t>(e)];
        os << "edge " << corona.graph.edge(e).u << ' ' << corona.graph.edge(e).v << " class ";
        switch (c.kind) {
            case EdgeClassKind::CenterEdge: os << "center\n"; break;
            case EdgeClassKind::CopyEdge: os << "copy " << c.copy << '\n'; break;
            case EdgeClassKind::FanEdge: os << "fan " << c.copy << '\n'; break;
        }
    }
    return os.str();
}

std::string format_dot(const Graph& g, const TotalColoring* f) {
    if (f && !f->matches(g)) throw Error(ErrorCode::LengthMismatch, "coloring does not fit the graph");
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (f) os << " [label=\"" << v << ":" << f->vertex(v) << "\"]";
        os << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (f) os << " [label=\"" << f->edge(e) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    return in;
}

}  // namespace

Graph load_graph(const std::filesystem::path& path) {
    auto in = open(path);
    try {
        return read_graph(in);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

TotalColoring load_coloring(const std::filesystem::path& path, const Graph& g) {
    auto in = open(path);
    try {
        return read_coloring(in, g);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

void save_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
}

}  // namespace avd::io
