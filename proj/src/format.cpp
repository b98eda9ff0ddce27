#include "flatcover/format.hpp"

#include <sstream>

namespace flatcover {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("c", 0) == 0 && (line.size() == 1 || line[1] == ' ')) continue;
        return true;
    }
    return false;
}

}  // namespace

Hypergraph parse_hg(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing 'p hg' header");
    std::istringstream hs(line);
    std::string p, hg;
    int n = 0, m = 0;
    if (!(hs >> p >> hg >> n >> m) || p != "p" || hg != "hg" || n < 0 || m < 0)
        throw ParseError("malformed header: " + line);

    Hypergraph h;
    h.n = n;
    h.edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) throw ParseError("expected edge line");
        std::istringstream es(line);
        std::string tag;
        if (!(es >> tag) || tag != "e") throw ParseError("malformed edge line: " + line);
        Edge e;
        int v;
        while (es >> v) {
            if (v < 1 || v > n) throw ParseError("vertex out of range: " + std::to_string(v));
            if (!e.empty() && v <= e.back())
                throw ParseError("edge vertices must be strictly ascending: " + line);
            e.push_back(v);
        }
        if (!es.eof()) throw ParseError("malformed edge line: " + line);
        h.edges.push_back(std::move(e));
    }
    return h;
}

Hypergraph parse_hg(const std::string& text) {
    std::istringstream in(text);
    return parse_hg(in);
}

std::string serialize_hg(const Hypergraph& h) {
    std::ostringstream out;
    out << "p hg " << h.n << " " << h.edges.size() << "\n";
    for (const Edge& e : h.edges) {
        out << "e";
        for (Vertex v : e) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Cover parse_cover(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing 's cover' header");
    std::istringstream hs(line);
    std::string s, cover;
    int count = 0;
    if (!(hs >> s >> cover >> count) || s != "s" || cover != "cover" || count < 0)
        throw ParseError("malformed cover header: " + line);
    Cover c;
    for (int i = 0; i < count; ++i) {
        if (!next_content_line(in, line)) throw ParseError("expected 'i' line");
        std::istringstream is(line);
        std::string tag;
        int idx;
        if (!(is >> tag >> idx) || tag != "i" || idx < 1)
            throw ParseError("malformed index line: " + line);
        c.edge_indices.push_back(idx);
    }
    return c;
}

Cover parse_cover(const std::string& text) {
    std::istringstream in(text);
    return parse_cover(in);
}

std::string serialize_cover(const Cover& c) {
    std::ostringstream out;
    out << "s cover " << c.edge_indices.size() << "\n";
    for (int idx : c.edge_indices) out << "i " << idx << "\n";
    return out.str();
}

std::string serialize_trace(const GroupTrace& trace) {
    std::ostringstream out;
    for (const GroupStep& step : trace.steps) {
        out << "g " << step.grouped_set.size() << " " << step.fresh_vertex << " :";
        for (Vertex v : step.grouped_set) out << " " << v;
        out << " ;";
        for (size_t post = 0; post < step.preimage.size(); ++post)
            out << " " << post + 1 << ":" << step.preimage[post] + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace flatcover
