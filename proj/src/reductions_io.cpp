#include <sstream>

#include "flatcover/format.hpp"
#include "flatcover/reductions.hpp"

namespace flatcover {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("c ", 0) == 0 || line == "c") continue;
        return true;
    }
    return false;
}

}  // namespace

CCInstance parse_cc(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing 'p cc' header");
    std::istringstream hs(line);
    std::string p, cc;
    CCInstance inst;
    size_t nc1 = 0, nc2 = 0;
    if (!(hs >> p >> cc >> inst.d >> inst.k >> inst.num_vars >> nc1 >> nc2) || p != "p" || cc != "cc")
        throw ParseError("malformed cc header: " + line);
    for (size_t i = 0; i < nc1; ++i) {
        if (!next_content_line(in, line)) throw ParseError("expected c1 line");
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag) || tag != "c1") throw ParseError("malformed c1 line: " + line);
        Constraint1 cons;
        std::string lit;
        while (is >> lit) {
            const size_t colon = lit.find(':');
            if (colon == std::string::npos) throw ParseError("malformed literal: " + lit);
            cons.push_back({std::stoi(lit.substr(0, colon)), std::stoi(lit.substr(colon + 1))});
        }
        inst.c1.push_back(std::move(cons));
    }
    for (size_t i = 0; i < nc2; ++i) {
        if (!next_content_line(in, line)) throw ParseError("expected c2 line");
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag) || tag != "c2") throw ParseError("malformed c2 line: " + line);
        Constraint2 cons;
        int idx;
        while (is >> idx) cons.push_back(idx - 1);  // 1-based on disk
        inst.c2.push_back(std::move(cons));
    }
    inst.check();
    return inst;
}

CCInstance parse_cc(const std::string& text) {
    std::istringstream in(text);
    return parse_cc(in);
}

std::string serialize_cc(const CCInstance& inst) {
    std::ostringstream out;
    out << "p cc " << inst.d << " " << inst.k << " " << inst.num_vars << " " << inst.c1.size()
        << " " << inst.c2.size() << "\n";
    for (const Constraint1& c : inst.c1) {
        out << "c1";
        for (const Literal& lit : c) out << " " << lit.var << ":" << lit.bit;
        out << "\n";
    }
    for (const Constraint2& c : inst.c2) {
        out << "c2";
        for (int idx : c) out << " " << idx + 1;
        out << "\n";
    }
    return out.str();
}

MDMInstance parse_mdm(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing 'p mdm' header");
    std::istringstream hs(line);
    std::string p, mdm;
    MDMInstance inst;
    size_t count = 0;
    if (!(hs >> p >> mdm >> inst.n >> inst.s >> count >> inst.l) || p != "p" || mdm != "mdm")
        throw ParseError("malformed mdm header: " + line);
    for (size_t i = 0; i < count; ++i) {
        if (!next_content_line(in, line)) throw ParseError("expected t line");
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag) || tag != "t") throw ParseError("malformed tuple line: " + line);
        std::vector<int> t;
        int v;
        while (is >> v) t.push_back(v);
        inst.tuples.push_back(std::move(t));
    }
    inst.check();
    return inst;
}

MDMInstance parse_mdm(const std::string& text) {
    std::istringstream in(text);
    return parse_mdm(in);
}

std::string serialize_mdm(const MDMInstance& inst) {
    std::ostringstream out;
    out << "p mdm " << inst.n << " " << inst.s << " " << inst.tuples.size() << " " << inst.l
        << "\n";
    for (const auto& t : inst.tuples) {
        out << "t";
        for (int v : t) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace flatcover
