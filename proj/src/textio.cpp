#include "cdiag/textio.hpp"

#include <fstream>
#include <sstream>

namespace cdiag {

Diagram parse_diagram_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        auto fail = [&](const std::string& why) -> error {
            return error(errc::format_error, "line " + std::to_string(lineno) + ": " + why);
        };
        if (word == "vertices") {
            if (n >= 0) throw fail("vertices given twice");
            if (!(ls >> n) || n < 0) throw fail("expected a vertex count");
        } else if (word == "edge") {
            if (n < 0) throw fail("edge before vertices");
            Edge e;
            if (!(ls >> e.tail >> e.head)) throw fail("expected 'edge TAIL HEAD [WEIGHT]'");
            if (!(ls >> e.weight)) e.weight = 1;
            edges.push_back(e);
        } else {
            throw fail("unknown directive '" + word + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#') throw fail("trailing text '" + extra + "'");
    }
    if (n < 0) throw error(errc::format_error, "missing 'vertices N' line");
    return new_diagram(n, edges);
}

Diagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram_text(buf.str());
}

std::string print_diagram_text(const Diagram& d) {
    std::ostringstream out;
    out << "vertices " << d.size() << "\n";
    for (const Edge& e : d.edges()) out << "edge " << e.tail << " " << e.head << " " << e.weight << "\n";
    return out.str();
}

void write_diagram_file(const std::string& path, const Diagram& d) {
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot write " + path);
    out << print_diagram_text(d);
    if (!out) throw error(errc::io_error, "write failed for " + path);
}

std::string to_dot(const Diagram& d) {
    std::ostringstream out;
    out << "digraph diagram {\n";
    for (int v = 0; v < d.size(); ++v) out << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const Edge& e : d.edges()) {
        out << "  v" << e.tail << " -> v" << e.head;
        if (e.weight != 1) out << " [label=\"" << e.weight << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cdiag
