#include "qhx/text_io.hpp"

#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace qhx {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Quiver parse_quiver(std::istream& in) {
    std::string line;
    int lineno = 0;

    QuiverKind kind = QuiverKind::quiver;
    std::string name;
    bool have_header = false;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::map<std::string, std::string> reflection;
    std::set<std::string> vertex_ids, edge_ids;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        if (!have_header) {
            if (tok.size() != 2 || (tok[0] != "quiver" && tok[0] != "digraph" && tok[0] != "graph"))
                throw ParseError(lineno, "expected header 'quiver|digraph|graph <name>'");
            if (tok[0] == "quiver") kind = QuiverKind::quiver;
            if (tok[0] == "digraph") kind = QuiverKind::digraph;
            if (tok[0] == "graph") kind = QuiverKind::undirected;
            name = tok[1];
            have_header = true;
            continue;
        }

        if (tok[0] == "v") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'v <id>'");
            if (!vertex_ids.insert(tok[1]).second)
                throw ParseError(lineno, "duplicate vertex id '" + tok[1] + "'");
            vertices.push_back(tok[1]);
        } else if (tok[0] == "e") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'e <id> <source> <target>'");
            const std::string &id = tok[1], &src = tok[2], &dst = tok[3];
            if (!vertex_ids.count(src))
                throw ParseError(lineno, "undeclared vertex '" + src + "'");
            if (!vertex_ids.count(dst))
                throw ParseError(lineno, "undeclared vertex '" + dst + "'");
            if (!edge_ids.insert(id).second)
                throw ParseError(lineno, "duplicate edge id '" + id + "'");
            edges.push_back({id, src, dst});
            if (kind == QuiverKind::undirected) {
                if (src == dst) {
                    reflection[id] = id;
                } else {
                    std::string partner = id + "~";
                    if (!edge_ids.insert(partner).second)
                        throw ParseError(lineno, "edge id '" + partner + "' already taken");
                    edges.push_back({partner, dst, src});
                    reflection[id] = partner;
                    reflection[partner] = id;
                }
            }
        } else if (tok[0] == "b") {
            // blow-up bijection trailer, not part of the structure
            continue;
        } else {
            throw ParseError(lineno, "unrecognized directive '" + tok[0] + "'");
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");

    return Quiver(kind, std::move(name), std::move(vertices), std::move(edges),
                  std::move(reflection));
}

Quiver parse_quiver(const std::string& text) {
    std::istringstream in(text);
    return parse_quiver(in);
}

std::string serialize_quiver(const Quiver& g) {
    std::ostringstream out;
    out << to_string(g.kind()) << " " << (g.name().empty() ? "g" : g.name()) << "\n";
    for (const auto& v : g.vertex_ids()) out << "v " << v << "\n";
    if (g.kind() == QuiverKind::undirected) {
        std::set<std::string> done;
        for (const Edge& e : g.edges()) {
            const std::string& rep = g.orbit_rep(e.id);
            if (!done.insert(rep).second) continue;
            const Edge& r = g.edge(rep);
            out << "e " << r.id << " " << r.src << " " << r.dst << "\n";
        }
    } else {
        for (const Edge& e : g.edges())
            out << "e " << e.id << " " << e.src << " " << e.dst << "\n";
    }
    return out.str();
}

}  // namespace qhx
