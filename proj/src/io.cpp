#include "ppcs/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ppcs {

namespace {

bool skip_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

ExternalId parse_vertex_token(const std::string& tok, std::size_t lineno) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, "expected non-negative vertex id, got '" + tok + "'");
    return std::stoull(tok);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return in;
}

}  // namespace

AttributedPublicGraph load_public_graph(std::istream& edge_source, std::istream& attr_source) {
    AttributedPublicGraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(edge_source, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) throw ParseError(lineno, "edge line needs two vertex ids");
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "' on edge line");
        ExternalId ea = parse_vertex_token(a, lineno);
        ExternalId eb = parse_vertex_token(b, lineno);
        if (ea == eb) throw ParseError(lineno, "self-loop on vertex " + a);
        // interning order is part of the deterministic id assignment
        VertexId u = g.intern_vertex(ea);
        VertexId v = g.intern_vertex(eb);
        g.add_edge(u, v);
    }

    lineno = 0;
    while (std::getline(attr_source, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        std::string idtok, attrtok;
        if (!(ls >> idtok >> attrtok))
            throw ParseError(lineno, "attribute line needs '<vertex> <attr>[,<attr>...]'");
        VertexId v = g.intern_vertex(parse_vertex_token(idtok, lineno));
        std::istringstream as(attrtok);
        std::string name;
        while (std::getline(as, name, ',')) {
            if (name.empty()) throw ParseError(lineno, "empty attribute name");
            g.add_attr(v, g.intern_attr(name));
        }
    }
    return g;
}

AttributedPublicGraph load_public_graph_files(const std::string& edge_path,
                                              const std::string& attr_path) {
    auto ein = open_or_throw(edge_path);
    auto ain = open_or_throw(attr_path);
    return load_public_graph(ein, ain);
}

OverlayMap load_private_overlays(std::istream& source, AttributedPublicGraph& g) {
    OverlayMap overlays;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(source, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "P") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, "P record needs '<owner> <neighbor>'");
            ExternalId eo = parse_vertex_token(a, lineno);
            ExternalId en = parse_vertex_token(b, lineno);
            if (eo == en) throw ParseError(lineno, "private self-loop on vertex " + a);
            auto owner = g.find_vertex(eo);
            auto nbr = g.find_vertex(en);
            if (!owner || !nbr)
                throw ParseError(lineno, "private edge endpoint not in public vertex set");
            if (g.has_edge(*owner, *nbr))
                throw ParseError(lineno, "private edge (" + a + "," + b + ") duplicates a public edge");
            auto& ov = overlays[*owner];
            ov.owner = *owner;
            if (ov.has_private_neighbor(*nbr))
                continue;  // duplicate private record
            ov.private_neighbors.insert(
                std::lower_bound(ov.private_neighbors.begin(), ov.private_neighbors.end(), *nbr),
                *nbr);
        } else if (kind == "A") {
            std::string a, b, name;
            if (!(ls >> a >> b >> name))
                throw ParseError(lineno, "A record needs '<owner> <vertex> <attr>'");
            auto owner = g.find_vertex(parse_vertex_token(a, lineno));
            auto v = g.find_vertex(parse_vertex_token(b, lineno));
            if (!owner || !v)
                throw ParseError(lineno, "A record references a vertex not in the public graph");
            AttrId attr = g.intern_attr(name);
            if (g.has_attr(*v, attr))
                throw ParseError(lineno,
                                 "private attribute '" + name + "' duplicates a public attribute of vertex " + b);
            auto& ov = overlays[*owner];
            ov.owner = *owner;
            auto& set = ov.private_attrs[*v];
            auto it = std::lower_bound(set.begin(), set.end(), attr);
            if (it == set.end() || *it != attr) set.insert(it, attr);
        } else {
            throw ParseError(lineno, "unknown record kind '" + kind + "'");
        }
    }
    return overlays;
}

OverlayMap load_private_overlays_file(const std::string& path, AttributedPublicGraph& g) {
    auto in = open_or_throw(path);
    return load_private_overlays(in, g);
}

void write_edges(std::ostream& out, const AttributedPublicGraph& g) {
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) out << g.external_id(u) << ' ' << g.external_id(v) << '\n';
}

void write_attrs(std::ostream& out, const AttributedPublicGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& attrs = g.attrs(v);
        if (attrs.empty()) continue;
        out << g.external_id(v) << '\t';
        for (std::size_t i = 0; i < attrs.size(); ++i) {
            if (i) out << ',';
            out << g.attr_name(attrs[i]);
        }
        out << '\n';
    }
}

void write_overlays(std::ostream& out, const AttributedPublicGraph& g, const OverlayMap& overlays) {
    // Owners emitted in ascending external id so identical inputs serialize
    // byte-identically.
    std::vector<VertexId> owners;
    owners.reserve(overlays.size());
    for (const auto& [owner, ov] : overlays) owners.push_back(owner);
    std::sort(owners.begin(), owners.end(), [&](VertexId a, VertexId b) {
        return g.external_id(a) < g.external_id(b);
    });
    for (VertexId owner : owners) {
        const auto& ov = overlays.at(owner);
        for (VertexId nbr : ov.private_neighbors)
            out << "P " << g.external_id(owner) << ' ' << g.external_id(nbr) << '\n';
        for (const auto& [v, attrs] : ov.private_attrs)
            for (AttrId a : attrs)
                out << "A " << g.external_id(owner) << ' ' << g.external_id(v) << ' '
                    << g.attr_name(a) << '\n';
    }
}

std::vector<std::vector<VertexId>> load_ground_truth(std::istream& source,
                                                     const AttributedPublicGraph& g) {
    std::vector<std::vector<VertexId>> communities;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(source, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<VertexId> members;
        while (ls >> tok) {
            auto v = g.find_vertex(parse_vertex_token(tok, lineno));
            if (v) members.push_back(*v);  // members outside the graph are dropped
        }
        if (!members.empty()) {
            detail::sort_unique(members);
            communities.push_back(std::move(members));
        }
    }
    return communities;
}

std::vector<std::vector<VertexId>> load_ground_truth_file(const std::string& path,
                                                          const AttributedPublicGraph& g) {
    auto in = open_or_throw(path);
    return load_ground_truth(in, g);
}

std::vector<VertexId> load_query_file(const std::string& path, const AttributedPublicGraph& g) {
    auto in = open_or_throw(path);
    std::vector<VertexId> queries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) queries.push_back(g.require_vertex(parse_vertex_token(tok, lineno)));
    }
    return queries;
}

}  // namespace ppcs
