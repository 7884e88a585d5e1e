#include "tsc/io.hpp"

#include <sstream>

#include <json.hpp>

namespace tsc {

using nlohmann::json;

namespace {

const char* kFormat = "tsc-complex";
const int kVersion = 1;

json colors_to_json(const std::vector<Color>& cs) {
    std::string s;
    for (auto c : cs) s += color_letter(c);
    return s;
}

std::vector<Color> colors_from_json(const std::string& s) {
    std::vector<Color> out;
    for (char c : s) {
        if (c == 'r')
            out.push_back(Color::red);
        else if (c == 'g')
            out.push_back(Color::green);
        else if (c == 'b')
            out.push_back(Color::blue);
        else
            throw Error("bad color letter in document");
    }
    return out;
}

}  // namespace

std::string complex_to_json(const SurfaceComplex& c, int indent) {
    json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["vertices"] = c.num_vertices();
    json edges = json::array();
    for (std::size_t e = 0; e < c.num_edges(); ++e)
        edges.push_back({c.edge(e)[0], c.edge(e)[1]});
    j["edges"] = std::move(edges);
    j["faces"] = c.faces();
    if (c.vertex_coloring) j["vertex_coloring"] = colors_to_json(*c.vertex_coloring);
    if (c.edge_coloring) j["edge_coloring"] = colors_to_json(*c.edge_coloring);
    if (c.face_coloring) j["face_coloring"] = colors_to_json(*c.face_coloring);
    return j.dump(indent) + "\n";
}

SurfaceComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("format", "") != kFormat) throw Error("not a tsc-complex document");
    if (j.value("version", 0) != kVersion) throw Error("unsupported tsc-complex version");
    std::vector<std::array<std::size_t, 2>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0), e.at(1)});
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& f : j.at("faces")) faces.push_back(f.get<std::vector<std::size_t>>());
    SurfaceComplex c(j.at("vertices").get<std::size_t>(), std::move(edges), std::move(faces));
    if (j.contains("vertex_coloring"))
        c.vertex_coloring = colors_from_json(j["vertex_coloring"].get<std::string>());
    if (j.contains("edge_coloring"))
        c.edge_coloring = colors_from_json(j["edge_coloring"].get<std::string>());
    if (j.contains("face_coloring"))
        c.face_coloring = colors_from_json(j["face_coloring"].get<std::string>());
    c.validate();
    return c;
}

std::string complex_to_dot(const SurfaceComplex& c) {
    std::ostringstream os;
    os << "graph complex {\n";
    static const char* names[3] = {"red", "green", "blue"};
    for (std::size_t v = 0; v < c.num_vertices(); ++v) {
        os << "  v" << v;
        if (c.vertex_coloring)
            os << " [color=" << names[std::size_t((*c.vertex_coloring)[v])] << "]";
        os << ";\n";
    }
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
        os << "  v" << c.edge(e)[0] << " -- v" << c.edge(e)[1];
        if (c.edge_coloring) os << " [color=" << names[std::size_t((*c.edge_coloring)[e])] << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

json hypergraph_json(const Hypergraph& h) {
    json j;
    j["vertices"] = h.num_vertices;
    j["rank2_edges"] = json::array();
    for (const auto& e : h.rank2_edges) j["rank2_edges"].push_back({e[0], e[1]});
    j["rank3_edges"] = json::array();
    for (const auto& e : h.rank3_edges) j["rank3_edges"].push_back({e[0], e[1], e[2]});
    if (h.edge_coloring) j["edge_coloring"] = colors_to_json(*h.edge_coloring);
    return j;
}

}  // namespace

std::string hypergraph_to_json(const Hypergraph& h, int indent) {
    json j = hypergraph_json(h);
    j["format"] = "tsc-hypergraph";
    j["version"] = kVersion;
    return j.dump(indent) + "\n";
}

std::string promoted_to_json(const PromotedHypergraph& ph, int indent) {
    json j;
    j["format"] = "tsc-hypergraph";
    j["version"] = kVersion;
    j["hypergraph"] = hypergraph_json(ph.h);
    json cells = json::array();
    for (const auto& c : ph.cells) {
        json jc;
        jc["source_face"] = c.source_face;
        jc["hyperedges"] = c.hyperedges;
        jc["inner_vertices"] = c.inner_vertices;
        jc["inner_edges"] = c.inner_edges;
        cells.push_back(jc);
    }
    j["provenance"]["cells"] = std::move(cells);
    j["provenance"]["colex_vertices"] = ph.n_colex_vertices;
    return j.dump(indent) + "\n";
}

std::string tscc_to_json(const TsccComplex& t, int indent) {
    json j;
    j["format"] = "tsc-hypergraph";
    j["version"] = kVersion;
    j["hypergraph"] = hypergraph_json(t.h);
    json prov;
    prov["triangle_of_vertex"] = json::array();
    for (const auto& tri : t.triangle_qubits)
        prov["triangle_of_vertex"].push_back({tri[0], tri[1], tri[2]});
    prov["face_of_qubit"] = t.face_of_qubit;
    j["provenance"] = std::move(prov);
    return j.dump(indent) + "\n";
}

std::string ssurf_to_json(const SsurfComplex& s, int indent) {
    json j;
    j["format"] = "tsc-subsystem-surface";
    j["version"] = kVersion;
    j["qubits"] = s.n_qubits;
    json tris = json::array();
    for (const auto& t : s.triangles) {
        json jt;
        jt["qubits"] = {t.center, t.m1, t.m2};
        jt["vertex"] = t.vertex;
        jt["corner_face"] = t.corner_face;
        jt["type"] = t.x_type ? "X" : "Z";
        tris.push_back(jt);
    }
    j["triangles"] = std::move(tris);
    return j.dump(indent) + "\n";
}

std::string code_export_listing(const SubsystemCode& code) {
    std::ostringstream os;
    os << "# n_qubits " << code.n_qubits << "\n";
    os << "# stabilizer generators: " << code.num_stabilizer_gens() << "\n";
    for (std::size_t i = 0; i < code.num_stabilizer_gens(); ++i) {
        const auto& c = code.checks[code.gen_checks[i]];
        os << "S" << i + 1 << " ";
        if (c.label.kind == StabLabel::Kind::face)
            os << "[face=" << c.label.face << ",type=" << c.label.type << "] ";
        else
            os << "[homology=" << c.label.homology_index << "] ";
        os << c.op.to_string() << "\n";
    }
    os << "# gauge generators: " << code.gauge_gens.size() << "\n";
    for (std::size_t i = 0; i < code.gauge_gens.size(); ++i)
        os << "G" << i + 1 << " " << code.gauge_gens[i].to_string() << "\n";
    for (std::size_t i = 0; i < code.logicals.size(); ++i) {
        os << "LX" << i + 1 << " " << code.logicals[i].first.to_string() << "\n";
        os << "LZ" << i + 1 << " " << code.logicals[i].second.to_string() << "\n";
    }
    return os.str();
}

std::string report_to_json(const ParameterReport& rep, int indent) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["r"] = rep.r;
    j["s"] = rep.s;
    if (rep.distance) j["d"] = *rep.distance;
    if (rep.distance_bound) j["d_lower_bound"] = *rep.distance_bound;
    j["distance_budget_exceeded"] = rep.distance_budget_exceeded;
    j["notes"] = rep.notes;
    j["failures"] = rep.failures;
    j["pass"] = rep.pass();
    return j.dump(indent) + "\n";
}

}  // namespace tsc
