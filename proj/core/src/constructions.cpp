#include "tsc/constructions.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace tsc {

namespace {

/* flag id for incidence (endpoint t of edge e, side s) */
std::size_t flag_id(std::size_t e, std::size_t s, std::size_t t) { return e * 4 + s * 2 + t; }

}  // namespace

FlagColex colex_from_graph(const SurfaceComplex& g) {
    g.validate();
    FlagColex out;
    out.source = g;
    std::size_t E = g.num_edges();
    for (std::size_t e = 0; e < E; ++e) {
        auto [f1, f2] = g.edge_faces(e);
        if (f1 == f2) throw ConstructionError("edge with one face on both sides");
    }
    // flags
    out.flags.resize(4 * E);
    for (std::size_t e = 0; e < E; ++e)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t)
                out.flags[flag_id(e, s, t)] = {g.edge(e)[t], e, g.edge_faces(e)[s]};
    auto lookup = [&](std::size_t v, std::size_t e, std::size_t f) {
        std::size_t s = g.edge_faces(e)[0] == f ? 0 : 1;
        std::size_t t = g.edge(e)[0] == v ? 0 : 1;
        return flag_id(e, s, t);
    };

    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<FlagColex::EdgeKind> kinds;
    // E_v edges: one per (edge, side)
    auto ev_id = [&](std::size_t e, std::size_t s) { return 2 * e + s; };
    for (std::size_t e = 0; e < E; ++e)
        for (std::size_t s = 0; s < 2; ++s) {
            edges.push_back({flag_id(e, s, 0), flag_id(e, s, 1)});
            kinds.push_back(FlagColex::EdgeKind::ev);
        }
    // E_e edges: one per face corner
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> corner_id;
    std::vector<std::vector<std::size_t>> face_corners(g.num_faces());
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto& cyc = g.face(f);
        const auto& walk = g.face_vertex_walk(f);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t eprev = cyc[(i + cyc.size() - 1) % cyc.size()];
            std::size_t enext = cyc[i];
            std::size_t v = walk[i];
            std::size_t id = edges.size();
            edges.push_back({lookup(v, eprev, f), lookup(v, enext, f)});
            kinds.push_back(FlagColex::EdgeKind::ee);
            corner_id[{v, std::min(eprev, enext), std::max(eprev, enext)}] = id;
            face_corners[f].push_back(id);
        }
    }
    // E_f edges: one per (edge, endpoint)
    std::size_t ef_base = edges.size();
    auto ef_id = [&](std::size_t e, std::size_t t) { return ef_base + 2 * e + t; };
    for (std::size_t e = 0; e < E; ++e)
        for (std::size_t t = 0; t < 2; ++t) {
            edges.push_back({flag_id(e, 0, t), flag_id(e, 1, t)});
            kinds.push_back(FlagColex::EdgeKind::ef);
        }

    std::vector<std::vector<std::size_t>> faces;
    std::vector<FlagColex::FaceKind> fkind;
    std::vector<std::size_t> fsource;
    std::vector<Color> fcolor;
    // f-faces: alternate corner and E_v edges around the source face
    out.fface_of.resize(g.num_faces());
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto& cyc = g.face(f);
        std::vector<std::size_t> cycle;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            cycle.push_back(face_corners[f][i]);
            cycle.push_back(ev_id(cyc[i], g.edge_faces(cyc[i])[0] == f ? 0 : 1));
        }
        out.fface_of[f] = faces.size();
        faces.push_back(std::move(cycle));
        fkind.push_back(FlagColex::FaceKind::fface);
        fsource.push_back(f);
        fcolor.push_back(Color::green);
    }
    // e-faces: [E_v side0, E_f at endpoint1, E_v side1, E_f at endpoint0]
    out.eface_of.resize(E);
    for (std::size_t e = 0; e < E; ++e) {
        out.eface_of[e] = faces.size();
        faces.push_back({ev_id(e, 0), ef_id(e, 1), ev_id(e, 1), ef_id(e, 0)});
        fkind.push_back(FlagColex::FaceKind::eface);
        fsource.push_back(e);
        fcolor.push_back(Color::blue);
    }
    // v-faces: alternate corners and E_f edges around the vertex rotation
    out.vface_of.resize(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto rot = g.vertex_rotation_corners(v);
        std::size_t d = rot.size();
        std::vector<std::size_t> cycle;
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t a = rot[i].edge, b = rot[(i + 1) % d].edge;
            cycle.push_back(corner_id.at({v, std::min(a, b), std::max(a, b)}));
            std::size_t t = g.edge(b)[0] == v ? 0 : 1;
            cycle.push_back(ef_id(b, t));
        }
        out.vface_of[v] = faces.size();
        faces.push_back(std::move(cycle));
        fkind.push_back(FlagColex::FaceKind::vface);
        fsource.push_back(v);
        fcolor.push_back(Color::red);
    }

    out.colex = SurfaceComplex(4 * E, std::move(edges), std::move(faces));
    out.colex.face_coloring = std::move(fcolor);
    std::vector<Color> ecolor;
    for (auto k : kinds)
        ecolor.push_back(k == FlagColex::EdgeKind::ev     ? Color::red
                         : k == FlagColex::EdgeKind::ee   ? Color::blue
                                                          : Color::green);
    out.colex.edge_coloring = std::move(ecolor);
    out.edge_kind = std::move(kinds);
    out.face_kind = std::move(fkind);
    out.face_source = std::move(fsource);
    out.colex.validate_two_colex();
    return out;
}

std::size_t TsccComplex::corner(std::size_t v, std::size_t face) const {
    for (std::size_t s = 0; s < 3; ++s)
        if (face_of_qubit[3 * v + s] == face) return 3 * v + s;
    throw Error("corner lookup: vertex is not on that face");
}

TsccComplex vertex_expand(const SurfaceComplex& colex) {
    colex.validate_two_colex();
    TsccComplex out;
    out.source = colex;
    std::size_t nv = colex.num_vertices(), ne = colex.num_edges();
    out.triangle_qubits.resize(nv);
    out.face_of_qubit.resize(3 * nv);
    out.vertex_of_qubit.resize(3 * nv);
    for (std::size_t v = 0; v < nv; ++v) {
        auto fs = colex.vertex_faces(v);
        if (fs.size() != 3) throw ConstructionError("2-colex vertex not on three faces");
        std::sort(fs.begin(), fs.end());
        for (std::size_t s = 0; s < 3; ++s) {
            out.triangle_qubits[v][s] = 3 * v + s;
            out.face_of_qubit[3 * v + s] = fs[s];
            out.vertex_of_qubit[3 * v + s] = v;
        }
    }
    Hypergraph h;
    h.num_vertices = 3 * nv;
    h.rank2_edges.resize(2 * ne);
    std::vector<Color> ecolor(2 * ne + nv, Color::blue);
    out.side_edges.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        auto [u, w] = colex.edge(e);
        for (std::size_t s = 0; s < 2; ++s) {
            std::size_t f = colex.edge_faces(e)[s];
            h.rank2_edges[2 * e + s] = {out.corner(u, f), out.corner(w, f)};
            out.side_edges[e][s] = 2 * e + s;
        }
    }
    for (std::size_t v = 0; v < nv; ++v)
        h.rank3_edges.push_back(
            {out.triangle_qubits[v][0], out.triangle_qubits[v][1], out.triangle_qubits[v][2]});
    // faces of the expanded complex, one per source face; side edges colored
    // red/green alternately along each boundary
    out.hface_qubits.resize(colex.num_faces());
    out.hface_edges.resize(colex.num_faces());
    for (std::size_t f = 0; f < colex.num_faces(); ++f) {
        const auto& cyc = colex.face(f);
        const auto& walk = colex.face_vertex_walk(f);
        if (cyc.size() % 2 != 0) throw ConstructionError("2-colex face of odd length");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t e = cyc[i];
            std::size_t s = colex.edge_faces(e)[0] == f ? 0 : 1;
            out.hface_qubits[f].push_back(out.corner(walk[i], f));
            out.hface_edges[f].push_back(out.side_edges[e][s]);
            ecolor[out.side_edges[e][s]] = (i % 2 == 0) ? Color::red : Color::green;
        }
    }
    h.edge_coloring = std::move(ecolor);
    h.validate();
    out.h = std::move(h);
    return out;
}

PromotedHypergraph hypergraph_code_construction(
    const SurfaceComplex& colex, const std::vector<std::size_t>& promote_faces,
    const std::vector<std::vector<std::size_t>>* promoted_edges) {
    colex.validate_two_colex();
    PromotedHypergraph out;
    out.colex = colex;
    out.n_colex_vertices = colex.num_vertices();

    std::vector<long> promoted_cell(colex.num_edges(), -1);
    std::vector<std::vector<std::size_t>> halves;
    std::optional<Color> promote_color;
    for (std::size_t ci = 0; ci < promote_faces.size(); ++ci) {
        std::size_t f = promote_faces[ci];
        const auto& cyc = colex.face(f);
        if (cyc.size() % 4 != 0 || cyc.size() <= 4)
            throw ConstructionError("promoted face size must be > 4 and divisible by 4");
        Color fc = (*colex.face_coloring)[f];
        if (promote_color && *promote_color != fc)
            throw ConstructionError("promoted faces must all have one color");
        promote_color = fc;
        std::vector<std::size_t> half;
        if (promoted_edges) {
            half = (*promoted_edges)[ci];
        } else {
            // alternating half containing the smallest edge id
            std::size_t arg = 0;
            for (std::size_t i = 0; i < cyc.size(); ++i)
                if (cyc[i] < cyc[arg]) arg = i;
            for (std::size_t i = arg % 2; i < cyc.size(); i += 2) half.push_back(cyc[i]);
        }
        // must be an alternating subset of the boundary of size |f|/2
        if (half.size() != cyc.size() / 2)
            throw ConstructionError("promoted set must be half the boundary");
        std::vector<bool> inhalf(colex.num_edges(), false);
        for (auto e : half) inhalf[e] = true;
        std::size_t parity = 2;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (!inhalf[cyc[i]]) continue;
            if (parity == 2)
                parity = i % 2;
            else if (parity != i % 2)
                throw ConstructionError("promoted set is not alternating");
        }
        // reorder the half cyclically along the boundary
        std::vector<std::size_t> ordered;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (inhalf[cyc[i]]) ordered.push_back(cyc[i]);
        halves.push_back(ordered);
        for (auto e : ordered) {
            if (promoted_cell[e] >= 0) throw ConstructionError("edge promoted twice");
            promoted_cell[e] = long(ci);
        }
    }

    Hypergraph h;
    h.num_vertices = colex.num_vertices();
    out.rank2_of_colex_edge.assign(colex.num_edges(), -1);
    out.rank3_of_colex_edge.assign(colex.num_edges(), -1);
    std::vector<Color> r2color;
    for (std::size_t e = 0; e < colex.num_edges(); ++e) {
        if (promoted_cell[e] >= 0) continue;
        out.rank2_of_colex_edge[e] = long(h.rank2_edges.size());
        h.rank2_edges.push_back({colex.edge(e)[0], colex.edge(e)[1]});
        r2color.push_back((*colex.edge_coloring)[e]);
    }
    // inner faces and hyperedges
    std::vector<std::array<std::size_t, 3>> rank3;
    out.cells.resize(promote_faces.size());
    for (std::size_t ci = 0; ci < promote_faces.size(); ++ci) {
        auto& cell = out.cells[ci];
        cell.source_face = promote_faces[ci];
        std::size_t m = halves[ci].size();
        for (std::size_t i = 0; i < m; ++i) {
            cell.inner_vertices.push_back(h.num_vertices++);
        }
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t e = halves[ci][i];
            out.rank3_of_colex_edge[e] = long(rank3.size());
            cell.hyperedges.push_back(rank3.size());
            rank3.push_back({colex.edge(e)[0], colex.edge(e)[1], cell.inner_vertices[i]});
        }
        for (std::size_t i = 0; i < m; ++i) {
            cell.inner_edges.push_back(h.rank2_edges.size());
            h.rank2_edges.push_back(
                {cell.inner_vertices[i], cell.inner_vertices[(i + 1) % m]});
            r2color.push_back(i % 2 == 0 ? Color::green : Color::red);
        }
    }
    // rank-3 ids live above all rank-2 ids
    std::size_t r2 = h.rank2_edges.size();
    for (auto& t : rank3) h.rank3_edges.push_back(t);
    for (std::size_t ci = 0; ci < out.cells.size(); ++ci)
        for (auto& hid : out.cells[ci].hyperedges) hid += r2;
    for (auto& x : out.rank3_of_colex_edge)
        if (x >= 0) x += long(r2);

    // Edge colors: rank-3 blue; a surviving blue rank-2 at a promoted vertex
    // gets the color missing there.
    std::vector<Color> colors = r2color;
    colors.resize(h.num_edges(), Color::blue);
    std::vector<std::vector<std::size_t>> at(h.num_vertices);
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        for (auto v : h.edge_vertices(e)) at[v].push_back(e);
    for (std::size_t v = 0; v < h.num_vertices; ++v) {
        bool on_r3 = false;
        for (auto e : at[v]) on_r3 = on_r3 || h.is_rank3(e);
        if (!on_r3) continue;
        for (auto e : at[v]) {
            if (h.is_rank3(e) || colors[e] != Color::blue) continue;
            bool red = false, green = false;
            for (auto e2 : at[v]) {
                if (e2 == e) continue;
                red = red || colors[e2] == Color::red;
                green = green || colors[e2] == Color::green;
            }
            colors[e] = red ? Color::green : Color::red;
        }
    }
    h.edge_coloring = std::move(colors);
    h.validate();
    out.h = std::move(h);

    out.cell_of_qubit.assign(out.h.num_vertices, -1);
    for (std::size_t ci = 0; ci < out.cells.size(); ++ci) {
        for (auto w : out.cells[ci].inner_vertices) out.cell_of_qubit[w] = long(ci);
        for (auto hid : out.cells[ci].hyperedges)
            for (auto v : out.h.edge_vertices(hid)) out.cell_of_qubit[v] = long(ci);
    }
    return out;
}

ContractResult contract_rank3_edges(const PromotedHypergraph& ph) {
    const auto& h = ph.h;
    std::vector<long> cls(h.num_vertices, -1);
    for (std::size_t r = 0; r < h.rank3_edges.size(); ++r)
        for (auto v : h.rank3_edges[r]) {
            if (cls[v] >= 0) throw ConstructionError("contract: vertex on two rank-3 edges");
            cls[v] = long(r);
        }
    for (auto c : cls)
        if (c < 0) throw ConstructionError("contract: rank-3 edges must cover all vertices");

    ContractResult out;
    std::size_t nv = h.rank3_edges.size();
    out.vertex_of_rank3.resize(nv);
    for (std::size_t r = 0; r < nv; ++r) out.vertex_of_rank3[r] = r;

    // Merge rank-2 edges with equal endpoint classes (the parallel pairs).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> merged;
    std::vector<std::array<std::size_t, 2>> edges;
    out.new_edge_of_rank2.assign(h.rank2_edges.size(), 0);
    for (std::size_t e = 0; e < h.rank2_edges.size(); ++e) {
        auto a = std::size_t(cls[h.rank2_edges[e][0]]);
        auto b = std::size_t(cls[h.rank2_edges[e][1]]);
        if (a == b) throw ConstructionError("contract: rank-2 edge inside one class");
        auto key = std::minmax(a, b);
        auto it = merged.find({key.first, key.second});
        if (it == merged.end()) {
            it = merged.insert({{key.first, key.second}, edges.size()}).first;
            edges.push_back({a, b});
        }
        out.new_edge_of_rank2[e] = it->second;
    }

    // Faces: images of unpromoted colex faces with length >= 3, plus the
    // inner faces of the cells.
    std::vector<std::vector<std::size_t>> faces;
    std::vector<bool> is_promoted_face(ph.colex.num_faces(), false);
    for (const auto& c : ph.cells) is_promoted_face[c.source_face] = true;
    out.fface_image.assign(ph.colex.num_faces(), SIZE_MAX);
    for (std::size_t f = 0; f < ph.colex.num_faces(); ++f) {
        if (is_promoted_face[f]) continue;
        std::vector<std::size_t> cyc;
        bool skip = false;
        for (auto e : ph.colex.face(f)) {
            if (ph.rank3_of_colex_edge[e] >= 0) {
                // promoted edge: its endpoints are in one class, it vanishes
                continue;
            }
            auto r2 = std::size_t(ph.rank2_of_colex_edge[e]);
            cyc.push_back(out.new_edge_of_rank2[r2]);
        }
        // collapsed 2-gons (both sides map to the same merged edge) vanish
        if (cyc.size() == 2 && cyc[0] == cyc[1]) skip = true;
        if (skip || cyc.size() < 3) continue;
        out.fface_image[f] = faces.size();
        faces.push_back(std::move(cyc));
    }
    out.inner_image.resize(ph.cells.size());
    for (std::size_t ci = 0; ci < ph.cells.size(); ++ci) {
        std::vector<std::size_t> cyc;
        for (auto e : ph.cells[ci].inner_edges) cyc.push_back(out.new_edge_of_rank2[e]);
        out.inner_image[ci] = faces.size();
        faces.push_back(std::move(cyc));
    }
    out.colex = SurfaceComplex(nv, std::move(edges), std::move(faces));
    out.colex.validate();
    if (!out.colex.is_trivalent())
        throw ConstructionError("contract: result is not trivalent");
    return out;
}

namespace {

FiveSquaresComplex five_squares_impl(const SurfaceComplex& gamma, bool bad) {
    gamma.validate();
    for (std::size_t v = 0; v < gamma.num_vertices(); ++v) {
        auto d = gamma.vertex_edges(v).size();
        if (d <= 2 || d % 2 != 0)
            throw ConstructionError("five-squares input needs even vertex degrees > 2");
    }
    FiveSquaresComplex out;
    out.bad_variant = bad;
    out.gamma = gamma;
    // Face bipartition of gamma (F_a / F_b).
    out.face_class_b.assign(gamma.num_faces(), false);
    {
        std::vector<int> cls(gamma.num_faces(), -1);
        for (std::size_t f0 = 0; f0 < gamma.num_faces(); ++f0) {
            if (cls[f0] != -1) continue;
            cls[f0] = 0;
            std::queue<std::size_t> q;
            q.push(f0);
            while (!q.empty()) {
                auto f = q.front();
                q.pop();
                for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
                    auto [a, b] = gamma.edge_faces(e);
                    if (a != f && b != f) continue;
                    auto g = a == f ? b : a;
                    if (cls[g] == -1) {
                        cls[g] = 1 - cls[f];
                        q.push(g);
                    } else if (cls[g] == cls[f]) {
                        throw ConstructionError("five-squares input faces are not bicolorable");
                    }
                }
            }
        }
        for (std::size_t f = 0; f < gamma.num_faces(); ++f) out.face_class_b[f] = cls[f] == 1;
    }

    auto med = medial(gamma);
    auto d = dual(med.complex);
    out.gamma_mstar = d.complex;
    std::size_t n_vclass = med.num_vfaces;
    out.fclass.assign(out.gamma_mstar.num_vertices(), false);
    out.gamma_vertex_of.assign(out.gamma_mstar.num_vertices(), SIZE_MAX);
    out.gamma_face_of.assign(out.gamma_mstar.num_vertices(), SIZE_MAX);
    out.mstar_vertex_of_face.assign(gamma.num_faces(), -1);
    out.mstar_vertex_of_vertex.assign(gamma.num_vertices(), -1);
    for (std::size_t j = 0; j < out.gamma_mstar.num_vertices(); ++j) {
        if (j < n_vclass) {
            out.gamma_vertex_of[j] = med.vface_of[j];
            out.mstar_vertex_of_vertex[med.vface_of[j]] = long(j);
        } else {
            out.fclass[j] = true;
            out.gamma_face_of[j] = med.fface_of[j - n_vclass];
            out.mstar_vertex_of_face[med.fface_of[j - n_vclass]] = long(j);
        }
    }
    for (std::size_t e = 0; e < out.gamma_mstar.num_edges(); ++e) {
        auto [a, b] = out.gamma_mstar.edge(e);
        if (out.fclass[a] == out.fclass[b])
            throw ConstructionError("radial graph is not bipartite");
    }

    out.flag = colex_from_graph(out.gamma_mstar);
    std::vector<std::size_t> promote;
    std::vector<std::vector<std::size_t>> halves;
    out.cell_of_gamma_vertex.assign(gamma.num_vertices(), -1);
    auto want = bad ? FlagColex::EdgeKind::ef : FlagColex::EdgeKind::ee;
    for (std::size_t j = 0; j < out.gamma_mstar.num_vertices(); ++j) {
        if (out.fclass[j]) continue;
        std::size_t f = out.flag.vface_of[j];
        std::vector<std::size_t> half;
        for (auto e : out.flag.colex.face(f))
            if (out.flag.edge_kind[e] == want) half.push_back(e);
        out.cell_of_gamma_vertex[out.gamma_vertex_of[j]] = long(promote.size());
        promote.push_back(f);
        halves.push_back(std::move(half));
    }
    out.ph = hypergraph_code_construction(out.flag.colex, promote, &halves);
    return out;
}

}  // namespace

FiveSquaresComplex five_squares_construction(const SurfaceComplex& gamma) {
    return five_squares_impl(gamma, false);
}
FiveSquaresComplex five_squares_bad_variant(const SurfaceComplex& gamma) {
    return five_squares_impl(gamma, true);
}

SsurfComplex subsystem_surface_construction(const SurfaceComplex& gamma4) {
    gamma4.validate();
    for (std::size_t v = 0; v < gamma4.num_vertices(); ++v)
        if (gamma4.vertex_edges(v).size() != 4)
            throw ConstructionError("subsystem surface construction needs a 4-valent graph");
    for (std::size_t f = 0; f < gamma4.num_faces(); ++f)
        if (gamma4.face(f).size() % 2 != 0)
            throw ConstructionError("subsystem surface construction needs even faces");

    SsurfComplex out;
    out.source = gamma4;
    out.med = medial(gamma4);
    out.n_qubits = gamma4.num_edges() + gamma4.num_vertices();

    // Two-color the corners (medial edges) so consecutive corners differ
    // around every vertex and every face.
    const auto& mc = out.med.complex;
    std::vector<std::vector<std::size_t>> constraint(mc.num_edges());
    for (std::size_t f = 0; f < mc.num_faces(); ++f) {
        const auto& cyc = mc.face(f);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            auto a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            constraint[a].push_back(b);
            constraint[b].push_back(a);
        }
    }
    std::vector<int> col(mc.num_edges(), -1);
    for (std::size_t s = 0; s < mc.num_edges(); ++s) {
        if (col[s] != -1) continue;
        col[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            for (auto y : constraint[x]) {
                if (col[y] == -1) {
                    col[y] = 1 - col[x];
                    q.push(y);
                } else if (col[y] == col[x]) {
                    throw ConstructionError("triangle typing is not 2-colorable");
                }
            }
        }
    }

    out.triangles.resize(mc.num_edges());
    for (std::size_t k = 0; k < mc.num_edges(); ++k) {
        auto [e1, e2] = mc.edge(k);
        auto [v, f] = out.med.corner_of_edge[k];
        out.triangles[k] = {out.center_qubit(v), out.medial_qubit(e1), out.medial_qubit(e2),
                            v,                   f,                    col[k] == 0};
    }
    out.face_triangles.resize(gamma4.num_faces());
    for (std::size_t f = 0; f < gamma4.num_faces(); ++f)
        out.face_triangles[f] = mc.face(out.med.num_vfaces + f);
    return out;
}

}  // namespace tsc
