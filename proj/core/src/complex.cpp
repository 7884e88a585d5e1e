#include "tsc/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tsc {

SurfaceComplex::SurfaceComplex(std::size_t num_vertices,
                               std::vector<std::array<std::size_t, 2>> edges,
                               std::vector<std::vector<std::size_t>> faces)
    : nv_(num_vertices), edges_(std::move(edges)), faces_(std::move(faces)) {
    build_derived();
}

void SurfaceComplex::build_derived() {
    vertex_edges_.assign(nv_, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& [u, v] = edges_[e];
        if (u >= nv_ || v >= nv_) throw ConstructionError("edge endpoint out of range");
        if (u == v) throw ConstructionError("self-loop edges are not supported");
        vertex_edges_[u].push_back(e);
        vertex_edges_[v].push_back(e);
    }

    // Face walks: recover the boundary vertex sequence of each edge cycle.
    face_walks_.clear();
    face_walks_.reserve(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& cyc = faces_[f];
        if (cyc.size() < 2) throw ConstructionError("face with fewer than 2 edges");
        std::vector<std::size_t> walk;
        bool ok = false;
        for (int side = 0; side < 2 && !ok; ++side) {
            walk.clear();
            std::size_t entry = edges_[cyc[0]][std::size_t(side)];
            std::size_t v = entry;
            ok = true;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                walk.push_back(v);
                std::size_t e = cyc[i];
                if (edges_[e][0] != v && edges_[e][1] != v) {
                    ok = false;
                    break;
                }
                v = other_end(e, v);
            }
            if (ok && v != entry) ok = false;
        }
        if (!ok) throw ConstructionError("face " + std::to_string(f) + " is not a closed walk");
        face_walks_.push_back(std::move(walk));
    }

    // Each edge must lie on exactly two face sides.
    std::vector<std::vector<std::size_t>> sides(edges_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (auto e : faces_[f]) sides[e].push_back(f);
    edge_faces_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (sides[e].size() != 2)
            throw ConstructionError("edge " + std::to_string(e) + " lies on " +
                                    std::to_string(sides[e].size()) + " face sides (want 2)");
        edge_faces_[e] = {sides[e][0], sides[e][1]};
    }
}

long SurfaceComplex::genus() const {
    long chi = long(nv_) - long(edges_.size()) + long(faces_.size());
    return (2 - chi) / 2;
}

std::vector<std::size_t> SurfaceComplex::vertex_faces(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (auto w : face_walks_[f])
            if (w == v) {
                out.push_back(f);
                break;
            }
    return out;
}

std::vector<SurfaceComplex::RotationStep> SurfaceComplex::vertex_rotation_corners(
    std::size_t v) const {
    // Corners at v: (prev edge, next edge, face) triples from the face walks.
    struct Corner {
        std::size_t a, b;  // the two edges at v, unordered
        std::size_t face;
    };
    std::vector<Corner> corners;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& cyc = faces_[f];
        const auto& walk = face_walks_[f];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (walk[i] == v)
                corners.push_back({cyc[(i + cyc.size() - 1) % cyc.size()], cyc[i], f});
    }
    std::size_t deg = vertex_edges_[v].size();
    if (corners.size() != deg)
        throw ConstructionError("vertex corner count does not match degree");
    // Walk the corner cycle: consecutive rotation edges share a corner.
    std::vector<bool> used(corners.size(), false);
    std::vector<RotationStep> rot;
    std::size_t cur = corners[0].a;
    rot.push_back({cur, corners[0].face});
    used[0] = true;
    std::size_t prev_corner = 0;
    for (std::size_t step = 1; step < deg; ++step) {
        std::size_t nxt = corners[prev_corner].a == cur ? corners[prev_corner].b
                                                        : corners[prev_corner].a;
        cur = nxt;
        bool found = false;
        for (std::size_t k = 0; k < corners.size() && !found; ++k) {
            if (used[k]) continue;
            if (corners[k].a == cur || corners[k].b == cur) {
                used[k] = true;
                prev_corner = k;
                found = true;
            }
        }
        if (!found) throw ConstructionError("vertex neighborhood is not a disk");
        rot.push_back({cur, corners[prev_corner].face});
    }
    return rot;
}

std::vector<std::size_t> SurfaceComplex::vertex_rotation(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& step : vertex_rotation_corners(v)) out.push_back(step.edge);
    return out;
}

void SurfaceComplex::validate() const {
    long chi = long(nv_) - long(edges_.size()) + long(faces_.size());
    if (chi % 2 != 0) throw ConstructionError("odd Euler characteristic");
    if (genus() < 0) throw ConstructionError("negative genus");
    for (std::size_t v = 0; v < nv_; ++v)
        if (vertex_edges_[v].empty()) throw ConstructionError("isolated vertex");
    if (vertex_coloring && vertex_coloring->size() != nv_)
        throw ConstructionError("vertex coloring size mismatch");
    if (edge_coloring && edge_coloring->size() != edges_.size())
        throw ConstructionError("edge coloring size mismatch");
    if (face_coloring && face_coloring->size() != faces_.size())
        throw ConstructionError("face coloring size mismatch");
    // Rotation walk must close at every vertex.
    for (std::size_t v = 0; v < nv_; ++v) vertex_rotation(v);
}

bool SurfaceComplex::is_trivalent() const {
    for (std::size_t v = 0; v < nv_; ++v)
        if (vertex_edges_[v].size() != 3) return false;
    return true;
}

void SurfaceComplex::validate_two_colex() const {
    validate();
    if (!is_trivalent()) throw ConstructionError("2-colex must be trivalent");
    if (!face_coloring) throw ConstructionError("2-colex needs a face coloring");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [f1, f2] = edge_faces_[e];
        if ((*face_coloring)[f1] == (*face_coloring)[f2])
            throw ConstructionError("adjacent faces share a color");
    }
    if (edge_coloring) {
        // An edge bordered by faces of two colors joins faces of the third
        // color at its endpoints, and must carry that third color.
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto [f1, f2] = edge_faces_[e];
            Color want = other_color((*face_coloring)[f1], (*face_coloring)[f2]);
            if ((*edge_coloring)[e] != want)
                throw ConstructionError("edge color does not match bordering faces");
        }
    }
}

DualResult dual(const SurfaceComplex& c) {
    std::vector<std::array<std::size_t, 2>> dedges(c.num_edges());
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
        auto [f1, f2] = c.edge_faces(e);
        if (f1 == f2) throw ConstructionError("dual would contain a self-loop");
        dedges[e] = {f1, f2};
    }
    std::vector<std::vector<std::size_t>> dfaces(c.num_vertices());
    for (std::size_t v = 0; v < c.num_vertices(); ++v) dfaces[v] = c.vertex_rotation(v);
    SurfaceComplex d(c.num_faces(), std::move(dedges), std::move(dfaces));
    d.vertex_coloring = c.face_coloring;
    d.face_coloring = c.vertex_coloring;
    d.edge_coloring = c.edge_coloring;
    return DualResult{std::move(d)};
}

MedialResult medial(const SurfaceComplex& c) {
    MedialResult out;
    std::vector<std::array<std::size_t, 2>> medges;
    std::vector<std::array<std::size_t, 2>> corner_of;
    // Lookup (vertex, {e,e'}) -> medial edge id for the face walks below.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> corner_id;
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
        const auto& cyc = c.face(f);
        const auto& walk = c.face_vertex_walk(f);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t eprev = cyc[(i + cyc.size() - 1) % cyc.size()];
            std::size_t enext = cyc[i];
            std::size_t v = walk[i];
            std::size_t id = medges.size();
            medges.push_back({eprev, enext});
            corner_of.push_back({v, f});
            corner_id[{v, std::min(eprev, enext), std::max(eprev, enext)}] = id;
        }
    }
    std::vector<std::vector<std::size_t>> mfaces;
    std::vector<std::size_t> vface_of, fface_of;
    for (std::size_t v = 0; v < c.num_vertices(); ++v) {
        auto rot = c.vertex_rotation(v);
        std::vector<std::size_t> cycle;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            std::size_t a = rot[i], b = rot[(i + 1) % rot.size()];
            cycle.push_back(corner_id.at({v, std::min(a, b), std::max(a, b)}));
        }
        mfaces.push_back(std::move(cycle));
        vface_of.push_back(v);
    }
    out.num_vfaces = mfaces.size();
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
        const auto& cyc = c.face(f);
        const auto& walk = c.face_vertex_walk(f);
        std::vector<std::size_t> cycle;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t eprev = cyc[(i + cyc.size() - 1) % cyc.size()];
            std::size_t enext = cyc[i];
            cycle.push_back(corner_id.at({walk[i], std::min(eprev, enext), std::max(eprev, enext)}));
        }
        mfaces.push_back(std::move(cycle));
        fface_of.push_back(f);
    }
    out.complex = SurfaceComplex(c.num_edges(), std::move(medges), std::move(mfaces));
    out.corner_of_edge = std::move(corner_of);
    out.vface_of = std::move(vface_of);
    out.fface_of = std::move(fface_of);
    return out;
}

DeleteResult delete_colored_vertices(const SurfaceComplex& c, Color color) {
    if (!c.vertex_coloring) throw ConstructionError("delete_colored_vertices needs vertex colors");
    const auto& vc = *c.vertex_coloring;
    std::vector<bool> del(c.num_vertices(), false);
    bool any = false;
    for (std::size_t v = 0; v < c.num_vertices(); ++v)
        if (vc[v] == color) del[v] = any = true;

    DeleteResult out;
    out.vertex_map.assign(c.num_vertices(), -1);
    out.edge_map.assign(c.num_edges(), -1);
    std::size_t nv = 0;
    for (std::size_t v = 0; v < c.num_vertices(); ++v)
        if (!del[v]) out.vertex_map[v] = long(nv++);

    std::vector<std::array<std::size_t, 2>> edges;
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
        auto [u, v] = c.edge(e);
        if (del[u] || del[v]) continue;
        out.edge_map[e] = long(edges.size());
        edges.push_back({std::size_t(out.vertex_map[u]), std::size_t(out.vertex_map[v])});
    }

    std::vector<std::vector<std::size_t>> faces;
    std::optional<std::vector<Color>> fcolors;
    if (c.face_coloring) fcolors.emplace();
    // Faces not touching a removed vertex survive unchanged.
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
        bool touched = false;
        for (auto v : c.face_vertex_walk(f)) touched = touched || del[v];
        if (touched) continue;
        std::vector<std::size_t> cyc;
        for (auto e : c.face(f)) cyc.push_back(std::size_t(out.edge_map[e]));
        faces.push_back(std::move(cyc));
        if (fcolors) fcolors->push_back((*c.face_coloring)[f]);
    }
    // Faces around each removed vertex merge into one. Only triangulated
    // neighborhoods are supported: every touched face must be a triangle with
    // exactly one removed vertex; its opposite edge contributes to the merged
    // boundary, ordered by the rotation at the removed vertex.
    for (std::size_t v = 0; v < c.num_vertices(); ++v) {
        if (!del[v]) continue;
        auto rot = c.vertex_rotation(v);
        std::vector<std::size_t> cyc;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            std::size_t a = rot[i], b = rot[(i + 1) % rot.size()];
            // The corner face between a,b is the face they share; it must be
            // a triangle, and its third edge survives into the merged face.
            std::size_t opp = SIZE_MAX;
            for (auto f1 : c.edge_faces(a))
                for (auto f2 : c.edge_faces(b)) {
                    if (f1 != f2 || c.face(f1).size() != 3) continue;
                    for (auto e : c.face(f1))
                        if (e != a && e != b) opp = e;
                }
            if (opp == SIZE_MAX || out.edge_map[opp] < 0)
                throw ConstructionError(
                    "delete_colored_vertices: neighborhood of a removed vertex is not a "
                    "3-colored triangulation");
            cyc.push_back(std::size_t(out.edge_map[opp]));
        }
        faces.push_back(std::move(cyc));
        if (fcolors) fcolors->push_back(color);
    }
    if (!any) {
        // Nothing removed: the complex is returned unchanged.
        out.complex = c;
        for (std::size_t v = 0; v < c.num_vertices(); ++v) out.vertex_map[v] = long(v);
        for (std::size_t e = 0; e < c.num_edges(); ++e) out.edge_map[e] = long(e);
        return out;
    }
    out.complex = SurfaceComplex(nv, std::move(edges), std::move(faces));
    if (c.vertex_coloring) {
        std::vector<Color> nvc;
        for (std::size_t v = 0; v < c.num_vertices(); ++v)
            if (!del[v]) nvc.push_back(vc[v]);
        out.complex.vertex_coloring = std::move(nvc);
    }
    if (fcolors) out.complex.face_coloring = std::move(fcolors);
    return out;
}

std::vector<std::size_t> Hypergraph::edge_vertices(std::size_t e) const {
    if (is_rank3(e)) {
        const auto& t = rank3_edges[e - rank2_edges.size()];
        return {t[0], t[1], t[2]};
    }
    return {rank2_edges[e][0], rank2_edges[e][1]};
}

void Hypergraph::validate(bool require_coloring) const {
    std::vector<std::size_t> deg(num_vertices, 0);
    for (std::size_t e = 0; e < num_edges(); ++e)
        for (auto v : edge_vertices(e)) {
            if (v >= num_vertices) throw ConstructionError("hypergraph vertex out of range");
            ++deg[v];
        }
    for (auto d : deg)
        if (d != 3) throw ConstructionError("hypergraph is not trivalent");
    // any two edges sharing a vertex may intersect in that vertex only
    std::vector<std::vector<std::size_t>> at(num_vertices);
    for (std::size_t e = 0; e < num_edges(); ++e)
        for (auto v : edge_vertices(e)) at[v].push_back(e);
    for (std::size_t v = 0; v < num_vertices; ++v)
        for (std::size_t i = 0; i < at[v].size(); ++i)
            for (std::size_t j = i + 1; j < at[v].size(); ++j) {
                auto a = edge_vertices(at[v][i]);
                auto b = edge_vertices(at[v][j]);
                std::size_t common = 0;
                for (auto x : a)
                    for (auto y : b)
                        if (x == y) ++common;
                if (common > 1) throw ConstructionError("edges intersect in more than one vertex");
            }
    if (require_coloring) {
        if (!edge_coloring) throw ConstructionError("hypergraph coloring missing");
        for (std::size_t e = 0; e < num_edges(); ++e)
            if (is_rank3(e) && (*edge_coloring)[e] != Color::blue)
                throw ConstructionError("rank-3 edges must be blue");
        for (std::size_t v = 0; v < num_vertices; ++v) {
            bool seen[3] = {false, false, false};
            for (auto e : at[v]) {
                auto col = std::size_t((*edge_coloring)[e]);
                if (seen[col]) throw ConstructionError("edge coloring clashes at a vertex");
                seen[col] = true;
            }
        }
    }
}

bool is_hypercycle(const Hypergraph& h, const std::vector<std::size_t>& edges) {
    std::vector<std::size_t> deg(h.num_vertices, 0);
    for (auto e : edges) {
        if (e >= h.num_edges()) throw Error("is_hypercycle: bad edge id");
        for (auto v : h.edge_vertices(e)) ++deg[v];
    }
    for (auto d : deg)
        if (d % 2) return false;
    return true;
}

gf2::SpanIndex face_boundary_span(const SurfaceComplex& c) {
    gf2::SpanIndex span(c.num_edges());
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
        gf2::BitVec v(c.num_edges());
        for (auto e : c.face(f)) v.flip(e);
        span.insert(v);
    }
    return span;
}

namespace {

struct BfsTree {
    std::vector<long> dist;
    std::vector<long> parent_edge;
};

BfsTree bfs_tree(const SurfaceComplex& c, std::size_t root) {
    BfsTree t;
    t.dist.assign(c.num_vertices(), -1);
    t.parent_edge.assign(c.num_vertices(), -1);
    std::queue<std::size_t> q;
    t.dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        auto edges = c.vertex_edges(v);
        std::sort(edges.begin(), edges.end());
        for (auto e : edges) {
            auto u = c.other_end(e, v);
            if (t.dist[u] < 0) {
                t.dist[u] = t.dist[v] + 1;
                t.parent_edge[u] = long(e);
                q.push(u);
            }
        }
    }
    return t;
}

gf2::BitVec tree_path_vec(const SurfaceComplex& c, const BfsTree& t, std::size_t v) {
    gf2::BitVec out(c.num_edges());
    while (t.parent_edge[v] >= 0) {
        auto e = std::size_t(t.parent_edge[v]);
        out.flip(e);
        v = c.other_end(e, v);
    }
    return out;
}

}  // namespace

std::vector<CycleSet> homology_cycle_basis(const SurfaceComplex& c) {
    auto g = c.genus();
    auto faces = face_boundary_span(c);
    auto t = bfs_tree(c, 0);
    for (auto d : t.dist)
        if (d < 0) throw ConstructionError("complex is not connected");
    gf2::SpanIndex seen = faces;
    std::vector<CycleSet> out;
    for (std::size_t e = 0; e < c.num_edges() && out.size() < 2 * std::size_t(g); ++e) {
        auto [u, v] = c.edge(e);
        if (t.parent_edge[u] == long(e) || t.parent_edge[v] == long(e)) continue;
        auto vec = tree_path_vec(c, t, u) ^ tree_path_vec(c, t, v);
        vec.flip(e);
        if (seen.insert(vec) < 0) continue;
        CycleSet cs;
        for (std::size_t i = 0; i < c.num_edges(); ++i)
            if (vec.get(i)) cs.edges.push_back(i);
        cs.is_hypercycle = true;
        out.push_back(std::move(cs));
    }
    if (out.size() != 2 * std::size_t(g))
        throw Error("homology basis extraction found " + std::to_string(out.size()) +
                    " classes, expected " + std::to_string(2 * g));
    return out;
}

std::size_t shortest_nontrivial_cycle_length(const SurfaceComplex& c) {
    if (c.genus() < 1) throw Error("no nontrivial cycle on a genus-0 surface");
    auto faces = face_boundary_span(c);
    std::size_t best = SIZE_MAX;
    // Every shortest nontrivial cycle is realized, for some root, as two
    // BFS-tree paths plus one non-tree edge.
    for (std::size_t root = 0; root < c.num_vertices(); ++root) {
        auto t = bfs_tree(c, root);
        for (std::size_t e = 0; e < c.num_edges(); ++e) {
            auto [u, v] = c.edge(e);
            std::size_t len = std::size_t(t.dist[u] + t.dist[v]) + 1;
            if (len >= best) continue;
            auto vec = tree_path_vec(c, t, u) ^ tree_path_vec(c, t, v);
            vec.flip(e);
            if (!faces.contains(vec)) best = len;
        }
    }
    return best;
}

}  // namespace tsc
