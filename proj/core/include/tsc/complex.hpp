#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tsc/gf2.hpp"

namespace tsc {

enum class Color : std::uint8_t { red = 0, green = 1, blue = 2 };

inline char color_letter(Color c) { return "rgb"[std::size_t(c)]; }
/* Pauli letter carried by edges/faces of a given color in the link-operator
 * assignment: red edges act as XX, green as YY, blue as ZZ. */
inline char color_pauli(Color c) { return "XYZ"[std::size_t(c)]; }
inline Color other_color(Color a, Color b) {
    return Color(3 - std::size_t(a) - std::size_t(b));
}

/* A graph embedded on a closed orientable surface, stored as an explicit
 * face-list complex: faces are cyclic sequences of edge ids, and every edge
 * lies on exactly two face sides. Parallel edges are allowed (small tori use
 * them); self-loops are not. The genus is always derived from the Euler
 * characteristic, never stored. */
class SurfaceComplex {
  public:
    SurfaceComplex() = default;
    SurfaceComplex(std::size_t num_vertices,
                   std::vector<std::array<std::size_t, 2>> edges,
                   std::vector<std::vector<std::size_t>> faces);

    std::size_t num_vertices() const { return nv_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_faces() const { return faces_.size(); }
    const std::array<std::size_t, 2>& edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::size_t>& face(std::size_t f) const { return faces_[f]; }
    const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }

    std::size_t other_end(std::size_t e, std::size_t v) const {
        return edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
    }

    long genus() const;  // from V - E + F = 2 - 2g

    /* The two faces on either side of edge e. */
    const std::array<std::size_t, 2>& edge_faces(std::size_t e) const { return edge_faces_[e]; }
    const std::vector<std::size_t>& vertex_edges(std::size_t v) const { return vertex_edges_[v]; }
    /* Faces incident on v (each face at most once). */
    std::vector<std::size_t> vertex_faces(std::size_t v) const;

    /* Vertices of face f in boundary order: walk[i] is the vertex shared by
     * face(f)[i-1] and face(f)[i]. */
    const std::vector<std::size_t>& face_vertex_walk(std::size_t f) const {
        return face_walks_[f];
    }

    /* Edges around v in rotation order (consistent with the embedding). */
    std::vector<std::size_t> vertex_rotation(std::size_t v) const;

    /* Rotation at v with corner faces: entry i holds rotation edge i and the
     * face of the corner between rotation edges i and i+1. */
    struct RotationStep {
        std::size_t edge;
        std::size_t corner_face;
    };
    std::vector<RotationStep> vertex_rotation_corners(std::size_t v) const;

    std::optional<std::vector<Color>> vertex_coloring;
    std::optional<std::vector<Color>> edge_coloring;
    std::optional<std::vector<Color>> face_coloring;

    /* Structural checks; throws ConstructionError with a description. */
    void validate() const;
    bool is_trivalent() const;
    /* Trivalent + proper 3-face-coloring + induced edge coloring rules. */
    void validate_two_colex() const;

  private:
    std::size_t nv_ = 0;
    std::vector<std::array<std::size_t, 2>> edges_;
    std::vector<std::vector<std::size_t>> faces_;
    // derived
    std::vector<std::array<std::size_t, 2>> edge_faces_;
    std::vector<std::vector<std::size_t>> vertex_edges_;
    std::vector<std::vector<std::size_t>> face_walks_;

    void build_derived();
};

struct DualResult {
    SurfaceComplex complex;  // vertex i = primal face i, edge ids preserved
    // dual face j corresponds to primal vertex j
};
DualResult dual(const SurfaceComplex& c);

struct MedialResult {
    SurfaceComplex complex;  // vertex e = primal edge e
    // Corner provenance: medial edge k lies at (vertex, face) of the primal.
    std::vector<std::array<std::size_t, 2>> corner_of_edge;
    // Face provenance: first all v-faces then all f-faces.
    std::vector<std::size_t> vface_of;  // index into primal vertices
    std::vector<std::size_t> fface_of;  // index into primal faces
    std::size_t num_vfaces = 0;
    bool is_vface(std::size_t f) const { return f < num_vfaces; }
};
MedialResult medial(const SurfaceComplex& c);

/* Remove all vertices of the given color (and incident edges); faces around
 * each removed vertex merge into one. Requires a vertex coloring, and that no
 * face contains two removed vertices (true for the 3-colored triangulations
 * this is applied to). Edge ids are remapped; the map is returned. */
struct DeleteResult {
    SurfaceComplex complex;
    std::vector<long> vertex_map;  // old -> new id or -1
    std::vector<long> edge_map;    // old -> new id or -1
};
DeleteResult delete_colored_vertices(const SurfaceComplex& c, Color color);

/* Rank-2/3 hypergraph with one shared edge-id space: ids [0, rank2.size())
 * are the rank-2 edges, the rest are rank-3 in order. */
struct Hypergraph {
    std::size_t num_vertices = 0;
    std::vector<std::array<std::size_t, 2>> rank2_edges;
    std::vector<std::array<std::size_t, 3>> rank3_edges;
    std::optional<std::vector<Color>> edge_coloring;  // indexed by edge id

    std::size_t num_edges() const { return rank2_edges.size() + rank3_edges.size(); }
    bool is_rank3(std::size_t e) const { return e >= rank2_edges.size(); }
    std::vector<std::size_t> edge_vertices(std::size_t e) const;

    /* Trivalence, pairwise edge intersections of at most one vertex, and
     * (when colored) a proper 3-edge-coloring
     * with blue rank-3 edges. */
    void validate(bool require_coloring = true) const;
};

struct CycleSet {
    std::vector<std::size_t> edges;  // sorted edge ids
    bool is_hypercycle = false;
};

bool is_hypercycle(const Hypergraph& h, const std::vector<std::size_t>& edges);

/* Length of the shortest homologically nontrivial cycle (genus >= 1). */
std::size_t shortest_nontrivial_cycle_length(const SurfaceComplex& c);

/* 2g cycles spanning H1(Z2), independent modulo face boundaries. */
std::vector<CycleSet> homology_cycle_basis(const SurfaceComplex& c);

/* Span of the face boundary vectors inside GF(2)^edges. */
gf2::SpanIndex face_boundary_span(const SurfaceComplex& c);

}  // namespace tsc
