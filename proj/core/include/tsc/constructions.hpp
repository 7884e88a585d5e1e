#pragma once

#include <optional>
#include <vector>

#include "tsc/complex.hpp"

namespace tsc {

/* ------------------------------------------------------------------ *
 * Flag 2-colex of an embedded graph: one vertex per (vertex, edge,
 * face) incidence, faces of three classes (v-, e-, f-faces), edge
 * classes E_v (red), E_e (blue), E_f (green). This is the "color each
 * face, split each edge, blow up each vertex" construction.
 * ------------------------------------------------------------------ */
struct FlagColex {
    SurfaceComplex colex;
    SurfaceComplex source;
    // flag provenance per colex vertex: (source vertex, source edge, source face)
    std::vector<std::array<std::size_t, 3>> flags;
    enum class FaceKind : std::uint8_t { vface, eface, fface };
    std::vector<FaceKind> face_kind;       // per colex face
    std::vector<std::size_t> face_source;  // source vertex/edge/face id
    std::vector<std::size_t> vface_of;     // source vertex -> colex face
    std::vector<std::size_t> eface_of;     // source edge   -> colex face
    std::vector<std::size_t> fface_of;     // source face   -> colex face
    enum class EdgeKind : std::uint8_t { ev, ee, ef };
    std::vector<EdgeKind> edge_kind;  // per colex edge
};
FlagColex colex_from_graph(const SurfaceComplex& g);

/* ------------------------------------------------------------------ *
 * Vertex expansion of a 2-colex: each vertex becomes a blue rank-3
 * edge on its three corners, each edge a pair of side edges colored
 * red/green alternately around every face.
 * ------------------------------------------------------------------ */
struct TsccComplex {
    Hypergraph h;
    SurfaceComplex source;  // the 2-colex
    // qubit ids: corner (v, slot) = 3*v + slot, slots order the faces at v ascending
    std::vector<std::array<std::size_t, 3>> triangle_qubits;  // per source vertex
    std::vector<std::size_t> face_of_qubit;                   // source face of each corner
    std::vector<std::size_t> vertex_of_qubit;
    std::vector<std::array<std::size_t, 2>> side_edges;  // per source edge, aligned with edge_faces
    std::vector<std::vector<std::size_t>> hface_qubits;  // per source face, boundary corners
    std::vector<std::vector<std::size_t>> hface_edges;   // per source face, boundary rank-2 ids
    std::size_t rank3_of_vertex(std::size_t v) const { return h.rank2_edges.size() + v; }
    std::size_t corner(std::size_t v, std::size_t face) const;
};
TsccComplex vertex_expand(const SurfaceComplex& colex);

/* ------------------------------------------------------------------ *
 * Hyperedge promotion inside selected faces: each face in F gains an
 * inner face with |f|/2 vertices; an alternating half of its boundary
 * is promoted to rank-3 edges, the i-th promoted edge picking up the
 * i-th inner vertex (a non-crossing pairing).
 * ------------------------------------------------------------------ */
struct PromotedCell {
    std::size_t source_face;
    std::vector<std::size_t> hyperedges;      // rank-3 edge ids, cyclic
    std::vector<std::size_t> inner_vertices;  // aligned with hyperedges
    std::vector<std::size_t> inner_edges;     // inner_edges[i] joins inner i, i+1
};
struct PromotedHypergraph {
    Hypergraph h;
    SurfaceComplex colex;  // the 2-colex that was promoted
    std::vector<PromotedCell> cells;
    std::vector<long> rank2_of_colex_edge;  // -1 when promoted
    std::vector<long> rank3_of_colex_edge;  // -1 when not promoted
    std::vector<long> cell_of_qubit;        // cell index or -1 for qubits outside cells
    std::size_t n_colex_vertices = 0;       // hypergraph ids [0, n) are colex vertices
};
/* promote_faces: colex face ids (all of one color, |f| = 0 mod 4, |f| > 4).
 * promoted_edges: per entry of promote_faces, the alternating boundary half
 * to promote; defaults to the half containing the lowest edge id. */
PromotedHypergraph hypergraph_code_construction(
    const SurfaceComplex& colex, const std::vector<std::size_t>& promote_faces,
    const std::vector<std::vector<std::size_t>>* promoted_edges = nullptr);

/* Undo promotion by contracting every rank-3 edge to a vertex and merging the
 * parallel edge pairs this creates. Requires the rank-3 edges to cover every
 * hypergraph vertex exactly once (true for uniform promotions). */
struct ContractResult {
    SurfaceComplex colex;
    std::vector<std::size_t> vertex_of_rank3;  // rank-3 index -> new vertex (identity order)
    std::vector<std::size_t> fface_image;      // source f-face -> new face id
    std::vector<std::size_t> inner_image;      // cell index -> new face id
    std::vector<std::size_t> new_edge_of_rank2;
};
ContractResult contract_rank3_edges(const PromotedHypergraph& ph);

/* ------------------------------------------------------------------ *
 * Generalized five-squares pipeline: Gamma -> medial -> dual -> flag
 * colex -> promotion on the v-faces coming from Gamma's vertices. The
 * good variant promotes the corner (E_e) half so hyperedges avoid
 * e-face boundaries; the degraded variant promotes the E_f half, which
 * plants the constant-weight logical structure.
 * ------------------------------------------------------------------ */
struct FiveSquaresComplex {
    PromotedHypergraph ph;
    FlagColex flag;             // flag colex of gamma_mstar
    SurfaceComplex gamma;       // the source graph
    SurfaceComplex gamma_mstar;
    std::vector<bool> fclass;                  // per gamma_mstar vertex: from a face of gamma?
    std::vector<std::size_t> gamma_vertex_of;  // v-class vertex -> gamma vertex
    std::vector<std::size_t> gamma_face_of;    // f-class vertex -> gamma face
    std::vector<long> mstar_vertex_of_face;    // gamma face -> f-class mstar vertex
    std::vector<long> mstar_vertex_of_vertex;  // gamma vertex -> v-class mstar vertex
    std::vector<long> cell_of_gamma_vertex;    // gamma vertex -> cell index in ph.cells
    std::vector<bool> face_class_b;            // bipartition of gamma faces (F_a / F_b)
    bool bad_variant = false;
};
FiveSquaresComplex five_squares_construction(const SurfaceComplex& gamma);
FiveSquaresComplex five_squares_bad_variant(const SurfaceComplex& gamma);

/* ------------------------------------------------------------------ *
 * Generalized subsystem surface codes: medial graph of a 4-valent
 * even-faced graph, one new vertex per v-face, three-qubit triangle
 * gauge operators typed by a corner two-coloring.
 * ------------------------------------------------------------------ */
struct SsurfComplex {
    SurfaceComplex source;  // 4-valent Gamma
    MedialResult med;
    // qubits: [0, E) medial qubits indexed by source edge, then centers [E, E+V)
    std::size_t n_qubits = 0;
    struct Triangle {
        std::size_t center, m1, m2;  // qubit ids
        std::size_t vertex;          // source vertex
        std::size_t corner_face;     // source face in the corner
        bool x_type;                 // X-type gauge operator (else Z-type)
    };
    std::vector<Triangle> triangles;
    std::vector<std::vector<std::size_t>> face_triangles;  // per source face, cyclic
    std::size_t medial_qubit(std::size_t src_edge) const { return src_edge; }
    std::size_t center_qubit(std::size_t src_vertex) const {
        return source.num_edges() + src_vertex;
    }
};
SsurfComplex subsystem_surface_construction(const SurfaceComplex& gamma4);

}  // namespace tsc
