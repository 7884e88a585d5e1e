#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "tsc/code.hpp"
#include "tsc/constructions.hpp"
#include "tsc/families.hpp"

using namespace tsc;

TEST_CASE("flag colex of the square lattice") {
    auto g = build_family(Family::square_torus, 3);
    auto fc = colex_from_graph(g);
    CHECK(fc.colex.num_vertices() == 4 * g.num_edges());
    CHECK(fc.colex.num_edges() == 6 * g.num_edges());
    // every e-face has exactly 4 edges, v- and f-faces are octagons here
    for (std::size_t f = 0; f < fc.colex.num_faces(); ++f) {
        switch (fc.face_kind[f]) {
            case FlagColex::FaceKind::eface: CHECK(fc.colex.face(f).size() == 4); break;
            case FlagColex::FaceKind::vface: CHECK(fc.colex.face(f).size() == 8); break;
            case FlagColex::FaceKind::fface: CHECK(fc.colex.face(f).size() == 8); break;
        }
    }
    CHECK(long(fc.colex.num_vertices()) - long(fc.colex.num_edges()) +
              long(fc.colex.num_faces()) ==
          0);
    fc.colex.validate_two_colex();  // trivalent + 3-face-colorable
}

TEST_CASE("vertex expansion of the 12-qubit honeycomb") {
    auto colex = honeycomb12();
    auto t = vertex_expand(colex);
    CHECK(t.h.num_vertices == 36);  // 3n
    CHECK(t.h.rank3_edges.size() == 12);
    CHECK(t.h.rank2_edges.size() == 36);  // two per source edge
    CHECK(t.hface_qubits.size() == colex.num_faces());
    for (std::size_t f = 0; f < colex.num_faces(); ++f)
        CHECK(t.hface_qubits[f].size() == colex.face(f).size());
    // faces partition the corners
    std::vector<int> seen(t.h.num_vertices, 0);
    for (const auto& fq : t.hface_qubits)
        for (auto q : fq) ++seen[q];
    for (auto s : seen) CHECK(s == 1);
}

TEST_CASE("promotion rejects squares and wrong subsets") {
    auto g = build_family(Family::square_torus, 3);
    auto fc = colex_from_graph(g);
    // e-faces are 4-gons: too small to promote
    std::vector<std::size_t> bad = {fc.eface_of[0]};
    CHECK_THROWS_AS(hypergraph_code_construction(fc.colex, bad), ConstructionError);
    // non-alternating subset
    std::vector<std::size_t> faces = {fc.vface_of[0]};
    std::vector<std::vector<std::size_t>> sets(1);
    const auto& cyc = fc.colex.face(fc.vface_of[0]);
    sets[0] = {cyc[0], cyc[1], cyc[2], cyc[3]};
    CHECK_THROWS_AS(hypergraph_code_construction(fc.colex, faces, &sets), ConstructionError);
}

TEST_CASE("empty promotion leaves the colex as a rank-2 hypergraph") {
    auto fc = colex_from_graph(build_family(Family::square_torus, 3));
    auto ph = hypergraph_code_construction(fc.colex, {});
    CHECK(ph.h.rank3_edges.empty());
    CHECK(ph.h.num_vertices == fc.colex.num_vertices());
    CHECK(ph.h.rank2_edges.size() == fc.colex.num_edges());
}

namespace {
PromotedHypergraph uniform_rank3_from_square(std::size_t L, FlagColex* flag_out = nullptr) {
    auto g = build_family(Family::square_torus, L);
    auto fc = colex_from_graph(g);
    std::vector<std::size_t> faces;
    std::vector<std::vector<std::size_t>> halves;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::size_t f = fc.vface_of[v];
        std::vector<std::size_t> half;
        for (auto e : fc.colex.face(f))
            if (fc.edge_kind[e] == FlagColex::EdgeKind::ef) half.push_back(e);
        faces.push_back(f);
        halves.push_back(half);
    }
    if (flag_out) *flag_out = fc;
    return hypergraph_code_construction(fc.colex, faces, &halves);
}
}  // namespace

TEST_CASE("uniform rank-3 code on the square-octagon colex") {
    auto ph = uniform_rank3_from_square(2);
    CHECK(ph.h.num_vertices == 48);  // 12 L^2
    for (const auto& cell : ph.cells) {
        CHECK(cell.hyperedges.size() == 4);  // octagon gains 4 hyperedges
        CHECK(cell.inner_vertices.size() == 4);
        CHECK(cell.inner_edges.size() == 4);
    }
    CHECK_NOTHROW(ph.h.validate());
}

TEST_CASE("uniform rank-3 equals a vertex expansion (structural theorem)") {
    FlagColex fc;
    auto ph = uniform_rank3_from_square(2, &fc);
    auto contracted = contract_rank3_edges(ph);
    CHECK(contracted.colex.num_vertices() == ph.h.rank3_edges.size());
    CHECK(contracted.colex.is_trivalent());
    // color: inner images red, f-face images by the checkerboard of the
    // source square lattice
    std::size_t L = 2;
    std::vector<Color> fcolors(contracted.colex.num_faces(), Color::red);
    for (std::size_t f = 0; f < fc.colex.num_faces(); ++f) {
        if (fc.face_kind[f] != FlagColex::FaceKind::fface) continue;
        auto img = contracted.fface_image[f];
        REQUIRE(img != SIZE_MAX);
        std::size_t src = fc.face_source[f];  // face id of the square lattice
        std::size_t i = src % L, j = src / L;
        fcolors[img] = (i + j) % 2 == 0 ? Color::green : Color::blue;
    }
    contracted.colex.face_coloring = fcolors;
    std::vector<Color> ecolors(contracted.colex.num_edges());
    for (std::size_t e = 0; e < contracted.colex.num_edges(); ++e) {
        auto [f1, f2] = contracted.colex.edge_faces(e);
        ecolors[e] = other_color(fcolors[f1], fcolors[f2]);
    }
    contracted.colex.edge_coloring = ecolors;
    contracted.colex.validate_two_colex();

    auto expanded = vertex_expand(contracted.colex);
    CHECK(expanded.h.num_vertices == ph.h.num_vertices);
    CHECK(expanded.h.rank3_edges.size() == ph.h.rank3_edges.size());
    CHECK(expanded.h.rank2_edges.size() == ph.h.rank2_edges.size());

    // Explicit isomorphism from provenance: a hypergraph vertex maps to the
    // corner of its rank-3 class at the face image it lies on.
    std::vector<long> cls(ph.h.num_vertices, -1);
    for (std::size_t r = 0; r < ph.h.rank3_edges.size(); ++r)
        for (auto v : ph.h.rank3_edges[r]) cls[v] = long(r);
    std::vector<std::size_t> to_expanded(ph.h.num_vertices, SIZE_MAX);
    for (std::size_t u = 0; u < ph.h.num_vertices; ++u) {
        std::size_t face_img;
        if (u < ph.n_colex_vertices) {
            // outer flag: the unique f-face containing it
            std::size_t ff = SIZE_MAX;
            for (std::size_t f = 0; f < fc.colex.num_faces(); ++f) {
                if (fc.face_kind[f] != FlagColex::FaceKind::fface) continue;
                for (auto w : fc.colex.face_vertex_walk(f))
                    if (w == u) ff = f;
            }
            REQUIRE(ff != SIZE_MAX);
            face_img = contracted.fface_image[ff];
        } else {
            face_img = contracted.inner_image[std::size_t(ph.cell_of_qubit[u])];
        }
        to_expanded[u] = expanded.corner(std::size_t(cls[u]), face_img);
    }
    // bijection
    std::vector<int> hit(expanded.h.num_vertices, 0);
    for (auto t : to_expanded) ++hit[t];
    for (auto hcount : hit) CHECK(hcount == 1);
    // rank-3 edges map to triangles
    for (std::size_t r = 0; r < ph.h.rank3_edges.size(); ++r) {
        std::set<std::size_t> got;
        for (auto v : ph.h.rank3_edges[r]) got.insert(to_expanded[v]);
        std::set<std::size_t> want(expanded.triangle_qubits[r].begin(),
                                   expanded.triangle_qubits[r].end());
        CHECK(got == want);
    }
    // rank-2 edges map onto the side-edge set
    std::set<std::pair<std::size_t, std::size_t>> got, want;
    for (const auto& e : ph.h.rank2_edges) {
        auto a = to_expanded[e[0]], b = to_expanded[e[1]];
        got.insert({std::min(a, b), std::max(a, b)});
    }
    for (const auto& e : expanded.h.rank2_edges)
        want.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    CHECK(got == want);
}

TEST_CASE("five-squares construction on the triangular lattice") {
    auto gamma = build_family(Family::triangular_torus, 3);
    auto fs = five_squares_construction(gamma);
    CHECK(fs.ph.h.num_vertices == 30 * 9);
    CHECK_NOTHROW(fs.ph.h.validate());
    CHECK(fs.ph.cells.size() == gamma.num_vertices());
    for (const auto& cell : fs.ph.cells) {
        CHECK(cell.hyperedges.size() == 6);  // degree of the triangular lattice
        CHECK(cell.inner_vertices.size() == 6);
    }
    // decoding unit cells (v-face + hyperedges + inner face + surrounding
    // e-faces) partition the qubits
    std::vector<int> owner(fs.ph.h.num_vertices, 0);
    for (std::size_t a = 0; a < gamma.num_vertices(); ++a) {
        auto ci = std::size_t(fs.cell_of_gamma_vertex[a]);
        const auto& cell = fs.ph.cells[ci];
        std::set<std::size_t> qubits;
        for (auto w : cell.inner_vertices) qubits.insert(w);
        auto ma = std::size_t(fs.mstar_vertex_of_vertex[a]);
        for (auto q : fs.flag.colex.face_vertex_walk(fs.flag.vface_of[ma])) qubits.insert(q);
        for (auto me : fs.gamma_mstar.vertex_edges(ma))
            for (auto q : fs.flag.colex.face_vertex_walk(fs.flag.eface_of[me])) qubits.insert(q);
        for (auto q : qubits) ++owner[q];
    }
    for (auto o : owner) CHECK(o == 1);
    // rejects bad inputs
    CHECK_THROWS_AS(five_squares_construction(build_family(Family::square_octagon_torus, 1)),
                    ConstructionError);  // degree 3
}

TEST_CASE("bad five-squares variant carries the constant-weight hypercycles") {
    auto gamma = build_family(Family::triangular_torus, 3);
    auto fs = five_squares_bad_variant(gamma);
    CHECK_NOTHROW(fs.ph.h.validate());
    const auto& h = fs.ph.h;
    const auto& colex = fs.flag.colex;

    // assemble the hypercycle on two rotation-adjacent hyperedges of cell 0
    auto build_sigma = [&](std::size_t pos) {
        const auto& cell = fs.ph.cells[0];
        std::size_t m = cell.hyperedges.size();
        std::size_t h1 = cell.hyperedges[pos], h2 = cell.hyperedges[(pos + 1) % m];
        std::vector<std::size_t> sigma = {h1, h2};
        // inner edge joining the two inner vertices
        std::size_t w1 = cell.inner_vertices[pos], w2 = cell.inner_vertices[(pos + 1) % m];
        for (auto ie : cell.inner_edges) {
            auto [x, y] = h.rank2_edges[ie];
            if ((x == w1 && y == w2) || (x == w2 && y == w1)) sigma.push_back(ie);
        }
        // the adjacent e-faces: each promoted colex edge borders the v-face
        // and its e-face; add the e-face's surviving rank-2 boundary
        for (auto hid : {h1, h2}) {
            long ec = -1;
            for (std::size_t c = 0; c < colex.num_edges(); ++c)
                if (fs.ph.rank3_of_colex_edge[c] == long(hid)) ec = long(c);
            REQUIRE(ec >= 0);
            auto [fa, fb] = colex.edge_faces(std::size_t(ec));
            std::size_t ef = fs.flag.face_kind[fa] == FlagColex::FaceKind::eface ? fa : fb;
            REQUIRE(fs.flag.face_kind[ef] == FlagColex::FaceKind::eface);
            for (auto e2 : colex.face(ef))
                if (fs.ph.rank2_of_colex_edge[e2] >= 0)
                    sigma.push_back(std::size_t(fs.ph.rank2_of_colex_edge[e2]));
        }
        return sigma;
    };
    auto s0 = build_sigma(0), s1 = build_sigma(1);
    CHECK(is_hypercycle(h, s0));
    CHECK(is_hypercycle(h, s1));
    auto w0 = loop_operator(h, s0), w1 = loop_operator(h, s1);
    CHECK_FALSE(commutes(w0, w1));  // overlapping loop operators anticommute
    CHECK(w0.weight() > 0);
    CHECK(w0.weight() <= 12);
}

TEST_CASE("subsystem surface construction sizes") {
    auto sq = build_family(Family::square_torus, 3);
    auto ss = subsystem_surface_construction(sq);
    CHECK(ss.n_qubits == 3 * sq.num_vertices());
    // each source vertex gets exactly 4 triangles
    std::vector<int> per_vertex(sq.num_vertices(), 0);
    for (const auto& t : ss.triangles) ++per_vertex[t.vertex];
    for (auto c : per_vertex) CHECK(c == 4);

    auto rot = build_family(Family::rotated_surface_dsq, 3);
    auto ss3 = subsystem_surface_construction(rot);
    CHECK(ss3.n_qubits == 15);  // 3(d^2+1)/2 at d=3

    CHECK_THROWS_AS(subsystem_surface_construction(build_family(Family::triangular_torus, 3)),
                    ConstructionError);  // 6-valent
}
