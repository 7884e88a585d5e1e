#include <doctest.h>

#include "tsc/io.hpp"

using namespace tsc;

TEST_CASE("complex json round trip is exact") {
    auto c = honeycomb12();
    auto text = complex_to_json(c);
    auto back = complex_from_json(text);
    CHECK(back.num_vertices() == c.num_vertices());
    CHECK(back.num_edges() == c.num_edges());
    CHECK(back.num_faces() == c.num_faces());
    for (std::size_t e = 0; e < c.num_edges(); ++e) CHECK(back.edge(e) == c.edge(e));
    for (std::size_t f = 0; f < c.num_faces(); ++f) CHECK(back.face(f) == c.face(f));
    CHECK(back.edge_coloring == c.edge_coloring);
    CHECK(back.face_coloring == c.face_coloring);
    // byte-exact round trip of the serialized form
    CHECK(complex_to_json(back) == text);
    CHECK_THROWS_AS(complex_from_json("{\"format\": \"other\"}"), Error);
}

TEST_CASE("dot export mentions every vertex") {
    auto c = build_family(Family::square_torus, 2);
    auto dot = complex_to_dot(c);
    CHECK(dot.find("graph complex {") == 0);
    CHECK(dot.find("v3") != std::string::npos);
}

TEST_CASE("hypergraph and construction exports parse as json") {
    auto t = vertex_expand(honeycomb12());
    auto s = tscc_to_json(t);
    CHECK(s.find("tsc-hypergraph") != std::string::npos);
    auto fs = five_squares_construction(build_family(Family::triangular_torus, 2));
    CHECK(promoted_to_json(fs.ph).find("cells") != std::string::npos);
    auto ss = subsystem_surface_construction(build_family(Family::square_torus, 2));
    CHECK(ssurf_to_json(ss).find("triangles") != std::string::npos);
}

TEST_CASE("code export lists labeled generators") {
    auto cc = honeycomb12_code();
    auto listing = code_export_listing(cc.code);
    CHECK(listing.find("S1 [face=0,type=Z] Z1 Z4 Z5 Z7 Z8 Z10") != std::string::npos);
    CHECK(listing.find("[homology=0]") != std::string::npos);
    CHECK(listing.find("G1 ") != std::string::npos);
}

TEST_CASE("parameter report json") {
    auto cc = honeycomb12_code();
    ParameterExpectation expect;
    expect.n = 12;
    expect.k = 0;
    expect.r = 5;
    expect.d = 2;
    auto rep = verify_parameters(cc.code, expect, 3);
    auto js = report_to_json(rep);
    CHECK(js.find("\"pass\": true") != std::string::npos);
}
