#include <doctest.h>

#include <random>

#include "tsc/code.hpp"
#include "tsc/noise.hpp"

using namespace tsc;

TEST_CASE("golden 12-qubit honeycomb stabilizers") {
    auto cc = honeycomb12_code();
    const auto& code = cc.code;
    REQUIRE(code.num_stabilizer_gens() == 7);
    const char* expected[7] = {
        "Z1 Z5 Z8 Z10 Z7 Z4",        // S1
        "Z2 Z6 Z3 Z12 Z9 Z11",       // S2
        "X2 X6 X9 X11 X8 X5",        // S3
        "X1 X4 X3 X12 X7 X10",       // S4
        "Y3 Y4 Y7 Y12 Y9 Y6",        // S5
        "Y2 X5 X8 Y11",              // S6
        "X7 Z10 Y8 X11 Z9 Y12",      // S7
    };
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(code.gen_op(i) == PauliOperator::from_string(expected[i], 12));
    // the centralizer of the stabilizer contains all seven generators
    auto cent = centralizer_basis(code.stabilizer_basis());
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(cent.in_span(PauliOperator::from_string(expected[i], 12)));
}

TEST_CASE("golden worked-example syndrome") {
    auto cc = honeycomb12_code();
    auto e = PauliOperator::from_string("Z4 X8", 12);
    auto s = cc.code.measure_syndrome(e);
    bool want[7] = {1, 0, 0, 1, 1, 0, 1};
    for (std::size_t i = 0; i < 7; ++i) CHECK(s.bits.get(i) == want[i]);
    // the fixture's reference estimate is gauge-equivalent to the error
    CHECK(cc.code.is_equivalent_modulo_gauge(e, PauliOperator::from_string("X1 Z12", 12)));
}

TEST_CASE("cubic code parameters (Lemma 1)") {
    for (auto [s1, s2] : {std::pair{1ul, 1ul}, std::pair{2ul, 2ul}}) {
        auto cc = extract_cubic_code(build_family(Family::honeycomb_torus, s1, s2));
        std::size_t n = cc.code.n_qubits;
        CHECK(cc.code.rank_gauge() == 3 * n / 2 - 1);
        ParameterExpectation expect;
        expect.n = n;
        expect.k = 0;
        expect.r = n / 2 - 1;
        expect.d = 2;
        auto rep = verify_parameters(cc.code, expect, 3);
        INFO(rep.to_string());
        CHECK(rep.pass());
        CHECK(rep.s == n / 2 + 1);
    }
}

TEST_CASE("product of all edge operators is the identity") {
    auto colex = honeycomb12();
    PauliOperator prod(12);
    for (const auto& g : extract_cubic_code(colex).code.gauge_gens) prod *= g;
    CHECK(prod.is_identity());
}

TEST_CASE("tscc parameters (Lemma 2)") {
    for (std::size_t size : {1ul, 2ul}) {
        auto colex = build_family(Family::square_octagon_torus, size);
        auto tc = extract_tscc_code(colex);
        std::size_t n = colex.num_vertices();
        CHECK(tc.code.n_qubits == 3 * n);
        ParameterExpectation expect;
        expect.n = 3 * n;
        expect.k = 2;
        expect.r = 2 * n;  // 2n + 2g - 2 on the torus
        expect.d_lower_bound = shortest_nontrivial_cycle_length(colex);
        auto rep = verify_parameters(tc.code, expect, 0);  // skip distance search
        INFO(rep.to_string());
        CHECK(rep.pass());
        CHECK(rep.s == n - 2);
        // no homology deficit: the face stabilizers span everything
        CHECK(tc.code.corrector_of_gen.empty());
    }
}

TEST_CASE("tscc stabilizer pairs per face are independent") {
    auto tc = extract_tscc_code(build_family(Family::square_octagon_torus, 1));
    for (std::size_t f = 0; f < tc.geom.source.num_faces(); ++f) {
        const auto& w1 = tc.code.checks[tc.rank2_check[f]];
        const auto& w2 = tc.code.checks[tc.rank3_check[f]];
        CHECK(w1.op != w2.op);
        CHECK_FALSE(w1.op.is_identity());
        CHECK_FALSE(w2.op.is_identity());
    }
}

TEST_CASE("syndrome is linear (randomized)") {
    auto tc = extract_tscc_code(build_family(Family::square_octagon_torus, 1));
    std::mt19937_64 seeder(41);
    Rng rng(seeder());
    NoiseModel m{0.2};
    for (int t = 0; t < 200; ++t) {
        auto e1 = sample_error(m, tc.code.n_qubits, rng);
        auto e2 = sample_error(m, tc.code.n_qubits, rng);
        auto s12 = tc.code.measure_syndrome(e1 * e2);
        auto s1 = tc.code.measure_syndrome(e1);
        auto s2 = tc.code.measure_syndrome(e2);
        CHECK(s12.bits == (s1.bits ^ s2.bits));
    }
}

TEST_CASE("gauge equivalence along a face (error-equivalence lemma)") {
    auto cc = honeycomb12_code();
    // X on the third boundary vertex of a blue face is equivalent to X on the
    // first with Z's in between.
    const auto& walk = cc.colex.face_vertex_walk(0);  // blue face {1,5,8,10,7,4}
    PauliOperator a(12), b(12);
    a.apply('X', walk[2]);
    b.apply('X', walk[0]);
    b.apply('Z', walk[1]);
    b.apply('Z', walk[2]);
    CHECK(cc.code.is_equivalent_modulo_gauge(a, b));
    CHECK(cc.code.is_equivalent_modulo_gauge(a, a));
}

TEST_CASE("rank-3 gauge membership (Z pair inside a hyperedge)") {
    auto tc = extract_tscc_code(build_family(Family::square_octagon_torus, 1));
    const auto& tri = tc.geom.h.rank3_edges[0];
    PauliOperator zz(tc.code.n_qubits);
    zz.apply('Z', tri[1]);
    zz.apply('Z', tri[2]);
    auto r = rank_and_membership(tc.code.gauge_basis(), zz);
    CHECK(r.in_span);
}

TEST_CASE("logical failure predicates") {
    auto ssc = extract_subsystem_surface_code(
        subsystem_surface_construction(build_family(Family::square_torus, 3)));
    const auto& code = ssc.code;
    REQUIRE(code.logicals.size() == 2);
    PauliOperator id(code.n_qubits);
    CHECK_FALSE(code.logical_failure(id, id));
    const auto& xbar = code.logicals[0].first;
    CHECK(code.logical_failure(xbar, id));  // effective error = a bare logical
    PauliOperator x1(code.n_qubits);
    x1.apply('X', 0);
    CHECK_THROWS_AS(code.logical_failure(x1, id), ContractViolation);
}

TEST_CASE("failure equals non-equivalence when syndromes match") {
    auto tc = extract_tscc_code(build_family(Family::square_octagon_torus, 1));
    const auto& code = tc.code;
    std::mt19937_64 seeds(7);
    Rng rng(seeds());
    NoiseModel m{0.1};
    for (int t = 0; t < 1000; ++t) {
        auto e1 = sample_error(m, code.n_qubits, rng);
        // e2 = e1 times a random harmless or logical element
        PauliOperator mul(code.n_qubits);
        for (const auto& g : code.gauge_gens)
            if (rng.next() % 4 == 0) mul *= g;
        if (rng.next() % 2) mul *= code.logicals[rng.next() % 2].first;
        auto e2 = e1 * mul;
        if (!(code.measure_syndrome(e1) == code.measure_syndrome(e2))) continue;
        CHECK(code.logical_failure(e1, e2) == !code.is_equivalent_modulo_gauge(e1, e2));
    }
}

TEST_CASE("subsystem surface code parameters") {
    for (std::size_t L : {2ul, 3ul}) {
        auto ssc = extract_subsystem_surface_code(
            subsystem_surface_construction(build_family(Family::square_torus, L)));
        std::size_t v = L * L;
        ParameterExpectation expect;
        expect.n = 3 * v;
        expect.k = 2;
        expect.r = v;  // v + 2g - 2 from the proof, not the theorem statement
        auto rep = verify_parameters(ssc.code, expect, 0);
        INFO(rep.to_string());
        CHECK(rep.pass());
        CHECK(rep.s == 2 * (v - 1));
    }
}

TEST_CASE("low-overhead family at d=3: n, k, r hold; the distance does not") {
    auto ssc = extract_subsystem_surface_code(
        subsystem_surface_construction(build_family(Family::rotated_surface_dsq, 3)));
    ParameterExpectation expect;
    expect.n = 15;
    expect.k = 2;
    expect.r = 5;
    auto rep = verify_parameters(ssc.code, expect, 3);
    INFO(rep.to_string());
    CHECK(rep.pass());
    CHECK(rep.s == 8);  // 2(v - 1) at v = 5
    // The underlying surface code has distance 3, but the subsystem code on
    // this tiling does not inherit it: a center qubit hops between the two
    // faces diagonal at its vertex, and this torus identification has a wrap
    // reachable by one diagonal plus one lattice step. Exhaustive search
    // certifies a weight-2 dressed logical.
    REQUIRE(rep.distance.has_value());
    CHECK(*rep.distance == 2);
    // exhibit a witness: X on a medial qubit times X on a center qubit
    const auto& code = ssc.code;
    bool witness = false;
    std::size_t edges = ssc.geom.source.num_edges();
    for (std::size_t a = 0; a < edges && !witness; ++a)
        for (std::size_t b = edges; b < code.n_qubits && !witness; ++b) {
            PauliOperator p(code.n_qubits);
            p.apply('X', a);
            p.apply('X', b);
            bool in_cs = true;
            for (std::size_t i = 0; i < code.num_stabilizer_gens(); ++i)
                in_cs = in_cs && p.commutes_with(code.gen_op(i));
            if (in_cs && !code.gauge_span().contains(p.to_symplectic())) witness = true;
        }
    CHECK(witness);
}

TEST_CASE("a stabilizer code viewed as a subsystem code has r = 0") {
    // one commuting link operator: gauge group == stabilizer
    Hypergraph h;
    h.num_vertices = 2;
    h.rank2_edges = {{0, 1}};
    h.edge_coloring = std::vector<Color>{Color::blue};
    auto code = extract_hypergraph_code(h);
    CHECK(code.num_stabilizer_gens() == 1);
    CHECK(code.num_gauge_qubits() == 0);
    CHECK(code.num_logical_qubits() == 1);
    ParameterExpectation ex;
    ex.n = 2;
    ex.k = 1;
    ex.r = 0;
    ex.d = 1;  // X1 commutes with Z1 Z2 and is not in the gauge group
    auto rep = verify_parameters(code, ex, 2);
    INFO(rep.to_string());
    CHECK(rep.pass());
}

TEST_CASE("five-squares extraction is consistent") {
    auto fs = five_squares_construction(build_family(Family::triangular_torus, 2));
    auto fsc = extract_five_squares_code(std::move(fs));
    const auto& code = fsc.code;
    CHECK(code.n_qubits == 30 * 4);
    CHECK(code.num_logical_qubits() == 2);
    // S4/S5 are Z-only
    for (auto ci : fsc.s4_check) {
        const auto& op = code.checks[ci].op;
        for (std::size_t q = 0; q < code.n_qubits; ++q) CHECK_FALSE(op.x(q));
    }
    for (auto ci : fsc.s5_check) {
        const auto& op = code.checks[ci].op;
        for (std::size_t q = 0; q < code.n_qubits; ++q) CHECK_FALSE(op.x(q));
    }
    // single Z on a residual qubit flips exactly one S1 and one S3
    std::size_t tested = 0;
    for (std::size_t u = 0; u < fsc.geom.flag.flags.size() && tested < 20; ++u) {
        if (!fsc.geom.fclass[fsc.geom.flag.flags[u][0]]) continue;
        PauliOperator z(code.n_qubits);
        z.apply('Z', u);
        auto bits = code.check_bits(code.measure_syndrome(z));
        std::size_t s1 = 0, s3 = 0, other = 0;
        for (std::size_t c = 0; c < code.checks.size(); ++c) {
            if (!bits[c]) continue;
            if (code.checks[c].label.type == "S1")
                ++s1;
            else if (code.checks[c].label.type == "S3")
                ++s3;
            else if (code.checks[c].label.kind == StabLabel::Kind::face)
                ++other;
        }
        CHECK(s1 == 1);
        CHECK(s3 == 1);
        CHECK(other == 0);
        ++tested;
    }
    CHECK(tested == 20);
}

TEST_CASE("uniform rank-3 stabilizer types are stabilizers") {
    auto g = build_family(Family::square_torus, 2);
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
    auto ph = hypergraph_code_construction(fc.colex, faces, &halves);
    auto code = extract_hypergraph_code(ph.h);
    auto stab = code.stabilizer_basis();

    auto h_edge = [&](std::size_t ec) {
        return ph.rank3_of_colex_edge[ec] >= 0 ? std::size_t(ph.rank3_of_colex_edge[ec])
                                               : std::size_t(ph.rank2_of_colex_edge[ec]);
    };
    // type (i): plain cycles around f-faces
    for (std::size_t f = 0; f < fc.colex.num_faces(); ++f) {
        if (fc.face_kind[f] != FlagColex::FaceKind::fface) continue;
        std::vector<std::size_t> edges;
        for (auto ec : fc.colex.face(f)) edges.push_back(h_edge(ec));
        CHECK(stab.in_span(loop_operator(ph.h, edges)));
    }
    // type (iv): inner faces; type (ii): outer hypercycle of each cell
    for (const auto& cell : ph.cells) {
        CHECK(stab.in_span(loop_operator(ph.h, cell.inner_edges)));
        std::vector<std::size_t> sigma = cell.hyperedges;
        for (auto ec : fc.colex.face(cell.source_face))
            if (ph.rank2_of_colex_edge[ec] >= 0)
                sigma.push_back(std::size_t(ph.rank2_of_colex_edge[ec]));
        for (std::size_t i = 0; i < cell.inner_edges.size(); i += 2)
            sigma.push_back(cell.inner_edges[i]);
        CHECK(is_hypercycle(ph.h, sigma));
        CHECK(stab.in_span(loop_operator(ph.h, sigma)));
    }
}
