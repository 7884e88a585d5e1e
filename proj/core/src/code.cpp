#include "tsc/code.hpp"

#include <algorithm>
#include <sstream>

namespace tsc {

PauliOperator edge_operator(const Hypergraph& h, std::size_t edge) {
    PauliOperator op(h.num_vertices);
    if (h.is_rank3(edge)) {
        for (auto v : h.edge_vertices(edge)) op.apply('Z', v);
        return op;
    }
    char p = h.edge_coloring ? color_pauli((*h.edge_coloring)[edge]) : 'Z';
    for (auto v : h.edge_vertices(edge)) op.apply(p, v);
    return op;
}

PauliOperator loop_operator(const Hypergraph& h, const std::vector<std::size_t>& edges) {
    PauliOperator op(h.num_vertices);
    for (auto e : edges) op *= edge_operator(h, e);
    return op;
}

namespace {

/* Gauge generators of a hypergraph code: K_e for rank-2 edges and the three
 * Z-pair link operators of every rank-3 edge. */
std::vector<PauliOperator> hypergraph_gauge(const Hypergraph& h) {
    std::vector<PauliOperator> out;
    for (std::size_t e = 0; e < h.rank2_edges.size(); ++e) out.push_back(edge_operator(h, e));
    for (const auto& t : h.rank3_edges) {
        for (auto [a, b] : {std::array<std::size_t, 2>{t[0], t[1]},
                            std::array<std::size_t, 2>{t[1], t[2]},
                            std::array<std::size_t, 2>{t[0], t[2]}}) {
            PauliOperator op(h.num_vertices);
            op.apply('Z', a);
            op.apply('Z', b);
            out.push_back(op);
        }
    }
    return out;
}

struct CodeBuilder {
    std::size_t n = 0;
    std::vector<PauliOperator> gauge;
    std::vector<std::pair<PauliOperator, StabLabel>> candidates;

    SubsystemCode build() {
        SubsystemCode code;
        code.n_qubits = n;
        code.gauge_gens = gauge;

        SymplecticBasis gb = SymplecticBasis::from(n, gauge);
        auto cent = centralizer_basis(gb);
        std::vector<gf2::BitVec> grows, crows;
        for (const auto& p : gauge) grows.push_back(p.to_symplectic());
        for (const auto& p : cent.rows()) crows.push_back(p.to_symplectic());
        auto stab_space = gf2::intersect_spans(crows, grows, 2 * n);
        gf2::SpanIndex stab_span(2 * n);
        for (const auto& v : stab_space) stab_span.insert(v);

        gf2::SpanIndex sel(2 * n);
        for (auto& [op, label] : candidates) {
            auto v = op.to_symplectic();
            if (!stab_span.contains(v))
                throw ConstructionError("labeled check is not a stabilizer (type " +
                                        label.type + ")");
            Check c;
            c.op = op;
            c.label = label;
            long gi = sel.insert(v);
            if (gi >= 0) {
                c.gen_index = gi;
                code.gen_checks.push_back(code.checks.size());
            } else {
                c.expr = *sel.express(v);
            }
            code.checks.push_back(std::move(c));
        }
        // Fill whatever part of the stabilizer space the labeled checks miss
        // with homology-labeled generators.
        std::size_t hidx = 0;
        for (auto& [op, label] : candidates)
            if (label.kind == StabLabel::Kind::homology)
                hidx = std::max(hidx, label.homology_index + 1);
        for (const auto& v : stab_space) {
            long gi = sel.insert(v);
            if (gi < 0) continue;
            Check c;
            c.op = PauliOperator::from_symplectic(v);
            c.label.kind = StabLabel::Kind::homology;
            c.label.type = "homology";
            c.label.homology_index = hidx++;
            c.gen_index = gi;
            code.gen_checks.push_back(code.checks.size());
            code.checks.push_back(std::move(c));
        }
        if (code.num_stabilizer_gens() != stab_span.rank())
            throw Error("stabilizer generator selection is incomplete");

        // Correction operators for the homology-labeled generators: solve for
        // a Pauli whose syndrome is the matching unit vector, preferring a
        // Z-only solution.
        std::size_t s = code.num_stabilizer_gens();
        std::vector<gf2::BitVec> rows;
        for (std::size_t i = 0; i < s; ++i) rows.push_back(code.gen_op(i).to_symplectic_flipped());
        std::vector<std::size_t> zvars;
        for (std::size_t i = 0; i < n; ++i) zvars.push_back(n + i);
        for (std::size_t i = 0; i < s; ++i) {
            const auto& label = code.checks[code.gen_checks[i]].label;
            if (label.kind != StabLabel::Kind::homology) continue;
            gf2::BitVec rhs(s);
            rhs.set(i);
            auto sol = gf2::solve(rows, rhs, 2 * n, &zvars);
            if (!sol) sol = gf2::solve(rows, rhs, 2 * n);
            if (!sol) throw Error("no corrector exists for a homology generator");
            code.corrector_of_gen[i] = PauliOperator::from_symplectic(*sol);
        }

        // Bare logical pairs: centralizer of the gauge group modulo the
        // stabilizer span, normalized into (X, Z) pairs.
        SymplecticBasis iso(n);
        for (std::size_t i = 0; i < s; ++i) iso.push_back(code.gen_op(i));
        code.logicals = symplectic_pairs(cent.rows(), iso);

        code.verify_structure();
        return code;
    }
};

}  // namespace

std::size_t SubsystemCode::rank_gauge() const { return gauge_span().rank(); }

std::size_t SubsystemCode::num_gauge_qubits() const {
    return (rank_gauge() - num_stabilizer_gens()) / 2;
}

const gf2::SpanIndex& SubsystemCode::gauge_span() const {
    if (!gauge_span_) {
        gf2::SpanIndex s(2 * n_qubits);
        for (const auto& g : gauge_gens) s.insert(g.to_symplectic());
        gauge_span_ = std::move(s);
    }
    return *gauge_span_;
}

SymplecticBasis SubsystemCode::gauge_basis() const {
    return SymplecticBasis::from(n_qubits, gauge_gens);
}

SymplecticBasis SubsystemCode::stabilizer_basis() const {
    SymplecticBasis b(n_qubits);
    for (auto ci : gen_checks) b.push_back(checks[ci].op);
    return b;
}

SyndromeVector SubsystemCode::measure_syndrome(const PauliOperator& e) const {
    if (e.num_qubits() != n_qubits) throw DimensionError("syndrome: qubit count mismatch");
    SyndromeVector s;
    s.bits = gf2::BitVec(num_stabilizer_gens());
    for (std::size_t i = 0; i < num_stabilizer_gens(); ++i)
        if (!e.commutes_with(gen_op(i))) s.bits.set(i);
    return s;
}

std::vector<bool> SubsystemCode::check_bits(const SyndromeVector& s) const {
    std::vector<bool> out(checks.size(), false);
    for (std::size_t c = 0; c < checks.size(); ++c) {
        if (checks[c].gen_index >= 0) {
            out[c] = s.bits.get(std::size_t(checks[c].gen_index));
        } else {
            bool acc = false;
            for (std::size_t b = 0; b < checks[c].expr.size(); ++b)
                if (checks[c].expr.get(b)) acc ^= s.bits.get(b);
            out[c] = acc;
        }
    }
    return out;
}

bool SubsystemCode::is_equivalent_modulo_gauge(const PauliOperator& a,
                                               const PauliOperator& b) const {
    return gauge_span().contains((a * b).to_symplectic());
}

bool SubsystemCode::logical_failure(const PauliOperator& actual,
                                    const PauliOperator& estimate) const {
    if (!(measure_syndrome(actual) == measure_syndrome(estimate)))
        throw ContractViolation("logical_failure: syndromes of actual and estimate differ");
    auto eff = actual * estimate;
    for (const auto& [x, z] : logicals)
        if (!eff.commutes_with(x) || !eff.commutes_with(z)) return true;
    return false;
}

void SubsystemCode::verify_structure() const {
    for (auto ci : gen_checks)
        for (const auto& g : gauge_gens)
            if (!checks[ci].op.commutes_with(g))
                throw ConstructionError("stabilizer anticommutes with a gauge generator");
    for (std::size_t i = 0; i < num_stabilizer_gens(); ++i)
        for (std::size_t j = i + 1; j < num_stabilizer_gens(); ++j)
            if (!gen_op(i).commutes_with(gen_op(j)))
                throw ConstructionError("stabilizer generators anticommute");
    std::size_t rg = rank_gauge(), s = num_stabilizer_gens();
    if ((rg - s) % 2 != 0) throw Error("2r + s identity violated");
    std::size_t r = (rg - s) / 2;
    if (n_qubits < r + s || n_qubits - r - s != logicals.size())
        throw Error("k = n - r - s does not match the extracted logical count");
    for (const auto& [x, z] : logicals) {
        if (x.commutes_with(z)) throw Error("logical pair commutes");
        for (const auto& g : gauge_gens)
            if (!x.commutes_with(g) || !z.commutes_with(g))
                throw Error("bare logical anticommutes with the gauge group");
    }
    for (const auto& [gi, op] : corrector_of_gen) {
        auto syn = measure_syndrome(op);
        for (std::size_t j = 0; j < num_stabilizer_gens(); ++j)
            if (syn.bits.get(j) != (j == gi))
                throw Error("homology corrector has the wrong syndrome");
    }
}

std::string ParameterReport::to_string() const {
    std::ostringstream os;
    os << "[[" << n << ", " << k << ", " << r << ", ";
    if (distance)
        os << *distance;
    else if (distance_bound)
        os << ">=" << *distance_bound;
    else if (distance_budget_exceeded)
        os << ">budget";
    else
        os << "?";
    os << "]] s=" << s;
    for (const auto& note : notes) os << "\n  note: " << note;
    for (const auto& f : failures) os << "\n  FAIL: " << f;
    return os.str();
}

ParameterReport verify_parameters(const SubsystemCode& code, const ParameterExpectation& expect,
                                  std::size_t distance_budget_w,
                                  std::uint64_t enumeration_budget) {
    ParameterReport rep;
    rep.n = code.n_qubits;
    rep.s = code.num_stabilizer_gens();
    rep.r = code.num_gauge_qubits();
    rep.k = code.n_qubits - rep.r - rep.s;
    auto mismatch = [&](const char* what, std::size_t got, std::size_t want) {
        std::ostringstream os;
        os << what << " = " << got << ", expected " << want;
        rep.failures.push_back(os.str());
    };
    if (expect.n && *expect.n != rep.n) mismatch("n", rep.n, *expect.n);
    if (expect.k && *expect.k != rep.k) mismatch("k", rep.k, *expect.k);
    if (expect.r && *expect.r != rep.r) mismatch("r", rep.r, *expect.r);

    rep.distance_bound = expect.d_lower_bound;
    try {
        std::optional<std::size_t> d;
        std::size_t maxw = std::min(distance_budget_w, code.n_qubits);
        if (rep.k == 0) {
            d = minimum_weight_in_coset(code.gauge_basis(), SymplecticBasis(code.n_qubits),
                                        maxw, enumeration_budget);
        } else {
            auto cs = centralizer_basis(code.stabilizer_basis());
            d = minimum_weight_in_coset(cs, code.gauge_basis(), maxw, enumeration_budget);
        }
        if (d) {
            rep.distance = d;
            if (expect.d && *expect.d != *d) mismatch("d", *d, *expect.d);
            if (expect.d_lower_bound && *d < *expect.d_lower_bound)
                mismatch("d (vs lower bound)", *d, *expect.d_lower_bound);
        } else {
            rep.notes.push_back("no coset element of weight <= " + std::to_string(maxw));
            if (expect.d && *expect.d <= maxw)
                rep.failures.push_back("expected distance " + std::to_string(*expect.d) +
                                       " not found within search weight");
        }
    } catch (const BudgetError&) {
        rep.distance_budget_exceeded = true;
        rep.notes.push_back("distance search skipped: enumeration budget exceeded");
        if (expect.d) rep.failures.push_back("distance expectation set but search was infeasible");
    }
    return rep;
}

/* ---------------- cubic subsystem color codes ---------------- */

CubicCode extract_cubic_code(const SurfaceComplex& colex,
                             const std::vector<CycleSet>* pinned_homology) {
    colex.validate_two_colex();
    if (!colex.edge_coloring) throw ConstructionError("cubic code needs edge colors");
    CubicCode out;
    out.colex = colex;
    std::size_t n = colex.num_vertices();

    auto edge_op = [&](std::size_t e) {
        PauliOperator op(n);
        char p = color_pauli((*colex.edge_coloring)[e]);
        op.apply(p, colex.edge(e)[0]);
        op.apply(p, colex.edge(e)[1]);
        return op;
    };

    CodeBuilder b;
    b.n = n;
    for (std::size_t e = 0; e < colex.num_edges(); ++e) b.gauge.push_back(edge_op(e));
    for (std::size_t f = 0; f < colex.num_faces(); ++f) {
        PauliOperator op(n);
        char p = color_pauli((*colex.face_coloring)[f]);
        for (auto v : colex.face_vertex_walk(f)) op.apply(p, v);
        StabLabel label;
        label.kind = StabLabel::Kind::face;
        label.face = f;
        label.type = std::string(1, p);
        b.candidates.push_back({op, label});
    }
    auto cycles = pinned_homology ? *pinned_homology : homology_cycle_basis(colex);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        PauliOperator op(n);
        for (auto e : cycles[i].edges) op *= edge_op(e);
        StabLabel label;
        label.kind = StabLabel::Kind::homology;
        label.type = "homology";
        label.homology_index = i;
        b.candidates.push_back({op, label});
    }
    out.code = b.build();

    out.face_check.resize(colex.num_faces());
    for (std::size_t f = 0; f < colex.num_faces(); ++f) out.face_check[f] = f;
    out.designated.resize(colex.num_faces());
    for (std::size_t f = 0; f < colex.num_faces(); ++f) {
        const auto& walk = colex.face_vertex_walk(f);
        out.designated[f] = *std::min_element(walk.begin(), walk.end());
    }
    out.z_projection_graph = DecodingGraph(colex.num_faces());
    out.colored_graph = DecodingGraph(colex.num_faces());
    for (std::size_t e = 0; e < colex.num_edges(); ++e) {
        auto [f1, f2] = colex.edge_faces(e);
        out.colored_graph.add_edge(f1, f2, e);
        if ((*colex.edge_coloring)[e] == Color::blue) out.z_projection_graph.add_edge(f1, f2, e);
    }
    return out;
}

CubicCode honeycomb12_code() {
    auto cycles = honeycomb12_homology_cycles();
    return extract_cubic_code(honeycomb12(), &cycles);
}

/* ---------------- topological subsystem color codes ---------------- */

TsccCode extract_tscc_code(const SurfaceComplex& colex) { return extract_tscc_code(vertex_expand(colex)); }

TsccCode extract_tscc_code(TsccComplex geom) {
    TsccCode out;
    const auto& h = geom.h;
    std::size_t nq = h.num_vertices;

    CodeBuilder b;
    b.n = nq;
    b.gauge = hypergraph_gauge(h);

    out.rank2_check.resize(geom.source.num_faces());
    out.rank3_check.resize(geom.source.num_faces());
    std::vector<std::pair<PauliOperator, StabLabel>> cands;
    for (std::size_t f = 0; f < geom.source.num_faces(); ++f) {
        // W1: the rank-2 boundary cycle, a Z-type stabilizer.
        PauliOperator w1 = loop_operator(h, geom.hface_edges[f]);
        StabLabel l1{StabLabel::Kind::face, f, "rank2", 0};
        out.rank2_check[f] = cands.size();
        cands.push_back({w1, l1});
        // W2: the hypercycle through the boundary triangles, the far edge of
        // every boundary edge, and the red in-face half.
        std::vector<std::size_t> sigma;
        for (auto v : geom.source.face_vertex_walk(f)) sigma.push_back(geom.rank3_of_vertex(v));
        const auto& cyc = geom.source.face(f);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t e = cyc[i];
            std::size_t far = geom.source.edge_faces(e)[0] == f ? 1 : 0;
            sigma.push_back(geom.side_edges[e][far]);
            if (i % 2 == 0) sigma.push_back(geom.hface_edges[f][i]);
        }
        if (!is_hypercycle(h, sigma))
            throw ConstructionError("rank-3 face cycle is not a hypercycle");
        PauliOperator w2 = loop_operator(h, sigma);
        StabLabel l2{StabLabel::Kind::face, f, "rank3", 0};
        out.rank3_check[f] = cands.size();
        cands.push_back({w2, l2});
    }
    b.candidates = std::move(cands);
    out.code = b.build();

    out.designated.resize(geom.source.num_faces());
    for (std::size_t f = 0; f < geom.source.num_faces(); ++f)
        out.designated[f] =
            *std::min_element(geom.hface_qubits[f].begin(), geom.hface_qubits[f].end());
    out.geom = std::move(geom);
    return out;
}

/* ---------------- generalized five-squares codes ---------------- */

FiveSquaresCode extract_five_squares_code(FiveSquaresComplex geom) {
    if (geom.bad_variant)
        throw ConstructionError("the degraded variant has no labeled stabilizer set");
    FiveSquaresCode out;
    const auto& h = geom.ph.h;
    const auto& flag = geom.flag;
    const auto& colex = flag.colex;
    std::size_t nq = h.num_vertices;

    auto h_edge_of_colex = [&](std::size_t ec) -> std::size_t {
        if (geom.ph.rank3_of_colex_edge[ec] >= 0)
            return std::size_t(geom.ph.rank3_of_colex_edge[ec]);
        return std::size_t(geom.ph.rank2_of_colex_edge[ec]);
    };
    // Promoted corner (hyperedge) of gamma-vertex cell `a` facing gamma-edge eps.
    auto hyper_at = [&](std::size_t mstar_a, std::size_t eps) -> std::size_t {
        std::size_t vf = flag.vface_of[mstar_a];
        for (auto ec : colex.face(vf)) {
            if (geom.ph.rank3_of_colex_edge[ec] < 0) continue;
            auto [fa, fb] = colex.edge_faces(ec);
            std::size_t other = fa == vf ? fb : fa;
            if (other == flag.fface_of[eps]) return std::size_t(geom.ph.rank3_of_colex_edge[ec]);
        }
        throw Error("five-squares: no hyperedge faces that gamma edge");
    };
    auto inner_of_hyper = [&](std::size_t cell_idx, std::size_t hid) -> std::size_t {
        const auto& cell = geom.ph.cells[cell_idx];
        for (std::size_t i = 0; i < cell.hyperedges.size(); ++i)
            if (cell.hyperedges[i] == hid) return cell.inner_vertices[i];
        throw Error("five-squares: hyperedge not in its cell");
    };

    CodeBuilder b;
    b.n = nq;
    b.gauge = hypergraph_gauge(h);
    std::vector<std::pair<PauliOperator, StabLabel>> cands;

    std::size_t nfaces = geom.gamma.num_faces();
    out.s1_check.resize(nfaces);
    out.s3_check.resize(nfaces);
    // S1: plain boundary cycle of the F_f face.
    for (std::size_t phi = 0; phi < nfaces; ++phi) {
        auto bvx = std::size_t(geom.mstar_vertex_of_face[phi]);
        std::vector<std::size_t> edges;
        for (auto ec : colex.face(flag.vface_of[bvx])) edges.push_back(h_edge_of_colex(ec));
        out.s1_check[phi] = cands.size();
        cands.push_back({loop_operator(h, edges), {StabLabel::Kind::face, phi, "S1", 0}});
    }
    // S2: hyperedges of the cell, the unpromoted boundary half, the green
    // inner half.
    std::size_t ncells = geom.ph.cells.size();
    out.s2_check.resize(ncells);
    out.s4_check.resize(ncells);
    out.s2_designated.resize(ncells);
    out.s4_designated.resize(ncells);
    for (std::size_t ci = 0; ci < ncells; ++ci) {
        const auto& cell = geom.ph.cells[ci];
        std::vector<std::size_t> sigma = cell.hyperedges;
        for (auto ec : colex.face(cell.source_face))
            if (geom.ph.rank2_of_colex_edge[ec] >= 0)
                sigma.push_back(std::size_t(geom.ph.rank2_of_colex_edge[ec]));
        for (std::size_t i = 0; i < cell.inner_edges.size(); i += 2)
            sigma.push_back(cell.inner_edges[i]);
        if (!is_hypercycle(h, sigma)) throw ConstructionError("S2 set is not a hypercycle");
        out.s2_check[ci] = cands.size();
        cands.push_back({loop_operator(h, sigma), {StabLabel::Kind::face, ci, "S2", 0}});
        std::size_t des = SIZE_MAX;
        for (auto hid : cell.hyperedges)
            for (auto v : h.edge_vertices(hid)) des = std::min(des, v);
        out.s2_designated[ci] = des;
    }
    // S3: the ring around an F_f face through the surrounding cells. The
    // ring follows the boundaries of the surrounding f-faces but stays off
    // the center face's own flags; the inward-facing cell flags are closed
    // by the green E_f edges along the spoke e-faces, and the cells by one
    // inner edge each.
    for (std::size_t phi = 0; phi < nfaces; ++phi) {
        auto b_mstar = std::size_t(geom.mstar_vertex_of_face[phi]);
        std::vector<std::size_t> sigma;
        const auto& cyc = geom.gamma.face(phi);
        const auto& walk = geom.gamma.face_vertex_walk(phi);
        for (auto eps : cyc)
            for (auto ec : colex.face(flag.fface_of[eps])) {
                auto [va, vb] = colex.edge(ec);
                if (flag.flags[va][0] == b_mstar || flag.flags[vb][0] == b_mstar) continue;
                sigma.push_back(h_edge_of_colex(ec));
            }
        for (std::size_t i = 0; i < walk.size(); ++i) {
            std::size_t a = walk[i];
            auto ma = std::size_t(geom.mstar_vertex_of_vertex[a]);
            long spoke = -1;
            for (auto me : geom.gamma_mstar.vertex_edges(ma))
                if (geom.gamma_mstar.other_end(me, ma) == b_mstar) spoke = long(me);
            if (spoke < 0) throw Error("five-squares: missing radial edge for S3");
            for (auto ec : colex.face(flag.eface_of[std::size_t(spoke)])) {
                if (flag.edge_kind[ec] != FlagColex::EdgeKind::ef) continue;
                if (flag.flags[colex.edge(ec)[0]][0] == ma) sigma.push_back(h_edge_of_colex(ec));
            }
        }
        for (std::size_t i = 0; i < walk.size(); ++i) {
            std::size_t a = walk[i];
            std::size_t e1 = cyc[(i + cyc.size() - 1) % cyc.size()];
            std::size_t e2 = cyc[i];
            auto ma = std::size_t(geom.mstar_vertex_of_vertex[a]);
            auto ci = std::size_t(geom.cell_of_gamma_vertex[a]);
            std::size_t w1 = inner_of_hyper(ci, hyper_at(ma, e1));
            std::size_t w2 = inner_of_hyper(ci, hyper_at(ma, e2));
            bool found = false;
            for (auto ie : geom.ph.cells[ci].inner_edges) {
                auto [x, y] = h.rank2_edges[ie];
                if ((x == w1 && y == w2) || (x == w2 && y == w1)) {
                    sigma.push_back(ie);
                    found = true;
                }
            }
            if (!found) throw Error("five-squares: S3 inner connector missing");
        }
        std::sort(sigma.begin(), sigma.end());
        if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end())
            throw Error("five-squares: S3 ring repeats an edge");
        if (!is_hypercycle(h, sigma)) throw ConstructionError("S3 set is not a hypercycle");
        out.s3_check[phi] = cands.size();
        cands.push_back({loop_operator(h, sigma), {StabLabel::Kind::face, phi, "S3", 0}});
    }
    // S4: inner face loops.
    for (std::size_t ci = 0; ci < ncells; ++ci) {
        const auto& cell = geom.ph.cells[ci];
        out.s4_check[ci] = cands.size();
        cands.push_back(
            {loop_operator(h, cell.inner_edges), {StabLabel::Kind::face, ci, "S4", 0}});
        out.s4_designated[ci] =
            *std::min_element(cell.inner_vertices.begin(), cell.inner_vertices.end());
    }
    // S5: e-face loops.
    std::size_t nefaces = geom.gamma_mstar.num_edges();
    out.s5_check.resize(nefaces);
    out.s5_designated.resize(nefaces);
    for (std::size_t me = 0; me < nefaces; ++me) {
        std::vector<std::size_t> edges;
        for (auto ec : colex.face(flag.eface_of[me])) edges.push_back(h_edge_of_colex(ec));
        out.s5_check[me] = cands.size();
        cands.push_back({loop_operator(h, edges), {StabLabel::Kind::face, me, "S5", 0}});
        const auto& w = colex.face_vertex_walk(flag.eface_of[me]);
        out.s5_designated[me] = *std::min_element(w.begin(), w.end());
    }
    b.candidates = std::move(cands);
    out.code = b.build();

    // Residual qubits (flags at f-class vertices) map to arcs of the copies.
    out.copy_a = DecodingGraph(nfaces);
    out.copy_b = DecodingGraph(nfaces);
    for (std::size_t u = 0; u < flag.flags.size(); ++u) {
        auto [x, e, F] = flag.flags[u];
        if (!geom.fclass[x]) continue;
        std::size_t phi_b = geom.gamma_face_of[x];
        // F is the 4-gon face of gamma_mstar dual to a medial vertex, i.e. a
        // gamma edge; the S3 partner is the face across that edge.
        std::size_t eps = F;
        auto [fa, fb] = geom.gamma.edge_faces(eps);
        std::size_t partner = fa == phi_b ? fb : fa;
        if (fa != phi_b && fb != phi_b) throw Error("residual qubit face mismatch");
        if (!geom.face_class_b[phi_b])
            out.copy_a.add_edge(phi_b, partner, u);
        else
            out.copy_b.add_edge(phi_b, partner, u);
    }
    out.geom = std::move(geom);
    return out;
}

/* ---------------- generalized subsystem surface codes ---------------- */

SubsystemSurfaceCode extract_subsystem_surface_code(SsurfComplex geom) {
    SubsystemSurfaceCode out;
    std::size_t nq = geom.n_qubits;
    auto tri_op = [&](const SsurfComplex::Triangle& t) {
        PauliOperator op(nq);
        char p = t.x_type ? 'X' : 'Z';
        op.apply(p, t.center);
        op.apply(p, t.m1);
        op.apply(p, t.m2);
        return op;
    };

    CodeBuilder b;
    b.n = nq;
    for (const auto& t : geom.triangles) b.gauge.push_back(tri_op(t));
    std::size_t nfaces = geom.source.num_faces();
    out.sx_check.resize(nfaces);
    out.sz_check.resize(nfaces);
    for (std::size_t f = 0; f < nfaces; ++f) {
        PauliOperator sx(nq), sz(nq);
        for (auto tid : geom.face_triangles[f]) {
            const auto& t = geom.triangles[tid];
            if (t.x_type)
                sx *= tri_op(t);
            else
                sz *= tri_op(t);
        }
        out.sx_check[f] = b.candidates.size();
        b.candidates.push_back({sx, {StabLabel::Kind::face, f, "sX", 0}});
        out.sz_check[f] = b.candidates.size();
        b.candidates.push_back({sz, {StabLabel::Kind::face, f, "sZ", 0}});
    }
    out.code = b.build();

    out.graph_x = DecodingGraph(nfaces);
    out.graph_z = DecodingGraph(nfaces);
    for (std::size_t e = 0; e < geom.source.num_edges(); ++e) {
        auto [f1, f2] = geom.source.edge_faces(e);
        out.graph_x.add_edge(f1, f2, geom.medial_qubit(e));
        out.graph_z.add_edge(f1, f2, geom.medial_qubit(e));
    }
    // Center qubits connect the same-type corner pair at their vertex.
    std::vector<std::vector<std::size_t>> tri_of_vertex(geom.source.num_vertices());
    for (std::size_t t = 0; t < geom.triangles.size(); ++t)
        tri_of_vertex[geom.triangles[t].vertex].push_back(t);
    for (std::size_t v = 0; v < geom.source.num_vertices(); ++v) {
        std::vector<std::size_t> zf, xf;
        for (auto tid : tri_of_vertex[v]) {
            const auto& t = geom.triangles[tid];
            (t.x_type ? xf : zf).push_back(t.corner_face);
        }
        if (zf.size() != 2 || xf.size() != 2)
            throw ConstructionError("triangle typing must alternate around each vertex");
        out.graph_x.add_edge(zf[0], zf[1], geom.center_qubit(v));
        out.graph_z.add_edge(xf[0], xf[1], geom.center_qubit(v));
    }
    out.geom = std::move(geom);
    return out;
}

SubsystemCode extract_hypergraph_code(const Hypergraph& h) {
    CodeBuilder b;
    b.n = h.num_vertices;
    b.gauge = hypergraph_gauge(h);
    return b.build();
}

}  // namespace tsc
