#include "tsc/decoders.hpp"

#include <algorithm>

namespace tsc {

namespace {

/* Running syndrome state: the bits still to be explained, flipped whenever a
 * correction is applied. Bits cover all labeled checks. */
struct SyndromeState {
    const SubsystemCode& code;
    std::vector<bool> bits;

    SyndromeState(const SubsystemCode& c, const SyndromeVector& s)
        : code(c), bits(c.check_bits(s)) {}

    void apply_single(PauliOperator& est, char pauli, std::size_t qubit) {
        est.apply(pauli, qubit);
        bool xc = pauli == 'X' || pauli == 'Y';
        bool zc = pauli == 'Z' || pauli == 'Y';
        for (std::size_t i = 0; i < code.checks.size(); ++i) {
            const auto& op = code.checks[i].op;
            bool anti = (op.z(qubit) && xc) ^ (op.x(qubit) && zc);
            if (anti) bits[i] = !bits[i];
        }
    }

    bool bit_of_gen(std::size_t gen) const { return bits[code.gen_checks[gen]]; }

    /* Remaining homology-labeled syndrome is absorbed by the precomputed
     * correction operators. */
    void fix_homology(PauliOperator& est, std::vector<TraceEvent>* trace) {
        for (const auto& [gen, corr] : code.corrector_of_gen) {
            if (!bit_of_gen(gen)) continue;
            est *= corr;
            for (std::size_t i = 0; i < code.checks.size(); ++i)
                if (!corr.commutes_with(code.checks[i].op)) bits[i] = !bits[i];
            if (trace)
                trace->push_back({"homology", "applied corrector for generator " +
                                                  std::to_string(gen) + ": " + corr.to_string()});
        }
    }

    void expect_clear() const {
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i])
                throw ContractViolation("decoder left residual syndrome on check " +
                                        std::to_string(i));
    }
};

std::string pairs_to_string(const Matching& m) {
    std::string s;
    for (auto [a, b] : m.pairs) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s.empty() ? "(none)" : s;
}

}  // namespace

DecodeOutcome Decoder::decode(const SyndromeVector& s, bool with_trace) const {
    if (s.bits.size() != code().num_stabilizer_gens())
        throw DimensionError("syndrome length does not match the stabilizer generator count");
    auto out = decode_impl(s, with_trace);
    if (!(code().measure_syndrome(out.estimate) == s))
        throw ContractViolation("decoder estimate does not reproduce the input syndrome");
    return out;
}

/* ---------------- color code restriction decoder ---------------- */

ColorCodeDecoder::ColorCodeDecoder(const SurfaceComplex& colex, Strategy strategy)
    : colex_(colex), strategy_(strategy) {
    colex_.validate_two_colex();
    auto build = [&](Color lift) {
        // the two restricted dual graphs touching the lift color
        Color c1 = Color((std::size_t(lift) + 1) % 3);
        Color c2 = Color((std::size_t(lift) + 2) % 3);
        Restriction r;
        r.lift = lift;
        r.ga = DecodingGraph(colex_.num_faces());
        r.gb = DecodingGraph(colex_.num_faces());
        for (std::size_t e = 0; e < colex_.num_edges(); ++e) {
            auto [f1, f2] = colex_.edge_faces(e);
            // a c2-colored edge borders one c0- and one c1-face
            if ((*colex_.edge_coloring)[e] == c2) r.ga.add_edge(f1, f2, e);
            if ((*colex_.edge_coloring)[e] == c1) r.gb.add_edge(f1, f2, e);
        }
        return r;
    };
    auto build_projection = [&](Color closure) {
        Restriction r;
        r.lift = closure;
        r.projection = true;
        r.pair_graph = DecodingGraph(colex_.num_faces());
        r.closure_graph = DecodingGraph(colex_.num_faces());
        std::vector<std::array<std::size_t, 3>> face_of_color(colex_.num_vertices());
        for (std::size_t v = 0; v < colex_.num_vertices(); ++v)
            for (auto f : colex_.vertex_faces(v))
                face_of_color[v][std::size_t((*colex_.face_coloring)[f])] = f;
        for (std::size_t v = 0; v < colex_.num_vertices(); ++v) {
            std::array<std::size_t, 2> ends{};
            std::size_t k = 0;
            for (std::size_t c = 0; c < 3; ++c)
                if (Color(c) != closure) ends[k++] = face_of_color[v][c];
            r.pair_graph.add_edge(ends[0], ends[1], v);
        }
        for (std::size_t e = 0; e < colex_.num_edges(); ++e) {
            if ((*colex_.edge_coloring)[e] != closure) continue;
            auto [u, w] = colex_.edge(e);
            r.closure_graph.add_edge(face_of_color[u][std::size_t(closure)],
                                     face_of_color[w][std::size_t(closure)], e);
        }
        return r;
    };
    switch (strategy_) {
        case Strategy::best_of_three:
            for (auto c : {Color::red, Color::green, Color::blue})
                restrictions_.push_back(build(c));
            break;
        case Strategy::lift_red: restrictions_.push_back(build(Color::red)); break;
        case Strategy::lift_green: restrictions_.push_back(build(Color::green)); break;
        case Strategy::lift_blue: restrictions_.push_back(build(Color::blue)); break;
        case Strategy::projection_red: restrictions_.push_back(build_projection(Color::red)); break;
        case Strategy::projection_green:
            restrictions_.push_back(build_projection(Color::green));
            break;
        case Strategy::projection_blue:
            restrictions_.push_back(build_projection(Color::blue));
            break;
    }
    if (restrictions_.size() == 1 && restrictions_[0].projection)
        for (auto c : {Color::red, Color::green, Color::blue})
            small_syndrome_.push_back(build(c));
}

std::vector<std::size_t> ColorCodeDecoder::decode_projection(
    const Restriction& r, const std::vector<bool>& face_syndrome) const {
    std::vector<bool> on(colex_.num_vertices(), false);
    // pair up the defects of the two other colors through single vertices
    std::vector<std::size_t> defects;
    for (std::size_t f = 0; f < colex_.num_faces(); ++f)
        if (face_syndrome[f] && (*colex_.face_coloring)[f] != r.lift) defects.push_back(f);
    auto m1 = min_weight_perfect_matching(build_defect_graph(r.pair_graph, defects));
    for (auto v : matching_to_error(r.pair_graph, m1)) on[v] = !on[v];
    // close the residual syndrome of the named color on its own edge graph
    std::vector<std::size_t> res;
    for (std::size_t f = 0; f < colex_.num_faces(); ++f) {
        if ((*colex_.face_coloring)[f] != r.lift) continue;
        bool bit = face_syndrome[f];
        for (auto v : colex_.face_vertex_walk(f)) bit ^= on[v];
        if (bit) res.push_back(f);
    }
    auto m2 = min_weight_perfect_matching(build_defect_graph(r.closure_graph, res));
    // Walk each closure path hop by hop; among parallel arcs prefer one that
    // touches an already-toggled vertex, so the two stages compose into a
    // connected local correction.
    for (const auto& [a, b] : m2.pairs) {
        auto nodes = r.closure_graph.path_nodes(a, b);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            auto cands = r.closure_graph.parallel_carriers(nodes[i], nodes[i + 1]);
            std::size_t pick = cands.front();
            for (auto e : cands)
                if (on[colex_.edge(e)[0]] || on[colex_.edge(e)[1]]) {
                    pick = e;
                    break;
                }
            on[colex_.edge(pick)[0]] = !on[colex_.edge(pick)[0]];
            on[colex_.edge(pick)[1]] = !on[colex_.edge(pick)[1]];
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < colex_.num_vertices(); ++v)
        if (on[v]) out.push_back(v);
    return out;
}

std::vector<std::size_t> ColorCodeDecoder::decode_one(
    const Restriction& r, const std::vector<bool>& face_syndrome) const {
    if (r.projection) return decode_projection(r, face_syndrome);
    const auto& fc = *colex_.face_coloring;
    Color c1 = Color((std::size_t(r.lift) + 1) % 3);
    auto run = [&](const DecodingGraph& g, Color partner) {
        std::vector<std::size_t> defects;
        for (std::size_t f = 0; f < colex_.num_faces(); ++f)
            if (face_syndrome[f] && (fc[f] == r.lift || fc[f] == partner)) defects.push_back(f);
        return matching_to_error(g, min_weight_perfect_matching(build_defect_graph(g, defects)));
    };
    auto sa = run(r.ga, c1);                                       // c2-colored edges
    auto sb = run(r.gb, Color((std::size_t(r.lift) + 2) % 3));     // c1-colored edges
    std::vector<bool> chosen(colex_.num_edges(), false);
    for (auto e : sa) chosen[e] = true;
    for (auto e : sb) chosen[e] = true;

    // Local lift at every lift-colored face: the chosen boundary edges come
    // in even number; pair them around the face with arcs of boundary
    // vertices, picking the lighter of the two segmentations.
    std::vector<bool> on(colex_.num_vertices(), false);
    for (std::size_t f = 0; f < colex_.num_faces(); ++f) {
        if (fc[f] != r.lift) continue;
        const auto& cyc = colex_.face(f);
        const auto& walk = colex_.face_vertex_walk(f);
        std::vector<std::size_t> marks;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (chosen[cyc[i]]) marks.push_back(i);
        if (marks.empty()) continue;
        if (marks.size() % 2) throw ParityError("odd mark count in the color-code lift");
        std::size_t m = cyc.size();
        // arc(p -> q): boundary vertices at positions p+1 .. q (cyclically)
        auto arc_vertices = [&](std::size_t p, std::size_t q, std::vector<std::size_t>& out) {
            for (std::size_t i = (p + 1) % m; true; i = (i + 1) % m) {
                out.push_back(walk[i]);
                if (i == q) break;
            }
        };
        auto segmentation = [&](std::size_t offset) {
            std::vector<std::size_t> verts;
            for (std::size_t k = offset; k + 1 < marks.size() + offset; k += 2)
                arc_vertices(marks[k % marks.size()], marks[(k + 1) % marks.size()], verts);
            return verts;
        };
        auto va = segmentation(0), vb = segmentation(1);
        const auto& pick = vb.size() < va.size() ? vb : va;
        for (auto v : pick) on[v] = !on[v];
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < colex_.num_vertices(); ++v)
        if (on[v]) out.push_back(v);
    return out;
}

std::vector<std::size_t> ColorCodeDecoder::decode(const std::vector<bool>& face_syndrome) const {
    std::vector<std::size_t> best;
    bool have = false;
    auto consider = [&](std::vector<std::size_t> got) {
        if (!have || got.size() < best.size()) {
            best = std::move(got);
            have = true;
        }
    };
    for (const auto& r : restrictions_) consider(decode_one(r, face_syndrome));
    if (!small_syndrome_.empty()) {
        std::size_t defects = 0;
        for (auto b : face_syndrome) defects += b;
        if (defects <= kSmallSyndrome)
            for (const auto& r : small_syndrome_) consider(decode_one(r, face_syndrome));
    }
    return best;
}

std::vector<std::size_t> decode_color_code_single_type(const SurfaceComplex& colex,
                                                       const std::vector<bool>& face_syndrome,
                                                       ColorCodeDecoder::Strategy strategy) {
    return ColorCodeDecoder(colex, strategy).decode(face_syndrome);
}

std::vector<std::size_t> decode_surface_code(const DecodingGraph& graph,
                                             const std::vector<std::size_t>& defects) {
    return matching_to_error(graph, min_weight_perfect_matching(build_defect_graph(graph, defects)));
}

/* ---------------- cubic code decoders ---------------- */

CubicProjectionDecoder::CubicProjectionDecoder(CubicCode code) : code_(std::move(code)) {
    code_.z_projection_graph.ensure_all_paths();
}

DecodeOutcome CubicProjectionDecoder::decode_impl(const SyndromeVector& s,
                                                  bool with_trace) const {
    DecodeOutcome out;
    out.estimate = PauliOperator(code_.code.n_qubits);
    auto* trace = with_trace ? &out.trace : nullptr;
    SyndromeState st(code_.code, s);
    const auto& colex = code_.colex;
    // Bit-flip cleanup on the Z-stabilizer (blue) faces: one X per face.
    for (std::size_t f = 0; f < colex.num_faces(); ++f) {
        if ((*colex.face_coloring)[f] != Color::blue) continue;
        if (!st.bits[code_.face_check[f]]) continue;
        st.apply_single(out.estimate, 'X', code_.designated[f]);
        if (trace)
            trace->push_back(
                {"x-cleanup", "face " + std::to_string(f) + " -> X" +
                                  std::to_string(code_.designated[f] + 1)});
    }
    // Residual phase errors live on the toric code of the blue-removed dual:
    // defects sit on the red/green faces, arcs are the blue edges.
    std::vector<std::size_t> defects;
    for (std::size_t f = 0; f < colex.num_faces(); ++f)
        if ((*colex.face_coloring)[f] != Color::blue && st.bits[code_.face_check[f]])
            defects.push_back(f);
    auto matching =
        min_weight_perfect_matching(build_defect_graph(code_.z_projection_graph, defects));
    if (trace) trace->push_back({"matching", pairs_to_string(matching)});
    for (auto e : matching_to_error(code_.z_projection_graph, matching)) {
        std::size_t u = std::min(colex.edge(e)[0], colex.edge(e)[1]);
        st.apply_single(out.estimate, 'Z', u);
        if (trace) trace->push_back({"lift", "edge " + std::to_string(e) + " -> Z" +
                                                 std::to_string(u + 1)});
    }
    st.fix_homology(out.estimate, trace);
    st.expect_clear();
    return out;
}

CubicColoredMatchingDecoder::CubicColoredMatchingDecoder(CubicCode code)
    : code_(std::move(code)) {
    code_.colored_graph.ensure_all_paths();
}

DecodeOutcome CubicColoredMatchingDecoder::decode_impl(const SyndromeVector& s,
                                                       bool with_trace) const {
    DecodeOutcome out;
    out.estimate = PauliOperator(code_.code.n_qubits);
    auto* trace = with_trace ? &out.trace : nullptr;
    SyndromeState st(code_.code, s);
    const auto& colex = code_.colex;
    std::vector<std::size_t> defects;
    for (std::size_t f = 0; f < colex.num_faces(); ++f)
        if (st.bits[code_.face_check[f]]) defects.push_back(f);
    auto matching =
        min_weight_perfect_matching(build_defect_graph(code_.colored_graph, defects));
    if (trace) trace->push_back({"matching", pairs_to_string(matching)});
    // The color of each carrier edge names the Pauli; either endpoint works,
    // the lower index is used.
    for (auto e : matching_to_error(code_.colored_graph, matching)) {
        char p = color_pauli((*colex.edge_coloring)[e]);
        std::size_t u = std::min(colex.edge(e)[0], colex.edge(e)[1]);
        st.apply_single(out.estimate, p, u);
        if (trace)
            trace->push_back({"lift", std::string(1, p) + std::to_string(u + 1) +
                                          " from edge " + std::to_string(e)});
    }
    st.fix_homology(out.estimate, trace);
    st.expect_clear();
    return out;
}

/* ---------------- TSCC decoder ---------------- */

TsccDecoder::TsccDecoder(TsccCode code, ColorCodeDecoder::Strategy strategy)
    : code_(std::move(code)), sub_(code_.geom.source, strategy) {}

DecodeOutcome TsccDecoder::decode_impl(const SyndromeVector& s, bool with_trace) const {
    DecodeOutcome out;
    out.estimate = PauliOperator(code_.code.n_qubits);
    auto* trace = with_trace ? &out.trace : nullptr;
    SyndromeState st(code_.code, s);
    const auto& src = code_.geom.source;
    // Local X cleanup face by face via the rank-2 (Z-type) stabilizers.
    for (std::size_t f = 0; f < src.num_faces(); ++f) {
        if (!st.bits[code_.rank2_check[f]]) continue;
        st.apply_single(out.estimate, 'X', code_.designated[f]);
        if (trace)
            trace->push_back({"x-cleanup", "face " + std::to_string(f) + " -> X" +
                                               std::to_string(code_.designated[f] + 1)});
    }
    // Project the rank-3 syndromes onto the source 2-colex and decode there.
    std::vector<bool> face_syndrome(src.num_faces(), false);
    for (std::size_t f = 0; f < src.num_faces(); ++f)
        face_syndrome[f] = st.bits[code_.rank3_check[f]];
    auto omega = sub_.decode(face_syndrome);
    if (trace) trace->push_back({"projection", std::to_string(omega.size()) + " colex vertices"});
    for (auto v : omega) {
        std::size_t q = code_.geom.triangle_qubits[v][0];
        st.apply_single(out.estimate, 'Z', q);
        if (trace)
            trace->push_back({"lift", "colex vertex " + std::to_string(v) + " -> Z" +
                                          std::to_string(q + 1)});
    }
    st.fix_homology(out.estimate, trace);
    st.expect_clear();
    return out;
}

/* ---------------- five-squares decoder ---------------- */

FiveSquaresDecoder::FiveSquaresDecoder(FiveSquaresCode code) : code_(std::move(code)) {
    code_.copy_a.ensure_all_paths();
    code_.copy_b.ensure_all_paths();
}

DecodeOutcome FiveSquaresDecoder::decode_impl(const SyndromeVector& s, bool with_trace) const {
    DecodeOutcome out;
    out.estimate = PauliOperator(code_.code.n_qubits);
    auto* trace = with_trace ? &out.trace : nullptr;
    SyndromeState st(code_.code, s);
    const auto& geom = code_.geom;
    // Stage 1: X cleanup from the Z-only stabilizers (inner faces, e-faces).
    for (std::size_t ci = 0; ci < geom.ph.cells.size(); ++ci)
        if (st.bits[code_.s4_check[ci]]) {
            st.apply_single(out.estimate, 'X', code_.s4_designated[ci]);
            if (trace) trace->push_back({"x-cleanup", "S4 cell " + std::to_string(ci)});
        }
    for (std::size_t me = 0; me < geom.gamma_mstar.num_edges(); ++me)
        if (st.bits[code_.s5_check[me]]) {
            st.apply_single(out.estimate, 'X', code_.s5_designated[me]);
            if (trace) trace->push_back({"x-cleanup", "S5 e-face " + std::to_string(me)});
        }
    // Stage 2: one Z per cell clears the rank-3 syndrome S2.
    for (std::size_t ci = 0; ci < geom.ph.cells.size(); ++ci)
        if (st.bits[code_.s2_check[ci]]) {
            st.apply_single(out.estimate, 'Z', code_.s2_designated[ci]);
            if (trace) trace->push_back({"z-cleanup", "S2 cell " + std::to_string(ci)});
        }
    // Stage 3: the remaining Z errors project onto two surface-code copies.
    auto run_copy = [&](const DecodingGraph& g, bool copy_b) {
        std::vector<std::size_t> defects;
        for (std::size_t phi = 0; phi < geom.gamma.num_faces(); ++phi) {
            bool bit = (geom.face_class_b[phi] == copy_b) ? st.bits[code_.s1_check[phi]]
                                                          : st.bits[code_.s3_check[phi]];
            if (bit) defects.push_back(phi);
        }
        auto m = min_weight_perfect_matching(build_defect_graph(g, defects));
        if (trace) trace->push_back({copy_b ? "copy-b" : "copy-a", pairs_to_string(m)});
        for (auto q : matching_to_error(g, m)) {
            st.apply_single(out.estimate, 'Z', q);
            if (trace)
                trace->push_back({"lift", "Z" + std::to_string(q + 1)});
        }
    };
    run_copy(code_.copy_a, false);
    run_copy(code_.copy_b, true);
    st.fix_homology(out.estimate, trace);
    st.expect_clear();
    return out;
}

/* ---------------- subsystem surface decoder ---------------- */

SubsystemSurfaceDecoder::SubsystemSurfaceDecoder(SubsystemSurfaceCode code)
    : code_(std::move(code)) {
    code_.graph_x.ensure_all_paths();
    code_.graph_z.ensure_all_paths();
}

DecodeOutcome SubsystemSurfaceDecoder::decode_impl(const SyndromeVector& s,
                                                   bool with_trace) const {
    DecodeOutcome out;
    out.estimate = PauliOperator(code_.code.n_qubits);
    auto* trace = with_trace ? &out.trace : nullptr;
    SyndromeState st(code_.code, s);
    std::size_t nfaces = code_.geom.source.num_faces();
    auto run = [&](const DecodingGraph& g, const std::vector<std::size_t>& checks, char pauli) {
        std::vector<std::size_t> defects;
        for (std::size_t f = 0; f < nfaces; ++f)
            if (st.bits[checks[f]]) defects.push_back(f);
        auto m = min_weight_perfect_matching(build_defect_graph(g, defects));
        if (trace)
            trace->push_back({pauli == 'X' ? "bit-flips" : "phase-flips", pairs_to_string(m)});
        for (auto q : matching_to_error(g, m)) st.apply_single(out.estimate, pauli, q);
    };
    run(code_.graph_x, code_.sz_check, 'X');  // s^Z defects locate bit flips
    run(code_.graph_z, code_.sx_check, 'Z');  // s^X defects locate phase flips
    st.fix_homology(out.estimate, trace);
    st.expect_clear();
    return out;
}

}  // namespace tsc
