#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsc/constructions.hpp"
#include "tsc/families.hpp"
#include "tsc/matching.hpp"
#include "tsc/pauli.hpp"

namespace tsc {

struct SyndromeVector {
    gf2::BitVec bits;  // indexed by stabilizer generator order
    bool operator==(const SyndromeVector&) const = default;
};

struct StabLabel {
    enum class Kind { face, homology };
    Kind kind = Kind::face;
    std::size_t face = 0;             // family-specific face / cell id
    std::string type;                 // "X","Y","Z","rank2","rank3","S1".."S5","sX","sZ"
    std::size_t homology_index = 0;   // for Kind::homology
};

struct Check {
    PauliOperator op;
    StabLabel label;
    long gen_index = -1;  // position among stabilizer generators, or -1 if dependent
    gf2::BitVec expr;     // dependent checks: combination over the generators
};

/* Gauge group, labeled stabilizer checks (an independent generator subset is
 *selected from them in order), bare logical pairs, and correction operators for
 * the homology-labeled generators. */
class SubsystemCode {
  public:
    std::size_t n_qubits = 0;
    std::vector<PauliOperator> gauge_gens;
    std::vector<Check> checks;
    std::vector<std::size_t> gen_checks;  // generator order -> check index
    std::vector<std::pair<PauliOperator, PauliOperator>> logicals;
    std::map<std::size_t, PauliOperator> corrector_of_gen;  // homology gens only

    std::size_t num_stabilizer_gens() const { return gen_checks.size(); }
    const PauliOperator& gen_op(std::size_t i) const { return checks[gen_checks[i]].op; }

    std::size_t rank_gauge() const;
    std::size_t num_gauge_qubits() const;  // r
    std::size_t num_logical_qubits() const { return logicals.size(); }

    SyndromeVector measure_syndrome(const PauliOperator& e) const;
    /* Bits for every labeled check, derived from the generator syndrome. */
    std::vector<bool> check_bits(const SyndromeVector& s) const;

    bool is_equivalent_modulo_gauge(const PauliOperator& a, const PauliOperator& b) const;
    /* Pre: measure_syndrome(actual) == measure_syndrome(estimate). */
    bool logical_failure(const PauliOperator& actual, const PauliOperator& estimate) const;

    const gf2::SpanIndex& gauge_span() const;
    SymplecticBasis gauge_basis() const;
    SymplecticBasis stabilizer_basis() const;

    /* Internal consistency: stabilizers commute with the gauge group and one
     * another, counting identities hold, logicals commute with checks. */
    void verify_structure() const;

  private:
    mutable std::optional<gf2::SpanIndex> gauge_span_;
};

/* Parameter report for the [[n,k,r,d]] check. */
struct ParameterReport {
    std::size_t n = 0, k = 0, r = 0, s = 0;
    std::optional<std::size_t> distance;        // exact value when the search concluded
    std::optional<std::size_t> distance_bound;  // a lower bound when provided
    bool distance_budget_exceeded = false;
    std::vector<std::string> notes;
    std::vector<std::string> failures;  // unmet expectations
    bool pass() const { return failures.empty(); }
    std::string to_string() const;
};

struct ParameterExpectation {
    std::optional<std::size_t> n, k, r, d;
    std::optional<std::size_t> d_lower_bound;
};

ParameterReport verify_parameters(const SubsystemCode& code, const ParameterExpectation& expect,
                                  std::size_t distance_budget_w = 6,
                                  std::uint64_t enumeration_budget = 200'000'000);

/* ---------------- family codes ---------------- */

struct CubicCode {
    SurfaceComplex colex;
    SubsystemCode code;
    std::vector<std::size_t> face_check;      // face id -> check index
    std::vector<std::size_t> designated;      // face id -> lowest vertex
    DecodingGraph z_projection_graph;         // nodes: faces, arcs: blue edges
    DecodingGraph colored_graph;              // nodes: faces, arcs: all edges
};
/* K_e by edge color (red XX, green YY, blue ZZ), B_f by face color, plus 2g
 * homology loop operators W_sigma. An explicit cycle list pins the homology
 * representatives (used by the 12-qubit fixture). */
CubicCode extract_cubic_code(const SurfaceComplex& colex,
                             const std::vector<CycleSet>* pinned_homology = nullptr);
/* The worked 12-qubit code with stabilizer generators exactly S1..S7. */
CubicCode honeycomb12_code();

struct TsccCode {
    TsccComplex geom;
    SubsystemCode code;
    std::vector<std::size_t> rank2_check;  // source face -> check index
    std::vector<std::size_t> rank3_check;
    std::vector<std::size_t> designated;   // source face -> lowest corner qubit
};
TsccCode extract_tscc_code(const SurfaceComplex& colex);
TsccCode extract_tscc_code(TsccComplex geom);

struct FiveSquaresCode {
    FiveSquaresComplex geom;
    SubsystemCode code;
    std::vector<std::size_t> s1_check, s3_check;  // per gamma face
    std::vector<std::size_t> s2_check, s4_check;  // per cell
    std::vector<std::size_t> s5_check;            // per e-face (= mstar edge)
    std::vector<std::size_t> s4_designated, s5_designated;  // X-cleanup qubits
    std::vector<std::size_t> s2_designated;                 // rank-3 Z cleanup qubits
    // Residual qubits: hypergraph vertices whose flag sits at an f-class
    // mstar vertex; each maps to one arc of one surface-code copy.
    DecodingGraph copy_a, copy_b;  // nodes: gamma faces
};
FiveSquaresCode extract_five_squares_code(FiveSquaresComplex geom);

struct SubsystemSurfaceCode {
    SsurfComplex geom;
    SubsystemCode code;
    std::vector<std::size_t> sx_check, sz_check;  // per source face
    DecodingGraph graph_x;  // bit-flip graph (s^Z defects)
    DecodingGraph graph_z;  // phase-flip graph (s^X defects)
};
SubsystemSurfaceCode extract_subsystem_surface_code(SsurfComplex geom);

/* Generic extraction for the bad five-squares variant and other promoted
 * hypergraphs: gauge group and whatever stabilizer space follows from it,
 * labeled generically (no decoder support). */
SubsystemCode extract_hypergraph_code(const Hypergraph& h);

/* Link operator of a hypergraph edge under the color map (red XX, green YY,
 * blue ZZ/ZZZ). */
PauliOperator edge_operator(const Hypergraph& h, std::size_t edge);
/* Loop operator of an edge set. */
PauliOperator loop_operator(const Hypergraph& h, const std::vector<std::size_t>& edges);

}  // namespace tsc
