#pragma once

#include <string>

#include "tsc/code.hpp"
#include "tsc/constructions.hpp"

namespace tsc {

/* Versioned JSON interchange for complexes: vertices, edges, faces, optional
 * colorings. Round-trips bit-exactly (integers only). */
std::string complex_to_json(const SurfaceComplex& c, int indent = 2);
SurfaceComplex complex_from_json(const std::string& text);

/* Best-effort DOT text for visual inspection (no layout contract). */
std::string complex_to_dot(const SurfaceComplex& c);

/* Hypergraph with optional provenance annotations. */
std::string hypergraph_to_json(const Hypergraph& h, int indent = 2);
std::string promoted_to_json(const PromotedHypergraph& ph, int indent = 2);
std::string tscc_to_json(const TsccComplex& t, int indent = 2);
std::string ssurf_to_json(const SsurfComplex& s, int indent = 2);

/* Stabilizer/gauge generator listing: one Pauli string per line with labels. */
std::string code_export_listing(const SubsystemCode& code);

std::string report_to_json(const ParameterReport& rep, int indent = 2);

}  // namespace tsc
