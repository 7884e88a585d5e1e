#pragma once

#include <string>

#include "tsc/complex.hpp"

namespace tsc {

enum class Family {
    honeycomb_torus,
    square_torus,
    square_octagon_torus,
    triangular_torus,
    rotated_surface_dsq,
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/* Build a lattice on the torus. `size` is a scale parameter, not a raw
 * lattice dimension; the mapping keeps every family valid at all sizes:
 *
 *   honeycomb_torus       size s1 (x s2)  -> 3*s1 x 2*s2 bricks, 12*s1*s2 vertices
 *   square_torus          size L          -> L x L, L^2 vertices (L >= 2)
 *   square_octagon_torus  size s          -> 2s x 2s squares, 16*s^2 vertices
 *   triangular_torus      size L          -> L x L, L^2 vertices (L >= 2)
 *   rotated_surface_dsq   size d (odd>=3) -> (d^2+1)/2 vertices, d^2+1 edges
 */
SurfaceComplex build_family(Family f, std::size_t size, std::size_t size2 = 0);

/* The 12-qubit hexagonal lattice on a torus with six faces, with the vertex
 * numbering under which the cubic-code stabilizers come out as
 *   S1 = Z1 Z5 Z8 Z10 Z7 Z4   S2 = Z2 Z6 Z3 Z12 Z9 Z11
 *   S3 = X2 X6 X9 X11 X8 X5   S4 = X1 X4 X3 X12 X7 X10
 *   S5 = Y3 Y4 Y7 Y12 Y9 Y6
 * The adjacency was reconstructed from those operators; the two pinned
 * homology cycles below generate S6 = Y2 X5 X8 Y11 and
 * S7 = X7 Z10 Y8 X11 Z9 Y12. */
SurfaceComplex honeycomb12();
/* The pinned homology representatives (cycles 2-5-8-11 and 7-10-8-11-9-12). */
std::vector<CycleSet> honeycomb12_homology_cycles();

}  // namespace tsc
