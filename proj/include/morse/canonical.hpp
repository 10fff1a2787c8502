#pragma once

#include <cstdint>
#include <vector>

#include "morse/kr_graph.hpp"
#include "morse/surface.hpp"

namespace morse {

/// The canonical KR-graph of the critical type (q, c0, c1, c2, eps) on s, c1
/// being forced by the Morse equality.
///
/// Line normal form, heights 0, 1, 2, ... from the bottom: the sources
/// (negative boundary circles in surface order, then the minima) merged by a
/// comb of joining saddles; one split/join saddle pair per handle; the
/// degree-2 vertices of a non-orientable surface (one for odd genus, two for
/// even); a comb of splitting saddles feeding the sinks (maxima, then positive
/// boundary circles in surface order).
///
/// Circle target with q != 0: the Line form of the surface cut along a fiber,
/// with the two new circles B0.1 (bottom) and B1.1 (top) glued back into a
/// single wrapping edge; heights are rescaled into (0, 1) so that 0 is a
/// regular value cutting one fiber. Circle with q = 0 is the Line form squeezed
/// into (0, 1).
///
/// Errc::Infeasible when no such map exists (no minimum and no negative
/// boundary on a Line target, gcd(q) != 1, a Circle map on the projective plane).
KRGraph canonical_kr_graph(const Surface& s, const BoundarySigns& eps, std::int64_t c0, std::int64_t c2,
                           Target target, const std::vector<std::int64_t>& q);

}  // namespace morse
