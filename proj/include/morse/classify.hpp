#pragma once

#include <string>
#include <vector>

#include "morse/numeric.hpp"
#include "morse/surface.hpp"

namespace morse {

struct Verdict {
  bool equivalent = false;
  std::string reason;  // "ok" or the first differing field: target, q, c0, c1, c2, eps
};

/// Field-by-field comparison of two critical types on one surface. Types whose
/// boundary labels or q lengths differ live on different surfaces and raise
/// Errc::SurfaceMismatch.
Verdict compare_types(const CriticalType& a, const CriticalType& b);

bool sigma_homotopy_equivalent(const CriticalType& a, const CriticalType& b);
bool equivalent_up_to_flip(const CriticalType& a, const CriticalType& b);

/// gcd of the q entries: the index of f_*(H_1) in H_1 of the circle, 0 when q = 0.
Integer minimal_fiber_count(const CriticalType& k);

bool is_minimal(const Surface& s, const CriticalType& k);

enum class Half { Lower, Upper };

// One connected component of f^-1[0, 1/2] (Lower) or f^-1[1/2, 1] (Upper).
struct CompositePiece {
  Surface surface;
  CriticalType type;
  Half half = Half::Lower;
};

// Boundary labels of the pieces lying on f^-1(0), f^-1(1) and f^-1(1/2). Every
// Z label is shared by one Lower piece (as a positive circle) and one Upper
// piece (as a negative circle); the other labels are boundary of the surface.
struct Gluing {
  std::vector<std::string> b0;
  std::vector<std::string> b1;
  std::vector<std::string> z;
};

/// Minimality of a function on [0, 1] assembled from its two halves, decided by
/// the sufficient conditions: B0, B1, Z nonempty and B0 u B1 meeting every
/// component, minimal halves, and every component through Z reaching both B0
/// and B1. Malformed gluing data raises Errc::InvalidArgument.
bool is_minimal_composite(const std::vector<CompositePiece>& pieces, const Gluing& gluing);

}  // namespace morse
