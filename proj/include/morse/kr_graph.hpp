#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morse/numeric.hpp"
#include "morse/surface.hpp"

namespace morse {

enum class VertexKind { Min, Max, Saddle3, Star2, BoundaryCircle };

std::string_view to_string(VertexKind kind);

struct KRVertex {
  int id = 0;
  VertexKind kind = VertexKind::Min;
  Rational height;
  std::string label;  // boundary label, BoundaryCircle only
};

// Edges run upward from tail to head. On a Circle target the edge covers the
// lifted interval [h(tail), h(head) + wrap] of the real line, heights living in
// [0, 1). An edge with neither endpoint is a closed loop of the graph that
// winds `wrap` times around the circle.
struct KREdge {
  int id = 0;
  std::optional<int> tail;
  std::optional<int> head;
  int wrap = 0;

  bool is_loop() const { return !tail.has_value(); }
};

struct KRGraph {
  Target target = Target::Line;
  std::vector<KRVertex> vertices;
  std::vector<KREdge> edges;

  const KRVertex& vertex(int id) const;
  int degree(int id) const;
};

/// Throws Errc::InvalidArgument when the graph is not a well formed KR-graph
/// (degrees, edge directions, height ranges) and Errc::NotGeneric when two
/// critical vertices share a height.
void check_kr_graph(const KRGraph& g);

/// Sign of every boundary vertex: +1 when the boundary is the top of its edge.
BoundarySigns boundary_signs(const KRGraph& g);

CriticalType critical_type_of(const KRGraph& g, const Surface& s, std::vector<std::int64_t> q);

/// Number of level-set circles over a regular value c.
std::int64_t regular_fiber_components(const KRGraph& g, const Rational& c);

enum class PieceClass { Q0, Q01, Q1, Detached };

std::string_view to_string(PieceClass cls);

struct CutPiece {
  KRGraph graph;  // Line target, heights in [0, 1]
  PieceClass cls = PieceClass::Detached;
  int b0 = 0;
  int b1 = 0;
};

struct CutDecomposition {
  Rational level;
  std::vector<CutPiece> pieces;
};

/// Cuts a Circle graph along the level c. The k-th severed crossing becomes a
/// boundary vertex "B1.k" at height 1 closing the lower part and "B0.k" at
/// height 0 opening the upper part; other heights become (h - c) mod 1. A piece
/// that reaches neither is Detached, which only happens when the level is empty.
CutDecomposition cut_at_level(const KRGraph& g, const Rational& c);

/// Vertex ids ordered by (height, kind, label), edges by (tail, head).
KRGraph normalized(const KRGraph& g);

/// Equal up to a monotone change of heights: same kinds and labels in the same
/// height order and the same edges between them.
bool same_shape(const KRGraph& a, const KRGraph& b);

std::string to_dot(const KRGraph& g);

}  // namespace morse
