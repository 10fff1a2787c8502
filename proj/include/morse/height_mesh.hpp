#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morse/kr_graph.hpp"
#include "morse/numeric.hpp"
#include "morse/surface.hpp"

namespace morse {

struct BoundaryCycle {
  std::string label;
  std::vector<int> vertices;  // indices into HeightMesh::ids, in cyclic order
};

/// A triangulated compact surface with an exact height per vertex. Triangles
/// and boundary cycles refer to vertices by index, `ids` keeps the file ids.
struct HeightMesh {
  bool orientable = true;
  std::vector<std::int64_t> ids;
  std::vector<Rational> heights;
  std::vector<std::array<int, 3>> triangles;
  std::vector<BoundaryCycle> boundary;

  int add_vertex(std::int64_t id, Rational height);
  int index_of(std::int64_t id) const;
};

HeightMesh parse_hmesh(std::string_view text);
std::string format_hmesh(const HeightMesh& m);

struct MeshCounts {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;

  std::int64_t euler() const { return vertices - edges + faces; }
};

MeshCounts mesh_counts(const HeightMesh& m);

/// Structural checks: manifold links, boundary cycles made of the one-sided
/// edges, constant boundary heights, no flat interior edges and the declared
/// orientability. Throws Errc::Format, Errc::NotGeneric or Errc::NotMorse.
void validate_mesh(const HeightMesh& m);

/// The connected surface the mesh triangulates, boundary in file order.
Surface surface_of(const HeightMesh& m);

struct ReebResult {
  KRGraph graph;
  Surface surface;
  CriticalType type;
};

/// Sweeps the mesh bottom to top and returns its KR-graph together with the
/// critical type (q is the zero vector of the surface's rank).
ReebResult extract_kr_graph(const HeightMesh& m);

}  // namespace morse
