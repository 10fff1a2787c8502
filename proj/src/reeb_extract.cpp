#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "morse/error.hpp"
#include "morse/height_mesh.hpp"

namespace morse {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

enum class PointType { Regular, Min, Max, Saddle };

// Counts the runs of lower neighbours around an interior vertex.
PointType classify_interior(const HeightMesh& m, int v, const std::vector<std::pair<int, int>>& link) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : link) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto components = [&](bool lower) {
    std::set<int> seen;
    int count = 0;
    for (const auto& [x, nbrs] : adj) {
      if ((m.heights[x] < m.heights[v]) != lower || seen.count(x)) continue;
      ++count;
      std::vector<int> stack{x};
      while (!stack.empty()) {
        const int y = stack.back();
        stack.pop_back();
        if (!seen.insert(y).second) continue;
        for (int z : adj[y]) {
          if ((m.heights[z] < m.heights[v]) == lower) stack.push_back(z);
        }
      }
    }
    return count;
  };
  const int lower = components(true), upper = components(false);
  if (lower == 0) return PointType::Min;
  if (upper == 0) return PointType::Max;
  if (lower == 1) return PointType::Regular;
  if (lower == 2) return PointType::Saddle;
  fail(Errc::NotMorse, "degenerate saddle at vertex " + std::to_string(m.ids[v]) + " (" + std::to_string(lower) +
                           " lower link components)");
}

struct Event {
  PointType point = PointType::Regular;  // Regular marks a boundary cycle
  int cycle = -1;
  int sign = 0;
  Rational height;
};

}  // namespace

ReebResult extract_kr_graph(const HeightMesh& m) {
  const Surface surface = surface_of(m);
  const int nv = static_cast<int>(m.ids.size());
  const int nt = static_cast<int>(m.triangles.size());

  std::vector<int> cycle_of(nv, -1);
  for (int c = 0; c < static_cast<int>(m.boundary.size()); ++c) {
    for (int v : m.boundary[c].vertices) cycle_of[v] = c;
  }

  std::vector<std::vector<std::pair<int, int>>> link(nv);
  std::map<std::pair<int, int>, int> edge_index;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> tri_edges(nt);
  for (int t = 0; t < nt; ++t) {
    const auto& tri = m.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const int a = tri[i], b = tri[(i + 1) % 3];
      link[tri[(i + 2) % 3]].push_back({a, b});
      const auto k = std::minmax(a, b);
      auto [it, fresh] = edge_index.emplace(std::pair{k.first, k.second}, static_cast<int>(edges.size()));
      if (fresh) edges.push_back({k.first, k.second});
      tri_edges[t][i] = it->second;
    }
  }

  // boundary signs from the interior neighbours of each cycle
  std::vector<int> cycle_sign(m.boundary.size(), 0);
  for (int c = 0; c < static_cast<int>(m.boundary.size()); ++c) {
    const Rational& h = m.heights[m.boundary[c].vertices.front()];
    bool above = false, below = false;
    for (auto [a, b] : edges) {
      int other;
      if (cycle_of[a] == c && cycle_of[b] != c) other = b;
      else if (cycle_of[b] == c && cycle_of[a] != c) other = a;
      else continue;
      (m.heights[other] > h ? above : below) = true;
    }
    if (above == below) {
      fail(Errc::NotMorse, "boundary cycle " + m.boundary[c].label + " has neighbours on both sides of its level");
    }
    cycle_sign[c] = below ? 1 : -1;
  }

  std::vector<PointType> type(nv, PointType::Regular);
  std::set<Rational> critical_heights;
  for (int v = 0; v < nv; ++v) {
    if (cycle_of[v] != -1) continue;
    type[v] = classify_interior(m, v, link[v]);
    if (type[v] != PointType::Regular && !critical_heights.insert(m.heights[v]).second) {
      fail(Errc::NotGeneric, "two critical points at height " + format_rational(m.heights[v]));
    }
  }

  std::vector<Rational> levels(m.heights.begin(), m.heights.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const int nr = static_cast<int>(levels.size());
  std::vector<int> rank(nv);
  for (int v = 0; v < nv; ++v) {
    rank[v] = static_cast<int>(std::lower_bound(levels.begin(), levels.end(), m.heights[v]) - levels.begin());
  }
  const int ne = static_cast<int>(edges.size());
  std::vector<int> elo(ne), ehi(ne);
  for (int e = 0; e < ne; ++e) {
    elo[e] = std::min(rank[edges[e].first], rank[edges[e].second]);
    ehi[e] = std::max(rank[edges[e].first], rank[edges[e].second]);
  }
  std::vector<int> tlo(nt), thi(nt);
  std::vector<int> tri_of_edge(ne, -1);
  for (int t = 0; t < nt; ++t) {
    tlo[t] = std::min({rank[m.triangles[t][0]], rank[m.triangles[t][1]], rank[m.triangles[t][2]]});
    thi[t] = std::max({rank[m.triangles[t][0]], rank[m.triangles[t][1]], rank[m.triangles[t][2]]});
    for (int e : tri_edges[t]) tri_of_edge[e] = t;
  }

  // level k sits between levels[k] and levels[k+1]; its circles are classes
  // of crossing edges linked through triangles
  std::vector<std::map<int, int>> circle_of(std::max(nr - 1, 0));
  int circle_count = 0;
  std::vector<int> circle_level;
  std::vector<int> circle_edge;
  for (int k = 0; k + 1 < nr; ++k) {
    UnionFind uf(ne);
    for (int t = 0; t < nt; ++t) {
      int first = -1;
      for (int e : tri_edges[t]) {
        if (elo[e] <= k && k < ehi[e]) {
          if (first == -1) first = e;
          else uf.unite(first, e);
        }
      }
    }
    std::map<int, int> root_circle;
    for (int e = 0; e < ne; ++e) {
      if (!(elo[e] <= k && k < ehi[e])) continue;
      auto [it, fresh] = root_circle.emplace(uf.find(e), circle_count);
      if (fresh) {
        ++circle_count;
        circle_level.push_back(k);
        circle_edge.push_back(e);
      }
      circle_of[k][e] = it->second;
    }
  }

  // bands around each height: triangles meeting the level, glued along edges
  // that meet it too
  std::vector<int> below_band(circle_count, -1), above_band(circle_count, -1);
  std::vector<Event> events;
  std::vector<int> band_event;
  UnionFind arcs(circle_count);
  for (int k = 0; k < nr; ++k) {
    UnionFind uf(nt);
    std::vector<int> edge_tri(ne, -1);
    for (int t = 0; t < nt; ++t) {
      if (!(tlo[t] <= k && k <= thi[t])) continue;
      for (int e : tri_edges[t]) {
        if (!(elo[e] <= k && k <= ehi[e])) continue;
        if (edge_tri[e] == -1) edge_tri[e] = t;
        else uf.unite(edge_tri[e], t);
      }
    }
    std::map<int, int> band_index;
    std::vector<std::vector<int>> lower, upper;
    std::vector<std::vector<Event>> here;
    auto band_at = [&](int t) {
      auto [it, fresh] = band_index.emplace(uf.find(t), static_cast<int>(lower.size()));
      if (fresh) {
        lower.emplace_back();
        upper.emplace_back();
        here.emplace_back();
      }
      return it->second;
    };
    if (k > 0) {
      for (auto [e, circle] : circle_of[k - 1]) {
        if (circle_edge[circle] == e) lower[band_at(tri_of_edge[e])].push_back(circle);
      }
    }
    if (k + 1 < nr) {
      for (auto [e, circle] : circle_of[k]) {
        if (circle_edge[circle] == e) upper[band_at(tri_of_edge[e])].push_back(circle);
      }
    }
    for (int v = 0; v < nv; ++v) {
      if (rank[v] != k || type[v] == PointType::Regular) continue;
      const int t = edge_tri[edge_index.at(std::minmax(link[v].front().first, v))];
      here[band_at(t)].push_back({type[v], -1, 0, m.heights[v]});
    }
    for (int c = 0; c < static_cast<int>(m.boundary.size()); ++c) {
      const int v = m.boundary[c].vertices.front();
      if (rank[v] != k) continue;
      const int t = edge_tri[edge_index.at(std::minmax(m.boundary[c].vertices[1], v))];
      here[band_at(t)].push_back({PointType::Regular, c, cycle_sign[c], m.heights[v]});
    }

    for (int b = 0; b < static_cast<int>(lower.size()); ++b) {
      const int nl = static_cast<int>(lower[b].size()), nu = static_cast<int>(upper[b].size());
      if (here[b].size() > 1) {
        fail(Errc::NotGeneric, "several critical points or boundary circles in one level set at height " +
                                   format_rational(levels[k]));
      }
      if (here[b].empty()) {
        if (nl != 1 || nu != 1) fail(Errc::NotMorse, "level sets change without a critical point at " + format_rational(levels[k]));
        arcs.unite(lower[b][0], upper[b][0]);
        continue;
      }
      const Event& ev = here[b][0];
      bool fits;
      if (ev.cycle != -1) {
        fits = ev.sign < 0 ? nl == 0 && nu == 1 : nl == 1 && nu == 0;
      } else if (ev.point == PointType::Min) {
        fits = nl == 0 && nu == 1;
      } else if (ev.point == PointType::Max) {
        fits = nl == 1 && nu == 0;
      } else {
        fits = nl >= 1 && nu >= 1 && (nl + nu == 3 || nl + nu == 2);
      }
      if (!fits) fail(Errc::NotMorse, "unexpected level-set change at height " + format_rational(levels[k]));
      const int id = static_cast<int>(events.size());
      events.push_back(ev);
      band_event.push_back(nl + nu);
      for (int circle : lower[b]) above_band[circle] = id;
      for (int circle : upper[b]) below_band[circle] = id;
    }
  }

  KRGraph g;
  g.target = Target::Line;
  for (int i = 0; i < static_cast<int>(events.size()); ++i) {
    const Event& ev = events[i];
    KRVertex v{i, VertexKind::Min, ev.height, ""};
    if (ev.cycle != -1) {
      v.kind = VertexKind::BoundaryCircle;
      v.label = m.boundary[ev.cycle].label;
    } else if (ev.point == PointType::Max) {
      v.kind = VertexKind::Max;
    } else if (ev.point == PointType::Saddle) {
      v.kind = band_event[i] == 3 ? VertexKind::Saddle3 : VertexKind::Star2;
    }
    g.vertices.push_back(v);
  }
  // one KR edge per chain of circles joined across event-free bands
  std::map<int, std::pair<int, int>> span;  // root -> (lowest circle, highest circle)
  for (int c = 0; c < circle_count; ++c) {
    auto [it, fresh] = span.emplace(arcs.find(c), std::pair{c, c});
    if (fresh) continue;
    if (circle_level[c] < circle_level[it->second.first]) it->second.first = c;
    if (circle_level[c] > circle_level[it->second.second]) it->second.second = c;
  }
  for (const auto& [root, ends] : span) {
    const int tail = below_band[ends.first], head = above_band[ends.second];
    if (tail < 0 || head < 0) fail(Errc::NotMorse, "dangling level-set arc");
    g.edges.push_back({static_cast<int>(g.edges.size()), tail, head, 0});
  }
  g = normalized(g);
  CriticalType k = critical_type_of(g, surface, std::vector<std::int64_t>(homology_rank(surface), 0));
  return {std::move(g), surface, std::move(k)};
}

}  // namespace morse
