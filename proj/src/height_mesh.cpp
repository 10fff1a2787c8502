#include "morse/height_mesh.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "morse/error.hpp"

namespace morse {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::map<EdgeKey, std::vector<int>> edge_faces(const HeightMesh& m) {
  std::map<EdgeKey, std::vector<int>> faces;
  for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t) {
    const auto& tri = m.triangles[t];
    for (int i = 0; i < 3; ++i) faces[key(tri[i], tri[(i + 1) % 3])].push_back(t);
  }
  return faces;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Consistent orientation of all triangles, found by walking across shared edges.
bool orientable_triangulation(const HeightMesh& m, const std::map<EdgeKey, std::vector<int>>& faces) {
  const int n = static_cast<int>(m.triangles.size());
  std::vector<int> sign(n, 0);
  auto goes = [&](int t, int a, int b) {
    const auto& tri = m.triangles[t];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] == a && tri[(i + 1) % 3] == b) return true;
    }
    return false;
  };
  for (int start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int t = todo.front();
      todo.pop();
      const auto& tri = m.triangles[t];
      for (int i = 0; i < 3; ++i) {
        const int a = tri[i], b = tri[(i + 1) % 3];
        for (int u : faces.at(key(a, b))) {
          if (u == t) continue;
          // u must run along b -> a when oriented like t
          const int want = goes(u, b, a) ? sign[t] : -sign[t];
          if (sign[u] == 0) {
            sign[u] = want;
            todo.push(u);
          } else if (sign[u] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

int HeightMesh::add_vertex(std::int64_t id, Rational height) {
  ids.push_back(id);
  heights.push_back(std::move(height));
  return static_cast<int>(ids.size()) - 1;
}

int HeightMesh::index_of(std::int64_t id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) fail(Errc::Format, "unknown vertex id " + std::to_string(id));
  return static_cast<int>(it - ids.begin());
}

HeightMesh parse_hmesh(std::string_view text) {
  HeightMesh m;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  std::map<std::int64_t, int> index;
  std::vector<std::pair<int, std::array<std::int64_t, 3>>> raw_triangles;
  std::vector<std::pair<int, std::pair<std::string, std::vector<std::int64_t>>>> raw_cycles;
  auto bad = [&](const std::string& what) { fail(Errc::Format, "line " + std::to_string(line_no) + ": " + what); };
  auto as_id = [&](const std::string& tok) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) bad("bad vertex id '" + tok + "'");
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "HMESH") bad("expected 'HMESH orientable|nonorientable'");
      if (tok[1] == "orientable") {
        m.orientable = true;
      } else if (tok[1] == "nonorientable") {
        m.orientable = false;
      } else {
        bad("unknown orientability '" + tok[1] + "'");
      }
      header = true;
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 3) bad("vertex line needs an id and a height");
      const auto id = as_id(tok[1]);
      Rational h;
      try {
        h = parse_rational(tok[2]);
      } catch (const Error& e) {
        bad(e.what());
      }
      if (!index.emplace(id, static_cast<int>(m.ids.size())).second) bad("duplicate vertex id " + tok[1]);
      m.add_vertex(id, std::move(h));
    } else if (tok[0] == "t") {
      if (tok.size() != 4) bad("triangle line needs three vertices");
      raw_triangles.push_back({line_no, {as_id(tok[1]), as_id(tok[2]), as_id(tok[3])}});
    } else if (tok[0] == "b") {
      if (tok.size() < 5) bad("boundary line needs a label and at least three vertices");
      std::vector<std::int64_t> cycle;
      for (std::size_t i = 2; i < tok.size(); ++i) cycle.push_back(as_id(tok[i]));
      raw_cycles.push_back({line_no, {tok[1], cycle}});
    } else {
      bad("unknown record '" + tok[0] + "'");
    }
  }
  if (!header) fail(Errc::Format, "missing HMESH header");

  for (const auto& [where, tri] : raw_triangles) {
    line_no = where;
    std::array<int, 3> t{};
    for (int i = 0; i < 3; ++i) {
      auto it = index.find(tri[i]);
      if (it == index.end()) bad("unknown vertex id " + std::to_string(tri[i]));
      t[i] = it->second;
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) bad("degenerate triangle");
    m.triangles.push_back(t);
  }
  std::set<std::string> labels;
  for (const auto& [where, cycle] : raw_cycles) {
    line_no = where;
    if (!labels.insert(cycle.first).second) bad("duplicate boundary label " + cycle.first);
    BoundaryCycle bc{cycle.first, {}};
    for (auto id : cycle.second) {
      auto it = index.find(id);
      if (it == index.end()) bad("unknown vertex id " + std::to_string(id));
      bc.vertices.push_back(it->second);
    }
    m.boundary.push_back(std::move(bc));
  }
  return m;
}

std::string format_hmesh(const HeightMesh& m) {
  std::ostringstream out;
  out << "HMESH " << (m.orientable ? "orientable" : "nonorientable") << "\n";
  for (std::size_t i = 0; i < m.ids.size(); ++i) out << "v " << m.ids[i] << " " << format_rational(m.heights[i]) << "\n";
  for (const auto& t : m.triangles) out << "t " << m.ids[t[0]] << " " << m.ids[t[1]] << " " << m.ids[t[2]] << "\n";
  for (const auto& b : m.boundary) {
    out << "b " << b.label;
    for (int v : b.vertices) out << " " << m.ids[v];
    out << "\n";
  }
  return out.str();
}

MeshCounts mesh_counts(const HeightMesh& m) {
  return {static_cast<std::int64_t>(m.ids.size()), static_cast<std::int64_t>(edge_faces(m).size()),
          static_cast<std::int64_t>(m.triangles.size())};
}

void validate_mesh(const HeightMesh& m) {
  if (m.triangles.empty()) fail(Errc::Format, "mesh has no triangles");
  const auto faces = edge_faces(m);
  const int nv = static_cast<int>(m.ids.size());

  std::set<std::array<int, 3>> seen;
  for (auto t : m.triangles) {
    std::sort(t.begin(), t.end());
    if (!seen.insert(t).second) fail(Errc::Format, "repeated triangle");
  }
  std::set<EdgeKey> one_sided;
  for (const auto& [e, fs] : faces) {
    if (fs.size() > 2) fail(Errc::Format, "edge " + std::to_string(m.ids[e.first]) + "-" + std::to_string(m.ids[e.second]) +
                                            " borders more than two triangles");
    if (fs.size() == 1) one_sided.insert(e);
  }

  std::vector<int> cycle_of(nv, -1);
  std::set<EdgeKey> cycle_edges;
  for (int c = 0; c < static_cast<int>(m.boundary.size()); ++c) {
    const auto& cyc = m.boundary[c].vertices;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cycle_of[cyc[i]] != -1) fail(Errc::Format, "vertex " + std::to_string(m.ids[cyc[i]]) + " on two boundary cycles");
      cycle_of[cyc[i]] = c;
      if (!cycle_edges.insert(key(cyc[i], cyc[(i + 1) % cyc.size()])).second) {
        fail(Errc::Format, "boundary cycle " + m.boundary[c].label + " repeats an edge");
      }
      if (m.heights[cyc[i]] != m.heights[cyc[0]]) {
        fail(Errc::NotMorse, "boundary cycle " + m.boundary[c].label + " is not at a constant height");
      }
    }
  }
  if (cycle_edges != one_sided) fail(Errc::Format, "boundary cycles do not match the one-sided edges of the mesh");

  // link of every vertex: a cycle inside, a path on the boundary
  std::vector<std::vector<EdgeKey>> link(nv);
  for (const auto& t : m.triangles) {
    for (int i = 0; i < 3; ++i) link[t[i]].push_back(key(t[(i + 1) % 3], t[(i + 2) % 3]));
  }
  for (int v = 0; v < nv; ++v) {
    if (link[v].empty()) fail(Errc::Format, "vertex " + std::to_string(m.ids[v]) + " is in no triangle");
    std::map<int, int> deg;
    std::map<int, int> comp;
    for (auto [a, b] : link[v]) {
      ++deg[a];
      ++deg[b];
    }
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : link[v]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::set<int> reached;
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (!reached.insert(x).second) continue;
      for (int y : adj[x]) stack.push_back(y);
    }
    int ends = 0;
    bool ok = reached.size() == adj.size();
    for (auto [x, d] : deg) {
      if (d == 1) ++ends;
      else if (d != 2) ok = false;
    }
    ok = ok && (cycle_of[v] == -1 ? ends == 0 : ends == 2);
    if (!ok) fail(Errc::Format, "surface is not a manifold at vertex " + std::to_string(m.ids[v]));
  }

  for (const auto& [e, fs] : faces) {
    if (cycle_edges.count(e)) continue;
    if (m.heights[e.first] == m.heights[e.second]) {
      fail(Errc::NotGeneric,
           "flat edge " + std::to_string(m.ids[e.first]) + "-" + std::to_string(m.ids[e.second]));
    }
  }

  if (orientable_triangulation(m, faces) != m.orientable) {
    fail(Errc::Format, std::string("header declares the mesh ") + (m.orientable ? "orientable" : "nonorientable") +
                           " but it is not");
  }
}

Surface surface_of(const HeightMesh& m) {
  validate_mesh(m);
  const int nt = static_cast<int>(m.triangles.size());
  std::vector<int> parent(nt);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, fs] : edge_faces(m)) {
    if (fs.size() == 2) parent[find(fs[0])] = find(fs[1]);
  }
  for (int t = 1; t < nt; ++t) {
    if (find(t) != find(0)) fail(Errc::InvalidArgument, "mesh is not connected");
  }
  const std::int64_t chi = mesh_counts(m).euler();
  const std::int64_t b = static_cast<std::int64_t>(m.boundary.size());
  std::vector<std::string> labels;
  for (const auto& c : m.boundary) labels.push_back(c.label);
  const std::int64_t genus = m.orientable ? (2 - b - chi) / 2 : 2 - b - chi;
  return Surface(m.orientable, static_cast<int>(genus), std::move(labels));
}

}  // namespace morse
