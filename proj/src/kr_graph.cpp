#include "morse/kr_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "morse/error.hpp"

namespace morse {

namespace {

bool is_critical(VertexKind kind) { return kind != VertexKind::BoundaryCircle; }

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Values c + n (n integer) strictly inside the lifted interval of an edge.
std::vector<Rational> crossings(const Rational& lo, const Rational& hi, const Rational& c) {
  std::vector<Rational> out;
  Integer n = ceil(lo - c);
  for (Rational x = c + Rational(n); x < hi; x += 1) {
    if (x > lo) out.push_back(x);
  }
  return out;
}

}  // namespace

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Min: return "Min";
    case VertexKind::Max: return "Max";
    case VertexKind::Saddle3: return "Saddle3";
    case VertexKind::Star2: return "Star2";
    case VertexKind::BoundaryCircle: return "BoundaryCircle";
  }
  return "?";
}

std::string_view to_string(PieceClass cls) {
  switch (cls) {
    case PieceClass::Q0: return "Q0";
    case PieceClass::Q01: return "Q01";
    case PieceClass::Q1: return "Q1";
    case PieceClass::Detached: return "Detached";
  }
  return "?";
}

const KRVertex& KRGraph::vertex(int id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return v;
  }
  fail(Errc::InvalidArgument, "no vertex with id " + std::to_string(id));
}

int KRGraph::degree(int id) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.tail == id) ++d;
    if (e.head == id) ++d;
  }
  return d;
}

void check_kr_graph(const KRGraph& g) {
  std::map<int, const KRVertex*> by_id;
  std::set<std::string> labels;
  for (const auto& v : g.vertices) {
    if (!by_id.emplace(v.id, &v).second) fail(Errc::InvalidArgument, "duplicate vertex id " + std::to_string(v.id));
    if (v.kind == VertexKind::BoundaryCircle) {
      if (v.label.empty()) fail(Errc::InvalidArgument, "boundary vertex without label");
      if (!labels.insert(v.label).second) fail(Errc::InvalidArgument, "duplicate boundary label " + v.label);
    } else if (!v.label.empty()) {
      fail(Errc::InvalidArgument, "only boundary vertices carry labels");
    }
    if (g.target == Target::Circle && (v.height < 0 || v.height >= 1)) {
      fail(Errc::InvalidArgument, "Circle heights must lie in [0, 1)");
    }
  }

  std::map<int, int> in, out;
  for (const auto& e : g.edges) {
    if (e.tail.has_value() != e.head.has_value()) fail(Errc::InvalidArgument, "edge with a single endpoint");
    if (e.is_loop()) {
      if (g.target != Target::Circle || e.wrap < 1) fail(Errc::InvalidArgument, "closed loop edge must wind around a circle");
      continue;
    }
    if (!by_id.count(*e.tail) || !by_id.count(*e.head)) fail(Errc::InvalidArgument, "edge references unknown vertex");
    const Rational& lo = by_id[*e.tail]->height;
    const Rational hi = by_id[*e.head]->height + e.wrap;
    if (g.target == Target::Line && e.wrap != 0) fail(Errc::InvalidArgument, "Line edges cannot wrap");
    if (e.wrap < 0 || !(lo < hi)) fail(Errc::InvalidArgument, "edge " + std::to_string(e.id) + " does not go up");
    ++out[*e.tail];
    ++in[*e.head];
  }

  for (const auto& v : g.vertices) {
    const int i = in[v.id], o = out[v.id];
    bool ok = false;
    switch (v.kind) {
      case VertexKind::Min: ok = i == 0 && o == 1; break;
      case VertexKind::Max: ok = i == 1 && o == 0; break;
      case VertexKind::Saddle3: ok = i + o == 3 && i >= 1 && o >= 1; break;
      case VertexKind::Star2: ok = i == 1 && o == 1; break;
      case VertexKind::BoundaryCircle: ok = i + o == 1; break;
    }
    if (!ok) {
      fail(Errc::InvalidArgument, "vertex " + std::to_string(v.id) + " of kind " + std::string(to_string(v.kind)) +
                                      " has wrong degree");
    }
  }

  std::set<Rational> critical_heights;
  for (const auto& v : g.vertices) {
    if (is_critical(v.kind) && !critical_heights.insert(v.height).second) {
      fail(Errc::NotGeneric, "two critical vertices at height " + format_rational(v.height));
    }
  }
}

BoundarySigns boundary_signs(const KRGraph& g) {
  BoundarySigns eps;
  for (const auto& v : g.vertices) {
    if (v.kind != VertexKind::BoundaryCircle) continue;
    for (const auto& e : g.edges) {
      if (e.head == v.id) eps[v.label] = 1;
      if (e.tail == v.id) eps[v.label] = -1;
    }
  }
  return eps;
}

CriticalType critical_type_of(const KRGraph& g, const Surface& s, std::vector<std::int64_t> q) {
  check_kr_graph(g);
  CriticalType k;
  k.target = g.target;
  k.eps = boundary_signs(g);
  std::set<std::string> graph_labels, surface_labels(s.boundary().begin(), s.boundary().end());
  for (const auto& [label, sign] : k.eps) graph_labels.insert(label);
  if (graph_labels != surface_labels) fail(Errc::BoundaryMismatch, "boundary vertices do not match the surface");

  for (const auto& v : g.vertices) {
    switch (v.kind) {
      case VertexKind::Min: ++k.c0; break;
      case VertexKind::Max: ++k.c2; break;
      case VertexKind::Saddle3: ++k.c1; break;
      case VertexKind::Star2:
        if (s.is_orientable()) fail(Errc::InvalidArgument, "degree-2 vertex on an orientable surface");
        ++k.c1;
        break;
      case VertexKind::BoundaryCircle: break;
    }
  }
  if (static_cast<int>(q.size()) != homology_rank(s)) {
    fail(Errc::InvalidArgument, "q must have length r=" + std::to_string(homology_rank(s)));
  }
  if (g.target == Target::Line && std::any_of(q.begin(), q.end(), [](std::int64_t v) { return v != 0; })) {
    fail(Errc::InvalidArgument, "q must be zero for a Line target");
  }
  k.q = std::move(q);
  auto report = validate_critical_type(s, k);
  if (!report) fail(Errc::InvalidArgument, "graph does not fit the surface: " + report.violations.front());
  return k;
}

std::int64_t regular_fiber_components(const KRGraph& g, const Rational& level) {
  check_kr_graph(g);
  const Rational c = g.target == Target::Circle ? frac(level) : level;
  for (const auto& v : g.vertices) {
    if (v.height == c) fail(Errc::NotRegular, format_rational(level) + " is the height of a vertex");
  }
  std::int64_t count = 0;
  for (const auto& e : g.edges) {
    if (e.is_loop()) {
      count += e.wrap;
      continue;
    }
    const Rational& lo = g.vertex(*e.tail).height;
    const Rational hi = g.vertex(*e.head).height + e.wrap;
    if (g.target == Target::Line) {
      if (lo < c && c < hi) ++count;
    } else {
      count += static_cast<std::int64_t>(crossings(lo, hi, c).size());
    }
  }
  return count;
}

CutDecomposition cut_at_level(const KRGraph& g, const Rational& level) {
  if (g.target != Target::Circle) fail(Errc::InvalidArgument, "cutting needs a Circle target");
  check_kr_graph(g);
  const Rational c = frac(level);
  for (const auto& v : g.vertices) {
    if (v.height == c) fail(Errc::NotRegular, format_rational(level) + " is the height of a vertex");
  }

  std::vector<KRVertex> verts;
  std::map<int, int> index_of;
  for (const auto& v : g.vertices) {
    index_of[v.id] = static_cast<int>(verts.size());
    verts.push_back({0, v.kind, frac(v.height - c), v.label});
  }
  std::vector<std::pair<int, int>> links;
  std::vector<int> b0_marks, b1_marks;
  int next_cut = 1;
  auto add_cut = [&]() {
    const std::string k = std::to_string(next_cut++);
    b1_marks.push_back(static_cast<int>(verts.size()));
    verts.push_back({0, VertexKind::BoundaryCircle, Rational(1), "B1." + k});
    b0_marks.push_back(static_cast<int>(verts.size()));
    verts.push_back({0, VertexKind::BoundaryCircle, Rational(0), "B0." + k});
    return std::pair{static_cast<int>(verts.size()) - 2, static_cast<int>(verts.size()) - 1};
  };

  for (const auto& e : g.edges) {
    if (e.is_loop()) {
      std::vector<std::pair<int, int>> cuts;
      for (int n = 0; n < e.wrap; ++n) cuts.push_back(add_cut());
      for (int n = 0; n < e.wrap; ++n) links.emplace_back(cuts[n].second, cuts[(n + 1) % e.wrap].first);
      continue;
    }
    const auto xs = crossings(g.vertex(*e.tail).height, g.vertex(*e.head).height + e.wrap, c);
    int from = index_of[*e.tail];
    for (std::size_t n = 0; n < xs.size(); ++n) {
      auto [top, bottom] = add_cut();
      links.emplace_back(from, top);
      from = bottom;
    }
    links.emplace_back(from, index_of[*e.head]);
  }

  const int n = static_cast<int>(verts.size());
  UnionFind uf(n);
  for (auto [a, b] : links) uf.unite(a, b);
  std::map<int, int> piece_of_root;
  CutDecomposition result{c, {}};
  std::vector<int> piece_of(n);
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = piece_of_root.emplace(uf.find(i), static_cast<int>(result.pieces.size()));
    if (fresh) result.pieces.emplace_back();
    piece_of[i] = it->second;
  }
  std::vector<std::map<int, int>> local(result.pieces.size());
  for (int i = 0; i < n; ++i) {
    auto& piece = result.pieces[piece_of[i]];
    const int id = static_cast<int>(piece.graph.vertices.size());
    local[piece_of[i]][i] = id;
    KRVertex v = verts[i];
    v.id = id;
    piece.graph.vertices.push_back(v);
  }
  for (auto [a, b] : links) {
    auto& piece = result.pieces[piece_of[a]];
    const int id = static_cast<int>(piece.graph.edges.size());
    piece.graph.edges.push_back({id, local[piece_of[a]][a], local[piece_of[a]][b], 0});
  }
  for (int i : b0_marks) ++result.pieces[piece_of[i]].b0;
  for (int i : b1_marks) ++result.pieces[piece_of[i]].b1;
  for (auto& piece : result.pieces) {
    piece.graph = normalized(piece.graph);
    if (piece.b0 > 0 && piece.b1 > 0) {
      piece.cls = PieceClass::Q01;
    } else if (piece.b0 > 0) {
      piece.cls = PieceClass::Q0;
    } else if (piece.b1 > 0) {
      piece.cls = PieceClass::Q1;
    } else {
      piece.cls = PieceClass::Detached;
    }
  }
  return result;
}

KRGraph normalized(const KRGraph& g) {
  std::vector<KRVertex> verts = g.vertices;
  std::stable_sort(verts.begin(), verts.end(), [](const KRVertex& a, const KRVertex& b) {
    return std::tie(a.height, a.kind, a.label) < std::tie(b.height, b.kind, b.label);
  });
  std::map<int, int> renumber;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    renumber[verts[i].id] = i;
    verts[i].id = i;
  }
  std::vector<KREdge> edges = g.edges;
  for (auto& e : edges) {
    if (e.is_loop()) continue;
    e.tail = renumber.at(*e.tail);
    e.head = renumber.at(*e.head);
  }
  std::stable_sort(edges.begin(), edges.end(), [](const KREdge& a, const KREdge& b) {
    const int ta = a.tail.value_or(1 << 30), tb = b.tail.value_or(1 << 30);
    const int ha = a.head.value_or(1 << 30), hb = b.head.value_or(1 << 30);
    return std::tie(ta, ha, a.wrap) < std::tie(tb, hb, b.wrap);
  });
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) edges[i].id = i;
  return KRGraph{g.target, std::move(verts), std::move(edges)};
}

bool same_shape(const KRGraph& a, const KRGraph& b) {
  if (a.target != b.target || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  const KRGraph na = normalized(a), nb = normalized(b);
  auto ranks = [](const KRGraph& g) {
    std::set<Rational> heights;
    for (const auto& v : g.vertices) heights.insert(v.height);
    std::vector<int> r;
    for (const auto& v : g.vertices) r.push_back(static_cast<int>(std::distance(heights.begin(), heights.find(v.height))));
    return r;
  };
  if (ranks(na) != ranks(nb)) return false;
  for (std::size_t i = 0; i < na.vertices.size(); ++i) {
    if (na.vertices[i].kind != nb.vertices[i].kind || na.vertices[i].label != nb.vertices[i].label) return false;
  }
  for (std::size_t i = 0; i < na.edges.size(); ++i) {
    const auto &ea = na.edges[i], &eb = nb.edges[i];
    if (ea.tail != eb.tail || ea.head != eb.head || ea.wrap != eb.wrap) return false;
  }
  return true;
}

std::string to_dot(const KRGraph& g) {
  std::ostringstream out;
  out << "digraph KR {\n";
  out << "  target=\"" << to_string(g.target) << "\";\n";
  for (const auto& v : g.vertices) {
    std::string_view shape;
    switch (v.kind) {
      case VertexKind::Min:
      case VertexKind::Max: shape = "point"; break;
      case VertexKind::Saddle3: shape = "triangle"; break;
      case VertexKind::Star2: shape = "star"; break;
      case VertexKind::BoundaryCircle: shape = "doublecircle"; break;
    }
    out << "  v" << v.id << " [shape=" << shape << ", kind=\"" << to_string(v.kind) << "\", height=\""
        << format_rational(v.height) << "\"";
    if (!v.label.empty()) out << ", label=\"" << v.label << "\"";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    if (e.is_loop()) {
      out << "  loop" << e.id << " [shape=plaintext, label=\"\"];\n";
      out << "  loop" << e.id << " -> loop" << e.id << " [wrap=" << e.wrap << "];\n";
      continue;
    }
    out << "  v" << *e.tail << " -> v" << *e.head;
    if (g.target == Target::Circle) out << " [wrap=" << e.wrap << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace morse
