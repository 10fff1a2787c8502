#include "morse/canonical.hpp"

#include <algorithm>
#include <set>

#include "morse/error.hpp"
#include "morse/numeric.hpp"

namespace morse {

namespace {

constexpr const char* kBottomCut = "B0.1";
constexpr const char* kTopCut = "B1.1";

struct Builder {
  KRGraph g;

  int add(VertexKind kind, std::string label = {}) {
    const int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back({id, kind, Rational(id), std::move(label)});
    return id;
  }
  void link(int tail, int head) { g.edges.push_back({static_cast<int>(g.edges.size()), tail, head, 0}); }
};

// Line normal form on heights 0..N-1; vertex ids equal heights.
KRGraph line_form(const Surface& s, const BoundarySigns& eps, std::int64_t c0, std::int64_t c2) {
  Builder b;
  std::vector<std::string> negative, positive;
  for (const auto& label : s.boundary()) (eps.at(label) < 0 ? negative : positive).push_back(label);

  const std::int64_t sources = static_cast<std::int64_t>(negative.size()) + c0;
  const std::int64_t sinks = static_cast<std::int64_t>(positive.size()) + c2;
  if (sources < 1) fail(Errc::Infeasible, "a function on a compact surface needs a minimum or a negative boundary");
  if (sinks < 1) fail(Errc::Infeasible, "a function on a compact surface needs a maximum or a positive boundary");

  auto source = [&](std::int64_t i) {
    return i < static_cast<std::int64_t>(negative.size()) ? b.add(VertexKind::BoundaryCircle, negative[i])
                                                          : b.add(VertexKind::Min);
  };
  int trunk = source(0);
  for (std::int64_t i = 1; i < sources; ++i) {
    const int next = source(i);
    const int join = b.add(VertexKind::Saddle3);
    b.link(trunk, join);
    b.link(next, join);
    trunk = join;
  }

  int stars = 0;
  int handles = s.genus();
  if (!s.is_orientable()) {
    stars = s.genus() % 2 == 1 ? 1 : 2;
    handles = (s.genus() - stars) / 2;
  }
  for (int h = 0; h < handles; ++h) {
    const int split = b.add(VertexKind::Saddle3);
    const int join = b.add(VertexKind::Saddle3);
    b.link(trunk, split);
    b.link(split, join);
    b.link(split, join);
    trunk = join;
  }
  for (int i = 0; i < stars; ++i) {
    const int star = b.add(VertexKind::Star2);
    b.link(trunk, star);
    trunk = star;
  }

  auto sink = [&](std::int64_t i) {
    return i < c2 ? b.add(VertexKind::Max) : b.add(VertexKind::BoundaryCircle, positive[i - c2]);
  };
  for (std::int64_t i = 0; i + 1 < sinks; ++i) {
    const int split = b.add(VertexKind::Saddle3);
    b.link(trunk, split);
    b.link(split, sink(i));
    trunk = split;
  }
  b.link(trunk, sink(sinks - 1));
  return b.g;
}

}  // namespace

KRGraph canonical_kr_graph(const Surface& s, const BoundarySigns& eps, std::int64_t c0, std::int64_t c2, Target target,
                           const std::vector<std::int64_t>& q) {
  CriticalType k;
  k.target = target;
  k.q = q;
  k.c0 = c0;
  k.c2 = c2;
  k.c1 = c0 + c2 - euler_characteristic(s);
  k.eps = eps;
  const auto report = validate_critical_type(s, k);
  if (!report) fail(Errc::Infeasible, report.violations.front());

  const bool null_homotopic = std::all_of(q.begin(), q.end(), [](std::int64_t v) { return v == 0; });
  if (target == Target::Line || null_homotopic) {
    KRGraph g = line_form(s, eps, c0, c2);
    if (target == Target::Circle) {
      const Rational scale(static_cast<long long>(g.vertices.size()) + 1);
      for (auto& v : g.vertices) v.height = (v.height + 1) / scale;
      g.target = Target::Circle;
    }
    return g;
  }

  if (gcd_of(q) != 1) fail(Errc::Infeasible, "the canonical circle map needs gcd(q) = 1");
  if (s.has_label(kBottomCut) || s.has_label(kTopCut)) {
    fail(Errc::InvalidArgument, "boundary labels B0.1 and B1.1 are reserved for the cut fiber");
  }
  std::vector<std::string> labels{kBottomCut};
  labels.insert(labels.end(), s.boundary().begin(), s.boundary().end());
  labels.push_back(kTopCut);
  // cutting along a non-separating two-sided fiber
  Surface cut = s.is_orientable() ? Surface::orientable(s.genus() - 1, labels)
                : s.genus() == 2  ? Surface::orientable(0, labels)
                                  : Surface::nonorientable(s.genus() - 2, labels);
  BoundarySigns cut_eps = eps;
  cut_eps[kBottomCut] = -1;
  cut_eps[kTopCut] = 1;
  const KRGraph line = line_form(cut, cut_eps, c0, c2);

  // B0.1 is the lowest vertex and B1.1 the highest; glue their edges
  const int bottom = 0, top = static_cast<int>(line.vertices.size()) - 1;
  int above_bottom = -1, below_top = -1;
  KRGraph g;
  g.target = Target::Circle;
  const Rational scale(static_cast<long long>(line.vertices.size()) - 1);
  for (const auto& v : line.vertices) {
    if (v.id == bottom || v.id == top) continue;
    g.vertices.push_back({v.id - 1, v.kind, v.height / scale, v.label});
  }
  for (const auto& e : line.edges) {
    if (*e.tail == bottom) {
      above_bottom = *e.head;
      continue;
    }
    if (*e.head == top) {
      below_top = *e.tail;
      continue;
    }
    g.edges.push_back({0, *e.tail - 1, *e.head - 1, 0});
  }
  if (above_bottom == top) {
    g.edges.push_back({0, std::nullopt, std::nullopt, 1});
  } else {
    g.edges.push_back({0, below_top - 1, above_bottom - 1, 1});
  }
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) g.edges[i].id = i;
  return g;
}

}  // namespace morse
