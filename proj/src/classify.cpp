#include "morse/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "morse/error.hpp"

namespace morse {

namespace {

std::set<std::string> labels_of(const BoundarySigns& eps) {
  std::set<std::string> out;
  for (const auto& [label, sign] : eps) out.insert(label);
  return out;
}

bool all_zero(const std::vector<std::int64_t>& q) {
  return std::all_of(q.begin(), q.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace

Verdict compare_types(const CriticalType& a, const CriticalType& b) {
  if (labels_of(a.eps) != labels_of(b.eps)) fail(Errc::SurfaceMismatch, "types have different boundary labels");
  if (a.q.size() != b.q.size()) fail(Errc::SurfaceMismatch, "types have q vectors of different length");
  if (a.target != b.target) return {false, "target"};
  if (a.q != b.q) return {false, "q"};
  if (a.c0 != b.c0) return {false, "c0"};
  if (a.c1 != b.c1) return {false, "c1"};
  if (a.c2 != b.c2) return {false, "c2"};
  if (a.eps != b.eps) return {false, "eps"};
  return {true, "ok"};
}

bool sigma_homotopy_equivalent(const CriticalType& a, const CriticalType& b) { return compare_types(a, b).equivalent; }

bool equivalent_up_to_flip(const CriticalType& a, const CriticalType& b) {
  return sigma_homotopy_equivalent(a, b) || sigma_homotopy_equivalent(a, flip_target_orientation(b));
}

Integer minimal_fiber_count(const CriticalType& k) {
  if (k.target != Target::Circle) fail(Errc::InvalidArgument, "fiber count is defined for Circle targets");
  return Integer(gcd_of(k.q));
}

bool is_minimal(const Surface& s, const CriticalType& k) {
  if (labels_of(k.eps) != std::set<std::string>(s.boundary().begin(), s.boundary().end())) {
    fail(Errc::BoundaryMismatch, "boundary labels of the type do not match the surface");
  }
  if (k.target == Target::Line) {
    const int expect0 = negative_count(k.eps) == 0 ? 1 : 0;
    const int expect2 = positive_count(k.eps) == 0 ? 1 : 0;
    return k.c0 == expect0 && k.c2 == expect2;
  }
  if (all_zero(k.q)) fail(Errc::InvalidArgument, "null-homotopic circle maps reduce to the Line case");
  return k.c0 == 0 && k.c2 == 0;
}

bool is_minimal_composite(const std::vector<CompositePiece>& pieces, const Gluing& gluing) {
  enum class Role { B0, B1, Z };
  std::map<std::string, Role> role;
  auto assign = [&](const std::vector<std::string>& labels, Role r) {
    for (const auto& label : labels) {
      if (!role.emplace(label, r).second) fail(Errc::InvalidArgument, "label " + label + " has two gluing roles");
    }
  };
  assign(gluing.b0, Role::B0);
  assign(gluing.b1, Role::B1);
  assign(gluing.z, Role::Z);

  const int n = static_cast<int>(pieces.size());
  std::map<std::string, std::vector<int>> holders;
  for (int i = 0; i < n; ++i) {
    const auto& p = pieces[i];
    if (p.type.target != Target::Line) fail(Errc::InvalidArgument, "pieces carry functions to an interval");
    if (!validate_critical_type(p.surface, p.type)) fail(Errc::InvalidArgument, "piece type does not fit its surface");
    for (const auto& label : p.surface.boundary()) {
      holders[label].push_back(i);
      auto it = role.find(label);
      if (it == role.end()) continue;
      const int sign = p.type.eps.at(label);
      const bool lower = p.half == Half::Lower;
      bool ok = true;
      switch (it->second) {
        case Role::B0: ok = lower && sign < 0; break;
        case Role::B1: ok = !lower && sign > 0; break;
        case Role::Z: ok = lower ? sign > 0 : sign < 0; break;
      }
      if (!ok) fail(Errc::InvalidArgument, "label " + label + " sits on the wrong side of its level");
    }
  }
  for (const auto& [label, r] : role) {
    const auto it = holders.find(label);
    const std::size_t count = it == holders.end() ? 0 : it->second.size();
    if (r == Role::Z && count != 2) fail(Errc::InvalidArgument, "Z circle " + label + " must join two pieces");
    if (r != Role::Z && count != 1) fail(Errc::InvalidArgument, "boundary circle " + label + " must lie on one piece");
  }
  for (const auto& [label, who] : holders) {
    if (!role.count(label) && who.size() != 1) fail(Errc::InvalidArgument, "label " + label + " is shared but not in Z");
  }

  // components of the assembled surface
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& label : gluing.z) parent[find(holders[label][0])] = find(holders[label][1]);
  std::map<int, std::set<Role>> touches;
  for (int i = 0; i < n; ++i) touches[find(i)];
  for (const auto& [label, r] : role) {
    for (int i : holders[label]) touches[find(i)].insert(r);
  }

  if (gluing.b0.empty() || gluing.b1.empty() || gluing.z.empty()) return false;
  for (const auto& [root, roles] : touches) {
    if (!roles.count(Role::B0) && !roles.count(Role::B1)) return false;
    if (roles.count(Role::Z) && !(roles.count(Role::B0) && roles.count(Role::B1))) return false;
  }
  return std::all_of(pieces.begin(), pieces.end(), [](const CompositePiece& p) { return is_minimal(p.surface, p.type); });
}

}  // namespace morse
