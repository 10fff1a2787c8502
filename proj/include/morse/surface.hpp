#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morse {

enum class Target { Line, Circle };

std::string_view to_string(Target target);
Target parse_target(std::string_view text);

/// A compact connected surface: orientability, genus and labeled boundary
/// circles. Genus is the number of handles (orientable) or crosscaps.
class Surface {
 public:
  Surface(bool orientable, int genus, std::vector<std::string> boundary = {});

  static Surface orientable(int genus, std::vector<std::string> boundary = {}) {
    return Surface(true, genus, std::move(boundary));
  }
  static Surface nonorientable(int genus, std::vector<std::string> boundary = {}) {
    return Surface(false, genus, std::move(boundary));
  }

  bool is_orientable() const { return orientable_; }
  int genus() const { return genus_; }
  const std::vector<std::string>& boundary() const { return boundary_; }
  int boundary_count() const { return static_cast<int>(boundary_.size()); }
  bool has_label(std::string_view label) const;

  Surface with_extra_boundary(std::string label) const;

  bool operator==(const Surface&) const = default;

 private:
  bool orientable_;
  int genus_;
  std::vector<std::string> boundary_;
};

int euler_characteristic(const Surface& s);

/// Rank of H^1 of the surface with its boundary circles collapsed:
/// 2g when orientable, g - 1 otherwise.
int homology_rank(const Surface& s);

/// Boundary label -> +1 (positive, f grows outward) or -1.
using BoundarySigns = std::map<std::string, int>;

int positive_count(const BoundarySigns& eps);
int negative_count(const BoundarySigns& eps);

/// The critical type K(f): homotopy class vector, critical point counts per
/// index and the sign of every boundary circle. Counts are signed so that a
/// malformed value can be represented and reported by validation.
struct CriticalType {
  Target target = Target::Line;
  std::vector<std::int64_t> q;
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  BoundarySigns eps;

  bool operator==(const CriticalType&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks the Morse equality c0 - c1 + c2 = chi, the shape of q (length r,
/// zero for Line targets) and the sign values. A boundary label set that does
/// not match the surface is an Errc::BoundaryMismatch error, not a violation.
ValidationReport validate_critical_type(const Surface& s, const CriticalType& k);

/// Reverses the orientation of the target: swaps c0 and c2, negates q and eps.
CriticalType flip_target_orientation(CriticalType k);

/// Single-line JSON, keys in the order target, q, c0, c1, c2, eps.
std::string to_json(const CriticalType& k);
CriticalType critical_type_from_json(std::string_view text);

/// Parses "orientable:<g>[:<label><+|->,...]" or "nonorientable:<g>[:...]".
/// The boundary list keeps the order written.
std::pair<Surface, BoundarySigns> parse_surface_descriptor(std::string_view text);

}  // namespace morse
