#include "morse/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "morse/error.hpp"
#include "morse/numeric.hpp"

namespace morse {

std::string_view to_string(Target target) { return target == Target::Line ? "Line" : "Circle"; }

Target parse_target(std::string_view text) {
  if (text == "Line" || text == "line") return Target::Line;
  if (text == "Circle" || text == "circle") return Target::Circle;
  fail(Errc::Format, "unknown target '" + std::string(text) + "'");
}

Surface::Surface(bool orientable, int genus, std::vector<std::string> boundary)
    : orientable_(orientable), genus_(genus), boundary_(std::move(boundary)) {
  if (genus_ < 0) fail(Errc::InvalidArgument, "genus must be non-negative");
  if (!orientable_ && genus_ < 1) fail(Errc::InvalidArgument, "a non-orientable surface has genus >= 1");
  std::set<std::string> seen;
  for (const auto& label : boundary_) {
    if (label.empty()) fail(Errc::InvalidArgument, "boundary labels must be non-empty");
    if (!seen.insert(label).second) fail(Errc::InvalidArgument, "duplicate boundary label '" + label + "'");
  }
}

bool Surface::has_label(std::string_view label) const {
  return std::find(boundary_.begin(), boundary_.end(), label) != boundary_.end();
}

Surface Surface::with_extra_boundary(std::string label) const {
  auto boundary = boundary_;
  boundary.push_back(std::move(label));
  return Surface(orientable_, genus_, std::move(boundary));
}

int euler_characteristic(const Surface& s) {
  return s.is_orientable() ? 2 - 2 * s.genus() - s.boundary_count() : 2 - s.genus() - s.boundary_count();
}

int homology_rank(const Surface& s) { return s.is_orientable() ? 2 * s.genus() : s.genus() - 1; }

int positive_count(const BoundarySigns& eps) {
  return static_cast<int>(std::count_if(eps.begin(), eps.end(), [](const auto& kv) { return kv.second > 0; }));
}

int negative_count(const BoundarySigns& eps) {
  return static_cast<int>(std::count_if(eps.begin(), eps.end(), [](const auto& kv) { return kv.second < 0; }));
}

ValidationReport validate_critical_type(const Surface& s, const CriticalType& k) {
  std::set<std::string> expected(s.boundary().begin(), s.boundary().end());
  std::set<std::string> given;
  for (const auto& [label, sign] : k.eps) given.insert(label);
  if (expected != given) fail(Errc::BoundaryMismatch, "boundary labels of the type do not match the surface");

  ValidationReport report;
  const int r = homology_rank(s);
  if (static_cast<int>(k.q.size()) != r) {
    report.violations.push_back("q must have length r=" + std::to_string(r));
  } else if (k.target == Target::Line &&
             std::any_of(k.q.begin(), k.q.end(), [](std::int64_t v) { return v != 0; })) {
    report.violations.push_back("q must be zero for a Line target");
  }
  if (k.c0 < 0 || k.c1 < 0 || k.c2 < 0) report.violations.push_back("critical counts must be non-negative");
  for (const auto& [label, sign] : k.eps) {
    if (sign != 1 && sign != -1) report.violations.push_back("sign of '" + label + "' must be +1 or -1");
  }
  const std::int64_t chi = euler_characteristic(s);
  if (k.c0 - k.c1 + k.c2 != chi) {
    report.violations.push_back("Morse equality c0 - c1 + c2 = chi fails: " + std::to_string(k.c0 - k.c1 + k.c2) +
                                " != " + std::to_string(chi));
  }
  return report;
}

CriticalType flip_target_orientation(CriticalType k) {
  std::swap(k.c0, k.c2);
  for (auto& v : k.q) v = -v;
  for (auto& [label, sign] : k.eps) sign = -sign;
  return k;
}

std::string to_json(const CriticalType& k) {
  nlohmann::ordered_json j;
  j["target"] = std::string(to_string(k.target));
  j["q"] = k.q;
  j["c0"] = k.c0;
  j["c1"] = k.c1;
  j["c2"] = k.c2;
  j["eps"] = nlohmann::ordered_json::object();
  for (const auto& [label, sign] : k.eps) j["eps"][label] = sign;
  return j.dump();
}

CriticalType critical_type_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Format, std::string("critical type JSON: ") + e.what());
  }
  try {
    CriticalType k;
    k.target = parse_target(j.at("target").get<std::string>());
    k.q = j.at("q").get<std::vector<std::int64_t>>();
    k.c0 = j.at("c0").get<std::int64_t>();
    k.c1 = j.at("c1").get<std::int64_t>();
    k.c2 = j.at("c2").get<std::int64_t>();
    for (const auto& [label, sign] : j.at("eps").items()) k.eps[label] = sign.get<int>();
    return k;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Format, std::string("critical type JSON: ") + e.what());
  }
}

std::pair<Surface, BoundarySigns> parse_surface_descriptor(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  if (parts.size() < 2 || parts.size() > 3) {
    fail(Errc::Format, "surface descriptor must be <orientable|nonorientable>:<genus>[:<label><sign>,...]");
  }
  bool orientable;
  if (parts[0] == "orientable") {
    orientable = true;
  } else if (parts[0] == "nonorientable") {
    orientable = false;
  } else {
    fail(Errc::Format, "unknown surface kind '" + parts[0] + "'");
  }
  const Integer genus = parse_integer(parts[1]);
  if (genus < 0 || genus > 1000) fail(Errc::Format, "genus out of range");

  std::vector<std::string> labels;
  BoundarySigns eps;
  if (parts.size() == 3 && !parts[2].empty()) {
    std::stringstream list(parts[2]);
    std::string item;
    while (std::getline(list, item, ',')) {
      if (item.size() < 2 || (item.back() != '+' && item.back() != '-')) {
        fail(Errc::Format, "boundary entry '" + item + "' must end in + or -");
      }
      std::string label = item.substr(0, item.size() - 1);
      eps[label] = item.back() == '+' ? 1 : -1;
      labels.push_back(std::move(label));
    }
  }
  return {Surface(orientable, static_cast<int>(genus), std::move(labels)), std::move(eps)};
}

}  // namespace morse
