#include "morse/mcg_action.hpp"

#include <json.hpp>

#include "morse/error.hpp"

namespace morse {

namespace {

int genus_of(const Vec& v) {
  if (v.empty() || v.size() % 2 != 0) fail(Errc::InvalidArgument, "homology vectors have length 2g");
  return static_cast<int>(v.size() / 2);
}

std::vector<Integer> entries(const Vec& v) { return {v.begin(), v.end()}; }

}  // namespace

Vec level_set_class(const Vec& q) { return omega_matrix(genus_of(q)) * q; }

Integer degree_along(const Vec& q, const Vec& gamma) { return omega(level_set_class(q), gamma); }

SpMatrix twist_action(const Vec& gamma) { return transvection(gamma); }

bool twist_admissible(const Vec& q, const Vec& gamma) { return degree_along(q, gamma) == 0; }

StabilizerFactorization factor_stabilizer(const SpMatrix& h, const Vec& q) {
  const int g = genus_of(q);
  if (h.genus() != g) fail(Errc::InvalidArgument, "matrix and q have different genus");
  if (!is_symplectic(h)) fail(Errc::NotSymplectic, "matrix does not preserve the symplectic form");
  if (gcd_of(entries(q)) != 1) fail(Errc::InvalidArgument, "q must have gcd 1");
  const Vec level = level_set_class(q);
  if (h * level != level) fail(Errc::NotInStabilizer, "matrix does not fix the level-set class");

  const SpMatrix c = evaluate(carry_alpha_to(level), g);
  const SpMatrix conjugated = symplectic_inverse(c) * h * c;
  StabilizerFactorization out{c, stabilizer_decompose(conjugated), "Torelli"};
  if (evaluate(out.word, g) != conjugated) fail(Errc::NotSymplectic, "factorization failed to reproduce the matrix");
  return out;
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::DehnTwist: return "DehnTwist";
    case GeneratorKind::BoundaryPermutation: return "BoundaryPermutation";
    case GeneratorKind::OrientationReversal: return "OrientationReversal";
    case GeneratorKind::BoundarySlide: return "BoundarySlide";
    case GeneratorKind::CrosscapSlide: return "CrosscapSlide";
  }
  return "?";
}

std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Yes: return "Yes";
    case Admissibility::No: return "No";
    case Admissibility::YesViaWord: return "YesViaWord";
  }
  return "?";
}

std::vector<MCGGenerator> canonical_generator_set(const Surface& s, const CriticalType& k) {
  if (k.target == Target::Circle && !s.is_orientable()) {
    fail(Errc::Unsupported, "circle maps on non-orientable surfaces are not covered");
  }
  const auto report = validate_critical_type(s, k);
  if (!report) fail(Errc::InvalidArgument, report.violations.front());

  std::vector<MCGGenerator> out;
  auto twist = [&](const std::string& curve, Admissibility a = Admissibility::Yes) {
    out.push_back({GeneratorKind::DehnTwist, "t_" + curve, a});
  };
  const int n = s.boundary_count();
  const int g = s.genus();

  // handles carrying the configuration curves
  int handles = g;
  if (!s.is_orientable()) handles = g >= 3 ? (g - (g % 2 == 1 ? 1 : 2)) / 2 : 0;
  const bool circle = k.target == Target::Circle;

  if (s.is_orientable()) out.push_back({GeneratorKind::OrientationReversal, "O", Admissibility::Yes});
  if (handles > 0) {
    for (int i = 1; i <= handles; ++i) twist("alpha" + std::to_string(i));
    for (int i = 1; i <= handles; ++i) {
      twist("beta" + std::to_string(i), circle && i == 1 ? Admissibility::No : Admissibility::Yes);
    }
    for (int i = 1; i < handles; ++i) twist("gamma" + std::to_string(i));
    for (int j = 1; j < n; ++j) twist("delta" + std::to_string(j));
    for (int j = 1; j < n; ++j) twist("epsilon" + std::to_string(j));
    if (!s.is_orientable() && g % 2 == 0) {
      twist("beta0");
      twist("delta0");
    }
  }
  if (!s.is_orientable()) {
    if (g == 2) twist("beta0");
    if (g >= 2) out.push_back({GeneratorKind::CrosscapSlide, "y", Admissibility::Yes});
    for (int i = 1; i <= n; ++i) out.push_back({GeneratorKind::BoundarySlide, "nu_" + std::to_string(i), Admissibility::Yes});
    if (g >= 4 && g % 2 == 0) {
      for (int i = 1; i <= n; ++i) {
        out.push_back({GeneratorKind::BoundarySlide, "omega_" + std::to_string(i), Admissibility::Yes});
      }
    }
  }

  const bool no_extras = k.c0 == 0 && k.c2 == 0 && n == 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::string ij = std::to_string(i) + "_" + std::to_string(j);
      const bool same = k.eps.at(s.boundary()[i - 1]) == k.eps.at(s.boundary()[j - 1]);
      if (same) {
        out.push_back({GeneratorKind::BoundaryPermutation, "b_" + ij, Admissibility::Yes});
      } else {
        out.push_back({GeneratorKind::BoundaryPermutation, "b_" + ij, Admissibility::No});
        twist("sigma_" + ij, no_extras ? Admissibility::YesViaWord : Admissibility::Yes);
      }
    }
  }
  return out;
}

std::string generators_json(const std::vector<MCGGenerator>& gens) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& gen : gens) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(gen.kind));
    j["name"] = gen.name;
    j["admissible"] = std::string(to_string(gen.admissible));
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace morse
