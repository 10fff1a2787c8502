#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morse/surface.hpp"
#include "morse/symplectic.hpp"

namespace morse {

/// The class [L] of a level set of a circle map with homotopy vector q, i.e.
/// the solution of omega([L], c) = q . c for every c: [L] = Omega q.
Vec level_set_class(const Vec& q);

/// deg(f restricted to gamma) = omega([L], gamma) = q . gamma.
Integer degree_along(const Vec& q, const Vec& gamma);

/// Action of the Dehn twist along gamma on H_1.
SpMatrix twist_action(const Vec& gamma);

/// Homological admissibility of the twist along gamma: its degree vanishes.
bool twist_admissible(const Vec& q, const Vec& gamma);

struct StabilizerFactorization {
  SpMatrix basis_change;  // C with C alpha_1 = [L]
  GeneratorWord word;     // evaluate(word) = C^-1 h C
  std::string residual;   // "Torelli": the part of h invisible on homology
};

/// Factors h fixing [L] for a primitive q: conjugates [L] to alpha_1 and runs
/// the stabilizer decomposition there. C is the identity when [L] = alpha_1.
StabilizerFactorization factor_stabilizer(const SpMatrix& h, const Vec& q);

enum class GeneratorKind { DehnTwist, BoundaryPermutation, OrientationReversal, BoundarySlide, CrosscapSlide };
enum class Admissibility { Yes, No, YesViaWord };

std::string_view to_string(GeneratorKind kind);
std::string_view to_string(Admissibility a);

struct MCGGenerator {
  GeneratorKind kind = GeneratorKind::DehnTwist;
  std::string name;  // t_alpha1, t_sigma_1_2, b_1_2, O, nu_1, omega_1, y, ...
  Admissibility admissible = Admissibility::Yes;
};

/// Generators of the mapping class group attached to the canonical map of
/// type k on s, with their admissibility for that map. Boundary circles are
/// numbered 1..n in surface order. Circle targets on non-orientable surfaces
/// raise Errc::Unsupported.
std::vector<MCGGenerator> canonical_generator_set(const Surface& s, const CriticalType& k);

std::string generators_json(const std::vector<MCGGenerator>& gens);

}  // namespace morse
