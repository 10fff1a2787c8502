#include "morse/error.hpp"
#include "morse/symplectic.hpp"

namespace morse {

namespace {

// Records every letter applied on the left so the product can be undone.
struct Reducer {
  int g;
  GeneratorWord applied;
  std::vector<SpMatrix*> matrices;
  std::vector<Vec*> vectors;

  void apply(GenKind kind, int i, int j, const Integer& e) {
    if (e == 0) return;
    const Letter l{kind, i, j, e};
    for (auto* m : matrices) apply_left(*m, l);
    for (auto* v : vectors) apply_left(*v, g, l);
    applied.push_back(l);
  }

  // Carries the primitive vector v, supported on indices >= p, to alpha_p.
  void to_alpha(const Vec& v, int p) {
    auto a = [&](int k) { return v[alpha(g, k)]; };
    auto b = [&](int k) { return v[beta(g, k)]; };
    for (int k = p; k <= g; ++k) {
      while (b(k) != 0) {
        if (a(k) == 0) apply(GenKind::Ta, k, 0, 1);
        apply(GenKind::Tb, k, 0, Integer(b(k) / a(k)));
        if (b(k) == 0) break;
        apply(GenKind::Ta, k, 0, Integer(-(a(k) / b(k))));
      }
    }
    for (int k = p + 1; k <= g; ++k) {
      while (a(k) != 0) {
        if (a(p) == 0) apply(GenKind::Nu, p, k, 1);
        apply(GenKind::Nu, k, p, Integer(-(a(k) / a(p))));
        if (a(k) == 0) break;
        apply(GenKind::Nu, p, k, Integer(-(a(p) / a(k))));
      }
    }
    if (a(p) == -1) {
      // (Ta Tb Ta)^2 = -1 on the pair (alpha_p, beta_p)
      apply(GenKind::Ta, p, 0, 1);
      apply(GenKind::Tb, p, 0, 1);
      apply(GenKind::Ta, p, 0, 2);
      apply(GenKind::Tb, p, 0, 1);
      apply(GenKind::Ta, p, 0, 1);
    }
    if (v != basis_vector(g, alpha(g, p))) fail(Errc::InvalidArgument, "vector is not primitive");
  }

  // With h(alpha_p) = alpha_p, clears h(beta_p) down to beta_p.
  void fix_beta(SpMatrix& h, int p) {
    const int col = beta(g, p);
    for (int k = p + 1; k <= g; ++k) apply(GenKind::Mu, p, k, h(alpha(g, k), col));
    for (int k = p + 1; k <= g; ++k) apply(GenKind::Nu, p, k, h(beta(g, k), col));
    apply(GenKind::Ta, p, 0, -h(alpha(g, p), col));
    if (h.column(col) != basis_vector(g, col)) fail(Errc::NotSymplectic, "matrix does not preserve the symplectic form");
  }

  GeneratorWord undo() const {
    GeneratorWord w = applied;
    for (auto& l : w) l.exponent = -l.exponent;
    return w;
  }
};

GeneratorWord merged(const GeneratorWord& word) {
  GeneratorWord out;
  for (const auto& l : word) {
    if (!out.empty() && out.back().kind == l.kind && out.back().i == l.i && out.back().j == l.j) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

void factor_from(SpMatrix& h, int first, Reducer& r) {
  const int g = h.genus();
  for (int p = first; p <= g; ++p) {
    Vec col = h.column(alpha(g, p));
    r.vectors = {&col};
    r.to_alpha(col, p);
    r.vectors.clear();
    r.fix_beta(h, p);
  }
  if (!is_identity(h)) fail(Errc::NotSymplectic, "matrix does not preserve the symplectic form");
}

}  // namespace

GeneratorWord general_sp_factor(const SpMatrix& h, int first) {
  if (!is_symplectic(h)) fail(Errc::NotSymplectic, "matrix does not preserve the symplectic form");
  const int g = h.genus();
  if (first < 1 || first > g + 1) fail(Errc::InvalidArgument, "first index out of range");
  for (int i = 1; i < first; ++i) {
    for (int idx : {alpha(g, i), beta(g, i)}) {
      if (h.column(idx) != basis_vector(g, idx)) fail(Errc::InvalidArgument, "matrix moves a coordinate below the first index");
    }
  }
  SpMatrix work = h;
  Reducer r{g, {}, {&work}, {}};
  factor_from(work, first, r);
  return merged(r.undo());
}

GeneratorWord stabilizer_decompose(const SpMatrix& h) {
  if (!is_symplectic(h)) fail(Errc::NotSymplectic, "matrix does not preserve the symplectic form");
  const int g = h.genus();
  if (h.column(alpha(g, 1)) != basis_vector(g, alpha(g, 1))) fail(Errc::NotInStabilizer, "matrix moves alpha_1");
  SpMatrix work = h;
  Reducer r{g, {}, {&work}, {}};
  r.fix_beta(work, 1);
  factor_from(work, 2, r);
  return merged(r.undo());
}

GeneratorWord carry_alpha_to(const Vec& v) {
  if (v.empty() || v.size() % 2 != 0) fail(Errc::InvalidArgument, "vector must have length 2g");
  const int g = static_cast<int>(v.size() / 2);
  Vec work = v;
  Reducer r{g, {}, {}, {&work}};
  r.to_alpha(work, 1);
  return merged(r.undo());
}

}  // namespace morse
