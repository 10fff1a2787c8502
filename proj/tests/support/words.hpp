#pragma once

#include "morse/symplectic.hpp"
#include "rng.hpp"

namespace morse::testing {

inline Letter random_letter(Rng& rng, int g) {
  Letter l;
  const int kinds = g >= 2 ? 5 : 2;
  l.kind = static_cast<GenKind>(rng.uniform(0, kinds - 1));
  l.i = static_cast<int>(rng.uniform(1, g));
  if (l.kind != GenKind::Ta && l.kind != GenKind::Tb) {
    do l.j = static_cast<int>(rng.uniform(1, g));
    while (l.j == l.i);
  }
  std::int64_t e = 0;
  while (e == 0) e = rng.uniform(-3, 3);
  l.exponent = e;
  return l;
}

// Letters drawn until one outside the stabilizer generating set is rejected.
inline GeneratorWord random_word(Rng& rng, int g, int length, bool allowed_only) {
  GeneratorWord w;
  while (static_cast<int>(w.size()) < length) {
    const Letter l = random_letter(rng, g);
    if (!allowed_only || allowed_in_stabilizer(l)) w.push_back(l);
  }
  return w;
}

}  // namespace morse::testing
