#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morse/numeric.hpp"

namespace morse {

using Vec = std::vector<Integer>;

// Coordinates: alpha_i is index i - 1, beta_i is index g + i - 1. Vectors are
// columns and matrices act on the left.
class SpMatrix {
 public:
  explicit SpMatrix(int g);  // identity

  static SpMatrix from_rows(int g, const std::vector<Vec>& rows);

  int genus() const { return g_; }
  int size() const { return 2 * g_; }
  Integer& operator()(int row, int col) { return a_[row * size() + col]; }
  const Integer& operator()(int row, int col) const { return a_[row * size() + col]; }
  Vec column(int col) const;

  bool operator==(const SpMatrix&) const = default;

 private:
  int g_;
  std::vector<Integer> a_;
};

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
Vec operator*(const SpMatrix& m, const Vec& v);

int alpha(int g, int i);
int beta(int g, int i);
Vec basis_vector(int g, int index);

SpMatrix omega_matrix(int g);
Integer omega(const Vec& u, const Vec& v);
bool is_symplectic(const SpMatrix& m);
bool is_identity(const SpMatrix& m);

/// -Omega M^T Omega, the inverse of a symplectic matrix.
SpMatrix symplectic_inverse(const SpMatrix& m);

/// x -> omega(gamma, x) gamma + x.
SpMatrix transvection(const Vec& gamma);

enum class GenKind { Ta, Tb, Mu, Eta, Nu };

struct Letter {
  GenKind kind = GenKind::Ta;
  int i = 1;
  int j = 0;  // unused for Ta and Tb
  Integer exponent = 1;

  bool operator==(const Letter&) const = default;
};

using GeneratorWord = std::vector<Letter>;

/// Range checks and the i < j normal form of Mu and Eta.
Letter normalize(Letter letter, int g);

SpMatrix named_generator(GenKind kind, int i, int j, int g);
SpMatrix evaluate(const GeneratorWord& word, int g);
GeneratorWord inverse(const GeneratorWord& word);

/// In place m <- G^e m, a row operation.
void apply_left(SpMatrix& m, const Letter& letter);
/// In place v <- G^e v.
void apply_left(Vec& v, int g, const Letter& letter);

/// Tb(1), Eta(1, j) and Nu(i, 1) do not fix alpha_1 and are never needed for it.
bool allowed_in_stabilizer(const Letter& letter);

std::string format_word(const GeneratorWord& word);
GeneratorWord parse_word(std::string_view text, int g);

SpMatrix parse_sp_matrix(std::string_view text);
std::string format_sp_matrix(const SpMatrix& m);

/// A word over the allowed letters evaluating to h, for symplectic h fixing
/// alpha_1. Errc::NotSymplectic, Errc::NotInStabilizer otherwise.
GeneratorWord stabilizer_decompose(const SpMatrix& h);

/// A word over all generators with indices >= first evaluating to h, for a
/// symplectic h that is the identity on the coordinates of smaller indices.
GeneratorWord general_sp_factor(const SpMatrix& h, int first = 1);

/// A word w with evaluate(w) alpha_1 = v, for a primitive v.
GeneratorWord carry_alpha_to(const Vec& v);

}  // namespace morse
