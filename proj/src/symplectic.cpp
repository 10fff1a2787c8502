#include "morse/symplectic.hpp"

#include <regex>
#include <sstream>

#include "morse/error.hpp"

namespace morse {

namespace {

struct Entry {
  int row;
  int col;
  int coeff;
};

// G = I + N with N^2 = 0, so G^e = I + eN. The rows written by N are never
// read by it, which makes the in place row and column updates below exact.
std::vector<Entry> nilpotent_part(const Letter& l, int g) {
  const int ai = alpha(g, l.i), bi = beta(g, l.i);
  switch (l.kind) {
    case GenKind::Ta: return {{ai, bi, 1}};
    case GenKind::Tb: return {{bi, ai, -1}};
    case GenKind::Mu: return {{ai, beta(g, l.j), -1}, {alpha(g, l.j), bi, -1}};
    case GenKind::Eta: return {{bi, alpha(g, l.j), 1}, {beta(g, l.j), ai, 1}};
    case GenKind::Nu: return {{ai, alpha(g, l.j), 1}, {beta(g, l.j), bi, -1}};
  }
  return {};
}

std::string_view kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Ta: return "Ta";
    case GenKind::Tb: return "Tb";
    case GenKind::Mu: return "Mu";
    case GenKind::Eta: return "Eta";
    case GenKind::Nu: return "Nu";
  }
  return "?";
}

bool two_indices(GenKind kind) { return kind == GenKind::Mu || kind == GenKind::Eta || kind == GenKind::Nu; }

}  // namespace

SpMatrix::SpMatrix(int g) : g_(g), a_(static_cast<std::size_t>(4 * g * g)) {
  if (g < 1) fail(Errc::InvalidArgument, "genus must be at least 1");
  for (int i = 0; i < size(); ++i) (*this)(i, i) = 1;
}

SpMatrix SpMatrix::from_rows(int g, const std::vector<Vec>& rows) {
  SpMatrix m(g);
  if (static_cast<int>(rows.size()) != 2 * g) fail(Errc::InvalidArgument, "expected " + std::to_string(2 * g) + " rows");
  for (int r = 0; r < 2 * g; ++r) {
    if (static_cast<int>(rows[r].size()) != 2 * g) {
      fail(Errc::InvalidArgument, "expected " + std::to_string(2 * g) + " entries per row");
    }
    for (int c = 0; c < 2 * g; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec SpMatrix::column(int col) const {
  Vec v(size());
  for (int r = 0; r < size(); ++r) v[r] = (*this)(r, col);
  return v;
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
  if (a.genus() != b.genus()) fail(Errc::InvalidArgument, "matrix sizes differ");
  SpMatrix m(a.genus());
  const int n = a.size();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Integer s = 0;
      for (int k = 0; k < n; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  }
  return m;
}

Vec operator*(const SpMatrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.size()) fail(Errc::InvalidArgument, "vector length differs from matrix size");
  Vec out(m.size());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

int alpha(int g, int i) {
  if (i < 1 || i > g) fail(Errc::InvalidArgument, "index " + std::to_string(i) + " out of range 1.." + std::to_string(g));
  return i - 1;
}

int beta(int g, int i) { return g + alpha(g, i); }

Vec basis_vector(int g, int index) {
  Vec v(2 * g);
  v.at(index) = 1;
  return v;
}

SpMatrix omega_matrix(int g) {
  SpMatrix m(g);
  for (int i = 0; i < 2 * g; ++i) m(i, i) = 0;
  for (int i = 0; i < g; ++i) {
    m(i, g + i) = 1;
    m(g + i, i) = -1;
  }
  return m;
}

Integer omega(const Vec& u, const Vec& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) fail(Errc::InvalidArgument, "omega needs two vectors of one even length");
  const std::size_t g = u.size() / 2;
  Integer s = 0;
  for (std::size_t i = 0; i < g; ++i) s += u[i] * v[g + i] - u[g + i] * v[i];
  return s;
}

bool is_symplectic(const SpMatrix& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Integer want = (j == i + m.genus()) ? 1 : (i == j + m.genus()) ? -1 : 0;
      if (omega(m.column(i), m.column(j)) != want) return false;
    }
  }
  return true;
}

bool is_identity(const SpMatrix& m) { return m == SpMatrix(m.genus()); }

SpMatrix symplectic_inverse(const SpMatrix& m) {
  const int g = m.genus();
  SpMatrix t(g);
  for (int r = 0; r < 2 * g; ++r) {
    for (int c = 0; c < 2 * g; ++c) t(r, c) = m(c, r);
  }
  SpMatrix w = omega_matrix(g);
  SpMatrix out = w * t * w;
  for (int r = 0; r < 2 * g; ++r) {
    for (int c = 0; c < 2 * g; ++c) out(r, c) = -out(r, c);
  }
  return out;
}

SpMatrix transvection(const Vec& gamma) {
  if (gamma.empty() || gamma.size() % 2 != 0) fail(Errc::InvalidArgument, "transvection needs a vector of length 2g");
  const int g = static_cast<int>(gamma.size() / 2);
  SpMatrix m(g);
  for (int c = 0; c < 2 * g; ++c) {
    const Integer w = omega(gamma, basis_vector(g, c));
    for (int r = 0; r < 2 * g; ++r) m(r, c) += w * gamma[r];
  }
  return m;
}

Letter normalize(Letter l, int g) {
  alpha(g, l.i);
  if (two_indices(l.kind)) {
    alpha(g, l.j);
    if (l.i == l.j) fail(Errc::InvalidArgument, "generator indices must differ");
    if ((l.kind == GenKind::Mu || l.kind == GenKind::Eta) && l.i > l.j) std::swap(l.i, l.j);
  } else {
    l.j = 0;
  }
  return l;
}

SpMatrix named_generator(GenKind kind, int i, int j, int g) {
  SpMatrix m(g);
  apply_left(m, normalize({kind, i, j, 1}, g));
  return m;
}

void apply_left(SpMatrix& m, const Letter& letter) {
  const Letter l = normalize(letter, m.genus());
  for (const auto& e : nilpotent_part(l, m.genus())) {
    const Integer f = l.exponent * e.coeff;
    for (int c = 0; c < m.size(); ++c) m(e.row, c) += f * m(e.col, c);
  }
}

void apply_left(Vec& v, int g, const Letter& letter) {
  if (static_cast<int>(v.size()) != 2 * g) fail(Errc::InvalidArgument, "vector length differs from 2g");
  const Letter l = normalize(letter, g);
  for (const auto& e : nilpotent_part(l, g)) v[e.row] += l.exponent * e.coeff * v[e.col];
}

SpMatrix evaluate(const GeneratorWord& word, int g) {
  SpMatrix m(g);
  for (const auto& letter : word) {
    const Letter l = normalize(letter, g);
    for (const auto& e : nilpotent_part(l, g)) {
      const Integer f = l.exponent * e.coeff;
      for (int r = 0; r < m.size(); ++r) m(r, e.col) += f * m(r, e.row);
    }
  }
  return m;
}

GeneratorWord inverse(const GeneratorWord& word) {
  GeneratorWord out(word.rbegin(), word.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

bool allowed_in_stabilizer(const Letter& l) {
  switch (l.kind) {
    case GenKind::Tb: return l.i != 1;
    case GenKind::Eta: return l.i != 1 && l.j != 1;
    case GenKind::Nu: return l.j != 1;
    default: return true;
  }
}

std::string format_word(const GeneratorWord& word) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += kind_name(l.kind);
    out += std::to_string(l.i);
    if (two_indices(l.kind)) out += "," + std::to_string(l.j);
    if (l.exponent != 1) out += "^" + l.exponent.str();
  }
  return out;
}

GeneratorWord parse_word(std::string_view text, int g) {
  static const std::regex token(R"((Ta|Tb|Mu|Eta|Nu)(\d+)(?:,(\d+))?(?:\^(-?\d+))?)");
  GeneratorWord word;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    std::smatch m;
    if (!std::regex_match(tok, m, token)) fail(Errc::Format, "bad generator token '" + tok + "'");
    Letter l;
    const std::string name = m[1];
    l.kind = name == "Ta" ? GenKind::Ta : name == "Tb" ? GenKind::Tb : name == "Mu" ? GenKind::Mu
             : name == "Eta" ? GenKind::Eta : GenKind::Nu;
    if (two_indices(l.kind) != m[3].matched) fail(Errc::Format, "wrong number of indices in '" + tok + "'");
    try {
      l.i = std::stoi(m[2]);
      l.j = m[3].matched ? std::stoi(m[3]) : 0;
    } catch (const std::out_of_range&) {
      fail(Errc::Format, "index too large in '" + tok + "'");
    }
    l.exponent = m[4].matched ? parse_integer(m[4].str()) : Integer(1);
    if (l.exponent == 0) fail(Errc::Format, "zero exponent in '" + tok + "'");
    try {
      word.push_back(normalize(l, g));
    } catch (const Error& e) {
      fail(Errc::Format, std::string(e.what()) + " in '" + tok + "'");
    }
  }
  return word;
}

SpMatrix parse_sp_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int g = 0;
  std::vector<Vec> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (g == 0) {
      if (tok.size() != 2 || tok[0] != "SP") fail(Errc::Format, "expected 'SP <g>' header");
      const Integer gi = parse_integer(tok[1]);
      if (gi < 1 || gi > 1000) fail(Errc::Format, "genus out of range");
      g = static_cast<int>(gi);
      continue;
    }
    Vec row;
    for (const auto& t : tok) row.push_back(parse_integer(t));
    if (static_cast<int>(row.size()) != 2 * g) fail(Errc::Format, "row with " + std::to_string(row.size()) + " entries");
    rows.push_back(std::move(row));
  }
  if (g == 0) fail(Errc::Format, "missing 'SP <g>' header");
  if (static_cast<int>(rows.size()) != 2 * g) fail(Errc::Format, "expected " + std::to_string(2 * g) + " rows");
  return SpMatrix::from_rows(g, rows);
}

std::string format_sp_matrix(const SpMatrix& m) {
  std::ostringstream out;
  out << "SP " << m.genus() << "\n";
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) out << (c ? " " : "") << m(r, c);
    out << "\n";
  }
  return out.str();
}

}  // namespace morse
