#include "morse/numeric.hpp"

#include <cctype>
#include <numeric>

#include "morse/error.hpp"

namespace morse {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::Format: return "format";
    case Errc::Io: return "io";
    case Errc::NotMorse: return "not Morse";
    case Errc::NotGeneric: return "not generic";
    case Errc::NotRegular: return "not regular";
    case Errc::BoundaryMismatch: return "boundary mismatch";
    case Errc::SurfaceMismatch: return "surface mismatch";
    case Errc::Infeasible: return "infeasible";
    case Errc::NotSymplectic: return "not symplectic";
    case Errc::NotInStabilizer: return "not in stabilizer";
    case Errc::Unsupported: return "unsupported";
  }
  return "unknown";
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) fail(Errc::Format, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      fail(Errc::Format, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(Errc::Format, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(-value); }

Integer gcd_of(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) g = boost::multiprecision::gcd(g, Integer(abs(v)));
  return g;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

}  // namespace morse
