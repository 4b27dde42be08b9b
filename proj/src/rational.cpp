#include "preproj/rational.hpp"

#include "preproj/error.hpp"

#include <cctype>

namespace preproj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::inconsistent_input: return "inconsistent-input";
    case ErrorKind::unclassifiable: return "unclassifiable";
    case ErrorKind::theorem_violation: return "theorem-violation";
    case ErrorKind::internal: return "internal-error";
  }
  return "unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::invalid_input, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::invalid_input, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool is_signed_digits(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text, bool require_reduced) {
  auto bad = [&](const char* why) {
    fail(ErrorKind::invalid_input, "bad rational '" + std::string(text) + "': " + why);
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_signed_digits(num, true)) bad("numerator is not an integer");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpz_class p(num_s, 10);
  if (slash == std::string_view::npos) return Rational(p);

  std::string_view den = text.substr(slash + 1);
  if (!is_signed_digits(den, false)) bad("denominator is not a positive integer");
  mpz_class q(std::string(den), 10);
  if (q == 0) bad("zero denominator");
  if (require_reduced) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1 || q == 1) bad("fraction is not in lowest terms");
  }
  return Rational(p, q);
}

}  // namespace preproj
