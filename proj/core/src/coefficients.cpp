#include "hwvkit/coefficients.hpp"

#include <algorithm>
#include <cctype>

#include "hwvkit/errors.hpp"

namespace hwvkit {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw ParseError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "z" || t == "zz" || t == "int" || t == "integers") return integers();
  if (t == "q" || t == "qq" || t == "rationals") return rationals();
  std::string digits;
  for (const char* prefix : {"gf(", "gf", "f_", "fp", "f"}) {
    std::string pre(prefix);
    if (t.rfind(pre, 0) == 0) {
      digits = t.substr(pre.size());
      if (!digits.empty() && digits.back() == ')') digits.pop_back();
      break;
    }
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 10)
    throw ParseError("unknown coefficient ring '" + text + "' (use z, q or fP with P prime)");
  unsigned long long p = std::stoull(digits);
  if (p >= (1ull << 31)) throw ParseError("characteristic too large: " + digits);
  return prime_field(static_cast<std::uint32_t>(p));
}

namespace {

mpz_class mod_p(const mpz_class& a, std::uint32_t p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

mpq_class CoefficientRing::normalize(const mpq_class& c) const {
  switch (kind_) {
    case Kind::Rationals:
      return c;
    case Kind::Integers:
      if (c.get_den() != 1) throw DenominatorError("coefficient " + c.get_str() + " is not an integer");
      return c;
    case Kind::PrimeField: {
      mpz_class num = mod_p(c.get_num(), p_);
      if (c.get_den() == 1) return mpq_class(num);
      mpz_class den = mod_p(c.get_den(), p_);
      if (den == 0) throw DenominatorError("denominator of " + c.get_str() + " vanishes mod " + std::to_string(p_));
      mpz_class inv;
      mpz_class pz(p_);
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
      return mpq_class(mod_p(num * inv, p_));
    }
  }
  return c;
}

mpq_class CoefficientRing::add(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == Kind::PrimeField) return mpq_class(mod_p(a.get_num() + b.get_num(), p_));
  return a + b;
}

mpq_class CoefficientRing::mul(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == Kind::PrimeField) return mpq_class(mod_p(a.get_num() * b.get_num(), p_));
  return a * b;
}

mpq_class CoefficientRing::inverse(const mpq_class& a) const {
  if (kind_ == Kind::Integers) throw FieldRequired("division needs a field; use Q or F_p");
  if (a == 0) throw DenominatorError("inverse of zero");
  if (kind_ == Kind::Rationals) return 1 / a;
  return normalize(mpq_class(1) / a);
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F_" + std::to_string(p_);
  }
  return "?";
}

}  // namespace hwvkit
