#pragma once

// Coefficient rings ℤ, ℚ and F_p.  Every coefficient is carried as an
// mpq_class; over F_p it is kept as the canonical integer in [0, p).

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hwvkit {

class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  CoefficientRing() = default;
  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  // ParseError unless p is a prime below 2^31.
  static CoefficientRing prime_field(std::uint32_t p);
  // "z", "q", "f2", "fp7", "F_5", "gf(3)" and friends, case-insensitive.
  static CoefficientRing parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }

  // Image of a rational number in the ring.  DenominatorError over ℤ when
  // the denominator is not 1, or over F_p when it is divisible by p.
  mpq_class normalize(const mpq_class& c) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  // FieldRequired over ℤ; DenominatorError for zero.
  mpq_class inverse(const mpq_class& a) const;

  // "Z", "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

}  // namespace hwvkit
