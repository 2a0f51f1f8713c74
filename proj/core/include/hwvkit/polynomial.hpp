#pragma once

// Sparse polynomials in the variables x(l)_{i,j} of k[Mat_{rs}^m] (or
// y_{i,j} of k[Mat_n]) plus one formal parameter u.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hwvkit/coefficients.hpp"

namespace hwvkit {

// The variables of an m-tuple of r×s matrices.  Variable x(l)_{i,j} has
// flat index ((l-1)r + i - 1)s + j - 1, so the flat order is lexicographic
// in (l, i, j) and stacking the matrices on top of each other (Mat_{mr,s})
// leaves flat indices unchanged.  symbol 'y' prints y_{i,j} and is meant
// for the conjugation side with m = 1.
struct Ambient {
  int r = 1;
  int s = 1;
  int m = 1;
  char symbol = 'x';

  int num_vars() const { return m * r * s; }
  // IndexError when out of range.
  int var(int l, int i, int j) const;
  struct Var {
    int l, i, j;
  };
  Var unflatten(int index) const;

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

// Exponent vector: entry 0 is the exponent of u, entry 1 + v the exponent
// of flat variable v.
using Monomial = std::vector<std::uint8_t>;

// Canonical term order: lexicographically larger exponent vectors first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class, MonomialOrder>;

  Polynomial() = default;
  Polynomial(CoefficientRing ring, Ambient ambient) : ring_(ring), ambient_(ambient) {}

  static Polynomial constant(const CoefficientRing& ring, const Ambient& ambient, const mpq_class& c);
  static Polynomial variable(const CoefficientRing& ring, const Ambient& ambient, int l, int i, int j);
  static Polynomial u(const CoefficientRing& ring, const Ambient& ambient);

  const CoefficientRing& ring() const { return ring_; }
  const Ambient& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  Monomial unit_monomial() const { return Monomial(static_cast<std::size_t>(ambient_.num_vars()) + 1, 0); }

  // Adds c·mono, normalising c into the ring.
  void add_term(const Monomial& mono, const mpq_class& c);
  // Same, for a coefficient already in canonical form.
  void add_normalized_term(const Monomial& mono, const mpq_class& c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial operator-() const;
  Polynomial scaled(const mpq_class& c) const;
  // Multiplies every term by a monomial.
  Polynomial shifted(const Monomial& mono) const;

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.ring_ == g.ring_ && f.ambient_ == g.ambient_ && f.terms_ == g.terms_;
  }

  // The per-matrix degree tuple shared by all terms (u ignored); nullopt
  // when f is not multihomogeneous.  The zero polynomial has no degree.
  std::optional<std::vector<int>> multidegree() const;
  // Highest power of u occurring; 0 for the zero polynomial.
  int u_degree() const;
  // The coefficient of u^k, as a polynomial without u.
  Polynomial u_coefficient(int k) const;

  // Same polynomial in a different ambient with the same number of
  // variables (the concatenation isomorphisms).  AmbientMismatch otherwise.
  Polynomial reinterpreted(const Ambient& target) const;
  // Renames flat variable v to var_map[v] of the target ambient.
  Polynomial relabeled(const Ambient& target, const std::vector<int>& var_map) const;

 private:
  void check_compatible(const Polynomial& g) const;

  CoefficientRing ring_;
  Ambient ambient_;
  Terms terms_;
};

// Substitutes images[v] for flat variable v; u is kept.  All images must
// share the ring and target ambient.  An empty optional leaves the
// variable unchanged (requires the target ambient to equal the source).
Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images,
                      const CoefficientRing& ring, const Ambient& target);

// Coefficient-wise image in another ring: ℤ→ℚ, ℤ→F_p, ℚ→ℤ (DenominatorError
// unless integral), ℚ→F_p, F_p→F_p.  RingMismatch for other directions.
Polynomial change_ring(const Polynomial& f, const CoefficientRing& target);

enum class Action { Transpose, Inverse };
enum class Side { Row, Col };

struct WeightPair {
  std::vector<int> row;
  std::vector<int> col;
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

// Weight of a single monomial under T_r×T_s.
WeightPair monomial_weight(const Monomial& mono, const Ambient& ambient, Action action);
// Common weight of all terms, nullopt when f is not isotypic.  The zero
// polynomial has no weight.
std::optional<WeightPair> torus_weight(const Polynomial& f, Action action);

// g·f for the one-parameter element g = I + u·E_{a,b} on one side.  The
// substitution contracts also make sense for a > b (lower unipotents); a = b
// and indices outside 1..r (Row) or 1..s (Col) raise IndexError.
Polynomial unipotent_substitution(const Polynomial& f, Side side, int a, int b, Action action);

// The per-variable images used by unipotent_substitution; empty entries
// are variables left unchanged.
std::vector<std::optional<Polynomial>> unipotent_images(const CoefficientRing& ring, const Ambient& ambient, Side side,
                                                        int a, int b, Action action);

// Invariant under every simple-root substitution (a, a+1) on both sides.
bool is_unipotent_invariant(const Polynomial& f, Action action);

// Text rendering "c * u^e * x(l)_{i,j}^e + ...", terms in canonical order,
// factors sorted by variable; "0" for the zero polynomial.
std::string to_string(const Polynomial& f);
std::string variable_name(const Ambient& ambient, int flat_index);

}  // namespace hwvkit
