#pragma once

// Bideterminants (S|T) and twisted bideterminants (S|^m_α T).

#include <cstdint>
#include <vector>

#include "hwvkit/mappings.hpp"
#include "hwvkit/polynomial.hpp"

namespace hwvkit {

// det(x(l)_{rows[a], cols[b]}) for equal-length index lists; 1 when empty.
Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols, const CoefficientRing& ring,
                 const Ambient& ambient, int l = 1);

// Product over the columns of the shape of det(x(l)_{S(a),T(b)}).
// ShapeMismatch unless S and T share their shape; EntryRange when an entry
// of S exceeds r or one of T exceeds s.
Polynomial bideterminant(const Tableau& S, const Tableau& T, const CoefficientRing& ring, const Ambient& ambient,
                         int l = 1);

struct TwistedBidetSpec {
  Triple triple;
  Tableau S;  // on the source F, entries ≤ r
  Tableau T;  // on the target E, entries ≤ s
  int r = 1;
  int s = 1;
  int m = 1;

  Ambient ambient() const { return Ambient{r, s, m, 'x'}; }
};

// CompatibilityError, ShapeMismatch or EntryRange for inconsistent specs.
void validate(const TwistedBidetSpec& spec);

// One signed ordinary bideterminant of an expansion.
struct BidetTerm {
  int sign = 1;
  Tableau S;
  Tableau T;
};

// Σ_{π∈X} sgn(π) (S^{α,π}|T) in k[Mat_{mr,s}], X the left coset
// representatives of C_F(Q) ∩ α^{-1}C_E(P)α in C_F.
std::vector<BidetTerm> row_concat_expansion(const TwistedBidetSpec& spec, CosetChoice choice = CosetChoice::Minimal);
// Σ_{σ∈X} sgn(σ) (S|T^{α,σ}) in k[Mat_{r,ms}], X the left coset
// representatives of αC_F(Q)α^{-1} ∩ C_E(P) in C_E.
std::vector<BidetTerm> column_concat_expansion(const TwistedBidetSpec& spec, CosetChoice choice = CosetChoice::Minimal);

// Evaluates an expansion and maps it back to k[Mat_{rs}^m].
Polynomial assemble_row_expansion(const std::vector<BidetTerm>& terms, const TwistedBidetSpec& spec,
                                  const CoefficientRing& ring);
Polynomial assemble_column_expansion(const std::vector<BidetTerm>& terms, const TwistedBidetSpec& spec,
                                     const CoefficientRing& ring);

// Evaluates (S|^m_α T) for many S, T and one triple, computing the coset
// representatives once.
class TwistedBidetFamily {
 public:
  TwistedBidetFamily(Triple triple, int r, int s, int m, CosetChoice choice = CosetChoice::Minimal);

  const Triple& triple() const { return triple_; }
  std::size_t num_cosets() const { return reps_.size(); }
  std::vector<BidetTerm> expansion(const Tableau& S, const Tableau& T) const;
  Polynomial operator()(const Tableau& S, const Tableau& T, const CoefficientRing& ring) const;

 private:
  Triple triple_;
  int r_, s_, m_;
  std::vector<BoxPermutation> reps_;
};

// (S|^m_α T) by the row-wise expansion.
Polynomial twisted_bideterminant(const TwistedBidetSpec& spec, const CoefficientRing& ring,
                                 CosetChoice choice = CosetChoice::Minimal);

// |C_{P,Q,α}|.
std::uint64_t twist_order(const Triple& t);

// The full signed sum over C_F × C_E.  CapExceeded when |C_F|·|C_E| > cap.
Polynomial naive_double_sum(const TwistedBidetSpec& spec, const CoefficientRing& ring = CoefficientRing::integers(),
                            std::uint64_t cap = 1'000'000);

}  // namespace hwvkit
