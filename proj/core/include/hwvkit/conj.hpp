#pragma once

// The conjugation action of GL_n on k[Mat_n] and the pullback of the
// twisted bideterminant bases along X ↦ (lower left r×s corners of X^l).
//
// Weight convention: the torus acts by f ↦ f(t^{-1} Y t), under which
// y_{i,j} has weight e_j − e_i.  With this convention the lower left corner
// entry y_{n,1} is a highest weight vector of the dominant weight
// (1, 0, ..., 0, −1) = [(1), (1)].

#include <cstddef>
#include <optional>
#include <vector>

#include "hwvkit/highest_weight.hpp"

namespace hwvkit {

Ambient conj_ambient(int n);

// [λ, μ] = (λ_1, ..., λ_{l(λ)}, 0, ..., 0, −μ_{l(μ)}, ..., −μ_1).  SizeError
// when l(λ) + l(μ) > n, DegreeMismatch unless |λ| = |μ|.
std::vector<int> conj_chi(const Partition& lambda, const Partition& mu, int n);

class MatrixPowerTable {
 public:
  MatrixPowerTable(int n, int m, const CoefficientRing& ring);

  int n() const { return n_; }
  int m() const { return static_cast<int>(powers_.size()); }
  // Entry (i, j) of X^l, 1-based; IndexError out of range.
  const Polynomial& entry(int l, int i, int j) const;

 private:
  int n_;
  std::vector<std::vector<Polynomial>> powers_;
};

// Substitutes x(l)_{i,j} ↦ (X^l)_{n−r+i, j}.  SizeError when r + s > n.
Polynomial pullback(const Polynomial& f, int n);
Polynomial pullback(const Polynomial& f, const MatrixPowerTable& powers);
// Same with the upper left corner (X^l)_{i,j}; used as a negative control.
Polynomial pullback_upper_left(const Polynomial& f, const MatrixPowerTable& powers);

// f(g^{-1} Y g) for g = I + u·E_{a,b}, a ≠ b.
Polynomial conj_unipotent_substitution(const Polynomial& f, int a, int b);
std::vector<std::optional<Polynomial>> conj_unipotent_images(const CoefficientRing& ring, int n, int a, int b);
// Fixed by every simple-root substitution (a, a+1).
bool is_conj_unipotent_invariant(const Polynomial& f);

std::vector<int> conj_monomial_weight(const Monomial& mono, int n);
std::optional<std::vector<int>> conj_weight(const Polynomial& f);

// c_1, ..., c_n: sums of the principal k×k minors.
std::vector<Polynomial> invariant_generators(int n, const CoefficientRing& ring);

// Pullbacks of the inverse-action basis elements (S̃_μ|^{n−1}_α S_λ) over every
// ν ∈ Σ_{n−1,t}, computed with r = l(μ) and s = n − r (or another split
// when given).  For λ = μ = ∅ this is the constant 1.
struct PulledBack {
  std::vector<int> nu;
  Triple triple;
  Polynomial poly;
  int degree = 0;  // Σ_l l·ν_l
};
std::vector<PulledBack> pullback_basis(const Partition& lambda, const Partition& mu, int n, const CoefficientRing& ring,
                                       int r = 0, int s = 0);

struct PullbackReport {
  std::size_t elements = 0;
  std::size_t nonzero = 0;
  bool invariant = false;
  bool weight_ok = false;
  bool degree_ok = false;
  bool passed() const { return invariant && weight_ok && degree_ok; }
};

PullbackReport verify_pullback_hwv(const Partition& lambda, const Partition& mu, int n, const CoefficientRing& ring);

// Basis of the degree-d part of k[Mat_n]^{U_n}_χ from the defining
// equations.  FieldRequired over ℤ.
std::vector<Polynomial> conj_hwv_oracle(int n, const std::vector<int>& chi, int degree, const CoefficientRing& ring);
// Same, with CapExceeded beyond max_monomials candidates.
std::vector<Polynomial> conj_hwv_oracle(int n, const std::vector<int>& chi, int degree, const CoefficientRing& ring,
                                        std::size_t max_monomials);

// Monomials of total degree d in the y-variables with conjugation weight chi.
std::vector<Monomial> conj_monomials(int n, const std::vector<int>& chi, int degree);

struct SpanDegreeReport {
  int degree = 0;
  std::size_t dim_oracle = 0;
  std::size_t dim_span = 0;
  std::size_t dim_ideal = 0;  // nilcone check only
  bool equal = false;
};

struct SpanReport {
  std::vector<int> chi;
  std::vector<SpanDegreeReport> degrees;
  bool passed() const {
    for (const auto& d : degrees)
      if (!d.equal) return false;
    return true;
  }
};

struct SpanOptions {
  std::size_t max_monomials = 200000;
};

// For each d ≤ d_max: the products M·pb (M a monomial in c_1..c_n, pb a
// pullback) of degree d span the oracle space.
SpanReport module_spanning_check(const Partition& lambda, const Partition& mu, int n, int d_max,
                                 const CoefficientRing& ring, const SpanOptions& opts = {});

// For each d ≤ d_max: with W_d = Σ_k c_k·V_{d−k} (V the oracle spaces),
// the pullbacks of degree d together with W_d span V_d.
SpanReport nilcone_spanning_check(const Partition& lambda, const Partition& mu, int n, int d_max,
                                  const CoefficientRing& ring, const SpanOptions& opts = {});

// (S̃_μ|^m_α S_λ) over all ordered P, Q of weight ν and every bijection α
// with P∘α = Q.
std::vector<Polynomial> easy_spanning_set(const Partition& lambda, const Partition& mu, const std::vector<int>& nu,
                                          int r, int s, const CoefficientRing& ring);

}  // namespace hwvkit
