#pragma once

// Highest weight vectors of k[Mat_{rs}^m] under U_r×U_s: the twisted
// bideterminant bases, a brute-force oracle and the good filtration.

#include <cstddef>
#include <string>
#include <vector>

#include "hwvkit/bidet.hpp"
#include "hwvkit/linalg.hpp"

namespace hwvkit {

struct HwvRequest {
  int r = 1;
  int s = 1;
  int m = 1;
  Partition mu;
  Partition lambda;
  std::vector<int> nu;
  Action action = Action::Transpose;
  CoefficientRing ring = CoefficientRing::rationals();

  Ambient ambient() const { return Ambient{r, s, m, 'x'}; }
};

// SizeError / DegreeMismatch for inconsistent requests.
void validate(const HwvRequest& req);

// (μ, λ) for Transpose, (−μ^rev, λ) for Inverse, padded to lengths r and s.
WeightPair target_weight(const HwvRequest& req);

struct BasisElement {
  Triple triple;
  Polynomial poly;
};

// (S_μ|^m_α S_λ) (Transpose) or (S̃_μ|^m_α S_λ) (Inverse) for every
// labelled triple, in decreasing triple order.
std::vector<BasisElement> hwv_basis(const HwvRequest& req, const RepresentativeHook& hook = {});

// Monomials of multidegree nu whose row and column contents are the given
// count vectors, in canonical order.
std::vector<Monomial> monomials_with_content(const Ambient& ambient, const std::vector<int>& nu,
                                             const std::vector<int>& row_counts, const std::vector<int>& col_counts);
// All monomials of multidegree nu, in canonical order.
std::vector<Monomial> monomials_of_multidegree(const Ambient& ambient, const std::vector<int>& nu);

// Basis of the subspace of span(candidates) on which every generator
// substitution acts trivially, i.e. all positive u-coefficients of g·f − f
// vanish.  Candidates must be in canonical order; the basis is the
// reduced nullspace basis, one vector per free candidate.
std::vector<Polynomial> invariant_subspace(const std::vector<Monomial>& candidates, const CoefficientRing& ring,
                                           const Ambient& ambient,
                                           const std::vector<std::vector<std::optional<Polynomial>>>& generators);

// A basis of the space of U_r×U_s-invariants of multidegree nu and the
// requested torus weight, computed from the defining equations.
// FieldRequired over ℤ.
std::vector<Polynomial> hwv_oracle(const HwvRequest& req);

struct BasisReport {
  std::size_t elements = 0;
  std::size_t rank = 0;
  std::size_t oracle_dim = 0;
  std::size_t triples = 0;
  bool invariant = false;      // every element U-invariant, exact weight and multidegree
  bool independent = false;
  bool count_matches = false;  // #elements = dim of the oracle space
  bool spans = false;          // oracle space inside the span
  bool passed() const { return invariant && independent && count_matches && spans; }
};

BasisReport verify_elements(const HwvRequest& req, const std::vector<Polynomial>& elements);
BasisReport verify_basis(const HwvRequest& req);

struct FiltrationLayer {
  std::size_t index = 0;  // 1-based
  Triple triple;
  Partition mu;
  Partition lambda;
  // Twisted bideterminants for all column-strict S, T (column-strictness
  // loses nothing: permuting a column changes the sign only, and a repeated
  // entry in a column gives zero).
  std::vector<Polynomial> spanning;
  // The subfamily with S and T semistandard.
  std::vector<Polynomial> semistandard;
  std::size_t expected_section_dim = 0;
};

struct FiltrationOptions {
  std::size_t max_layers = 5000;
  std::size_t max_spanning = 200000;
};

// Layers in filtration order: all labelled triples of multidegree nu over
// every (μ, λ), sorted decreasingly.  CapExceeded beyond the options.
std::vector<FiltrationLayer> build_filtration(int r, int s, int m, const std::vector<int>& nu,
                                              const CoefficientRing& ring, const FiltrationOptions& opts = {});

struct LayerReport {
  std::size_t index = 0;
  Partition mu;
  Partition lambda;
  std::size_t expected_section_dim = 0;
  std::size_t section_dim = 0;
  bool stable = false;
};

struct FiltrationReport {
  std::size_t piece_dim = 0;        // monomials of multidegree nu
  std::size_t semistandard_count = 0;
  std::size_t semistandard_rank = 0;
  std::size_t total_rank = 0;       // dim M_1
  bool semistandard_basis = false;
  bool stable = false;
  bool sections_match = false;
  bool telescopes = false;          // Σ section dims = piece dim
  std::vector<LayerReport> layers;
  bool passed() const { return semistandard_basis && stable && sections_match && telescopes; }
};

// Checks the layers bottom-up.  Stability of M_i is tested on a basis of
// M_i against the simple-root substitutions (a, a+1) and their transposes
// (a+1, a) on both sides, which together with the torus generate GL_r×GL_s.
FiltrationReport verify_filtration(const std::vector<FiltrationLayer>& layers, int r, int s, int m,
                                   const std::vector<int>& nu, const CoefficientRing& ring);

// Every (r', s', m', μ, λ, ν) cell with r' ≤ r, s' ≤ s, 1 ≤ m' ≤ m, |ν| ≤ t.
std::vector<HwvRequest> request_grid(int r_max, int s_max, int m_max, int t_max, Action action,
                                      const CoefficientRing& ring);

struct CharIndependenceReport {
  std::size_t triples = 0;
  std::vector<std::pair<std::string, std::size_t>> dims;  // ring name, oracle dim
  bool passed = false;
};

CharIndependenceReport char_independence_check(const HwvRequest& req, const std::vector<CoefficientRing>& rings);

}  // namespace hwvkit
