#pragma once

// Exact linear algebra over ℚ and F_p for spans of polynomials and for
// nullspaces of sparse coefficient matrices.

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hwvkit/coefficients.hpp"
#include "hwvkit/polynomial.hpp"

namespace hwvkit {

// Row echelon form of a growing family of polynomials, with rows keyed by
// monomials.  The pivot of a row is its first monomial in canonical order.
class EchelonBasis {
 public:
  // FieldRequired over ℤ.
  explicit EchelonBasis(const CoefficientRing& ring);
  ~EchelonBasis();
  EchelonBasis(EchelonBasis&&) noexcept;
  EchelonBasis& operator=(EchelonBasis&&) noexcept;
  EchelonBasis(const EchelonBasis&);
  EchelonBasis& operator=(const EchelonBasis&);

  // Adds f; true when it was independent of the rows so far.  RingMismatch
  // for a polynomial over another ring.
  bool insert(const Polynomial& f);
  bool contains(const Polynomial& f) const;
  std::size_t rank() const;
  const CoefficientRing& ring() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::size_t rank(const std::vector<Polynomial>& family, const CoefficientRing& ring);
// Indices of the greedily selected independent members, in input order.
std::vector<std::size_t> independent_subset(const std::vector<Polynomial>& family, const CoefficientRing& ring);
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const CoefficientRing& ring);

// A sparse row: (column, coefficient) pairs with distinct columns.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

// Basis of {v : row·v = 0 for every row}, one vector per non-pivot column in
// increasing column order (that column set to 1).  Pivots are the smallest
// columns.  FieldRequired over ℤ.
std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int ncols, const CoefficientRing& ring);

}  // namespace hwvkit
