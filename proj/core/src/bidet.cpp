#include "hwvkit/bidet.hpp"

#include <bit>

#include "hwvkit/errors.hpp"

namespace hwvkit {

Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols, const CoefficientRing& ring,
                 const Ambient& ambient, int l) {
  if (rows.size() != cols.size()) throw SizeMismatch("minor needs as many rows as columns");
  const std::size_t k = rows.size();
  if (k > 20) throw CapExceeded("minor of size above 20");
  Polynomial zero(ring, ambient);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (rows[a] == rows[b] || cols[a] == cols[b]) return zero;

  // Laplace expansion along the rows with memoised column subsets.
  std::vector<Polynomial> f(std::size_t{1} << k, zero);
  f[0] = Polynomial::constant(ring, ambient, 1);
  Monomial var = zero.unit_monomial();
  for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
    if (f[mask].is_zero()) continue;
    const int row = rows[static_cast<std::size_t>(std::popcount(mask))];
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      std::fill(var.begin(), var.end(), 0);
      var[static_cast<std::size_t>(ambient.var(l, row, cols[c])) + 1] = 1;
      Polynomial term = f[mask].shifted(var);
      if (std::popcount(mask >> (c + 1)) % 2) term = -term;
      f[mask | (1u << c)] += term;
    }
  }
  return f.back();
}

Polynomial bideterminant(const Tableau& S, const Tableau& T, const CoefficientRing& ring, const Ambient& ambient,
                         int l) {
  if (!(S.shape() == T.shape())) throw ShapeMismatch("S and T must have the same shape");
  for (int v : S.entries())
    if (v > ambient.r) throw EntryRange("entry " + std::to_string(v) + " of S exceeds r=" + std::to_string(ambient.r));
  for (int v : T.entries())
    if (v > ambient.s) throw EntryRange("entry " + std::to_string(v) + " of T exceeds s=" + std::to_string(ambient.s));
  Polynomial out = Polynomial::constant(ring, ambient, 1);
  for (const auto& column : S.shape().columns()) {
    std::vector<int> rows, cols;
    for (int idx : column) {
      rows.push_back(S.at(idx));
      cols.push_back(T.at(idx));
    }
    out = out * minor(rows, cols, ring, ambient, l);
    if (out.is_zero()) break;
  }
  return out;
}

void validate(const TwistedBidetSpec& spec) {
  const Triple& t = spec.triple;
  if (!(spec.S.shape() == t.source())) throw ShapeMismatch("S must live on the shape of Q");
  if (!(spec.T.shape() == t.target())) throw ShapeMismatch("T must live on the shape of P");
  if (t.P.size() && t.P.max_entry() > spec.m) throw CompatibilityError("P has entries above m");
  if (!weights_equal(t.P.weight(), t.Q.weight())) throw CompatibilityError("P and Q have different weights");
  for (int v : spec.S.entries())
    if (v > spec.r) throw EntryRange("entry " + std::to_string(v) + " of S exceeds r=" + std::to_string(spec.r));
  for (int v : spec.T.entries())
    if (v > spec.s) throw EntryRange("entry " + std::to_string(v) + " of T exceeds s=" + std::to_string(spec.s));
}

TwistedBidetFamily::TwistedBidetFamily(Triple triple, int r, int s, int m, CosetChoice choice)
    : triple_(std::move(triple)), r_(r), s_(s), m_(m) {
  if (triple_.P.size() && triple_.P.max_entry() > m) throw CompatibilityError("P has entries above m");
  reps_ = left_coset_reps(column_stabilizer(triple_.source()), twist_subgroup(triple_), choice);
}

std::vector<BidetTerm> TwistedBidetFamily::expansion(const Tableau& S, const Tableau& T) const {
  validate(TwistedBidetSpec{triple_, S, T, r_, s_, m_});
  const Triple& t = triple_;
  std::vector<BidetTerm> out;
  out.reserve(reps_.size());
  std::vector<int> entries(t.target().size());
  for (const auto& pi : reps_) {
    for (std::size_t a = 0; a < entries.size(); ++a)
      entries[a] = S.at(pi(t.alpha.preimage(static_cast<int>(a)))) + (t.P.at(static_cast<int>(a)) - 1) * r_;
    out.push_back({pi.sign(), Tableau(t.target(), entries), T});
  }
  return out;
}

Polynomial TwistedBidetFamily::operator()(const Tableau& S, const Tableau& T, const CoefficientRing& ring) const {
  TwistedBidetSpec spec{triple_, S, T, r_, s_, m_};
  return assemble_row_expansion(expansion(S, T), spec, ring);
}

std::vector<BidetTerm> row_concat_expansion(const TwistedBidetSpec& spec, CosetChoice choice) {
  validate(spec);
  return TwistedBidetFamily(spec.triple, spec.r, spec.s, spec.m, choice).expansion(spec.S, spec.T);
}

std::vector<BidetTerm> column_concat_expansion(const TwistedBidetSpec& spec, CosetChoice choice) {
  validate(spec);
  const Triple& t = spec.triple;
  const auto reps = left_coset_reps(column_stabilizer(t.target()), twist_subgroup_on_target(t), choice);
  std::vector<BidetTerm> out;
  out.reserve(reps.size());
  std::vector<int> entries(t.source().size());
  for (const auto& sigma : reps) {
    for (std::size_t a = 0; a < entries.size(); ++a)
      entries[a] = spec.T.at(sigma(t.alpha.image(static_cast<int>(a)))) + (t.Q.at(static_cast<int>(a)) - 1) * spec.s;
    out.push_back({sigma.sign(), spec.S, Tableau(t.source(), entries)});
  }
  return out;
}

Polynomial assemble_row_expansion(const std::vector<BidetTerm>& terms, const TwistedBidetSpec& spec,
                                  const CoefficientRing& ring) {
  const Ambient stacked{spec.m * spec.r, spec.s, 1, 'x'};
  Polynomial sum(ring, stacked);
  for (const auto& term : terms) {
    Polynomial b = bideterminant(term.S, term.T, ring, stacked);
    if (term.sign > 0)
      sum += b;
    else
      sum -= b;
  }
  return sum.reinterpreted(spec.ambient());
}

Polynomial assemble_column_expansion(const std::vector<BidetTerm>& terms, const TwistedBidetSpec& spec,
                                     const CoefficientRing& ring) {
  const Ambient wide{spec.r, spec.m * spec.s, 1, 'x'};
  const Ambient target = spec.ambient();
  Polynomial sum(ring, wide);
  for (const auto& term : terms) {
    Polynomial b = bideterminant(term.S, term.T, ring, wide);
    if (term.sign > 0)
      sum += b;
    else
      sum -= b;
  }
  // x_{i,(l-1)s+j} ↦ x(l)_{i,j}
  std::vector<int> var_map(static_cast<std::size_t>(wide.num_vars()));
  for (int i = 1; i <= spec.r; ++i)
    for (int l = 1; l <= spec.m; ++l)
      for (int j = 1; j <= spec.s; ++j)
        var_map[static_cast<std::size_t>(wide.var(1, i, (l - 1) * spec.s + j))] = target.var(l, i, j);
  return sum.relabeled(target, var_map);
}

Polynomial twisted_bideterminant(const TwistedBidetSpec& spec, const CoefficientRing& ring, CosetChoice choice) {
  return assemble_row_expansion(row_concat_expansion(spec, choice), spec, ring);
}

std::uint64_t twist_order(const Triple& t) { return twist_subgroup(t).order(); }

Polynomial naive_double_sum(const TwistedBidetSpec& spec, const CoefficientRing& ring, std::uint64_t cap) {
  validate(spec);
  const Triple& t = spec.triple;
  const auto cf = column_stabilizer(t.source());
  const auto ce = column_stabilizer(t.target());
  const std::uint64_t of = cf.order(), oe = ce.order();
  if (oe != 0 && of > cap / oe) throw CapExceeded("|C_F|·|C_E| exceeds the cap of " + std::to_string(cap));
  const Ambient amb = spec.ambient();
  const auto fs = cf.elements(cap);
  const auto es = ce.elements(cap);
  Polynomial out(ring, amb);
  Monomial mono = out.unit_monomial();
  const std::size_t n = t.source().size();
  for (const auto& pi : fs)
    for (const auto& sigma : es) {
      std::fill(mono.begin(), mono.end(), 0);
      for (std::size_t a = 0; a < n; ++a) {
        const int ai = static_cast<int>(a);
        ++mono[static_cast<std::size_t>(amb.var(t.Q.at(ai), spec.S.at(pi(ai)), spec.T.at(sigma(t.alpha.image(ai))))) + 1];
      }
      out.add_term(mono, pi.sign() * sigma.sign());
    }
  return out;
}

}  // namespace hwvkit
