#include "hwvkit/highest_weight.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "hwvkit/errors.hpp"

namespace hwvkit {

void validate(const HwvRequest& req) {
  if (req.r < 1 || req.s < 1 || req.m < 1) throw SizeError("r, s and m must be positive");
  if (req.mu.length() > req.r || req.lambda.length() > req.s) throw SizeError("need l(mu) <= r and l(lambda) <= s");
  if (static_cast<int>(req.nu.size()) != req.m) throw DegreeMismatch("nu must have length m");
  const int t = std::accumulate(req.nu.begin(), req.nu.end(), 0);
  if (std::any_of(req.nu.begin(), req.nu.end(), [](int v) { return v < 0; }) || req.mu.size() != t ||
      req.lambda.size() != t)
    throw DegreeMismatch("|mu|, |lambda| and |nu| must agree");
}

namespace {

std::vector<int> row_content(const HwvRequest& req) {
  std::vector<int> rows(static_cast<std::size_t>(req.r));
  for (int i = 1; i <= req.r; ++i)
    rows[static_cast<std::size_t>(i - 1)] = req.action == Action::Transpose ? req.mu.part(i) : req.mu.part(req.r + 1 - i);
  return rows;
}

std::vector<int> col_content(const HwvRequest& req) {
  std::vector<int> cols(static_cast<std::size_t>(req.s));
  for (int j = 1; j <= req.s; ++j) cols[static_cast<std::size_t>(j - 1)] = req.lambda.part(j);
  return cols;
}

}  // namespace

WeightPair target_weight(const HwvRequest& req) {
  WeightPair w{row_content(req), col_content(req)};
  if (req.action == Action::Inverse)
    for (int& v : w.row) v = -v;
  return w;
}

std::vector<BasisElement> hwv_basis(const HwvRequest& req, const RepresentativeHook& hook) {
  validate(req);
  const SkewDiagram f(req.mu), e(req.lambda);
  const Tableau S = req.action == Action::Transpose ? canonical_tableau(f) : anticanonical_tableau(req.mu, req.r);
  const Tableau T = canonical_tableau(e);
  std::vector<BasisElement> out;
  for (auto& triple : enumerate_triples(req.r, req.s, req.m, req.mu, req.lambda, req.nu, hook)) {
    TwistedBidetSpec spec{triple, S, T, req.r, req.s, req.m};
    Polynomial poly = twisted_bideterminant(spec, req.ring);
    out.push_back({std::move(triple), std::move(poly)});
  }
  return out;
}

namespace {

// Depth-first search over exponent vectors in flat variable order, larger
// exponents first, which yields canonical order.
void enumerate_monomials(const Ambient& amb, const std::vector<int>& nu, std::vector<int> rows, std::vector<int> cols,
                         bool constrained, std::vector<Monomial>& out) {
  if (static_cast<int>(nu.size()) != amb.m) throw DegreeMismatch("nu must have length m");
  std::vector<int> left = nu;
  Monomial mono(static_cast<std::size_t>(amb.num_vars()) + 1, 0);
  const int block = amb.r * amb.s;
  std::function<void(int)> rec = [&](int v) {
    if (v == amb.num_vars()) {
      if (constrained) {
        for (int x : rows)
          if (x) return;
        for (int x : cols)
          if (x) return;
      }
      out.push_back(mono);
      return;
    }
    const int l = v / block;
    const auto var = amb.unflatten(v);
    const int i = var.i, j = var.j;
    int hi = left[static_cast<std::size_t>(l)];
    if (constrained) hi = std::min({hi, rows[static_cast<std::size_t>(i - 1)], cols[static_cast<std::size_t>(j - 1)]});
    const bool last_in_matrix = (v + 1) % block == 0;
    for (int e = hi; e >= 0; --e) {
      if (last_in_matrix && left[static_cast<std::size_t>(l)] != e) continue;
      mono[static_cast<std::size_t>(v) + 1] = static_cast<std::uint8_t>(e);
      left[static_cast<std::size_t>(l)] -= e;
      if (constrained) {
        rows[static_cast<std::size_t>(i - 1)] -= e;
        cols[static_cast<std::size_t>(j - 1)] -= e;
      }
      rec(v + 1);
      left[static_cast<std::size_t>(l)] += e;
      if (constrained) {
        rows[static_cast<std::size_t>(i - 1)] += e;
        cols[static_cast<std::size_t>(j - 1)] += e;
      }
    }
    mono[static_cast<std::size_t>(v) + 1] = 0;
  };
  rec(0);
}

}  // namespace

std::vector<Monomial> monomials_with_content(const Ambient& ambient, const std::vector<int>& nu,
                                             const std::vector<int>& row_counts, const std::vector<int>& col_counts) {
  std::vector<Monomial> out;
  enumerate_monomials(ambient, nu, row_counts, col_counts, true, out);
  return out;
}

std::vector<Monomial> monomials_of_multidegree(const Ambient& ambient, const std::vector<int>& nu) {
  std::vector<Monomial> out;
  enumerate_monomials(ambient, nu, {}, {}, false, out);
  return out;
}

std::vector<Polynomial> invariant_subspace(const std::vector<Monomial>& candidates, const CoefficientRing& ring,
                                           const Ambient& amb,
                                           const std::vector<std::vector<std::optional<Polynomial>>>& generators) {
  if (!ring.is_field()) throw FieldRequired("the oracle needs a field; use Q or F_p");
  std::map<std::pair<std::size_t, Monomial>, SparseRow> rows;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    Polynomial f(ring, amb);
    f.add_term(candidates[k], 1);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Polynomial h = substitute(f, generators[g], ring, amb);
      for (const auto& [mono, c] : h.terms())
        if (mono[0] > 0) rows[{g, mono}].emplace_back(static_cast<int>(k), c);
    }
  }
  std::vector<SparseRow> matrix;
  matrix.reserve(rows.size());
  for (auto& [key, row] : rows) matrix.push_back(std::move(row));
  std::vector<Polynomial> basis;
  for (const auto& v : nullspace(matrix, static_cast<int>(candidates.size()), ring)) {
    Polynomial f(ring, amb);
    for (const auto& [col, c] : v) f.add_term(candidates[static_cast<std::size_t>(col)], c);
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<Polynomial> hwv_oracle(const HwvRequest& req) {
  validate(req);
  if (!req.ring.is_field()) throw FieldRequired("the oracle needs a field; use Q or F_p");
  const Ambient amb = req.ambient();
  auto candidates = monomials_with_content(amb, req.nu, row_content(req), col_content(req));
  std::vector<std::vector<std::optional<Polynomial>>> gens;
  for (int a = 1; a < req.r; ++a) gens.push_back(unipotent_images(req.ring, amb, Side::Row, a, a + 1, req.action));
  for (int a = 1; a < req.s; ++a) gens.push_back(unipotent_images(req.ring, amb, Side::Col, a, a + 1, req.action));
  return invariant_subspace(candidates, req.ring, amb, gens);
}

BasisReport verify_elements(const HwvRequest& req, const std::vector<Polynomial>& elements) {
  validate(req);
  BasisReport rep;
  rep.elements = elements.size();
  const WeightPair w = target_weight(req);
  rep.invariant = true;
  for (const auto& f : elements) {
    auto fw = torus_weight(f, req.action);
    auto deg = f.multidegree();
    if (!fw || !(*fw == w) || !deg || *deg != req.nu || !is_unipotent_invariant(f, req.action)) {
      rep.invariant = false;
      break;
    }
  }
  EchelonBasis span(req.ring);
  for (const auto& f : elements) span.insert(f);
  rep.rank = span.rank();
  rep.independent = rep.rank == elements.size();
  const auto oracle = hwv_oracle(req);
  rep.oracle_dim = oracle.size();
  rep.count_matches = rep.elements == rep.oracle_dim;
  rep.spans = std::all_of(oracle.begin(), oracle.end(), [&](const Polynomial& f) { return span.contains(f); });
  return rep;
}

BasisReport verify_basis(const HwvRequest& req) {
  std::vector<Polynomial> polys;
  auto basis = hwv_basis(req);
  for (auto& b : basis) polys.push_back(std::move(b.poly));
  BasisReport rep = verify_elements(req, polys);
  rep.triples = basis.size();
  return rep;
}

std::vector<FiltrationLayer> build_filtration(int r, int s, int m, const std::vector<int>& nu,
                                              const CoefficientRing& ring, const FiltrationOptions& opts) {
  if (r < 1 || s < 1 || m < 1) throw SizeError("r, s and m must be positive");
  if (static_cast<int>(nu.size()) != m) throw DegreeMismatch("nu must have length m");
  const int t = std::accumulate(nu.begin(), nu.end(), 0);
  std::vector<Triple> triples;
  for (const auto& mu : partitions_of(t, r, t))
    for (const auto& lambda : partitions_of(t, s, t))
      for (auto& tr : enumerate_triples(r, s, m, mu, lambda, nu)) {
        triples.push_back(std::move(tr));
        if (triples.size() > opts.max_layers) throw CapExceeded("too many filtration layers");
      }
  sort_triples_decreasing(triples, m);

  std::vector<FiltrationLayer> layers;
  std::size_t total = 0;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    FiltrationLayer layer;
    layer.index = k + 1;
    layer.triple = triples[k];
    layer.mu = layer.triple.source().outer();
    layer.lambda = layer.triple.target().outer();
    layer.expected_section_dim =
        count_semistandard(layer.mu, r) * count_semistandard(layer.lambda, s);
    const auto ss = enumerate_tableaux(layer.triple.source(), TableauKind::ColumnStrict, MaxEntry{r});
    const auto ts = enumerate_tableaux(layer.triple.target(), TableauKind::ColumnStrict, MaxEntry{s});
    total += ss.size() * ts.size();
    if (total > opts.max_spanning) throw CapExceeded("too many spanning twisted bideterminants");
    TwistedBidetFamily family(layer.triple, r, s, m);
    for (const auto& S : ss)
      for (const auto& T : ts) {
        Polynomial f = family(S, T, ring);
        if (S.is_semistandard() && T.is_semistandard()) layer.semistandard.push_back(f);
        layer.spanning.push_back(std::move(f));
      }
    layers.push_back(std::move(layer));
  }
  return layers;
}

FiltrationReport verify_filtration(const std::vector<FiltrationLayer>& layers, int r, int s, int m,
                                   const std::vector<int>& nu, const CoefficientRing& ring) {
  FiltrationReport rep;
  const Ambient amb{r, s, m, 'x'};
  rep.piece_dim = monomials_of_multidegree(amb, nu).size();

  EchelonBasis ss(ring);
  for (const auto& layer : layers)
    for (const auto& f : layer.semistandard) {
      ++rep.semistandard_count;
      ss.insert(f);
    }
  rep.semistandard_rank = ss.rank();
  rep.semistandard_basis = rep.semistandard_count == rep.piece_dim && rep.semistandard_rank == rep.piece_dim;

  std::vector<std::vector<std::optional<Polynomial>>> gens;
  for (int a = 1; a < r; ++a) {
    gens.push_back(unipotent_images(ring, amb, Side::Row, a, a + 1, Action::Transpose));
    gens.push_back(unipotent_images(ring, amb, Side::Row, a + 1, a, Action::Transpose));
  }
  for (int a = 1; a < s; ++a) {
    gens.push_back(unipotent_images(ring, amb, Side::Col, a, a + 1, Action::Transpose));
    gens.push_back(unipotent_images(ring, amb, Side::Col, a + 1, a, Action::Transpose));
  }

  EchelonBasis mi(ring);
  rep.stable = true;
  rep.sections_match = true;
  std::size_t sum = 0;
  std::vector<LayerReport> bottom_up;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    LayerReport lr{it->index, it->mu, it->lambda, it->expected_section_dim, 0, true};
    std::vector<const Polynomial*> fresh;
    for (const auto& f : it->spanning)
      if (mi.insert(f)) fresh.push_back(&f);
    lr.section_dim = fresh.size();
    for (const Polynomial* f : fresh) {
      for (const auto& g : gens) {
        Polynomial h = substitute(*f, g, ring, amb);
        for (int k = 1; k <= h.u_degree() && lr.stable; ++k)
          if (!mi.contains(h.u_coefficient(k))) lr.stable = false;
        if (!lr.stable) break;
      }
      if (!lr.stable) break;
    }
    rep.stable = rep.stable && lr.stable;
    rep.sections_match = rep.sections_match && lr.section_dim == lr.expected_section_dim;
    sum += lr.section_dim;
    bottom_up.push_back(std::move(lr));
  }
  rep.total_rank = mi.rank();
  rep.telescopes = sum == rep.piece_dim && rep.total_rank == rep.piece_dim;
  rep.layers.assign(bottom_up.rbegin(), bottom_up.rend());
  return rep;
}

std::vector<HwvRequest> request_grid(int r_max, int s_max, int m_max, int t_max, Action action,
                                     const CoefficientRing& ring) {
  std::vector<HwvRequest> out;
  for (int r = 1; r <= r_max; ++r)
    for (int s = 1; s <= s_max; ++s)
      for (int m = 1; m <= m_max; ++m)
        for (int t = 0; t <= t_max; ++t)
          for (const auto& mu : partitions_of(t, r, t))
            for (const auto& lambda : partitions_of(t, s, t))
              for (const auto& nu : compositions_of(t, m)) out.push_back({r, s, m, mu, lambda, nu, action, ring});
  return out;
}

CharIndependenceReport char_independence_check(const HwvRequest& req, const std::vector<CoefficientRing>& rings) {
  validate(req);
  CharIndependenceReport rep;
  rep.triples = enumerate_triples(req.r, req.s, req.m, req.mu, req.lambda, req.nu).size();
  rep.passed = true;
  for (const auto& ring : rings) {
    HwvRequest q = req;
    q.ring = ring;
    std::size_t d = hwv_oracle(q).size();
    rep.dims.emplace_back(ring.name(), d);
    rep.passed = rep.passed && d == rep.triples;
  }
  return rep;
}

}  // namespace hwvkit
