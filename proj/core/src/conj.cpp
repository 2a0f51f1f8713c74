#include "hwvkit/conj.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hwvkit/errors.hpp"

namespace hwvkit {

Ambient conj_ambient(int n) { return Ambient{n, n, 1, 'y'}; }

std::vector<int> conj_chi(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.length() + mu.length() > n) throw SizeError("need l(lambda) + l(mu) <= n");
  if (lambda.size() != mu.size()) throw DegreeMismatch("|lambda| must equal |mu|");
  std::vector<int> chi(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= lambda.length(); ++i) chi[static_cast<std::size_t>(i - 1)] = lambda.part(i);
  for (int i = 1; i <= mu.length(); ++i) chi[static_cast<std::size_t>(n - i)] = -mu.part(i);
  return chi;
}

MatrixPowerTable::MatrixPowerTable(int n, int m, const CoefficientRing& ring) : n_(n) {
  if (n < 1 || m < 1) throw SizeError("matrix powers need n, m >= 1");
  const Ambient amb = conj_ambient(n);
  std::vector<Polynomial> x;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) x.push_back(Polynomial::variable(ring, amb, 1, i, j));
  powers_.push_back(x);
  for (int l = 2; l <= m; ++l) {
    const auto& prev = powers_.back();
    std::vector<Polynomial> next;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Polynomial e(ring, amb);
        for (int k = 0; k < n; ++k)
          e += prev[static_cast<std::size_t>(i * n + k)] * x[static_cast<std::size_t>(k * n + j)];
        next.push_back(std::move(e));
      }
    powers_.push_back(std::move(next));
  }
}

const Polynomial& MatrixPowerTable::entry(int l, int i, int j) const {
  if (l < 1 || l > m() || i < 1 || i > n_ || j < 1 || j > n_) throw IndexError("matrix power entry out of range");
  return powers_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>((i - 1) * n_ + j - 1)];
}

namespace {

Polynomial pullback_with_offset(const Polynomial& f, const MatrixPowerTable& powers, bool lower) {
  const Ambient& amb = f.ambient();
  const int n = powers.n();
  if (amb.r + amb.s > n) throw SizeError("pullback needs r + s <= n");
  if (amb.m > powers.m()) throw SizeError("matrix power table too short");
  const int offset = lower ? n - amb.r : 0;
  std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(amb.num_vars()));
  for (int l = 1; l <= amb.m; ++l)
    for (int i = 1; i <= amb.r; ++i)
      for (int j = 1; j <= amb.s; ++j)
        images[static_cast<std::size_t>(amb.var(l, i, j))] = powers.entry(l, offset + i, j);
  return substitute(f, images, f.ring(), conj_ambient(n));
}

}  // namespace

Polynomial pullback(const Polynomial& f, const MatrixPowerTable& powers) { return pullback_with_offset(f, powers, true); }

Polynomial pullback(const Polynomial& f, int n) {
  return pullback(f, MatrixPowerTable(n, f.ambient().m, f.ring()));
}

Polynomial pullback_upper_left(const Polynomial& f, const MatrixPowerTable& powers) {
  return pullback_with_offset(f, powers, false);
}

std::vector<std::optional<Polynomial>> conj_unipotent_images(const CoefficientRing& ring, int n, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > n || b > n) throw IndexError("conjugation generator out of range");
  const Ambient amb = conj_ambient(n);
  const Polynomial u = Polynomial::u(ring, amb);
  auto y = [&](int i, int j) { return Polynomial::variable(ring, amb, 1, i, j); };
  std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(amb.num_vars()));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != a && j != b) continue;
      Polynomial img = y(i, j);
      if (i == a) img -= u * y(b, j);
      if (j == b) img += u * y(i, a);
      if (i == a && j == b) img -= u * u * y(b, a);
      images[static_cast<std::size_t>(amb.var(1, i, j))] = std::move(img);
    }
  return images;
}

Polynomial conj_unipotent_substitution(const Polynomial& f, int a, int b) {
  if (f.ambient().r != f.ambient().s || f.ambient().m != 1) throw AmbientMismatch("conjugation acts on k[Mat_n]");
  return substitute(f, conj_unipotent_images(f.ring(), f.ambient().r, a, b), f.ring(), f.ambient());
}

bool is_conj_unipotent_invariant(const Polynomial& f) {
  for (int a = 1; a < f.ambient().r; ++a)
    if (!(conj_unipotent_substitution(f, a, a + 1) == f)) return false;
  return true;
}

std::vector<int> conj_monomial_weight(const Monomial& mono, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int e = mono[static_cast<std::size_t>(i * n + j) + 1];
      w[static_cast<std::size_t>(j)] += e;
      w[static_cast<std::size_t>(i)] -= e;
    }
  return w;
}

std::optional<std::vector<int>> conj_weight(const Polynomial& f) {
  std::optional<std::vector<int>> w;
  for (const auto& [mono, c] : f.terms()) {
    auto wm = conj_monomial_weight(mono, f.ambient().r);
    if (!w)
      w = std::move(wm);
    else if (*w != wm)
      return std::nullopt;
  }
  return w;
}

std::vector<Polynomial> invariant_generators(int n, const CoefficientRing& ring) {
  const Ambient amb = conj_ambient(n);
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) {
    Polynomial ck(ring, amb);
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int from) {
      if (pos == k) {
        ck += minor(idx, idx, ring, amb);
        return;
      }
      for (int v = from; v <= n; ++v) {
        idx[static_cast<std::size_t>(pos)] = v;
        rec(pos + 1, v + 1);
      }
    };
    rec(0, 1);
    out.push_back(std::move(ck));
  }
  return out;
}

std::vector<PulledBack> pullback_basis(const Partition& lambda, const Partition& mu, int n, const CoefficientRing& ring,
                                       int r, int s) {
  conj_chi(lambda, mu, n);
  if (n < 2) throw SizeError("pullbacks need n >= 2");
  const int m = n - 1;
  const int t = lambda.size();
  if (t == 0) {
    Tableau empty(SkewDiagram{}, {});
    return {PulledBack{std::vector<int>(static_cast<std::size_t>(m), 0),
                       Triple(empty, empty, DiagramMapping::identity(SkewDiagram{})),
                       Polynomial::constant(ring, conj_ambient(n), 1), 0}};
  }
  if (r == 0) r = mu.length();
  if (s == 0) s = n - r;
  MatrixPowerTable powers(n, m, ring);
  std::vector<PulledBack> out;
  for (const auto& nu : compositions_of(t, m)) {
    HwvRequest req{r, s, m, mu, lambda, nu, Action::Inverse, ring};
    int degree = 0;
    for (int l = 1; l <= m; ++l) degree += l * nu[static_cast<std::size_t>(l - 1)];
    for (auto& b : hwv_basis(req)) out.push_back({nu, std::move(b.triple), pullback(b.poly, powers), degree});
  }
  return out;
}

PullbackReport verify_pullback_hwv(const Partition& lambda, const Partition& mu, int n, const CoefficientRing& ring) {
  const auto chi = conj_chi(lambda, mu, n);
  PullbackReport rep;
  rep.invariant = rep.weight_ok = rep.degree_ok = true;
  for (const auto& pb : pullback_basis(lambda, mu, n, ring)) {
    ++rep.elements;
    if (pb.poly.is_zero()) continue;
    ++rep.nonzero;
    if (!is_conj_unipotent_invariant(pb.poly)) rep.invariant = false;
    auto w = conj_weight(pb.poly);
    if (!w || *w != chi) rep.weight_ok = false;
    auto deg = pb.poly.multidegree();
    if (!deg || deg->front() != pb.degree) rep.degree_ok = false;
  }
  return rep;
}

std::vector<Monomial> conj_monomials(int n, const std::vector<int>& chi, int degree) {
  const int nv = n * n;
  std::vector<Monomial> out;
  Monomial mono(static_cast<std::size_t>(nv) + 1, 0);
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nv) {
      if (left == 0 && w == chi) out.push_back(mono);
      return;
    }
    const int i = v / n, j = v % n;
    for (int e = left; e >= 0; --e) {
      if (v == nv - 1 && e != left) continue;
      mono[static_cast<std::size_t>(v) + 1] = static_cast<std::uint8_t>(e);
      w[static_cast<std::size_t>(j)] += e;
      w[static_cast<std::size_t>(i)] -= e;
      rec(v + 1, left - e);
      w[static_cast<std::size_t>(j)] -= e;
      w[static_cast<std::size_t>(i)] += e;
    }
    mono[static_cast<std::size_t>(v) + 1] = 0;
  };
  rec(0, degree);
  return out;
}

std::vector<Polynomial> conj_hwv_oracle(int n, const std::vector<int>& chi, int degree, const CoefficientRing& ring,
                                        std::size_t max_monomials) {
  auto candidates = conj_monomials(n, chi, degree);
  if (candidates.size() > max_monomials) throw CapExceeded("too many candidate monomials");
  std::vector<std::vector<std::optional<Polynomial>>> gens;
  for (int a = 1; a < n; ++a) gens.push_back(conj_unipotent_images(ring, n, a, a + 1));
  return invariant_subspace(candidates, ring, conj_ambient(n), gens);
}

std::vector<Polynomial> conj_hwv_oracle(int n, const std::vector<int>& chi, int degree, const CoefficientRing& ring) {
  return conj_hwv_oracle(n, chi, degree, ring, SpanOptions{}.max_monomials);
}

namespace {

// Products of c_1..c_n of total degree d, one per partition of d with parts ≤ n.
std::vector<std::vector<Polynomial>> invariant_monomials(const std::vector<Polynomial>& c, int d_max,
                                                         const CoefficientRing& ring, int n) {
  std::vector<std::vector<Polynomial>> out(static_cast<std::size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d)
    for (const auto& p : partitions_of(d, d, n)) {
      Polynomial prod = Polynomial::constant(ring, conj_ambient(n), 1);
      for (int part : p.parts()) prod = prod * c[static_cast<std::size_t>(part - 1)];
      out[static_cast<std::size_t>(d)].push_back(std::move(prod));
    }
  return out;
}

}  // namespace

SpanReport module_spanning_check(const Partition& lambda, const Partition& mu, int n, int d_max,
                                 const CoefficientRing& ring, const SpanOptions& opts) {
  SpanReport rep;
  rep.chi = conj_chi(lambda, mu, n);
  const auto pbs = pullback_basis(lambda, mu, n, ring);
  const auto cmon = invariant_monomials(invariant_generators(n, ring), d_max, ring, n);
  for (int d = 0; d <= d_max; ++d) {
    SpanDegreeReport dr;
    dr.degree = d;
    const auto oracle = conj_hwv_oracle(n, rep.chi, d, ring, opts.max_monomials);
    dr.dim_oracle = oracle.size();
    EchelonBasis v(ring), span(ring);
    for (const auto& f : oracle) v.insert(f);
    bool inside = true;
    for (const auto& pb : pbs) {
      if (pb.degree > d) continue;
      for (const auto& mon : cmon[static_cast<std::size_t>(d - pb.degree)]) {
        Polynomial f = mon * pb.poly;
        if (f.is_zero()) continue;
        if (!v.contains(f)) inside = false;
        span.insert(f);
      }
    }
    dr.dim_span = span.rank();
    dr.equal = inside && dr.dim_span == dr.dim_oracle;
    rep.degrees.push_back(dr);
  }
  return rep;
}

SpanReport nilcone_spanning_check(const Partition& lambda, const Partition& mu, int n, int d_max,
                                  const CoefficientRing& ring, const SpanOptions& opts) {
  SpanReport rep;
  rep.chi = conj_chi(lambda, mu, n);
  const auto pbs = pullback_basis(lambda, mu, n, ring);
  const auto c = invariant_generators(n, ring);
  std::vector<std::vector<Polynomial>> spaces;
  for (int d = 0; d <= d_max; ++d) {
    SpanDegreeReport dr;
    dr.degree = d;
    spaces.push_back(conj_hwv_oracle(n, rep.chi, d, ring, opts.max_monomials));
    const auto& vd = spaces.back();
    dr.dim_oracle = vd.size();
    EchelonBasis v(ring), w(ring);
    for (const auto& f : vd) v.insert(f);
    bool inside = true;
    for (int k = 1; k <= n && k <= d; ++k)
      for (const auto& h : spaces[static_cast<std::size_t>(d - k)]) {
        Polynomial f = c[static_cast<std::size_t>(k - 1)] * h;
        if (!v.contains(f)) inside = false;
        w.insert(f);
      }
    dr.dim_ideal = w.rank();
    for (const auto& pb : pbs) {
      if (pb.degree != d) continue;
      if (!pb.poly.is_zero() && !v.contains(pb.poly)) inside = false;
      w.insert(pb.poly);
    }
    dr.dim_span = w.rank() - dr.dim_ideal;
    dr.equal = inside && w.rank() == dr.dim_oracle;
    rep.degrees.push_back(dr);
  }
  return rep;
}

std::vector<Polynomial> easy_spanning_set(const Partition& lambda, const Partition& mu, const std::vector<int>& nu,
                                          int r, int s, const CoefficientRing& ring) {
  const int m = static_cast<int>(nu.size());
  HwvRequest req{r, s, m, mu, lambda, nu, Action::Inverse, ring};
  validate(req);
  const SkewDiagram f(mu), e(lambda);
  const Tableau S = anticanonical_tableau(mu, r);
  const Tableau T = canonical_tableau(e);
  const auto ps = enumerate_tableaux(e, TableauKind::Ordered, WeightConstraint{nu});
  const auto qs = enumerate_tableaux(f, TableauKind::Ordered, WeightConstraint{nu});
  std::vector<Polynomial> out;
  for (const auto& p : ps)
    for (const auto& q : qs) {
      // Per value i the boxes of F and E carrying i; α matches them up.
      std::vector<std::vector<int>> from(static_cast<std::size_t>(m)), to(static_cast<std::size_t>(m));
      for (std::size_t k = 0; k < q.size(); ++k) from[static_cast<std::size_t>(q.at(static_cast<int>(k)) - 1)].push_back(static_cast<int>(k));
      for (std::size_t k = 0; k < p.size(); ++k) to[static_cast<std::size_t>(p.at(static_cast<int>(k)) - 1)].push_back(static_cast<int>(k));
      std::vector<int> image(f.size());
      std::function<void(int)> rec = [&](int i) {
        if (i == m) {
          Triple triple(p, q, DiagramMapping(f, e, image));
          out.push_back(twisted_bideterminant(TwistedBidetSpec{triple, S, T, r, s, m}, ring));
          return;
        }
        auto targets = to[static_cast<std::size_t>(i)];
        do {
          for (std::size_t k = 0; k < targets.size(); ++k)
            image[static_cast<std::size_t>(from[static_cast<std::size_t>(i)][k])] = targets[k];
          rec(i + 1);
        } while (std::next_permutation(targets.begin(), targets.end()));
      };
      rec(0);
    }
  return out;
}

}  // namespace hwvkit
