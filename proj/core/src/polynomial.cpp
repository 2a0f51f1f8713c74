#include "hwvkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hwvkit/errors.hpp"

namespace hwvkit {

int Ambient::var(int l, int i, int j) const {
  if (l < 1 || l > m || i < 1 || i > r || j < 1 || j > s)
    throw IndexError("variable (" + std::to_string(l) + "," + std::to_string(i) + "," + std::to_string(j) +
                     ") outside ambient r=" + std::to_string(r) + " s=" + std::to_string(s) + " m=" + std::to_string(m));
  return ((l - 1) * r + i - 1) * s + j - 1;
}

Ambient::Var Ambient::unflatten(int index) const {
  int j = index % s;
  int rest = index / s;
  int i = rest % r;
  int l = rest / r;
  return {l + 1, i + 1, j + 1};
}

namespace {

void add_exponents(Monomial& into, const Monomial& by) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    unsigned v = static_cast<unsigned>(into[k]) + by[k];
    if (v > 255) throw CapExceeded("exponent exceeds 255");
    into[k] = static_cast<std::uint8_t>(v);
  }
}

}  // namespace

Polynomial Polynomial::constant(const CoefficientRing& ring, const Ambient& ambient, const mpq_class& c) {
  Polynomial f(ring, ambient);
  f.add_term(f.unit_monomial(), c);
  return f;
}

Polynomial Polynomial::variable(const CoefficientRing& ring, const Ambient& ambient, int l, int i, int j) {
  Polynomial f(ring, ambient);
  Monomial mono = f.unit_monomial();
  mono[static_cast<std::size_t>(ambient.var(l, i, j)) + 1] = 1;
  f.add_term(mono, 1);
  return f;
}

Polynomial Polynomial::u(const CoefficientRing& ring, const Ambient& ambient) {
  Polynomial f(ring, ambient);
  Monomial mono = f.unit_monomial();
  mono[0] = 1;
  f.add_term(mono, 1);
  return f;
}

void Polynomial::add_term(const Monomial& mono, const mpq_class& c) { add_normalized_term(mono, ring_.normalize(c)); }

void Polynomial::add_normalized_term(const Monomial& mono, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second = ring_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!(ring_ == g.ring_)) throw RingMismatch("polynomials over " + ring_.name() + " and " + g.ring_.name());
  if (!(ambient_ == g.ambient_)) throw AmbientMismatch("polynomials in different ambients");
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [mono, c] : g.terms_) add_normalized_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [mono, c] : g.terms_) add_normalized_term(mono, ring_.normalize(-c));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_, ambient_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono, ring_.normalize(-c));
  return out;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial out(ring_, ambient_);
  mpq_class cn = ring_.normalize(c);
  if (cn == 0) return out;
  for (const auto& [mono, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono, ring_.mul(v, cn));
  return out;
}

Polynomial Polynomial::shifted(const Monomial& by) const {
  Polynomial out(ring_, ambient_);
  for (const auto& [mono, v] : terms_) {
    Monomial m2 = mono;
    add_exponents(m2, by);
    // Multiplication by a monomial preserves the order.
    out.terms_.emplace_hint(out.terms_.end(), std::move(m2), v);
  }
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial out(f.ring_, f.ambient_);
  if (f.terms_.size() == 1 && f.terms_.begin()->second == 1) return g.shifted(f.terms_.begin()->first);
  if (g.terms_.size() == 1 && g.terms_.begin()->second == 1) return f.shifted(g.terms_.begin()->first);
  Monomial prod;
  for (const auto& [ma, ca] : f.terms_)
    for (const auto& [mb, cb] : g.terms_) {
      prod = ma;
      add_exponents(prod, mb);
      out.add_normalized_term(prod, f.ring_.mul(ca, cb));
    }
  return out;
}

std::optional<std::vector<int>> Polynomial::multidegree() const {
  if (terms_.empty()) return std::nullopt;
  const int block = ambient_.r * ambient_.s;
  std::optional<std::vector<int>> deg;
  for (const auto& [mono, c] : terms_) {
    std::vector<int> d(static_cast<std::size_t>(ambient_.m), 0);
    for (int v = 0; v < ambient_.num_vars(); ++v) d[static_cast<std::size_t>(v / block)] += mono[static_cast<std::size_t>(v) + 1];
    if (!deg)
      deg = std::move(d);
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

int Polynomial::u_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono[0]));
  return d;
}

Polynomial Polynomial::u_coefficient(int k) const {
  Polynomial out(ring_, ambient_);
  for (const auto& [mono, c] : terms_) {
    if (mono[0] != k) continue;
    Monomial m2 = mono;
    m2[0] = 0;
    out.terms_.emplace(std::move(m2), c);
  }
  return out;
}

Polynomial Polynomial::reinterpreted(const Ambient& target) const {
  if (target.num_vars() != ambient_.num_vars()) throw AmbientMismatch("ambients have different numbers of variables");
  Polynomial out(ring_, target);
  out.terms_ = terms_;
  return out;
}

Polynomial Polynomial::relabeled(const Ambient& target, const std::vector<int>& var_map) const {
  if (var_map.size() != static_cast<std::size_t>(ambient_.num_vars())) throw AmbientMismatch("variable map has the wrong length");
  Polynomial out(ring_, target);
  Monomial m2 = out.unit_monomial();
  for (const auto& [mono, c] : terms_) {
    std::fill(m2.begin(), m2.end(), 0);
    m2[0] = mono[0];
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      if (!mono[v + 1]) continue;
      auto& slot = m2[static_cast<std::size_t>(var_map[v]) + 1];
      unsigned e = static_cast<unsigned>(slot) + mono[v + 1];
      if (e > 255) throw CapExceeded("exponent exceeds 255");
      slot = static_cast<std::uint8_t>(e);
    }
    out.add_normalized_term(m2, c);
  }
  return out;
}

Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images,
                      const CoefficientRing& ring, const Ambient& target) {
  const int nv = f.ambient().num_vars();
  if (images.size() != static_cast<std::size_t>(nv)) throw AmbientMismatch("substitution needs one image per variable");
  for (const auto& img : images) {
    if (!img) {
      if (!(target == f.ambient())) throw AmbientMismatch("unchanged variables need the same ambient");
      continue;
    }
    if (!(img->ring() == ring)) throw RingMismatch("substitution image over the wrong ring");
    if (!(img->ambient() == target)) throw AmbientMismatch("substitution image in the wrong ambient");
  }
  if (!(f.ring() == ring)) throw RingMismatch("substituting into a polynomial over another ring");

  Polynomial out(ring, target);
  // powers[v][e-1] = images[v]^e
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nv));
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& pw = powers[static_cast<std::size_t>(v)];
    if (pw.empty()) pw.push_back(*images[static_cast<std::size_t>(v)]);
    while (static_cast<int>(pw.size()) < e) pw.push_back(pw.back() * pw.front());
    return pw[static_cast<std::size_t>(e - 1)];
  };

  Monomial kept(static_cast<std::size_t>(target.num_vars()) + 1, 0);
  for (const auto& [mono, c] : f.terms()) {
    std::fill(kept.begin(), kept.end(), 0);
    kept[0] = mono[0];
    Polynomial prod = Polynomial::constant(ring, target, c);
    for (int v = 0; v < nv; ++v) {
      int e = mono[static_cast<std::size_t>(v) + 1];
      if (!e) continue;
      if (!images[static_cast<std::size_t>(v)])
        kept[static_cast<std::size_t>(v) + 1] = static_cast<std::uint8_t>(e);
      else
        prod = prod * power(v, e);
      if (prod.is_zero()) break;
    }
    if (prod.is_zero()) continue;
    const Polynomial moved = prod.shifted(kept);
    for (const auto& [m2, c2] : moved.terms()) out.add_normalized_term(m2, c2);
  }
  return out;
}

Polynomial change_ring(const Polynomial& f, const CoefficientRing& target) {
  using K = CoefficientRing::Kind;
  const auto from = f.ring().kind();
  bool ok = from == target.kind() ? (from != K::PrimeField || f.ring().characteristic() == target.characteristic())
                                  : (from != K::PrimeField);
  if (!ok) throw RingMismatch("cannot map " + f.ring().name() + " to " + target.name());
  Polynomial out(target, f.ambient());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, c);
  return out;
}

WeightPair monomial_weight(const Monomial& mono, const Ambient& ambient, Action action) {
  WeightPair w{std::vector<int>(static_cast<std::size_t>(ambient.r), 0), std::vector<int>(static_cast<std::size_t>(ambient.s), 0)};
  const int sign = action == Action::Transpose ? 1 : -1;
  for (int v = 0; v < ambient.num_vars(); ++v) {
    int e = mono[static_cast<std::size_t>(v) + 1];
    if (!e) continue;
    auto [l, i, j] = ambient.unflatten(v);
    w.row[static_cast<std::size_t>(i - 1)] += sign * e;
    w.col[static_cast<std::size_t>(j - 1)] += e;
  }
  return w;
}

std::optional<WeightPair> torus_weight(const Polynomial& f, Action action) {
  std::optional<WeightPair> w;
  for (const auto& [mono, c] : f.terms()) {
    WeightPair wm = monomial_weight(mono, f.ambient(), action);
    if (!w)
      w = std::move(wm);
    else if (!(*w == wm))
      return std::nullopt;
  }
  return w;
}

std::vector<std::optional<Polynomial>> unipotent_images(const CoefficientRing& ring, const Ambient& amb, Side side,
                                                        int a, int b, Action action) {
  const int bound = side == Side::Row ? amb.r : amb.s;
  if (a == b || a < 1 || b < 1 || a > bound || b > bound)
    throw IndexError("unipotent generator (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(amb.num_vars()));
  const Polynomial u = Polynomial::u(ring, amb);
  for (int l = 1; l <= amb.m; ++l) {
    if (side == Side::Col) {
      for (int i = 1; i <= amb.r; ++i)
        images[static_cast<std::size_t>(amb.var(l, i, b))] =
            Polynomial::variable(ring, amb, l, i, b) + u * Polynomial::variable(ring, amb, l, i, a);
    } else if (action == Action::Transpose) {
      for (int j = 1; j <= amb.s; ++j)
        images[static_cast<std::size_t>(amb.var(l, b, j))] =
            Polynomial::variable(ring, amb, l, b, j) + u * Polynomial::variable(ring, amb, l, a, j);
    } else {
      for (int j = 1; j <= amb.s; ++j)
        images[static_cast<std::size_t>(amb.var(l, a, j))] =
            Polynomial::variable(ring, amb, l, a, j) - u * Polynomial::variable(ring, amb, l, b, j);
    }
  }
  return images;
}

Polynomial unipotent_substitution(const Polynomial& f, Side side, int a, int b, Action action) {
  return substitute(f, unipotent_images(f.ring(), f.ambient(), side, a, b, action), f.ring(), f.ambient());
}

bool is_unipotent_invariant(const Polynomial& f, Action action) {
  for (Side side : {Side::Row, Side::Col}) {
    const int bound = side == Side::Row ? f.ambient().r : f.ambient().s;
    for (int a = 1; a < bound; ++a)
      if (!(unipotent_substitution(f, side, a, a + 1, action) == f)) return false;
  }
  return true;
}

std::string variable_name(const Ambient& ambient, int flat_index) {
  auto [l, i, j] = ambient.unflatten(flat_index);
  std::string out(1, ambient.symbol);
  if (ambient.symbol == 'x') out += "(" + std::to_string(l) + ")";
  out += "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::string> factors;
    if (mono[0]) factors.push_back(mono[0] == 1 ? "u" : "u^" + std::to_string(mono[0]));
    for (int v = 0; v < f.ambient().num_vars(); ++v) {
      int e = mono[static_cast<std::size_t>(v) + 1];
      if (!e) continue;
      factors.push_back(variable_name(f.ambient(), v) + (e == 1 ? "" : "^" + std::to_string(e)));
    }
    mpq_class mag = abs(c);
    bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool coef_shown = factors.empty() || mag != 1;
    if (coef_shown) os << mag.get_str();
    for (std::size_t k = 0; k < factors.size(); ++k) os << ((k || coef_shown) ? " * " : "") << factors[k];
  }
  return os.str();
}

}  // namespace hwvkit
