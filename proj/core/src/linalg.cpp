#include "hwvkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "hwvkit/errors.hpp"

namespace hwvkit {

namespace {

struct RationalOps {
  using E = mpq_class;
  E from(const mpq_class& c) const { return c; }
  mpq_class to(const E& e) const { return e; }
  bool zero(const E& e) const { return e == 0; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const { return 1 / a; }
  E one() const { return 1; }
};

struct PrimeOps {
  using E = std::uint64_t;
  std::uint64_t p;
  E from(const mpq_class& c) const {
    // Coefficients of F_p polynomials are already canonical integers.
    mpz_class r = c.get_num() % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
  mpq_class to(const E& e) const { return mpq_class(static_cast<unsigned long>(e)); }
  bool zero(const E& e) const { return e == 0; }
  E sub(const E& a, const E& b) const { return a >= b ? a - b : a + p - b; }
  E mul(const E& a, const E& b) const { return a * b % p; }
  E neg(const E& a) const { return a ? p - a : 0; }
  E inv(E a) const {
    E result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  }
  E one() const { return 1; }
};

template <class Ops>
class EchelonCore {
 public:
  using E = typename Ops::E;
  using Row = std::vector<std::pair<std::uint32_t, E>>;

  explicit EchelonCore(Ops ops) : ops_(ops) {}

  bool insert(const Polynomial& f) {
    Row rem = to_row(f, true);
    reduce(rem, true);
    if (rem.empty()) return false;
    E inv = ops_.inv(rem.front().second);
    for (auto& [id, c] : rem) c = ops_.mul(c, inv);
    pivot_.emplace(rem.front().first, rows_.size());
    rows_.push_back(std::move(rem));
    return true;
  }

  bool contains(const Polynomial& f) const {
    Row rem;
    for (const auto& [mono, c] : f.terms()) {
      auto it = ids_.find(mono);
      // A monomial no row mentions can never cancel.
      if (it == ids_.end()) return false;
      rem.emplace_back(it->second, ops_.from(c));
    }
    reduce(rem, false);
    return rem.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  bool before(std::uint32_t a, std::uint32_t b) const { return monos_[a] > monos_[b]; }

  Row to_row(const Polynomial& f, bool intern) {
    Row row;
    row.reserve(f.num_terms());
    for (const auto& [mono, c] : f.terms()) {
      auto it = ids_.find(mono);
      if (it == ids_.end()) {
        if (!intern) continue;
        it = ids_.emplace(mono, static_cast<std::uint32_t>(monos_.size())).first;
        monos_.push_back(mono);
      }
      row.emplace_back(it->second, ops_.from(c));
    }
    return row;
  }

  // Leading-term reduction.  With stop_at_free the scan ends at the first
  // entry that is not a pivot (enough to decide independence).
  void reduce(Row& rem, bool stop_at_free) const {
    std::size_t pos = 0;
    Row next;
    while (pos < rem.size()) {
      auto pit = pivot_.find(rem[pos].first);
      if (pit == pivot_.end()) {
        if (stop_at_free) {
          // Keep rem normalised so that its first entry is the pivot.
          rem.erase(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(pos));
          return;
        }
        ++pos;
        continue;
      }
      const Row& b = rows_[pit->second];
      const E c = rem[pos].second;
      next.clear();
      next.insert(next.end(), rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(pos));
      std::size_t i = pos, j = 0;
      while (i < rem.size() || j < b.size()) {
        if (j == b.size() || (i < rem.size() && before(rem[i].first, b[j].first))) {
          next.push_back(rem[i++]);
        } else if (i == rem.size() || before(b[j].first, rem[i].first)) {
          next.emplace_back(b[j].first, ops_.neg(ops_.mul(c, b[j].second)));
          ++j;
        } else {
          E v = ops_.sub(rem[i].second, ops_.mul(c, b[j].second));
          if (!ops_.zero(v)) next.emplace_back(rem[i].first, v);
          ++i;
          ++j;
        }
      }
      rem.swap(next);
    }
    if (stop_at_free) rem.clear();
  }

  Ops ops_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::uint32_t, MonomialOrder> ids_;
  std::vector<Row> rows_;
  std::map<std::uint32_t, std::size_t> pivot_;
};

template <class Ops>
std::vector<SparseRow> nullspace_impl(const std::vector<SparseRow>& rows, int ncols, Ops ops) {
  using E = typename Ops::E;
  using Row = std::map<int, E>;
  std::map<int, Row> pivots;  // pivot column -> row with leading 1
  for (const auto& input : rows) {
    Row rem;
    for (const auto& [col, c] : input) {
      if (col < 0 || col >= ncols) throw IndexError("column out of range in nullspace");
      E v = ops.from(c);
      if (!ops.zero(v)) rem[col] = v;
    }
    while (!rem.empty()) {
      auto lead = rem.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) break;
      E c = lead->second;
      for (const auto& [col, v] : pit->second) {
        E nv = ops.sub(rem.count(col) ? rem[col] : E{}, ops.mul(c, v));
        if (ops.zero(nv))
          rem.erase(col);
        else
          rem[col] = nv;
      }
    }
    if (rem.empty()) continue;
    E inv = ops.inv(rem.begin()->second);
    for (auto& [col, v] : rem) v = ops.mul(v, inv);
    int p = rem.begin()->first;
    pivots.emplace(p, std::move(rem));
  }
  // Back substitution, largest pivots first.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Row& row = it->second;
    for (auto jt = pivots.rbegin(); jt != it; ++jt) {
      auto hit = row.find(jt->first);
      if (hit == row.end()) continue;
      E c = hit->second;
      for (const auto& [col, v] : jt->second) {
        E nv = ops.sub(row.count(col) ? row[col] : E{}, ops.mul(c, v));
        if (ops.zero(nv))
          row.erase(col);
        else
          row[col] = nv;
      }
    }
  }
  std::vector<SparseRow> basis;
  for (int f = 0; f < ncols; ++f) {
    if (pivots.count(f)) continue;
    SparseRow v;
    for (const auto& [p, row] : pivots) {
      auto hit = row.find(f);
      if (hit != row.end()) v.emplace_back(p, ops.to(ops.neg(hit->second)));
    }
    v.emplace_back(f, mpq_class(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

struct EchelonBasis::Impl {
  CoefficientRing ring;
  std::variant<EchelonCore<RationalOps>, EchelonCore<PrimeOps>> core;
};

namespace {

std::variant<EchelonCore<RationalOps>, EchelonCore<PrimeOps>> make_core(const CoefficientRing& ring) {
  if (!ring.is_field()) throw FieldRequired("linear algebra needs a field; use Q or F_p");
  if (ring.kind() == CoefficientRing::Kind::Rationals) return EchelonCore<RationalOps>(RationalOps{});
  return EchelonCore<PrimeOps>(PrimeOps{ring.characteristic()});
}

}  // namespace

EchelonBasis::EchelonBasis(const CoefficientRing& ring) : impl_(new Impl{ring, make_core(ring)}) {}
EchelonBasis::~EchelonBasis() = default;
EchelonBasis::EchelonBasis(EchelonBasis&&) noexcept = default;
EchelonBasis& EchelonBasis::operator=(EchelonBasis&&) noexcept = default;
EchelonBasis::EchelonBasis(const EchelonBasis& o) : impl_(new Impl(*o.impl_)) {}
EchelonBasis& EchelonBasis::operator=(const EchelonBasis& o) {
  impl_.reset(new Impl(*o.impl_));
  return *this;
}

bool EchelonBasis::insert(const Polynomial& f) {
  if (!(f.ring() == impl_->ring)) throw RingMismatch("polynomial over " + f.ring().name() + " in a basis over " + impl_->ring.name());
  return std::visit([&](auto& c) { return c.insert(f); }, impl_->core);
}

bool EchelonBasis::contains(const Polynomial& f) const {
  if (!(f.ring() == impl_->ring)) throw RingMismatch("polynomial over " + f.ring().name() + " in a basis over " + impl_->ring.name());
  return std::visit([&](const auto& c) { return c.contains(f); }, impl_->core);
}

std::size_t EchelonBasis::rank() const {
  return std::visit([](const auto& c) { return c.rank(); }, impl_->core);
}

const CoefficientRing& EchelonBasis::ring() const { return impl_->ring; }

std::size_t rank(const std::vector<Polynomial>& family, const CoefficientRing& ring) {
  EchelonBasis basis(ring);
  for (const auto& f : family) basis.insert(f);
  return basis.rank();
}

std::vector<std::size_t> independent_subset(const std::vector<Polynomial>& family, const CoefficientRing& ring) {
  EchelonBasis basis(ring);
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < family.size(); ++k)
    if (basis.insert(family[k])) picked.push_back(k);
  return picked;
}

bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const CoefficientRing& ring) {
  EchelonBasis ba(ring), bb(ring);
  for (const auto& f : a) ba.insert(f);
  for (const auto& f : b) bb.insert(f);
  if (ba.rank() != bb.rank()) return false;
  for (const auto& f : b)
    if (!ba.contains(f)) return false;
  return true;
}

std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int ncols, const CoefficientRing& ring) {
  if (!ring.is_field()) throw FieldRequired("nullspace needs a field; use Q or F_p");
  if (ring.kind() == CoefficientRing::Kind::Rationals) return nullspace_impl(rows, ncols, RationalOps{});
  return nullspace_impl(rows, ncols, PrimeOps{ring.characteristic()});
}

}  // namespace hwvkit
