#include "hwvkit/mappings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hwvkit/errors.hpp"

namespace hwvkit {

bool leq_order(const Box& a, const Box& b) { return a.row <= b.row && a.col <= b.col; }

bool prec_order(const Box& a, const Box& b) { return a.row < b.row || (a.row == b.row && a.col >= b.col); }

// ---------------------------------------------------------------------------
// DiagramMapping

DiagramMapping::DiagramMapping(SkewDiagram source, SkewDiagram target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (source_.size() != target_.size()) throw SizeMismatch("diagram mapping between diagrams of different sizes");
  if (image_.size() != source_.size()) throw SizeMismatch("diagram mapping image has the wrong length");
  preimage_.assign(image_.size(), -1);
  for (std::size_t k = 0; k < image_.size(); ++k) {
    int v = image_[k];
    if (v < 0 || v >= static_cast<int>(image_.size()) || preimage_[static_cast<std::size_t>(v)] != -1)
      throw CompatibilityError("diagram mapping is not a bijection");
    preimage_[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
}

DiagramMapping DiagramMapping::identity(const SkewDiagram& e) {
  std::vector<int> img(e.size());
  std::iota(img.begin(), img.end(), 0);
  return DiagramMapping(e, e, std::move(img));
}

Box DiagramMapping::operator()(const Box& b) const {
  auto k = source_.index_of(b);
  if (!k) throw IndexError("box " + to_string(b) + " is not in the source diagram");
  return target_.boxes()[static_cast<std::size_t>(image(*k))];
}

DiagramMapping DiagramMapping::inverse() const { return DiagramMapping(target_, source_, preimage_); }

std::string to_string(const DiagramMapping& a) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) out += " ";
    out += to_string(a.source().boxes()[k]) + "->" +
           to_string(a.target().boxes()[static_cast<std::size_t>(a.image(static_cast<int>(k)))]);
  }
  return out;
}

bool is_admissible(const DiagramMapping& alpha) {
  const auto& fb = alpha.source().boxes();
  const auto& eb = alpha.target().boxes();
  for (std::size_t a = 0; a < fb.size(); ++a) {
    const Box& ea = eb[static_cast<std::size_t>(alpha.image(static_cast<int>(a)))];
    for (std::size_t b = 0; b < fb.size(); ++b) {
      const Box& ebb = eb[static_cast<std::size_t>(alpha.image(static_cast<int>(b)))];
      if (ebb.col != ea.col || ebb.row <= ea.row) continue;
      if (!(fb[b].row > fb[a].row && fb[b].col <= fb[a].col)) return false;
    }
  }
  return true;
}

namespace {

// Both order conditions of specialness for one unordered pair of source
// boxes with known images.
bool special_pair_ok(const Box& fa, const Box& fb, const Box& ea, const Box& eb) {
  if (leq_order(fa, fb) && !prec_order(ea, eb)) return false;
  if (leq_order(fb, fa) && !prec_order(eb, ea)) return false;
  if (leq_order(ea, eb) && !prec_order(fa, fb)) return false;
  if (leq_order(eb, ea) && !prec_order(fb, fa)) return false;
  return true;
}

// Depth-first search over bijections source → target, assigning source
// boxes in row-major order.  `allowed(k, v)` filters candidate images and
// `pair_ok(a, b)` is checked against every earlier box.
template <class Allowed, class PairOk, class Emit>
void search_bijections(std::size_t n, Allowed&& allowed, PairOk&& pair_ok, Emit&& emit) {
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == n) return emit(image);
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || !allowed(k, static_cast<int>(v))) continue;
      image[k] = static_cast<int>(v);
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a) ok = pair_ok(a, k, image);
      if (!ok) continue;
      used[v] = 1;
      bool keep_going = rec(k + 1);
      used[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

bool is_special(const DiagramMapping& alpha) {
  const auto& fb = alpha.source().boxes();
  const auto& eb = alpha.target().boxes();
  for (std::size_t a = 0; a < fb.size(); ++a)
    for (std::size_t b = a + 1; b < fb.size(); ++b)
      if (!special_pair_ok(fb[a], fb[b], eb[static_cast<std::size_t>(alpha.image(static_cast<int>(a)))],
                           eb[static_cast<std::size_t>(alpha.image(static_cast<int>(b)))]))
        return false;
  return true;
}

Tableau pull_back_canonical(const DiagramMapping& alpha) {
  std::vector<int> entries;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    entries.push_back(alpha.target().boxes()[static_cast<std::size_t>(alpha.image(static_cast<int>(k)))].row);
  return Tableau(alpha.source(), std::move(entries));
}

std::vector<DiagramMapping> enumerate_special_mappings(const SkewDiagram& source, const SkewDiagram& target) {
  if (source.size() != target.size()) throw SizeMismatch("special mappings need diagrams of equal size");
  const auto& fb = source.boxes();
  const auto& eb = target.boxes();
  std::vector<DiagramMapping> out;
  search_bijections(
      source.size(), [](std::size_t, int) { return true; },
      [&](std::size_t a, std::size_t b, const std::vector<int>& img) {
        return special_pair_ok(fb[a], fb[b], eb[static_cast<std::size_t>(img[a])], eb[static_cast<std::size_t>(img[b])]);
      },
      [&](const std::vector<int>& img) {
        out.emplace_back(source, target, img);
        return true;
      });
  return out;
}

namespace {

void require_row_weight(const Tableau& s, const SkewDiagram& target) {
  if (!weights_equal(s.weight(), target.row_lengths()))
    throw WeightMismatch("tableau weight differs from the row lengths of the target diagram");
}

}  // namespace

std::optional<DiagramMapping> admissible_representative(const Tableau& s, const SkewDiagram& target) {
  require_row_weight(s, target);
  const auto& fb = s.shape().boxes();
  const auto& eb = target.boxes();
  std::optional<DiagramMapping> found;
  search_bijections(
      s.size(), [&](std::size_t k, int v) { return eb[static_cast<std::size_t>(v)].row == s.at(static_cast<int>(k)); },
      [&](std::size_t a, std::size_t b, const std::vector<int>& img) {
        return special_pair_ok(fb[a], fb[b], eb[static_cast<std::size_t>(img[a])], eb[static_cast<std::size_t>(img[b])]);
      },
      [&](const std::vector<int>& img) {
        found.emplace(s.shape(), target, img);
        return false;
      });
  return found;
}

std::vector<DiagramMapping> admissible_representatives(const Tableau& s, const SkewDiagram& target) {
  require_row_weight(s, target);
  const auto& fb = s.shape().boxes();
  const auto& eb = target.boxes();
  std::vector<DiagramMapping> out;
  // Admissibility is a pairwise condition, so it can prune the search.
  auto pair_ok = [&](std::size_t a, std::size_t b, const std::vector<int>& img) {
    const Box& ea = eb[static_cast<std::size_t>(img[a])];
    const Box& ebb = eb[static_cast<std::size_t>(img[b])];
    if (ea.col != ebb.col) return true;
    if (ebb.row > ea.row) return fb[b].row > fb[a].row && fb[b].col <= fb[a].col;
    if (ea.row > ebb.row) return fb[a].row > fb[b].row && fb[a].col <= fb[b].col;
    return true;
  };
  search_bijections(
      s.size(), [&](std::size_t k, int v) { return eb[static_cast<std::size_t>(v)].row == s.at(static_cast<int>(k)); },
      pair_ok,
      [&](const std::vector<int>& img) {
        out.emplace_back(s.shape(), target, img);
        return true;
      });
  return out;
}

// ---------------------------------------------------------------------------
// BoxPermutation

BoxPermutation::BoxPermutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
      throw CompatibilityError("box permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

BoxPermutation BoxPermutation::identity(std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return BoxPermutation(std::move(img));
}

int BoxPermutation::sign() const {
  std::vector<char> seen(image_.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool BoxPermutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

BoxPermutation BoxPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return BoxPermutation(std::move(inv));
}

BoxPermutation BoxPermutation::compose(const BoxPermutation& other) const {
  if (other.size() != size()) throw SizeMismatch("composing permutations of different degree");
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) img[i] = image_[static_cast<std::size_t>(other.image_[i])];
  return BoxPermutation(std::move(img));
}

std::string to_cycle_string(const BoxPermutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p(static_cast<int>(i)) == static_cast<int>(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p(static_cast<int>(j)))) {
      seen[j] = 1;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// BoxPermutationGroup

BoxPermutationGroup::BoxPermutationGroup(SkewDiagram diagram, const std::vector<int>& block_of)
    : diagram_(std::move(diagram)) {
  if (block_of.size() != diagram_.size()) throw SizeMismatch("block labels do not match the diagram");
  std::map<int, std::vector<int>> by_label;
  for (std::size_t k = 0; k < block_of.size(); ++k) by_label[block_of[k]].push_back(static_cast<int>(k));
  for (auto& [label, members] : by_label) blocks_.push_back(std::move(members));
  std::sort(blocks_.begin(), blocks_.end());
  block_of_.assign(diagram_.size(), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int x : blocks_[b]) block_of_[static_cast<std::size_t>(x)] = static_cast<int>(b);
}

std::uint64_t BoxPermutationGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& b : blocks_)
    for (std::uint64_t k = 2; k <= b.size(); ++k) {
      if (n > UINT64_MAX / k) throw CapExceeded("group order overflows 64 bits");
      n *= k;
    }
  return n;
}

std::vector<BoxPermutation> BoxPermutationGroup::generators() const {
  std::vector<BoxPermutation> gens;
  for (const auto& b : blocks_)
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
      std::vector<int> img(diagram_.size());
      std::iota(img.begin(), img.end(), 0);
      std::swap(img[static_cast<std::size_t>(b[k])], img[static_cast<std::size_t>(b[k + 1])]);
      gens.emplace_back(std::move(img));
    }
  return gens;
}

bool BoxPermutationGroup::contains(const BoxPermutation& p) const {
  if (p.size() != diagram_.size()) return false;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (block_of_[x] != block_of_[static_cast<std::size_t>(p(static_cast<int>(x)))]) return false;
  return true;
}

bool BoxPermutationGroup::is_subgroup_of(const BoxPermutationGroup& g) const {
  if (!(g.diagram_ == diagram_)) return false;
  for (const auto& b : blocks_)
    for (int x : b)
      if (g.block_of(x) != g.block_of(b.front())) return false;
  return true;
}

void BoxPermutationGroup::for_each(const std::function<void(const BoxPermutation&)>& visit, std::uint64_t cap) const {
  if (order() > cap) throw CapExceeded("group of order " + std::to_string(order()) + " exceeds the enumeration cap");
  // Odometer over per-block arrangements.
  std::vector<std::vector<int>> arr = blocks_;
  std::vector<int> img(diagram_.size());
  for (;;) {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t k = 0; k < blocks_[b].size(); ++k)
        img[static_cast<std::size_t>(blocks_[b][k])] = arr[b][k];
    visit(BoxPermutation(img));
    std::size_t b = 0;
    for (; b < arr.size(); ++b) {
      if (std::next_permutation(arr[b].begin(), arr[b].end())) break;
    }
    if (b == arr.size()) break;
  }
}

std::vector<BoxPermutation> BoxPermutationGroup::elements(std::uint64_t cap) const {
  std::vector<BoxPermutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(order(), cap)));
  for_each([&](const BoxPermutation& p) { out.push_back(p); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

BoxPermutationGroup column_stabilizer(const SkewDiagram& e) {
  std::vector<int> labels(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) labels[k] = e.column_of(static_cast<int>(k));
  return BoxPermutationGroup(e, labels);
}

BoxPermutationGroup stabilizer_of_tableau(const BoxPermutationGroup& g, const Tableau& t) {
  if (!(t.shape() == g.diagram())) throw ShapeMismatch("tableau is not on the group's diagram");
  // Blocks of G refined by the entry value; labels packed as block*(max+1)+value.
  const int stride = t.max_entry() + 1;
  std::vector<int> labels(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) labels[k] = g.block_of(static_cast<int>(k)) * stride + t.at(static_cast<int>(k));
  return BoxPermutationGroup(g.diagram(), labels);
}

std::vector<BoxPermutation> left_coset_reps(const BoxPermutationGroup& g, const BoxPermutationGroup& h,
                                            CosetChoice choice) {
  if (!h.is_subgroup_of(g)) throw NotSubgroup("H is not a subgroup of G");
  const std::size_t n = g.diagram().size();

  // A left coset πH is determined by the image sets π(B) of the blocks B of
  // H.  Enumerate, per block of G, the ordered splittings of that block into
  // image sets for the H-blocks it contains.
  using Assignment = std::vector<std::pair<int, std::vector<int>>>;  // (h-block, image set)
  std::vector<std::vector<Assignment>> per_gblock;
  for (const auto& gb : g.blocks()) {
    std::vector<int> hblocks;
    for (int x : gb) {
      int hb = h.block_of(x);
      if (std::find(hblocks.begin(), hblocks.end(), hb) == hblocks.end()) hblocks.push_back(hb);
    }
    std::vector<Assignment> options;
    Assignment cur;
    std::vector<char> used(gb.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (idx == hblocks.size()) {
        options.push_back(cur);
        return;
      }
      const std::size_t need = h.blocks()[static_cast<std::size_t>(hblocks[idx])].size();
      std::vector<int> chosen;
      std::function<void(std::size_t)> pick = [&](std::size_t from) {
        if (chosen.size() == need) {
          std::vector<int> imgs;
          for (int c : chosen) imgs.push_back(gb[static_cast<std::size_t>(c)]);
          cur.emplace_back(hblocks[idx], imgs);
          rec(idx + 1);
          cur.pop_back();
          return;
        }
        for (std::size_t c = from; c < gb.size(); ++c) {
          if (used[c]) continue;
          used[c] = 1;
          chosen.push_back(static_cast<int>(c));
          pick(c + 1);
          chosen.pop_back();
          used[c] = 0;
        }
      };
      pick(0);
    };
    rec(0);
    per_gblock.push_back(std::move(options));
  }

  std::vector<BoxPermutation> reps;
  std::vector<int> img(n, -1);
  std::function<void(std::size_t)> combine = [&](std::size_t b) {
    if (b == per_gblock.size()) {
      reps.emplace_back(img);
      return;
    }
    for (const auto& assignment : per_gblock[b]) {
      for (const auto& [hb, images] : assignment) {
        const auto& members = h.blocks()[static_cast<std::size_t>(hb)];
        for (std::size_t k = 0; k < members.size(); ++k) {
          std::size_t pos = choice == CosetChoice::Minimal ? k : images.size() - 1 - k;
          img[static_cast<std::size_t>(members[k])] = images[pos];
        }
      }
      combine(b + 1);
    }
  };
  combine(0);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// ---------------------------------------------------------------------------
// Triples

Triple::Triple(Tableau p, Tableau q, DiagramMapping a) : P(std::move(p)), Q(std::move(q)), alpha(std::move(a)) {
  if (!(alpha.source() == Q.shape()) || !(alpha.target() == P.shape()))
    throw CompatibilityError("alpha must map the shape of Q onto the shape of P");
  for (std::size_t k = 0; k < Q.size(); ++k)
    if (P.at(alpha.image(static_cast<int>(k))) != Q.at(static_cast<int>(k)))
      throw CompatibilityError("P composed with alpha differs from Q");
}

DiagramMapping restrict_to_piece(const Triple& t, int i) {
  SkewDiagram fi = t.Q.piece(i);
  SkewDiagram ei = t.P.piece(i);
  std::vector<int> img;
  img.reserve(fi.size());
  for (const Box& b : fi.boxes()) img.push_back(*ei.index_of(t.alpha(b)));
  return DiagramMapping(fi, ei, std::move(img));
}

bool is_labelled_triple(const Triple& t) {
  if (!t.P.is_ordered() || !t.Q.is_ordered()) return false;
  const int m = std::max(t.P.max_entry(), t.Q.max_entry());
  for (int i = 1; i <= m; ++i) {
    DiagramMapping ai = restrict_to_piece(t, i);
    if (!is_admissible(ai)) return false;
    Tableau si = pull_back_canonical(ai);
    if (!si.is_semistandard()) return false;
    if (!admissible_representative(si, ai.target())) return false;
  }
  return true;
}

namespace {

BoxPermutationGroup twist_group(const SkewDiagram& on, const SkewDiagram& other, const Tableau& values,
                                const std::function<int(int)>& partner) {
  // Blocks: (column here, column of the partner box there, entry value).
  const int ncols_other = static_cast<int>(other.columns().size()) + 1;
  const int stride = values.max_entry() + 1;
  std::vector<int> labels(on.size());
  for (std::size_t k = 0; k < on.size(); ++k) {
    int c_here = on.column_of(static_cast<int>(k));
    int c_there = other.column_of(partner(static_cast<int>(k)));
    labels[k] = (c_here * ncols_other + c_there) * stride + values.at(static_cast<int>(k));
  }
  return BoxPermutationGroup(on, labels);
}

}  // namespace

BoxPermutationGroup twist_subgroup(const Triple& t) {
  return twist_group(t.source(), t.target(), t.Q, [&](int k) { return t.alpha.image(k); });
}

BoxPermutationGroup twist_subgroup_on_target(const Triple& t) {
  return twist_group(t.target(), t.source(), t.P, [&](int k) { return t.alpha.preimage(k); });
}

Tableau pieced_tableau(const Triple& t) {
  const int m = std::max(t.P.max_entry(), t.Q.max_entry());
  std::vector<int> shift(static_cast<std::size_t>(m) + 2, 0);
  for (int i = 1; i <= m; ++i) shift[static_cast<std::size_t>(i + 1)] = shift[static_cast<std::size_t>(i)] + t.P.piece(i).num_rows();
  std::vector<int> entries(t.Q.size());
  const auto& eb = t.target().boxes();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    int i = t.Q.at(static_cast<int>(k));
    entries[k] = eb[static_cast<std::size_t>(t.alpha.image(static_cast<int>(k)))].row + shift[static_cast<std::size_t>(i)];
  }
  return Tableau(t.source(), std::move(entries));
}

TripleKey triple_key(const Triple& t, int m) {
  TripleKey key;
  for (int i = 0; i < m; ++i) key.p_levels.push_back(t.P.level(m - i));
  key.q_shape = t.Q.shape().outer();
  key.pieced_enumeration = pieced_tableau(t).standard_enumeration();
  std::ostringstream os;
  os << to_string(t.P) << "|" << to_string(t.Q.shape()) << "|" << to_string(t.Q) << "|";
  for (int v : t.alpha.images()) os << v << ",";
  key.fallback = os.str();
  return key;
}

std::strong_ordering compare_triples(const TripleKey& a, const TripleKey& b) {
  if (auto c = a.p_levels <=> b.p_levels; c != 0) return c;
  if (auto c = a.q_shape <=> b.q_shape; c != 0) return c;
  // Smaller enumeration means larger triple.
  if (auto c = b.pieced_enumeration <=> a.pieced_enumeration; c != 0) return c;
  return a.fallback <=> b.fallback;
}

void sort_triples_decreasing(std::vector<Triple>& triples, int m) {
  std::vector<std::pair<TripleKey, std::size_t>> keyed;
  keyed.reserve(triples.size());
  for (std::size_t k = 0; k < triples.size(); ++k) keyed.emplace_back(triple_key(triples[k], m), k);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return compare_triples(x.first, y.first) > 0; });
  std::vector<Triple> sorted;
  sorted.reserve(triples.size());
  for (const auto& [key, k] : keyed) sorted.push_back(std::move(triples[k]));
  triples = std::move(sorted);
}

std::vector<Triple> enumerate_triples(int r, int s, int m, const Partition& mu, const Partition& lambda,
                                      const std::vector<int>& nu, const RepresentativeHook& hook) {
  const int t = std::accumulate(nu.begin(), nu.end(), 0);
  if (static_cast<int>(nu.size()) != m) throw DegreeMismatch("nu must have length m");
  if (std::any_of(nu.begin(), nu.end(), [](int v) { return v < 0; })) throw DegreeMismatch("nu must be non-negative");
  if (mu.size() != t || lambda.size() != t) throw DegreeMismatch("|mu|, |lambda| and |nu| must agree");
  if (mu.length() > r || lambda.length() > s) throw SizeError("need l(mu) <= r and l(lambda) <= s");

  const SkewDiagram f(mu), e(lambda);
  auto ps = enumerate_tableaux(e, TableauKind::Ordered, WeightConstraint{nu});
  auto qs = enumerate_tableaux(f, TableauKind::Ordered, WeightConstraint{nu});

  std::vector<Triple> out;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      std::vector<std::vector<DiagramMapping>> choices;
      bool possible = true;
      for (int i = 1; i <= m && possible; ++i) {
        auto specials = enumerate_special_mappings(q.piece(i), p.piece(i));
        if (hook)
          for (auto& a : specials) a = hook(a);
        possible = !specials.empty();
        choices.push_back(std::move(specials));
      }
      if (!possible) continue;

      std::vector<int> image(f.size(), -1);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == choices.size()) {
          out.emplace_back(p, q, DiagramMapping(f, e, image));
          return;
        }
        for (const auto& ai : choices[i]) {
          for (std::size_t k = 0; k < ai.size(); ++k) {
            int src = *f.index_of(ai.source().boxes()[k]);
            image[static_cast<std::size_t>(src)] = *e.index_of(ai.target().boxes()[static_cast<std::size_t>(ai.image(static_cast<int>(k)))]);
          }
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  sort_triples_decreasing(out, m);
  return out;
}

}  // namespace hwvkit
