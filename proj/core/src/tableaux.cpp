#include "hwvkit/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hwvkit/errors.hpp"

namespace hwvkit {

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 1; c <= part(1); ++c) {
    int len = 0;
    while (len < length() && parts_[static_cast<std::size_t>(len)] >= c) ++len;
    t.push_back(len);
  }
  return Partition(std::move(t));
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p.part(i));
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int t, int max_len, int max_part) {
  std::vector<Partition> out;
  if (t < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(t, max_part);
  return out;
}

std::vector<std::vector<int>> compositions_of(int t, int m) {
  std::vector<std::vector<int>> out;
  if (t < 0 || m < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (static_cast<int>(cur.size()) == m - 1) {
      cur.push_back(remaining);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur.push_back(v);
      rec(remaining - v);
      cur.pop_back();
    }
  };
  if (m == 0) {
    if (t == 0) out.emplace_back();
    return out;
  }
  rec(t);
  return out;
}

// ---------------------------------------------------------------------------
// SkewDiagram

SkewDiagram::SkewDiagram(Partition outer, Partition inner) {
  if (!outer.contains(inner))
    throw ContainmentError("inner partition " + to_string(inner) + " is not contained in " + to_string(outer));
  std::vector<int> o = outer.parts();
  std::vector<int> in = inner.parts();
  in.resize(o.size(), 0);
  while (!o.empty() && o.back() == in.back()) {
    o.pop_back();
    in.pop_back();
  }
  outer_ = Partition(o);
  inner_ = Partition(in);

  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) boxes_.push_back({i, j});

  column_of_.assign(boxes_.size(), -1);
  for (int c = 1; c <= num_cols(); ++c) {
    std::vector<int> col;
    for (std::size_t k = 0; k < boxes_.size(); ++k)
      if (boxes_[k].col == c) col.push_back(static_cast<int>(k));
    if (col.empty()) continue;
    for (int k : col) column_of_[static_cast<std::size_t>(k)] = static_cast<int>(columns_.size());
    columns_.push_back(std::move(col));
  }
}

std::vector<int> SkewDiagram::row_lengths() const {
  std::vector<int> out;
  for (int i = 1; i <= num_rows(); ++i) out.push_back(outer_.part(i) - inner_.part(i));
  return out;
}

std::optional<int> SkewDiagram::index_of(const Box& b) const {
  auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
  if (it == boxes_.end() || *it != b) return std::nullopt;
  return static_cast<int>(it - boxes_.begin());
}

SkewDiagram SkewDiagram::transpose() const { return SkewDiagram(outer_.transpose(), inner_.transpose()); }

SkewDiagram skew(const Partition& outer, const Partition& inner) { return SkewDiagram(outer, inner); }

std::string to_string(const SkewDiagram& e) {
  if (e.inner().empty()) return to_string(e.outer());
  return to_string(e.outer()) + "/" + to_string(e.inner());
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(SkewDiagram shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_.size()) throw SizeMismatch("tableau entries do not match the number of boxes");
  for (int v : entries_)
    if (v < 1) throw EntryRange("tableau entries must be positive integers");
}

int Tableau::at(const Box& b) const {
  auto k = shape_.index_of(b);
  if (!k) throw IndexError("box " + to_string(b) + " is not in the tableau's shape");
  return entries_[static_cast<std::size_t>(*k)];
}

int Tableau::max_entry() const { return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end()); }

std::vector<int> Tableau::weight() const {
  std::vector<int> w(static_cast<std::size_t>(max_entry()), 0);
  for (int v : entries_) ++w[static_cast<std::size_t>(v - 1)];
  return w;
}

bool Tableau::has_weight(std::span<const int> w) const {
  auto mine = weight();
  return weights_equal(mine, w);
}

namespace {

// Checks the row and column monotonicity conditions shared by the
// classification predicates.
bool monotone(const Tableau& t, bool strict_rows, bool strict_cols) {
  const auto& boxes = t.shape().boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box& b = boxes[k];
    if (auto left = t.shape().index_of({b.row, b.col - 1})) {
      int l = t.at(*left);
      if (strict_rows ? l >= t.at(static_cast<int>(k)) : l > t.at(static_cast<int>(k))) return false;
    }
    if (auto up = t.shape().index_of({b.row - 1, b.col})) {
      int u = t.at(*up);
      if (strict_cols ? u >= t.at(static_cast<int>(k)) : u > t.at(static_cast<int>(k))) return false;
    }
  }
  return true;
}

}  // namespace

bool Tableau::is_ordered() const { return monotone(*this, false, false); }
bool Tableau::is_semistandard() const { return monotone(*this, false, true); }

bool Tableau::is_standard() const {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k + 1)) return false;
  return monotone(*this, true, true);
}

Partition Tableau::level(int i) const {
  if (!is_ordered()) throw ShapeMismatch("level sets are only defined for ordered tableaux");
  std::vector<int> rows;
  for (int row = 1; row <= shape_.num_rows(); ++row) {
    int len = shape_.inner().part(row);
    for (int col = shape_.inner().part(row) + 1; col <= shape_.outer().part(row); ++col)
      if (at(Box{row, col}) <= i) ++len;
    rows.push_back(len);
  }
  return Partition(rows);
}

SkewDiagram Tableau::piece(int i) const { return SkewDiagram(level(i), level(i - 1)); }

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  const auto& e = t.shape();
  for (int row = 1; row <= e.num_rows(); ++row) {
    if (row > 1) os << "/";
    for (int col = 1; col <= e.outer().part(row); ++col) {
      if (col > 1) os << " ";
      if (col <= e.inner().part(row))
        os << ".";
      else
        os << t.at(Box{row, col});
    }
  }
  return os.str();
}

bool weights_equal(std::span<const int> a, std::span<const int> b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return false;
  }
  return true;
}

std::vector<int> trim_weight(std::vector<int> w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
  return w;
}

Tableau canonical_tableau(const SkewDiagram& e) {
  std::vector<int> entries;
  for (const Box& b : e.boxes()) entries.push_back(b.row);
  return Tableau(e, std::move(entries));
}

Tableau anticanonical_tableau(const Partition& mu, int r) {
  if (mu.length() > r) throw SizeError("anti-canonical tableau needs l(mu) <= r");
  SkewDiagram e(mu);
  std::vector<int> entries;
  for (const Box& b : e.boxes()) entries.push_back(r - b.row + 1);
  return Tableau(e, std::move(entries));
}

Tableau standard_enumeration_tableau(const SkewDiagram& e) {
  std::vector<int> entries(e.size());
  std::iota(entries.begin(), entries.end(), 1);
  return Tableau(e, std::move(entries));
}

namespace {

// Depth-first fill in row-major order with increasing candidate values, so
// visits happen in increasing lexicographic order of the enumeration.
template <class Visit>
void fill_tableaux(const SkewDiagram& e, TableauKind kind, const EntryConstraint& constraint, Visit&& visit) {
  const auto& boxes = e.boxes();
  std::vector<int> entries(boxes.size(), 0);
  std::vector<int> left(boxes.size(), -1), up(boxes.size(), -1);
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (auto l = e.index_of({boxes[k].row, boxes[k].col - 1})) left[k] = *l;
    if (auto u = e.index_of({boxes[k].row - 1, boxes[k].col})) up[k] = *u;
  }

  int hi = 0;
  std::vector<int> remaining;
  const bool by_weight = std::holds_alternative<WeightConstraint>(constraint);
  if (by_weight) {
    remaining = std::get<WeightConstraint>(constraint).weight;
    if (std::accumulate(remaining.begin(), remaining.end(), 0) != static_cast<int>(boxes.size())) return;
    hi = static_cast<int>(remaining.size());
  } else {
    hi = std::get<MaxEntry>(constraint).value;
  }

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      visit(entries);
      return;
    }
    int lo = 1;
    if (kind != TableauKind::ColumnStrict && left[k] >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(left[k])]);
    if (up[k] >= 0) {
      int above = entries[static_cast<std::size_t>(up[k])];
      lo = std::max(lo, kind == TableauKind::Ordered ? above : above + 1);
    }
    for (int v = lo; v <= hi; ++v) {
      if (by_weight) {
        if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(v - 1)];
      }
      entries[k] = v;
      rec(k + 1);
      if (by_weight) ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const SkewDiagram& e, TableauKind kind, const EntryConstraint& constraint) {
  std::vector<Tableau> out;
  fill_tableaux(e, kind, constraint, [&](const std::vector<int>& entries) { out.emplace_back(e, entries); });
  return out;
}

std::size_t count_semistandard(const Partition& shape, int max_entry) {
  std::size_t n = 0;
  fill_tableaux(SkewDiagram(shape), TableauKind::Semistandard, MaxEntry{max_entry},
                [&](const std::vector<int>&) { ++n; });
  return n;
}

// ---------------------------------------------------------------------------
// CompositeDiagram

CompositeDiagram composite_diagram(std::span<const SkewDiagram> pieces) {
  CompositeDiagram out;
  out.pieces.assign(pieces.begin(), pieces.end());
  const std::size_t m = pieces.size();
  out.row_offset.assign(m, 0);
  out.col_offset.assign(m, 0);
  for (std::size_t j = 1; j < m; ++j) out.row_offset[j] = out.row_offset[j - 1] + pieces[j - 1].num_rows();
  for (std::size_t j = m; j-- > 1;) out.col_offset[j - 1] = out.col_offset[j] + pieces[j].num_cols();

  std::vector<int> outer, inner;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& d = pieces[j];
    for (int i = 1; i <= d.num_rows(); ++i) {
      outer.push_back(out.col_offset[j] + d.outer().part(i));
      inner.push_back(out.col_offset[j] + d.inner().part(i));
    }
  }
  out.diagram = SkewDiagram(Partition(outer), Partition(inner));
  return out;
}

}  // namespace hwvkit
