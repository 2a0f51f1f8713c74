#pragma once

// Partitions, skew Young diagrams and tableaux.
//
// Boxes are 1-based (row, col) pairs in matrix convention: row 1 is the top
// row, column 1 the leftmost column.  A skew diagram stores its boxes in
// row-major order (top to bottom, left to right within a row); every
// per-box array in the library (tableau entries, permutation images,
// mapping images) is indexed by that order.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hwvkit {

struct Box {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws InvalidPartition on negative or
  // increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // Part i (1-based); zero beyond the length.
  int part(int i) const;

  bool contains(const Partition& inner) const;
  Partition transpose() const;

  // Lexicographic on the parts, shorter prefix first.
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// All partitions of t with at most max_len parts, each at most max_part,
// in decreasing lexicographic order.
std::vector<Partition> partitions_of(int t, int max_len, int max_part);

// All m-tuples of non-negative integers with coordinate sum t, in
// decreasing lexicographic order.
std::vector<std::vector<int>> compositions_of(int t, int m);

class SkewDiagram {
 public:
  SkewDiagram() = default;
  // Throws ContainmentError unless inner is contained in outer.  Trailing
  // rows that carry no boxes are trimmed from both partitions.
  SkewDiagram(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }

  // Columns left to right; each lists box indices top to bottom.  Only
  // columns that contain boxes appear.
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  // Column index (into columns()) of every box.
  int column_of(int box_index) const { return column_of_[box_index]; }

  // Rows 1..num_rows(); empty rows inside the diagram are counted.
  int num_rows() const { return outer_.length(); }
  int num_cols() const { return outer_.part(1); }
  std::vector<int> row_lengths() const;

  // Index into boxes(), or nullopt when the box is not in the diagram.
  std::optional<int> index_of(const Box& b) const;
  bool contains(const Box& b) const { return index_of(b).has_value(); }

  SkewDiagram transpose() const;

  // Two skew diagrams are equal when their box sets are.
  friend bool operator==(const SkewDiagram& a, const SkewDiagram& b) { return a.boxes_ == b.boxes_; }

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> column_of_;
};

SkewDiagram skew(const Partition& outer, const Partition& inner = {});
std::string to_string(const SkewDiagram& e);

class Tableau {
 public:
  Tableau() = default;
  // entries[k] fills shape.boxes()[k]; throws SizeMismatch / EntryRange.
  Tableau(SkewDiagram shape, std::vector<int> entries);

  const SkewDiagram& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int at(int box_index) const { return entries_[box_index]; }
  int at(const Box& b) const;
  std::size_t size() const { return entries_.size(); }
  int max_entry() const;

  // Occurrence counts of 1..max_entry (minimal length).
  std::vector<int> weight() const;
  bool has_weight(std::span<const int> w) const;

  bool is_ordered() const;
  bool is_semistandard() const;
  bool is_standard() const;

  // The entries read row by row, left to right, top to bottom.
  const std::vector<int>& standard_enumeration() const { return entries_; }

  // For an ordered tableau: the diagram inner(shape) ∪ T^{-1}({1..i}),
  // which is a partition.
  Partition level(int i) const;
  // For an ordered tableau: T^{-1}(i) as a skew diagram in place.
  SkewDiagram piece(int i) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  SkewDiagram shape_;
  std::vector<int> entries_;
};

std::string to_string(const Tableau& t);

// Weights compare equal after padding with zeros to a common length.
bool weights_equal(std::span<const int> a, std::span<const int> b);
std::vector<int> trim_weight(std::vector<int> w);

// Box (i, j) ↦ i.
Tableau canonical_tableau(const SkewDiagram& e);
// Box (i, j) of the Young diagram of mu ↦ r - i + 1.  SizeError if l(mu) > r.
Tableau anticanonical_tableau(const Partition& mu, int r);
// 1..t row by row.
Tableau standard_enumeration_tableau(const SkewDiagram& e);

enum class TableauKind { Ordered, Semistandard, ColumnStrict };

struct MaxEntry {
  int value = 0;
};
struct WeightConstraint {
  std::vector<int> weight;
};
using EntryConstraint = std::variant<MaxEntry, WeightConstraint>;

// All tableaux of the given kind, in increasing lexicographic order of the
// standard enumeration.  ColumnStrict means strictly increasing down
// columns with no row condition.
std::vector<Tableau> enumerate_tableaux(const SkewDiagram& e, TableauKind kind,
                                        const EntryConstraint& constraint);

std::size_t count_semistandard(const Partition& shape, int max_entry);

// Skew diagrams D_1..D_m placed anti-diagonally: D_1 top right, D_m bottom
// left, no two pieces sharing a row or a column.  Piece j occupies rows
// row_offset[j]+1 .. row_offset[j]+D_j.num_rows() and is shifted right by
// col_offset[j].
struct CompositeDiagram {
  std::vector<SkewDiagram> pieces;
  std::vector<int> row_offset;
  std::vector<int> col_offset;
  SkewDiagram diagram;

  Box place(std::size_t piece, const Box& b) const {
    return {b.row + row_offset[piece], b.col + col_offset[piece]};
  }
};

CompositeDiagram composite_diagram(std::span<const SkewDiagram> pieces);

}  // namespace hwvkit
