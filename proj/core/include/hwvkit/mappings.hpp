#pragma once

// Diagram mappings, column stabilisers and the labelled triples (P, Q, α)
// that index twisted bideterminants.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hwvkit/tableaux.hpp"

namespace hwvkit {

// (p,q) ≤ (r,s)  iff  p ≤ r and q ≤ s.
bool leq_order(const Box& a, const Box& b);
// (p,q) ⪯ (r,s)  iff  p < r, or p = r and q ≥ s.  A linear order.
bool prec_order(const Box& a, const Box& b);

// A bijection from the boxes of `source` onto the boxes of `target`.
class DiagramMapping {
 public:
  DiagramMapping() = default;
  // image[k] is the index in target.boxes() of the image of source box k.
  DiagramMapping(SkewDiagram source, SkewDiagram target, std::vector<int> image);

  static DiagramMapping identity(const SkewDiagram& e);

  const SkewDiagram& source() const { return source_; }
  const SkewDiagram& target() const { return target_; }
  const std::vector<int>& images() const { return image_; }
  int image(int source_index) const { return image_[static_cast<std::size_t>(source_index)]; }
  int preimage(int target_index) const { return preimage_[static_cast<std::size_t>(target_index)]; }
  Box operator()(const Box& b) const;
  std::size_t size() const { return image_.size(); }

  DiagramMapping inverse() const;

  friend bool operator==(const DiagramMapping& a, const DiagramMapping& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.image_ == b.image_;
  }

 private:
  SkewDiagram source_;
  SkewDiagram target_;
  std::vector<int> image_;
  std::vector<int> preimage_;
};

std::string to_string(const DiagramMapping& a);

bool is_admissible(const DiagramMapping& alpha);
bool is_special(const DiagramMapping& alpha);
// S_E ∘ α, a tableau on the source.
Tableau pull_back_canonical(const DiagramMapping& alpha);

// All special α: F → E, in the order of a depth-first search that assigns
// source boxes in row-major order to target boxes in row-major order.
// SizeMismatch when |F| ≠ |E|.
std::vector<DiagramMapping> enumerate_special_mappings(const SkewDiagram& source, const SkewDiagram& target);

// The unique special representative α: shape(S) → E with S_E ∘ α = S, or
// nullopt when S is not E-special.  WeightMismatch unless the weight of S is
// the row-length tuple of E.
std::optional<DiagramMapping> admissible_representative(const Tableau& s, const SkewDiagram& target);

// Every admissible α: shape(S) → E with S_E ∘ α = S, in search order.
std::vector<DiagramMapping> admissible_representatives(const Tableau& s, const SkewDiagram& target);

// ---------------------------------------------------------------------------
// Box permutations and Young-type subgroups of Sym(E).

class BoxPermutation {
 public:
  BoxPermutation() = default;
  explicit BoxPermutation(std::vector<int> image);
  static BoxPermutation identity(std::size_t n);

  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return image_; }
  std::size_t size() const { return image_.size(); }
  int sign() const;
  bool is_identity() const;
  BoxPermutation inverse() const;
  // (*this ∘ other)(x) = (*this)(other(x)).
  BoxPermutation compose(const BoxPermutation& other) const;

  // Lexicographic on images.
  friend auto operator<=>(const BoxPermutation&, const BoxPermutation&) = default;

 private:
  std::vector<int> image_;
};

// 1-based cycle notation on box numbers, e.g. "(1,3)(2,4)"; "()" for the identity.
std::string to_cycle_string(const BoxPermutation& p);

// The group of all permutations of the boxes of a diagram that map every
// block of a fixed set partition into itself.  Column stabilisers and all
// the stabilisers and intersections built from them are of this form.
class BoxPermutationGroup {
 public:
  static constexpr std::uint64_t kDefaultCap = 10'000'000;

  BoxPermutationGroup() = default;
  // block_of[k] is an arbitrary label of the block of box k.
  BoxPermutationGroup(SkewDiagram diagram, const std::vector<int>& block_of);

  const SkewDiagram& diagram() const { return diagram_; }
  // Blocks sorted by smallest element; each block sorted ascending.
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int x) const { return block_of_[static_cast<std::size_t>(x)]; }

  // ∏ |block|!.  CapExceeded if it does not fit in 64 bits.
  std::uint64_t order() const;
  // Adjacent transpositions inside each block.
  std::vector<BoxPermutation> generators() const;
  bool contains(const BoxPermutation& p) const;
  bool is_subgroup_of(const BoxPermutationGroup& g) const;

  // Calls visit(p) for every element; order unspecified.  CapExceeded when
  // order() > cap.
  void for_each(const std::function<void(const BoxPermutation&)>& visit, std::uint64_t cap = kDefaultCap) const;
  // All elements, sorted lexicographically.
  std::vector<BoxPermutation> elements(std::uint64_t cap = kDefaultCap) const;

 private:
  SkewDiagram diagram_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

BoxPermutationGroup column_stabilizer(const SkewDiagram& e);
// {π ∈ G | T ∘ π = T}.  ShapeMismatch when T is not on G's diagram.
BoxPermutationGroup stabilizer_of_tableau(const BoxPermutationGroup& g, const Tableau& t);

enum class CosetChoice { Minimal, Maximal };

// One representative per left coset πH of H in G, sorted lexicographically.
// With Minimal each representative is the lexicographically least element
// of its coset; Maximal picks the greatest.  NotSubgroup unless H ≤ G.
std::vector<BoxPermutation> left_coset_reps(const BoxPermutationGroup& g, const BoxPermutationGroup& h,
                                            CosetChoice choice = CosetChoice::Minimal);

// ---------------------------------------------------------------------------
// Triples

// P on E, Q on F and α: F → E with P ∘ α = Q.
struct Triple {
  Tableau P;
  Tableau Q;
  DiagramMapping alpha;

  Triple() = default;
  // CompatibilityError unless α goes from shape(Q) to shape(P) and P ∘ α = Q.
  Triple(Tableau p, Tableau q, DiagramMapping a);

  const SkewDiagram& source() const { return Q.shape(); }
  const SkewDiagram& target() const { return P.shape(); }

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.P == b.P && a.Q == b.Q && a.alpha == b.alpha;
  }
};

// The restriction α_i: Q^{-1}(i) → P^{-1}(i) between the pieces in place.
// Requires ordered P and Q.
DiagramMapping restrict_to_piece(const Triple& t, int i);

// True when P, Q are ordered and every α_i is admissible with
// S_{P^{-1}(i)} ∘ α_i special semistandard.
bool is_labelled_triple(const Triple& t);

// C_F(Q) ∩ α^{-1} C_E(P) α ≤ C_F, a group on the source.
BoxPermutationGroup twist_subgroup(const Triple& t);
// α C_F(Q) α^{-1} ∩ C_E(P) ≤ C_E, the same group transported to the target.
BoxPermutationGroup twist_subgroup_on_target(const Triple& t);

// S_{Q,α}: the pieced tableau on the source whose i-th piece is
// S_{P^{-1}(i)} ∘ α_i shifted by the number of rows of the earlier pieces.
Tableau pieced_tableau(const Triple& t);

// Ordering key of a triple.  Triples are compared first by the tuple
// (P^{-1}({1..m}), P^{-1}({1..m-1}), ..., P^{-1}({1})) of partitions, then by
// the shape of Q (lexicographically), then a lexicographically smaller
// standard enumeration of S_{Q,α} makes the triple larger.  The shape
// comparison only matters when μ varies, as in the filtration: pieced
// tableaux of different shapes can share their enumeration.
struct TripleKey {
  std::vector<Partition> p_levels;
  Partition q_shape;
  std::vector<int> pieced_enumeration;
  std::string fallback;
};

TripleKey triple_key(const Triple& t, int m);
// Strong order compatible with the key, falling back to a serialisation when
// both keys tie.
std::strong_ordering compare_triples(const TripleKey& a, const TripleKey& b);

// Replaces a special piece representative by another admissible one for the
// same tableau.  Used to check that nothing depends on that choice.
using RepresentativeHook = std::function<DiagramMapping(const DiagramMapping& special_piece)>;

// All labelled triples for (mu, lambda, nu) in decreasing order.
// DegreeMismatch unless |mu| = |lambda| = |nu| and nu has length m;
// SizeError unless l(mu) ≤ r and l(lambda) ≤ s.
std::vector<Triple> enumerate_triples(int r, int s, int m, const Partition& mu, const Partition& lambda,
                                      const std::vector<int>& nu, const RepresentativeHook& hook = {});

// Sorts triples (possibly with different shapes) into decreasing order.
void sort_triples_decreasing(std::vector<Triple>& triples, int m);

}  // namespace hwvkit
