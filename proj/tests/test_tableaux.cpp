#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hwvkit/errors.hpp"
#include "hwvkit/tableaux.hpp"
#include "support/oracles.hpp"

using namespace hwvkit;

TEST_SUITE("tableaux") {

TEST_CASE("partition normalisation and errors") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Partition({}).empty());
  CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidPartition);
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  CHECK(Partition({4, 2, 1}).size() == 7);
  CHECK(Partition({3, 2}).contains(Partition({1})));
  CHECK_FALSE(Partition({1}).contains(Partition({1, 1})));
}

TEST_CASE("partitions_of against the brute-force list") {
  for (int t = 0; t <= 7; ++t)
    for (int len = 1; len <= 4; ++len) {
      auto mine = partitions_of(t, len, t);
      auto ref = oracle::partitions(t, len);
      REQUIRE(mine.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i].parts() == ref[i]);
      for (std::size_t i = 1; i < mine.size(); ++i) CHECK(mine[i - 1] > mine[i]);
    }
  CHECK(partitions_of(0, 3, 0).size() == 1);
  CHECK(partitions_of(5, 2, 3).size() == 1);  // only (3,2)
}

TEST_CASE("compositions_of") {
  auto c = compositions_of(3, 2);
  CHECK(c == std::vector<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(compositions_of(4, 3).size() == 15);
  CHECK(compositions_of(0, 2) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("skew diagrams: boxes, columns, trimming") {
  SkewDiagram e(Partition{3, 2}, Partition{1});
  REQUIRE(e.size() == 4);
  CHECK(e.boxes()[0] == Box{1, 2});
  CHECK(e.boxes()[2] == Box{2, 1});
  CHECK(e.columns().size() == 3);
  CHECK(e.columns()[1] == std::vector<int>{0, 3});
  CHECK(e.index_of({2, 2}) == 3);
  CHECK_FALSE(e.contains({1, 1}));
  CHECK_THROWS_AS(SkewDiagram(Partition{2}, Partition{3}), ContainmentError);
  SkewDiagram full(Partition{2, 2}, Partition{2, 2});
  CHECK(full.empty());
  CHECK(SkewDiagram(Partition{2, 1}).transpose() == SkewDiagram(Partition{2, 1}));
}

TEST_CASE("tableau predicates on the worked example shapes") {
  SkewDiagram e(Partition{3, 2}, Partition{1});
  Tableau t(e, {1, 1, 2, 2});
  CHECK(t.is_semistandard());
  CHECK(t.weight() == std::vector<int>{2, 2});
  Tableau tt(e, {1, 2, 1, 2});
  CHECK(tt.is_semistandard());
  Tableau bad(e, {2, 1, 1, 2});
  CHECK_FALSE(bad.is_ordered());
  CHECK_THROWS_AS(Tableau(e, {1, 2, 3}), SizeMismatch);
  CHECK_THROWS_AS(Tableau(e, {0, 1, 1, 1}), EntryRange);
}

TEST_CASE("enumerate_tableaux matches brute force (property)") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto outer = oracle::random_partition(rng, n, 3);
    auto innerp = oracle::partitions(static_cast<int>(rng() % 3), 2);
    auto inner = innerp[rng() % innerp.size()];
    Partition po(outer), pi(inner);
    if (!po.contains(pi)) continue;
    SkewDiagram e(po, pi);
    const int k = 1 + static_cast<int>(rng() % 3);
    auto all = oracle::all_fillings(e, k);

    auto ref = [&](auto pred) {
      std::vector<std::vector<int>> out;
      for (const auto& f : all)
        if (pred(f)) out.push_back(f);
      std::sort(out.begin(), out.end());
      return out;
    };
    auto got = [&](TableauKind kind) {
      std::vector<std::vector<int>> out;
      for (const auto& t : enumerate_tableaux(e, kind, MaxEntry{k})) out.push_back(t.entries());
      return out;
    };
    CHECK(got(TableauKind::Semistandard) ==
          ref([&](const auto& f) { return oracle::rows_weak(e, f) && oracle::cols_strict(e, f); }));
    CHECK(got(TableauKind::Ordered) ==
          ref([&](const auto& f) { return oracle::rows_weak(e, f) && oracle::cols_weak(e, f); }));
    CHECK(got(TableauKind::ColumnStrict) == ref([&](const auto& f) { return oracle::cols_strict(e, f); }));

    // weight constraint
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    for (std::size_t b = 0; b < e.size(); ++b) ++w[rng() % w.size()];
    std::vector<std::vector<int>> with_w;
    for (const auto& t : enumerate_tableaux(e, TableauKind::Semistandard, WeightConstraint{w}))
      with_w.push_back(t.entries());
    CHECK(with_w == ref([&](const auto& f) {
            return oracle::rows_weak(e, f) && oracle::cols_strict(e, f) && oracle::content(f, k) == w;
          }));
  }
}

TEST_CASE("count_semistandard against the hook-content formula") {
  for (int t = 0; t <= 6; ++t)
    for (const auto& p : oracle::partitions(t))
      for (int n = 1; n <= 4; ++n) CHECK(count_semistandard(Partition(p), n) == oracle::count_ssyt(p, n));
}

TEST_CASE("canonical and anticanonical tableaux") {
  auto s = canonical_tableau(SkewDiagram(Partition{3, 2}, Partition{1}));
  CHECK(s.entries() == std::vector<int>{1, 1, 2, 2});
  auto a = anticanonical_tableau(Partition{2, 2}, 3);
  CHECK(a.entries() == std::vector<int>{3, 3, 2, 2});
  CHECK_THROWS_AS(anticanonical_tableau(Partition{1, 1, 1}, 2), SizeError);
  auto te = standard_enumeration_tableau(SkewDiagram(Partition{2, 1}));
  CHECK(te.entries() == std::vector<int>{1, 2, 3});
  CHECK(te.is_standard());
}

TEST_CASE("levels and pieces of an ordered tableau") {
  // P from the filtration example: [[1,2,2],[2]]
  Tableau p(SkewDiagram(Partition{3, 1}), {1, 2, 2, 2});
  CHECK(p.level(1) == Partition{1});
  CHECK(p.level(2) == Partition{3, 1});
  auto piece = p.piece(2);
  CHECK(piece.size() == 3);
  CHECK(piece == SkewDiagram(Partition{3, 1}, Partition{1}));
  // levels are partitions for every ordered tableau (property)
  for (const auto& t : enumerate_tableaux(SkewDiagram(Partition{3, 2, 1}), TableauKind::Ordered, MaxEntry{3}))
    for (int i = 0; i <= 3; ++i) {
      auto lv = t.level(i);
      CHECK(Partition{3, 2, 1}.contains(lv));
    }
}

TEST_CASE("composite diagram keeps pieces in disjoint rows and columns") {
  std::vector<SkewDiagram> pieces = {SkewDiagram(Partition{1}), SkewDiagram(Partition{3, 1}, Partition{1})};
  auto c = composite_diagram(pieces);
  CHECK(c.diagram.size() == 4);
  std::set<int> rows0, rows1, cols0, cols1;
  for (const auto& b : pieces[0].boxes()) {
    auto pb = c.place(0, b);
    CHECK(c.diagram.contains(pb));
    rows0.insert(pb.row);
    cols0.insert(pb.col);
  }
  for (const auto& b : pieces[1].boxes()) {
    auto pb = c.place(1, b);
    CHECK(c.diagram.contains(pb));
    rows1.insert(pb.row);
    cols1.insert(pb.col);
  }
  for (int r : rows0) CHECK(rows1.count(r) == 0);
  for (int col : cols0) CHECK(cols1.count(col) == 0);
  // D_1 top right
  CHECK(*rows0.begin() < *rows1.begin());
  CHECK(*cols0.begin() > *cols1.rbegin());
}

}  // TEST_SUITE
