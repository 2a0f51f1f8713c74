#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hwvkit/errors.hpp"
#include "hwvkit/bidet.hpp"
#include "hwvkit/mappings.hpp"
#include "support/oracles.hpp"

using namespace hwvkit;

namespace {

std::vector<std::vector<int>> sorted_images(const std::vector<DiagramMapping>& ms) {
  std::vector<std::vector<int>> out;
  for (const auto& a : ms) out.push_back(a.images());
  std::sort(out.begin(), out.end());
  return out;
}

// small skew shapes, inner part included
std::vector<SkewDiagram> shapes_of_size(int n) {
  std::vector<SkewDiagram> out;
  for (int k = 0; k <= 2; ++k)
    for (const auto& inner : oracle::partitions(k, 2))
      for (const auto& outer : oracle::partitions(n + k, 3)) {
        Partition po(outer), pi(inner);
        if (!po.contains(pi)) continue;
        SkewDiagram e(po, pi);
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
      }
  return out;
}

}  // namespace

TEST_SUITE("mappings") {

TEST_CASE("box orders") {
  CHECK(leq_order({1, 1}, {2, 3}));
  CHECK_FALSE(leq_order({1, 3}, {2, 1}));
  CHECK(prec_order({1, 3}, {1, 1}));
  CHECK(prec_order({1, 1}, {2, 5}));
  CHECK_FALSE(prec_order({1, 1}, {1, 2}));
}

TEST_CASE("first worked example: alpha_1, alpha_2, alpha_3") {
  SkewDiagram f(Partition{2, 2});
  SkewDiagram e(Partition{3, 2}, Partition{1});
  // E row-major: (1,2)=0 (1,3)=1 (2,1)=2 (2,2)=3
  DiagramMapping a1(f, e, {0, 1, 2, 3});
  DiagramMapping a2(f, e, {0, 1, 3, 2});
  DiagramMapping a3(f, e, {1, 0, 3, 2});
  CHECK_FALSE(is_admissible(a1));
  CHECK(is_admissible(a2));
  CHECK_FALSE(is_special(a2));
  CHECK(is_admissible(a3));
  CHECK(is_special(a3));
  CHECK(is_special(a3.inverse()));

  Tableau s(f, {1, 1, 2, 2});
  CHECK(pull_back_canonical(a1) == s);
  CHECK(pull_back_canonical(a2) == s);
  CHECK(pull_back_canonical(a3) == s);

  auto rep = admissible_representative(s, e);
  REQUIRE(rep.has_value());
  CHECK(*rep == a3);
  auto reps = admissible_representatives(s, e);
  CHECK(std::find(reps.begin(), reps.end(), a2) != reps.end());
  CHECK(std::find(reps.begin(), reps.end(), a3) != reps.end());
  CHECK(std::find(reps.begin(), reps.end(), a1) == reps.end());

  // T = S_F ∘ α3^{-1} is F-special with representative α3^{-1}; T~ is not
  Tableau t(e, {1, 1, 2, 2});
  CHECK(pull_back_canonical(a3.inverse()) == t);
  auto trep = admissible_representative(t, f);
  REQUIRE(trep.has_value());
  CHECK(*trep == a3.inverse());
  auto ssyt = enumerate_tableaux(e, TableauKind::Semistandard, WeightConstraint{{2, 2}});
  CHECK(ssyt.size() == 2);
  Tableau tt(e, {1, 2, 1, 2});
  CHECK_FALSE(admissible_representative(tt, f).has_value());
  CHECK(admissible_representatives(tt, f).empty());
}

TEST_CASE("second worked example: the 2-pieces") {
  SkewDiagram qf(Partition{4, 4, 3}, Partition{1});
  SkewDiagram pe(Partition{4, 3, 3});
  Tableau Q(qf, {1, 1, 2, 1, 1, 2, 2, 2, 2, 2});
  Tableau P(pe, {1, 1, 2, 2, 1, 1, 2, 2, 2, 2});
  CHECK(Q.is_ordered());
  CHECK(P.is_ordered());
  CHECK(Q.weight() == std::vector<int>{4, 6});
  CHECK(P.weight() == std::vector<int>{4, 6});

  auto q2 = Q.piece(2);
  auto p2 = P.piece(2);
  CHECK(q2 == SkewDiagram(Partition{4, 4, 3}, Partition{3, 2}));
  CHECK(p2 == SkewDiagram(Partition{4, 3, 3}, Partition{2, 2}));
  CHECK(canonical_tableau(p2).entries() == std::vector<int>{1, 1, 2, 3, 3, 3});

  auto special = enumerate_special_mappings(q2, p2);
  REQUIRE(special.size() == 2);
  std::set<std::vector<int>> pulled;
  for (const auto& a : special) pulled.insert(pull_back_canonical(a).entries());
  // q2 row-major: (1,4) (2,3) (2,4) (3,1) (3,2) (3,3)
  CHECK(pulled.count({1, 1, 2, 3, 3, 3}) == 1);
  CHECK(pulled.count({1, 2, 3, 1, 3, 3}) == 1);

  auto q1 = Q.piece(1);
  auto p1 = P.piece(1);
  CHECK(q1 == SkewDiagram(Partition{3, 2}, Partition{1}));
  CHECK(p1 == SkewDiagram(Partition{2, 2}));
  CHECK(enumerate_special_mappings(q1, p1).size() == 1);
}

TEST_CASE("predicates agree with the definitions on every bijection (property)") {
  for (int n = 1; n <= 4; ++n) {
    auto shapes = shapes_of_size(n);
    for (const auto& f : shapes)
      for (const auto& e : shapes) {
        std::vector<std::vector<int>> special_ref;
        for (const auto& p : oracle::all_bijections(static_cast<std::size_t>(n))) {
          DiagramMapping a(f, e, p);
          const bool adm = oracle::is_admissible(f, e, p);
          const bool sp = oracle::is_special(f, e, p);
          CHECK(is_admissible(a) == adm);
          CHECK(is_special(a) == sp);
          CHECK(is_special(a.inverse()) == sp);
          if (sp) {
            CHECK(adm);
            CHECK(pull_back_canonical(a).is_semistandard());
            special_ref.push_back(p);
          }
        }
        CHECK(sorted_images(enumerate_special_mappings(f, e)) == special_ref);
      }
  }
}

TEST_CASE("special SSYT have a unique special representative (property)") {
  for (int n = 2; n <= 5; ++n) {
    auto shapes = shapes_of_size(n);
    for (const auto& f : shapes)
      for (const auto& e : shapes) {
        auto rows = e.row_lengths();
        auto bij = oracle::all_bijections(static_cast<std::size_t>(n));
        for (const auto& s : enumerate_tableaux(f, TableauKind::Semistandard, WeightConstraint{rows})) {
          std::vector<std::vector<int>> specials, admissibles;
          for (const auto& p : bij) {
            DiagramMapping a(f, e, p);
            if (pull_back_canonical(a) != s) continue;
            if (oracle::is_admissible(f, e, p)) admissibles.push_back(p);
            if (oracle::is_special(f, e, p)) specials.push_back(p);
          }
          CHECK(specials.size() <= 1);
          auto rep = admissible_representative(s, e);
          CHECK(rep.has_value() == !specials.empty());
          if (rep && !specials.empty()) CHECK(rep->images() == specials.front());
          if (!specials.empty()) CHECK(sorted_images(admissible_representatives(s, e)) == admissibles);
        }
      }
  }
  Tableau bad(SkewDiagram(Partition{2}), {1, 1});
  CHECK_THROWS_AS(admissible_representative(bad, SkewDiagram(Partition{1, 1})), WeightMismatch);
  CHECK_THROWS_AS(enumerate_special_mappings(SkewDiagram(Partition{2}), SkewDiagram(Partition{1})), SizeMismatch);
}

TEST_CASE("number of special mappings is a Littlewood-Richardson coefficient") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : oracle::partitions(n, 3))
      for (int k = 0; k <= 2; ++k)
        for (const auto& kappa : oracle::partitions(k, 2))
          for (const auto& lambda : oracle::partitions(n + k, 3)) {
            Partition pl(lambda), pk(kappa);
            if (!pl.contains(pk)) continue;
            SkewDiagram e(pl, pk);
            const auto c = oracle::lr(lambda, kappa, mu);
            CHECK(enumerate_special_mappings(SkewDiagram(Partition(mu)), e).size() == c);
            CHECK(enumerate_special_mappings(e, SkewDiagram(Partition(mu))).size() == c);
          }
}

TEST_CASE("box permutations") {
  BoxPermutation p({1, 0, 3, 2});
  CHECK(p.sign() == 1);
  CHECK(to_cycle_string(p) == "(1,2)(3,4)");
  CHECK(to_cycle_string(BoxPermutation::identity(3)) == "()");
  CHECK(p.compose(p).is_identity());
  BoxPermutation c({1, 2, 0});
  CHECK(c.compose(c.inverse()).is_identity());
  CHECK(c.compose(c).images() == oracle::compose(c.images(), c.images()));
  CHECK_THROWS_AS(BoxPermutation({0, 0}), CompatibilityError);
}

TEST_CASE("column stabilisers and cosets against brute force (property)") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    SkewDiagram e(Partition(oracle::random_partition(rng, n, 3)));
    auto g = column_stabilizer(e);
    auto ref = oracle::column_group(e);
    std::sort(ref.begin(), ref.end());
    std::vector<std::vector<int>> mine;
    for (const auto& p : g.elements()) mine.push_back(p.images());
    CHECK(mine == ref);
    CHECK(g.order() == ref.size());

    // H = stabiliser of a random filling
    std::vector<int> entries;
    for (std::size_t k = 0; k < e.size(); ++k) entries.push_back(1 + static_cast<int>(rng() % 2));
    Tableau t(e, entries);
    auto h = stabilizer_of_tableau(g, t);
    CHECK(h.is_subgroup_of(g));
    std::size_t href = 0;
    for (const auto& p : ref) {
      bool fix = true;
      for (std::size_t k = 0; k < p.size(); ++k) fix = fix && entries[static_cast<std::size_t>(p[k])] == entries[k];
      if (fix) ++href;
      CHECK(h.contains(BoxPermutation(p)) == fix);
    }
    CHECK(h.order() == href);

    for (auto choice : {CosetChoice::Minimal, CosetChoice::Maximal}) {
      auto reps = left_coset_reps(g, h, choice);
      CHECK(reps.size() * href == ref.size());
      CHECK(std::is_sorted(reps.begin(), reps.end()));
      // distinct cosets covering G; each rep extremal in its coset
      std::set<std::vector<int>> covered;
      auto helts = h.elements();
      for (const auto& x : reps) {
        std::vector<int> lo = x.images(), hi = x.images();
        for (const auto& y : helts) {
          auto xy = x.compose(y).images();
          CHECK(covered.insert(xy).second);
          lo = std::min(lo, xy);
          hi = std::max(hi, xy);
        }
        CHECK(x.images() == (choice == CosetChoice::Minimal ? lo : hi));
      }
      CHECK(covered.size() == ref.size());
    }
  }
  auto g = column_stabilizer(SkewDiagram(Partition{2, 2}));
  auto big = column_stabilizer(SkewDiagram(Partition{1, 1, 1, 1}));
  CHECK_THROWS_AS(left_coset_reps(g, big), NotSubgroup);
}

TEST_CASE("the two-matrix example: subgroup and coset representatives") {
  SkewDiagram f(Partition{2, 2});
  SkewDiagram e(Partition{2, 1, 1});
  Tableau Q(f, {1, 2, 2, 2});
  Tableau P(e, {1, 2, 2, 2});
  // E numbering (1,1)=1 (2,1)=2 (1,2)=3 (3,1)=4; row-major (1,1)(1,2)(2,1)(3,1)
  DiagramMapping alpha(f, e, {0, 2, 1, 3});
  Triple t(P, Q, alpha);
  CHECK(is_labelled_triple(t));
  auto c = twist_subgroup(t);
  CHECK(c.order() == 2);
  CHECK(c.contains(BoxPermutation({0, 3, 2, 1})));
  CHECK(twist_order(t) == 2);
  CHECK(oracle::twist_order(P, Q, alpha.images()) == 2);
  auto reps = left_coset_reps(column_stabilizer(f), c);
  REQUIRE(reps.size() == 2);
  CHECK(to_cycle_string(reps[0]) == "()");
  CHECK(to_cycle_string(reps[1]) == "(1,3)");
  CHECK(twist_subgroup_on_target(t).order() == 2);

  auto a1 = restrict_to_piece(t, 1);
  auto a2 = restrict_to_piece(t, 2);
  CHECK(a1.size() == 1);
  CHECK(a2.size() == 3);
  CHECK(is_special(a1));
  CHECK(is_special(a2));
  CHECK_THROWS_AS(Triple(P, Q, DiagramMapping(f, e, {1, 0, 2, 3})), CompatibilityError);
}

TEST_CASE("enumerated triples: labelled, decreasing, counted by Cauchy (property)") {
  for (int m = 1; m <= 2; ++m)
    for (int t = 1; t <= 4; ++t)
      for (const auto& nu : compositions_of(t, m))
        for (const auto& mu : partitions_of(t, 3, t))
          for (const auto& lambda : partitions_of(t, 3, t)) {
            auto triples = enumerate_triples(3, 3, m, mu, lambda, nu);
            CHECK(triples.size() == oracle::cauchy_multiplicity(mu.parts(), lambda.parts(), nu));
            std::vector<TripleKey> keys;
            for (const auto& tr : triples) {
              CHECK(is_labelled_triple(tr));
              CHECK(tr.P.shape() == SkewDiagram(lambda));
              CHECK(tr.Q.shape() == SkewDiagram(mu));
              CHECK(twist_order(tr) == oracle::twist_order(tr.P, tr.Q, tr.alpha.images()));
              CHECK(twist_subgroup(tr).order() == twist_subgroup_on_target(tr).order());
              keys.push_back(triple_key(tr, m));
            }
            for (std::size_t i = 1; i < keys.size(); ++i)
              CHECK(compare_triples(keys[i - 1], keys[i]) == std::strong_ordering::greater);
          }
  CHECK_THROWS_AS(enumerate_triples(2, 2, 1, Partition{2}, Partition{1, 1, 1}, {3}), DegreeMismatch);
  CHECK_THROWS_AS(enumerate_triples(1, 2, 1, Partition{1, 1}, Partition{2}, {2}), SizeError);
}

TEST_CASE("pieced tableau of the two-matrix triple") {
  SkewDiagram f(Partition{2, 2});
  SkewDiagram e(Partition{2, 1, 1});
  Triple t(Tableau(e, {1, 2, 2, 2}), Tableau(f, {1, 2, 2, 2}), DiagramMapping(f, e, {0, 2, 1, 3}));
  auto s = pieced_tableau(t);
  CHECK(s.shape() == f);
  // piece 1 has one row; piece 2 pulls back rows 1..3 of P^{-1}(2), shifted by 1
  CHECK(s.entries() == std::vector<int>{1, 3, 2, 4});
}

}  // TEST_SUITE
