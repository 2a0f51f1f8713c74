// Acceptance run: one PASS/FAIL line per criterion.  Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hwvkit/conj.hpp"
#include "hwvkit/errors.hpp"
#include "hwvkit_cli/cli.hpp"
#include "support/oracles.hpp"

using namespace hwvkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const std::vector<CoefficientRing> kRings{CoefficientRing::rationals(), CoefficientRing::prime_field(2),
                                          CoefficientRing::prime_field(3)};

Outcome worked_bideterminant() {
  SkewDiagram e(Partition{3, 2}, Partition{1});
  auto f = bideterminant(Tableau(e, {1, 2, 1, 2}), Tableau(e, {2, 3, 1, 3}), CoefficientRing::integers(),
                         Ambient{2, 3, 1, 'x'});
  const std::string want =
      "x(1)_{1,1} * x(1)_{1,2} * x(1)_{2,3}^2 - x(1)_{1,1} * x(1)_{1,3} * x(1)_{2,2} * x(1)_{2,3}";
  return {to_string(f) == want, "abf^2 - acef"};
}

Outcome worked_special_mappings() {
  SkewDiagram f(Partition{2, 2});
  SkewDiagram e(Partition{3, 2}, Partition{1});
  DiagramMapping a1(f, e, {0, 1, 2, 3}), a2(f, e, {0, 1, 3, 2}), a3(f, e, {1, 0, 3, 2});
  Tableau s(f, {1, 1, 2, 2});
  bool ok = !is_admissible(a1) && is_admissible(a2) && !is_special(a2) && is_special(a3);
  ok = ok && pull_back_canonical(a1) == s && pull_back_canonical(a2) == s && pull_back_canonical(a3) == s;
  auto rep = admissible_representative(s, e);
  ok = ok && rep && *rep == a3;
  ok = ok && enumerate_tableaux(e, TableauKind::Semistandard, WeightConstraint{{2, 2}}).size() == 2;
  auto trep = admissible_representative(Tableau(e, {1, 1, 2, 2}), f);
  ok = ok && trep && *trep == a3.inverse();
  ok = ok && !admissible_representative(Tableau(e, {1, 2, 1, 2}), f);
  return {ok, "alpha_1 not admissible, alpha_2 admissible not special, alpha_3 special, T~ not special"};
}

Outcome worked_expansion() {
  SkewDiagram f(Partition{2, 2});
  SkewDiagram e(Partition{2, 1, 1});
  Triple tr(Tableau(e, {1, 2, 2, 2}), Tableau(f, {1, 2, 2, 2}), DiagramMapping(f, e, {0, 2, 1, 3}));
  auto c = twist_subgroup(tr);
  bool ok = c.order() == 2 && c.contains(BoxPermutation({0, 3, 2, 1}));
  auto reps = left_coset_reps(column_stabilizer(f), c);
  ok = ok && reps.size() == 2 && to_cycle_string(reps[0]) == "()" && to_cycle_string(reps[1]) == "(1,3)";
  const auto z = CoefficientRing::integers();
  std::size_t cases = 0;
  for (const auto& S : enumerate_tableaux(f, TableauKind::Ordered, MaxEntry{2}))
    for (const auto& T : enumerate_tableaux(e, TableauKind::ColumnStrict, MaxEntry{3})) {
      TwistedBidetSpec spec{tr, S, T, 2, 3, 2};
      auto rows = row_concat_expansion(spec);
      // S' = [s11, s21+2 | s12+2 | s22+2], S'' = [s21, s11+2 | s12+2 | s22+2]
      const auto& v = S.entries();
      ok = ok && rows.size() == 2 && rows[0].sign == 1 && rows[1].sign == -1 &&
           rows[0].S.entries() == std::vector<int>{v[0], v[2] + 2, v[1] + 2, v[3] + 2} &&
           rows[1].S.entries() == std::vector<int>{v[2], v[0] + 2, v[1] + 2, v[3] + 2};
      ok = ok && assemble_row_expansion(rows, spec, z) == assemble_column_expansion(column_concat_expansion(spec), spec, z);
      ++cases;
    }
  return {ok, "C = <(2,4)>, X = {(), (1,3)}, row = column expansion on " + std::to_string(cases) + " (S,T)"};
}

Outcome divisibility() {
  const auto z = CoefficientRing::integers();
  std::mt19937 rng(4);
  std::size_t checked = 0, skipped = 0;
  bool ok = true;
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s)
      for (int m = 1; m <= 2; ++m)
        for (int t = 1; t <= 4; ++t)
          for (const auto& nu : compositions_of(t, m))
            for (const auto& mu : partitions_of(t, r, t))
              for (const auto& lambda : partitions_of(t, s, t))
                for (const auto& tr : enumerate_triples(r, s, m, mu, lambda, nu)) {
                  const auto cf = column_stabilizer(tr.source()).order();
                  const auto ce = column_stabilizer(tr.target()).order();
                  if (cf * ce > 100000) {
                    ++skipped;
                    continue;
                  }
                  std::vector<std::pair<Tableau, Tableau>> st{{canonical_tableau(tr.source()), canonical_tableau(tr.target())}};
                  for (int k = 0; k < 2; ++k) {
                    std::vector<int> a, b;
                    for (std::size_t i = 0; i < tr.source().size(); ++i) a.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(r)));
                    for (std::size_t i = 0; i < tr.target().size(); ++i) b.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(s)));
                    st.emplace_back(Tableau(tr.source(), a), Tableau(tr.target(), b));
                  }
                  const auto order = mpq_class(static_cast<unsigned long>(twist_order(tr)));
                  for (const auto& [S, T] : st) {
                    TwistedBidetSpec spec{tr, S, T, r, s, m};
                    auto naive = naive_double_sum(spec, z, 100000);
                    auto tw = twisted_bideterminant(spec, z);
                    ok = ok && naive == tw.scaled(order);
                    ++checked;
                  }
                }
  return {ok, std::to_string(checked) + " (S,T,triple) cases, " + std::to_string(skipped) + " triples over the coset cap"};
}

Outcome bases() {
  std::size_t cells = 0, failed = 0;
  for (const auto& ring : kRings)
    for (auto action : {Action::Transpose, Action::Inverse})
      for (const auto& req : request_grid(3, 3, 2, 4, action, ring)) {
        ++cells;
        if (!verify_basis(req).passed()) ++failed;
      }
  return {failed == 0, std::to_string(cells) + " cells, " + std::to_string(failed) + " failed"};
}

Outcome filtrations() {
  struct Case {
    int r, s, m;
    std::vector<int> nu;
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : {Case{2, 2, 1, {2}}, Case{2, 3, 2, {1, 3}}}) {
    std::vector<std::vector<std::size_t>> dims;
    for (const auto& ring : {CoefficientRing::rationals(), CoefficientRing::prime_field(2)}) {
      auto rep = verify_filtration(build_filtration(c.r, c.s, c.m, c.nu, ring), c.r, c.s, c.m, c.nu, ring);
      ok = ok && rep.passed();
      std::vector<std::size_t> d;
      for (const auto& l : rep.layers) d.push_back(l.section_dim);
      dims.push_back(d);
    }
    ok = ok && dims[0] == dims[1];
    detail += (detail.empty() ? "" : "; ") + std::to_string(dims[0].size()) + " layers";
  }
  return {ok, detail};
}

Outcome char_independence() {
  std::vector<CoefficientRing> rings{CoefficientRing::rationals(), CoefficientRing::prime_field(2),
                                     CoefficientRing::prime_field(3), CoefficientRing::prime_field(5)};
  std::size_t cells = 0, failed = 0;
  for (const auto& req : request_grid(3, 3, 2, 4, Action::Transpose, CoefficientRing::rationals())) {
    ++cells;
    if (!char_independence_check(req, rings).passed) ++failed;
  }
  return {failed == 0, std::to_string(cells) + " cells over Q, F_2, F_3, F_5"};
}

struct ConjCase {
  Partition lambda, mu;
  int n, d;
};

std::vector<ConjCase> conj_cases() {
  std::vector<ConjCase> out{{Partition{1}, Partition{1}, 2, 5}, {Partition{2}, Partition{2}, 2, 5}};
  for (int k = 0; k <= 3; ++k)
    for (const auto& l : partitions_of(k, 3, k))
      for (const auto& m : partitions_of(k, 3, k))
        if (l.length() + m.length() <= 3) out.push_back({l, m, 3, 4});
  return out;
}

Outcome spanning(bool nilcone) {
  std::size_t failed = 0;
  const auto cases = conj_cases();
  for (const auto& c : cases) {
    auto rep = nilcone ? nilcone_spanning_check(c.lambda, c.mu, c.n, c.d, CoefficientRing::rationals())
                       : module_spanning_check(c.lambda, c.mu, c.n, c.d, CoefficientRing::rationals());
    if (!rep.passed()) ++failed;
  }
  return {failed == 0, std::to_string(cases.size()) + " weights, " + std::to_string(failed) + " failed"};
}

Outcome easy_spanning() {
  std::size_t cells = 0, failed = 0;
  for (const auto& ring : kRings)
    for (const auto& req : request_grid(3, 3, 2, 4, Action::Inverse, ring)) {
      ++cells;
      auto easy = easy_spanning_set(req.lambda, req.mu, req.nu, req.r, req.s, ring);
      std::vector<Polynomial> basis;
      for (const auto& el : hwv_basis(req)) basis.push_back(el.poly);
      if (!same_span(easy, basis, ring)) ++failed;
    }
  return {failed == 0, std::to_string(cells) + " cells, " + std::to_string(failed) + " failed"};
}

Outcome deterministic_sweep() {
  std::ostringstream a, b, err;
  const int ca = cli::run({"--format", "json", "sweep"}, a, err);
  const int cb = cli::run({"--format", "json", "sweep"}, b, err);
  return {ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty(),
          std::to_string(a.str().size()) + " bytes, exit codes " + std::to_string(ca) + "/" + std::to_string(cb)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked bideterminant (S|T) = abf^2 - acef", worked_bideterminant},
      {"worked special mappings alpha_1..alpha_3", worked_special_mappings},
      {"worked twisted expansion, two concatenations agree", worked_expansion},
      {"naive double sum divisible by |C_{P,Q,alpha}| over Z", divisibility},
      {"twisted bideterminant bases verified on r,s<=3, m<=2, t<=4", bases},
      {"good filtrations, identical sections over Q and F_2", filtrations},
      {"hwv dimensions independent of the field", char_independence},
      {"conjugation: pullbacks span the module over k[Mat_n]^GL_n", [] { return spanning(false); }},
      {"conjugation: pullbacks span modulo the invariant ideal", [] { return spanning(true); }},
      {"easy spanning set has the inverse-action basis span", easy_spanning},
      {"sweep JSON is byte-identical across runs", deterministic_sweep},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("criterion %2zu: %s  %s (%s) [%.1fs]\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
