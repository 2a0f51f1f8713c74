#include <doctest.h>

#include <algorithm>
#include <random>

#include "hwvkit/conj.hpp"
#include "hwvkit/errors.hpp"
#include "support/oracles.hpp"

using namespace hwvkit;

namespace {

oracle::Matrix to_matrix(const std::vector<mpq_class>& pt, int n) {
  oracle::Matrix y(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pt[static_cast<std::size_t>(i * n + j)];
  return y;
}

std::vector<mpq_class> to_point(const oracle::Matrix& y) {
  std::vector<mpq_class> pt;
  for (const auto& row : y)
    for (const auto& v : row) pt.push_back(v);
  return pt;
}

oracle::Matrix identity(int n) {
  oracle::Matrix g(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return g;
}

std::vector<std::vector<int>> conj_pairs(int n, int max_size) {
  // (λ, μ) flattened as [λ..., -1, μ...]
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= max_size; ++k)
    for (const auto& l : oracle::partitions(k))
      for (const auto& m : oracle::partitions(k))
        if (static_cast<int>(l.size() + m.size()) <= n) {
          std::vector<int> v = l;
          v.push_back(-1);
          v.insert(v.end(), m.begin(), m.end());
          out.push_back(v);
        }
  return out;
}

std::pair<Partition, Partition> unpack(const std::vector<int>& v) {
  auto sep = std::find(v.begin(), v.end(), -1);
  return {Partition(std::vector<int>(v.begin(), sep)), Partition(std::vector<int>(sep + 1, v.end()))};
}

}  // namespace

TEST_SUITE("conj") {

TEST_CASE("weights [lambda, mu]") {
  CHECK(conj_chi(Partition{2, 1}, Partition{3}, 4) == std::vector<int>{2, 1, 0, -3});
  CHECK(conj_chi(Partition{}, Partition{}, 2) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(conj_chi(Partition{1, 1}, Partition{2}, 2), SizeError);
  CHECK_THROWS_AS(conj_chi(Partition{1}, Partition{2}, 3), DegreeMismatch);
  const auto q = CoefficientRing::rationals();
  auto y21 = Polynomial::variable(q, conj_ambient(2), 1, 2, 1);
  CHECK(conj_weight(y21) == std::vector<int>{1, -1});
  CHECK(is_conj_unipotent_invariant(y21));
  CHECK_FALSE(is_conj_unipotent_invariant(Polynomial::variable(q, conj_ambient(2), 1, 1, 2)));
}

TEST_CASE("matrix powers and the conjugation substitution numerically (property)") {
  std::mt19937 rng(2718);
  const auto q = CoefficientRing::rationals();
  for (int n = 2; n <= 3; ++n) {
    MatrixPowerTable pw(n, 3, q);
    for (int trial = 0; trial < 5; ++trial) {
      auto pt = oracle::random_point(rng, n * n);
      auto y = to_matrix(pt, n);
      auto power = identity(n);
      for (int l = 1; l <= 3; ++l) {
        power = oracle::matmul(power, y);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            CHECK(oracle::evaluate(pw.entry(l, i, j), pt) ==
                  power[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      }
      // f(g^{-1} Y g), g = I + u E_{a,b}
      const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      const int b = a % n + 1;
      const mpq_class u(static_cast<int>(rng() % 5) - 2);
      auto g = identity(n), gi = identity(n);
      g[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] += u;
      gi[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] -= u;
      const auto f = pw.entry(2, n, 1) * pw.entry(1, 1, n) + pw.entry(1, 2, 2);
      CHECK(oracle::evaluate(conj_unipotent_substitution(f, a, b), pt, u) ==
            oracle::evaluate(f, to_point(oracle::matmul(gi, oracle::matmul(y, g)))));
    }
    CHECK_THROWS_AS(pw.entry(4, 1, 1), IndexError);
  }
}

TEST_CASE("pullback is the corner substitution (property)") {
  std::mt19937 rng(161);
  const auto q = CoefficientRing::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    const int r = 1 + static_cast<int>(rng() % 2);
    const int s = n - r;
    const int m = 1 + static_cast<int>(rng() % 2);
    Ambient amb{r, s, m, 'x'};
    Polynomial f(q, amb);
    for (int k = 0; k < 3; ++k) {
      Monomial mono = f.unit_monomial();
      for (int d = 0; d < 2; ++d) ++mono[1 + rng() % static_cast<unsigned>(amb.num_vars())];
      f.add_term(mono, mpq_class(static_cast<int>(rng() % 7) - 3));
    }
    auto pb = pullback(f, n);
    CHECK(pb.ambient() == conj_ambient(n));
    auto pt = oracle::random_point(rng, n * n);
    auto y = to_matrix(pt, n);
    std::vector<mpq_class> corners(static_cast<std::size_t>(amb.num_vars()));
    auto power = identity(n);
    for (int l = 1; l <= m; ++l) {
      power = oracle::matmul(power, y);
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j)
          corners[static_cast<std::size_t>(amb.var(l, i, j))] =
              power[static_cast<std::size_t>(n - r + i - 1)][static_cast<std::size_t>(j - 1)];
    }
    CHECK(oracle::evaluate(pb, pt) == oracle::evaluate(f, corners));
  }
  Polynomial big(q, Ambient{2, 2, 1, 'x'});
  CHECK_THROWS_AS(pullback(big, 3), SizeError);
}

TEST_CASE("invariant generators") {
  const auto q = CoefficientRing::rationals();
  std::mt19937 rng(5);
  for (int n = 1; n <= 3; ++n) {
    auto cs = invariant_generators(n, q);
    REQUIRE(cs.size() == static_cast<std::size_t>(n));
    for (const auto& c : cs) {
      CHECK(is_conj_unipotent_invariant(c));
      CHECK(conj_weight(c) == std::vector<int>(static_cast<std::size_t>(n), 0));
    }
    auto pt = oracle::random_point(rng, n * n);
    auto y = to_matrix(pt, n);
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += y[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    CHECK(oracle::evaluate(cs[0], pt) == tr);
    CHECK(oracle::evaluate(cs.back(), pt) == oracle::det(y));
  }
}

TEST_CASE("oracle dimension matches the Weyl character count (property)") {
  const auto q = CoefficientRing::rationals();
  for (int n = 2; n <= 3; ++n)
    for (const auto& v : conj_pairs(n, 2)) {
      auto [lambda, mu] = unpack(v);
      auto chi = conj_chi(lambda, mu, n);
      for (int d = 0; d <= (n == 2 ? 4 : 3); ++d)
        CHECK(static_cast<std::int64_t>(conj_hwv_oracle(n, chi, d, q).size()) == oracle::conj_multiplicity(n, chi, d));
    }
  CHECK_THROWS_AS(conj_hwv_oracle(2, {0, 0}, 2, CoefficientRing::rationals(), 1), CapExceeded);
}

TEST_CASE("pulled-back basis elements are highest weight vectors (property)") {
  for (auto ring : {CoefficientRing::rationals(), CoefficientRing::prime_field(2)})
    for (int n = 2; n <= 3; ++n)
      for (const auto& v : conj_pairs(n, 3)) {
        auto [lambda, mu] = unpack(v);
        if (lambda.empty()) continue;
        auto rep = verify_pullback_hwv(lambda, mu, n, ring);
        CHECK(rep.passed());
        CHECK(rep.elements > 0);
      }
  // y_{n,1} itself
  auto pbs = pullback_basis(Partition{1}, Partition{1}, 3, CoefficientRing::rationals());
  REQUIRE_FALSE(pbs.empty());
  CHECK(to_string(pbs[0].poly) == "y_{3,1}");
  auto one = pullback_basis(Partition{}, Partition{}, 2, CoefficientRing::rationals());
  REQUIRE(one.size() == 1);
  CHECK(to_string(one[0].poly) == "1");
}

TEST_CASE("the upper left corner is not a highest weight vector") {
  const auto q = CoefficientRing::rationals();
  MatrixPowerTable pw(2, 1, q);
  auto x = Polynomial::variable(q, Ambient{1, 1, 1, 'x'}, 1, 1, 1);
  CHECK_FALSE(is_conj_unipotent_invariant(pullback_upper_left(x, pw)));
  CHECK(is_conj_unipotent_invariant(pullback(x, pw)));
}

TEST_CASE("spanning checks, small degrees") {
  const auto q = CoefficientRing::rationals();
  auto rep = module_spanning_check(Partition{1}, Partition{1}, 2, 3, q);
  CHECK(rep.passed());
  CHECK(rep.degrees.size() == 4);
  auto nil = nilcone_spanning_check(Partition{1}, Partition{1}, 2, 3, q);
  CHECK(nil.passed());
  auto rep3 = module_spanning_check(Partition{1}, Partition{1}, 3, 2, q);
  CHECK(rep3.passed());
  for (const auto& d : rep3.degrees)
    CHECK(static_cast<std::int64_t>(d.dim_oracle) == oracle::conj_multiplicity(3, {1, 0, -1}, d.degree));
}

TEST_CASE("easy spanning set has the same span as the basis (property)") {
  for (auto ring : {CoefficientRing::rationals(), CoefficientRing::prime_field(2)})
    for (const auto& req : request_grid(2, 2, 2, 3, Action::Inverse, ring)) {
      auto easy = easy_spanning_set(req.lambda, req.mu, req.nu, req.r, req.s, ring);
      std::vector<Polynomial> basis;
      for (const auto& el : hwv_basis(req)) basis.push_back(el.poly);
      CHECK(same_span(easy, basis, ring));
      CHECK(easy.size() >= basis.size());
    }
}

}  // TEST_SUITE
