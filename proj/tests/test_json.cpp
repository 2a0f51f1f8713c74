#include <doctest.h>

#include <random>

#include "hwvkit/errors.hpp"
#include "hwvkit/json_io.hpp"
#include "support/oracles.hpp"

using namespace hwvkit;

TEST_SUITE("json") {

TEST_CASE("shapes and tableaux round trip") {
  SkewDiagram e(Partition{3, 2}, Partition{1});
  CHECK(skew_from_json(to_json(e)) == e);
  CHECK(skew_from_json(json::parse("[2,1]")) == SkewDiagram(Partition{2, 1}));
  CHECK(partition_from_json(to_json(Partition{4, 1})) == Partition{4, 1});

  Tableau t(e, {1, 2, 1, 2});
  auto j = to_json(t);
  CHECK(j["rows"] == json::parse("[[1,2],[1,2]]"));
  CHECK(tableau_from_json(j) == t);
  CHECK(tableau_from_json(json::parse(R"({"rows": [[1,2],[1,2]]})"), &e) == t);

  // rows without boxes are written as []
  SkewDiagram holes(Partition{2, 2, 1}, Partition{2, 2});
  Tableau h(holes, {5});
  CHECK(to_json(h)["rows"] == json::parse("[[],[],[5]]"));
  CHECK(tableau_from_json(to_json(h)) == h);
}

TEST_CASE("triples and polynomials round trip (property)") {
  for (const auto& tr : enumerate_triples(3, 3, 2, Partition{2, 1}, Partition{2, 1}, {1, 2})) {
    auto back = triple_from_json(to_json(tr));
    CHECK(back == tr);
    TwistedBidetSpec spec{tr, canonical_tableau(tr.source()), canonical_tableau(tr.target()), 3, 3, 2};
    auto f = twisted_bideterminant(spec, CoefficientRing::rationals());
    CHECK(polynomial_from_json(to_json(f)) == f);
    auto f2 = change_ring(f, CoefficientRing::prime_field(2));
    CHECK(polynomial_from_json(to_json(f2)) == f2);
  }
  auto q = CoefficientRing::rationals();
  Ambient amb{1, 2, 1, 'x'};
  auto g = Polynomial::variable(q, amb, 1, 1, 2).scaled(mpq_class(-3, 4)) + Polynomial::u(q, amb);
  auto jg = to_json(g);
  CHECK(polynomial_from_json(jg) == g);
  CHECK(jg["text"] == to_string(g));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(partition_from_json(json::parse("[1, \"a\"]")), ParseError);
  CHECK_THROWS_AS(partition_from_json(json::parse("{}")), ParseError);
  CHECK_THROWS_AS(skew_from_json(json::parse("{\"inner\": [1]}")), ParseError);
  CHECK_THROWS_AS(skew_from_json(json::parse("{\"outer\": [1], \"inner\": [2]}")), ContainmentError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse("{\"ring\": \"Q\"}")), ParseError);
  CHECK_THROWS_AS(tableau_from_json(json::parse("{\"shape\": [2], \"rows\": [[1]]}")), Error);
  CHECK_THROWS(triple_from_json(json::parse("{\"P\": 1}")));
}

TEST_CASE("reports serialise their booleans") {
  BasisReport r;
  r.elements = r.rank = r.oracle_dim = 2;
  r.invariant = r.independent = r.count_matches = r.spans = true;
  auto j = to_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["oracleDim"] == 2);
  r.spans = false;
  CHECK(to_json(r)["passed"] == false);
  SpanReport s;
  s.chi = {1, -1};
  s.degrees.push_back({1, 1, 1, 0, true});
  CHECK(to_json(s)["passed"] == true);
  CHECK(to_json(s)["degrees"][0]["dimOracle"] == 1);
}

}  // TEST_SUITE
