#include "hwvkit/json_io.hpp"

#include "hwvkit/errors.hpp"

namespace hwvkit {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const SkewDiagram& e) {
  json j;
  j["outer"] = to_json(e.outer());
  j["inner"] = to_json(e.inner());
  return j;
}

json to_json(const Tableau& t) {
  json rows = json::array();
  const auto& boxes = t.shape().boxes();
  for (int i = 1; i <= t.shape().num_rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < boxes.size(); ++k)
      if (boxes[k].row == i) row.push_back(t.at(static_cast<int>(k)));
    rows.push_back(std::move(row));
  }
  json j;
  j["shape"] = to_json(t.shape());
  j["rows"] = std::move(rows);
  return j;
}

namespace {

json box_json(const Box& b) { return json::array({b.row, b.col}); }

Box box_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("a box is a [row, col] pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

json to_json(const DiagramMapping& a) {
  json pairs = json::array();
  for (std::size_t k = 0; k < a.size(); ++k)
    pairs.push_back(json::array({box_json(a.source().boxes()[k]),
                                 box_json(a.target().boxes()[static_cast<std::size_t>(a.image(static_cast<int>(k)))])}));
  json j;
  j["source"] = to_json(a.source());
  j["target"] = to_json(a.target());
  j["pairs"] = std::move(pairs);
  return j;
}

json to_json(const Triple& t) {
  json j;
  j["P"] = to_json(t.P);
  j["Q"] = to_json(t.Q);
  j["alpha"] = to_json(t.alpha)["pairs"];
  return j;
}

json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms()) {
    json vars = json::array();
    for (int v = 0; v < f.ambient().num_vars(); ++v) {
      int e = mono[static_cast<std::size_t>(v) + 1];
      if (!e) continue;
      auto [l, i, jj] = f.ambient().unflatten(v);
      vars.push_back(json::array({l, i, jj, e}));
    }
    json t;
    t["coef"] = c.get_str();
    t["u"] = static_cast<int>(mono[0]);
    t["vars"] = std::move(vars);
    terms.push_back(std::move(t));
  }
  json j;
  j["ring"] = f.ring().name();
  j["ambient"] = {{"r", f.ambient().r}, {"s", f.ambient().s}, {"m", f.ambient().m},
                  {"symbol", std::string(1, f.ambient().symbol)}};
  j["text"] = to_string(f);
  j["terms"] = std::move(terms);
  return j;
}

json to_json(const WeightPair& w) {
  json j;
  j["row"] = w.row;
  j["col"] = w.col;
  return j;
}

json to_json(const BasisReport& r) {
  json j;
  j["elements"] = r.elements;
  j["triples"] = r.triples;
  j["rank"] = r.rank;
  j["oracleDim"] = r.oracle_dim;
  j["invariant"] = r.invariant;
  j["independent"] = r.independent;
  j["countMatches"] = r.count_matches;
  j["spans"] = r.spans;
  j["passed"] = r.passed();
  return j;
}

json to_json(const FiltrationReport& r) {
  json layers = json::array();
  for (const auto& l : r.layers)
    layers.push_back({{"index", l.index},
                      {"mu", to_json(l.mu)},
                      {"lambda", to_json(l.lambda)},
                      {"expectedSectionDim", l.expected_section_dim},
                      {"sectionDim", l.section_dim},
                      {"stable", l.stable}});
  json j;
  j["pieceDim"] = r.piece_dim;
  j["semistandardCount"] = r.semistandard_count;
  j["semistandardRank"] = r.semistandard_rank;
  j["totalRank"] = r.total_rank;
  j["semistandardBasis"] = r.semistandard_basis;
  j["stable"] = r.stable;
  j["sectionsMatch"] = r.sections_match;
  j["telescopes"] = r.telescopes;
  j["passed"] = r.passed();
  j["layers"] = std::move(layers);
  return j;
}

json to_json(const PullbackReport& r) {
  json j;
  j["elements"] = r.elements;
  j["nonzero"] = r.nonzero;
  j["invariant"] = r.invariant;
  j["weightOk"] = r.weight_ok;
  j["degreeOk"] = r.degree_ok;
  j["passed"] = r.passed();
  return j;
}

json to_json(const SpanReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"dimOracle", d.dim_oracle},
                       {"dimSpan", d.dim_span},
                       {"dimIdeal", d.dim_ideal},
                       {"equal", d.equal}});
  json j;
  j["chi"] = r.chi;
  j["degrees"] = std::move(degrees);
  j["passed"] = r.passed();
  return j;
}

json to_json(const CharIndependenceReport& r) {
  json dims = json::object();
  for (const auto& [name, d] : r.dims) dims[name] = d;
  json j;
  j["triples"] = r.triples;
  j["dims"] = std::move(dims);
  j["passed"] = r.passed;
  return j;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a partition is an array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("a partition is an array of integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

SkewDiagram skew_from_json(const json& j) {
  if (j.is_array()) return SkewDiagram(partition_from_json(j));
  if (!j.is_object() || !j.contains("outer")) throw ParseError("a shape is an array or {\"outer\", \"inner\"}");
  Partition inner = j.contains("inner") ? partition_from_json(j["inner"]) : Partition{};
  return SkewDiagram(partition_from_json(j["outer"]), inner);
}

Tableau tableau_from_json(const json& j, const SkewDiagram* shape) {
  SkewDiagram e;
  json rows;
  if (j.is_array()) {
    rows = j;
  } else if (j.is_object() && j.contains("rows")) {
    rows = j["rows"];
  } else {
    throw ParseError("a tableau is {\"shape\", \"rows\"} or an array of rows");
  }
  if (j.is_object() && j.contains("shape"))
    e = skew_from_json(j["shape"]);
  else if (shape)
    e = *shape;
  else
    throw ParseError("tableau without a shape");
  if (shape && !(e == *shape)) throw ShapeMismatch("tableau shape differs from the expected shape");
  if (!rows.is_array()) throw ParseError("tableau rows must be an array");
  std::vector<int> lengths = e.row_lengths();
  std::vector<int> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) throw ParseError("tableau rows must be arrays");
    const int want = i < lengths.size() ? lengths[i] : 0;
    if (static_cast<int>(row.size()) != want)
      throw ParseError("row " + std::to_string(i + 1) + " of the tableau has " + std::to_string(row.size()) +
                       " entries, the shape has " + std::to_string(want) + " boxes there");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("tableau entries must be integers");
      entries.push_back(v.get<int>());
    }
  }
  if (entries.size() != e.size()) throw ParseError("tableau rows do not cover the shape");
  return Tableau(e, std::move(entries));
}

Triple triple_from_json(const json& j) {
  if (!j.is_object() || !j.contains("P") || !j.contains("Q") || !j.contains("alpha"))
    throw ParseError("a triple is {\"P\", \"Q\", \"alpha\"}");
  Tableau p = tableau_from_json(j["P"]);
  Tableau q = tableau_from_json(j["Q"]);
  std::vector<int> image(q.size(), -1);
  const auto& pairs = j["alpha"];
  if (!pairs.is_array() || pairs.size() != q.size()) throw ParseError("alpha must list one pair per box of Q");
  for (const auto& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError("alpha entries are [source box, target box]");
    auto src = q.shape().index_of(box_from_json(pr[0]));
    auto dst = p.shape().index_of(box_from_json(pr[1]));
    if (!src || !dst) throw ParseError("alpha names a box outside the diagrams");
    image[static_cast<std::size_t>(*src)] = *dst;
  }
  return Triple(p, q, DiagramMapping(q.shape(), p.shape(), image));
}

Polynomial polynomial_from_json(const json& j) {
  try {
    const auto& a = j.at("ambient");
    Ambient amb{a.at("r").get<int>(), a.at("s").get<int>(), a.at("m").get<int>(),
                a.value("symbol", std::string("x")).at(0)};
    CoefficientRing ring = CoefficientRing::parse(j.at("ring").get<std::string>());
    Polynomial f(ring, amb);
    for (const auto& t : j.at("terms")) {
      Monomial mono = f.unit_monomial();
      mono[0] = static_cast<std::uint8_t>(t.value("u", 0));
      for (const auto& v : t.at("vars"))
        mono[static_cast<std::size_t>(amb.var(v.at(0).get<int>(), v.at(1).get<int>(), v.at(2).get<int>())) + 1] =
            static_cast<std::uint8_t>(v.at(3).get<int>());
      mpq_class c(t.at("coef").get<std::string>());
      c.canonicalize();
      f.add_term(mono, c);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed coefficient: ") + e.what());
  }
}

}  // namespace hwvkit
