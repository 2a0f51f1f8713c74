#include "hwvkit_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hwvkit/errors.hpp"
#include "sweep.hpp"

namespace hwvkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kPartitionHelp =
    "comma-separated parts, e.g. 2,1,1; the empty partition is 0 or an empty string";

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty() || text == "0") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + text + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

Partition parse_partition(const std::string& text, const std::string& what) {
  try {
    return Partition(parse_ints(text, what));
  } catch (const InvalidPartition& e) {
    throw UsageError(what + ": " + e.what());
  }
}

// Weights keep their zeros; "0" alone still means the empty tuple.
std::vector<int> parse_weight(const std::string& text, const std::string& what) {
  auto w = parse_ints(text, what);
  for (int v : w)
    if (v < 0) throw UsageError(what + ": entries must be non-negative");
  return w;
}

Action parse_action(const std::string& a) {
  if (a == "transpose") return Action::Transpose;
  if (a == "inverse") return Action::Inverse;
  throw UsageError("--action must be transpose or inverse");
}

CoefficientRing parse_ring(const std::string& text) {
  try {
    return CoefficientRing::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--ring: ") + e.what());
  }
}

json read_json(const std::string& file, const std::string& inline_text) {
  std::string text;
  if (!inline_text.empty()) {
    text = inline_text;
  } else if (file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    throw UsageError("give the input with --spec FILE (or -) or --json TEXT");
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

// Plain "key: value" rendering of a report for --format text.
void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const json& a) {
    for (const auto& v : a)
      if (v.is_structured()) return false;
    return true;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !scalar_array(v)) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render_text(e, out, indent + 4);
        } else {
          out << pad << "  - " << e.dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

struct Globals {
  std::string ring = "q";
  std::string format = "text";
  bool timings = false;
  Caps caps;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void setup(CLI::App& app);
  void check_caps() const;
  void cap(const char* name, long value, long limit) const {
    if (value > limit)
      throw UsageError(std::string(name) + " = " + std::to_string(value) + " exceeds the cap " + std::to_string(limit) +
                       "; raise it with the matching --*-max option");
  }
  void check_request(const HwvRequest& q) const {
    cap("r", q.r, g_.caps.r_max);
    cap("s", q.s, g_.caps.s_max);
    cap("m", q.m, g_.caps.m_max);
    int t = 0;
    for (int v : q.nu) t += v;
    cap("t", t, g_.caps.t_max);
  }
  HwvRequest request() const;
  json config() const;
  int emit(const std::string& command, json params, json result, const std::string& text = {});

  // subcommand bodies
  int cmd_tableaux();
  int cmd_mappings_special();
  int cmd_mappings_represent();
  int cmd_mappings_triples();
  int cmd_bidet_eval();
  int cmd_hwv(const std::string& which);
  int cmd_conj(const std::string& which);
  int cmd_sweep(bool hwv_only);

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  // shared option storage
  std::string shape_, inner_, kind_ = "semistandard", weight_;
  int max_entry_ = 0;
  std::string source_, source_inner_, target_, target_inner_;
  std::string tableau_;
  int r_ = 1, s_ = 1, m_ = 1, n_ = 2;
  std::string mu_, lambda_, nu_, action_ = "transpose";
  std::string spec_file_, spec_json_;
  bool naive_ = false, expansion_ = false, column_ = false, nilcone_ = false, allow_large_n_ = false;
  int degree_max_ = 0;
  int conj_r_ = 0, conj_s_ = 0;
  std::string sections_ = "basis,filtration,charIndependence,pullback,span";
  std::string rings_ = "q,f2,f3";
  std::string actions_ = "transpose,inverse";
  Grid grid_;
  std::function<int()> action_fn_;
};

void Runner::setup(CLI::App& app) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", g_.ring, "coefficient ring: z, q or fP for a prime P")->capture_default_str();
  app.add_option("--format", g_.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timings", g_.timings, "add wall-clock timings to reports");
  app.add_option("--t-max", g_.caps.t_max, "cap on |nu|")->capture_default_str();
  app.add_option("--r-max", g_.caps.r_max, "cap on r")->capture_default_str();
  app.add_option("--s-max", g_.caps.s_max, "cap on s")->capture_default_str();
  app.add_option("--m-max", g_.caps.m_max, "cap on m")->capture_default_str();
  app.add_option("--coset-cap", g_.caps.coset_cap, "skip sweep cells with |C_F|*|C_E| above this")
      ->capture_default_str();
  app.add_option("--degree-cap", g_.caps.degree_max, "cap on conj degrees")->capture_default_str();
  app.footer(std::string("Partitions and weights: ") + kPartitionHelp +
             ".\nExit status: 0 all checks passed, 1 a verification failed, 2 usage error.\n"
             "HWVKIT_WORKERS sets the sweep worker count.");

  auto hwv_params = [this](CLI::App* c, bool with_shapes) {
    c->add_option("--r", r_, "rows of each matrix")->required();
    c->add_option("--s", s_, "columns of each matrix")->required();
    c->add_option("--m", m_, "number of matrices")->required();
    if (with_shapes) {
      c->add_option("--mu", mu_, std::string("row shape; ") + kPartitionHelp)->required();
      c->add_option("--lambda", lambda_, std::string("column shape; ") + kPartitionHelp)->required();
      c->add_option("--action", action_, "transpose or inverse")->capture_default_str();
    }
    c->add_option("--nu", nu_, "multidegree, m comma-separated entries")->required();
  };
  auto grid_opts = [this](CLI::App* c, bool conj) {
    c->add_option("--grid-r", grid_.r, "largest r in the grid")->capture_default_str();
    c->add_option("--grid-s", grid_.s, "largest s")->capture_default_str();
    c->add_option("--grid-m", grid_.m, "largest m")->capture_default_str();
    c->add_option("--grid-t", grid_.t, "largest |nu|")->capture_default_str();
    c->add_option("--rings", rings_, "rings for basis and filtration cells")->capture_default_str();
    c->add_option("--actions", actions_, "actions for basis cells")->capture_default_str();
    if (conj) {
      c->add_option("--grid-n", grid_.n, "largest n for conj cells")->capture_default_str();
      c->add_option("--grid-conj-t", grid_.conj_t, "largest |lambda| for conj cells")->capture_default_str();
      c->add_option("--grid-degree", grid_.degree, "degree bound for span cells")->capture_default_str();
      c->add_option("--sections", sections_, "comma-separated sections to run")->capture_default_str();
    }
  };

  auto* tab = app.add_subcommand("tableaux", "enumerate tableaux of a skew shape");
  tab->add_option("--shape", shape_, std::string("outer partition; ") + kPartitionHelp)->required();
  tab->add_option("--inner", inner_, "inner partition");
  tab->add_option("--kind", kind_, "semistandard, ordered, column-strict or standard")
      ->check(CLI::IsMember({"semistandard", "ordered", "column-strict", "standard"}))
      ->capture_default_str();
  auto* wopt = tab->add_option("--weight", weight_, "exact content, e.g. 2,2");
  tab->add_option("--max-entry", max_entry_, "largest entry")->excludes(wopt);
  tab->callback([this] { action_fn_ = [this] { return cmd_tableaux(); }; });

  auto* map = app.add_subcommand("mappings", "diagram mappings and labelled triples");
  map->require_subcommand(1);
  auto mapping_shapes = [this](CLI::App* c) {
    c->add_option("--source", source_, "outer partition of F")->required();
    c->add_option("--source-inner", source_inner_, "inner partition of F");
    c->add_option("--target", target_, "outer partition of E")->required();
    c->add_option("--target-inner", target_inner_, "inner partition of E");
  };
  auto* sp = map->add_subcommand("special", "all special mappings F -> E");
  mapping_shapes(sp);
  sp->callback([this] { action_fn_ = [this] { return cmd_mappings_special(); }; });
  auto* rep = map->add_subcommand("represent", "admissible representatives of a tableau S on F");
  rep->add_option("--tableau", tableau_, "S as JSON, e.g. {\"shape\":[2,2],\"rows\":[[1,1],[2,2]]}")->required();
  rep->add_option("--target", target_, "outer partition of E")->required();
  rep->add_option("--target-inner", target_inner_, "inner partition of E");
  rep->callback([this] { action_fn_ = [this] { return cmd_mappings_represent(); }; });
  auto* tri = map->add_subcommand("triples", "labelled triples in decreasing order");
  hwv_params(tri, true);
  tri->callback([this] { action_fn_ = [this] { return cmd_mappings_triples(); }; });

  auto* bid = app.add_subcommand("bidet", "bideterminants");
  bid->require_subcommand(1);
  auto* ev = bid->add_subcommand("eval", "evaluate (S|T) or a twisted bideterminant from a JSON spec");
  ev->add_option("--spec", spec_file_, "spec file, - for stdin");
  ev->add_option("--json", spec_json_, "spec as inline JSON");
  ev->add_flag("--naive", naive_, "also evaluate the full double sum over C_F x C_E");
  ev->add_flag("--expansion", expansion_, "list the signed ordinary bideterminants");
  ev->add_flag("--column", column_, "use the column-wise expansion");
  ev->callback([this] { action_fn_ = [this] { return cmd_bidet_eval(); }; });

  auto* hwv = app.add_subcommand("hwv", "highest weight vectors under U_r x U_s");
  hwv->require_subcommand(1);
  for (const char* name : {"basis", "verify", "oracle"}) {
    auto* c = hwv->add_subcommand(name, std::string(name) + " for one (r, s, m, mu, lambda, nu)");
    hwv_params(c, true);
    c->callback([this, name] { action_fn_ = [this, name] { return cmd_hwv(name); }; });
  }
  auto* filt = hwv->add_subcommand("filtration", "build and verify the good filtration of a multidegree piece");
  hwv_params(filt, false);
  filt->callback([this] { action_fn_ = [this] { return cmd_hwv("filtration"); }; });
  auto* hsw = hwv->add_subcommand("sweep", "verify the basis over a parameter grid");
  grid_opts(hsw, false);
  hsw->callback([this] { action_fn_ = [this] { return cmd_sweep(true); }; });

  auto* conj = app.add_subcommand("conj", "the conjugation action on k[Mat_n]");
  conj->require_subcommand(1);
  auto conj_params = [this](CLI::App* c) {
    c->add_option("--n", n_, "matrix size")->required();
    c->add_option("--lambda", lambda_, std::string("positive part; ") + kPartitionHelp)->required();
    c->add_option("--mu", mu_, std::string("negative part; ") + kPartitionHelp)->required();
    c->add_flag("--allow-large-n", allow_large_n_, "permit n = 4");
  };
  auto* pb = conj->add_subcommand("pullback", "pullbacks of the inverse-action basis");
  conj_params(pb);
  pb->add_option("--r", conj_r_, "row split, default l(mu)");
  pb->add_option("--s", conj_s_, "column split, default n - r");
  pb->callback([this] { action_fn_ = [this] { return cmd_conj("pullback"); }; });
  auto* cv = conj->add_subcommand("verify", "check that the pullbacks are highest weight vectors");
  conj_params(cv);
  cv->callback([this] { action_fn_ = [this] { return cmd_conj("verify"); }; });
  auto* cs = conj->add_subcommand("span", "degree-wise spanning check against the oracle");
  conj_params(cs);
  cs->add_option("--degree-max", degree_max_, "largest degree, default 5 for n = 2 and 4 otherwise");
  cs->add_flag("--nilcone", nilcone_, "check the nilpotent cone quotient instead of the module");
  cs->callback([this] { action_fn_ = [this] { return cmd_conj("span"); }; });

  auto* sw = app.add_subcommand("sweep", "run every check over the capped grid");
  grid_opts(sw, true);
  sw->callback([this] { action_fn_ = [this] { return cmd_sweep(false); }; });
}

void Runner::check_caps() const {
  const Caps d;
  const auto& c = g_.caps;
  if (c.t_max < 1 || c.r_max < 1 || c.s_max < 1 || c.m_max < 1 || c.coset_cap < 1 || c.degree_max < 1)
    throw UsageError("caps must be positive");
  if (c.t_max > d.t_max || c.r_max > d.r_max || c.s_max > d.s_max || c.m_max > d.m_max ||
      c.coset_cap > d.coset_cap || c.degree_max > d.degree_max)
    err_ << "warning: caps raised above the defaults; runs may be slow or exhaust memory\n";
}

HwvRequest Runner::request() const {
  HwvRequest q;
  q.r = r_;
  q.s = s_;
  q.m = m_;
  q.mu = parse_partition(mu_, "--mu");
  q.lambda = parse_partition(lambda_, "--lambda");
  q.nu = parse_weight(nu_, "--nu");
  q.action = parse_action(action_);
  q.ring = parse_ring(g_.ring);
  check_request(q);
  return q;
}

json Runner::config() const {
  json caps = {{"tMax", g_.caps.t_max},           {"rMax", g_.caps.r_max}, {"sMax", g_.caps.s_max},
               {"mMax", g_.caps.m_max},           {"cosetCap", g_.caps.coset_cap},
               {"degreeMax", g_.caps.degree_max}};
  return {{"ring", parse_ring(g_.ring).name()},
          {"caps", caps},
          {"output", g_.format},
          {"deterministic", true}};
}

int Runner::emit(const std::string& command, json params, json result, const std::string& text) {
  const bool ok = !result.is_object() || result.value("passed", true);
  if (g_.format == "json") {
    json j;
    j["version"] = HWVKIT_VERSION;
    j["command"] = command;
    j["config"] = config();
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    if (g_.timings)
      j["timings"] = {
          {"totalMs", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count()}};
    out_ << j.dump(2) << "\n";
  } else if (!text.empty()) {
    out_ << text;
  } else {
    json j;
    j["command"] = command;
    j["params"] = std::move(params);
    if (result.is_object())
      for (auto it = result.begin(); it != result.end(); ++it) j[it.key()] = it.value();
    else
      j["result"] = std::move(result);
    render_text(j, out_, 0);
  }
  return ok ? 0 : 1;
}

int Runner::cmd_tableaux() {
  SkewDiagram e(parse_partition(shape_, "--shape"), parse_partition(inner_, "--inner"));
  EntryConstraint constraint = MaxEntry{max_entry_};
  std::vector<int> w;
  if (kind_ == "standard") {
    w.assign(e.size(), 1);
    constraint = WeightConstraint{w};
  } else if (!weight_.empty()) {
    w = parse_weight(weight_, "--weight");
    constraint = WeightConstraint{w};
  } else if (max_entry_ < 1) {
    throw UsageError("give --weight or a positive --max-entry");
  }
  TableauKind kind = kind_ == "ordered"         ? TableauKind::Ordered
                     : kind_ == "column-strict" ? TableauKind::ColumnStrict
                                                : TableauKind::Semistandard;
  auto list = enumerate_tableaux(e, kind, constraint);
  json arr = json::array();
  std::string text;
  for (const auto& t : list) {
    arr.push_back(to_json(t)["rows"]);
    text += to_string(t) + "\n";
  }
  text += std::to_string(list.size()) + " tableaux\n";
  json params = {{"shape", to_json(e)}, {"kind", kind_}};
  if (!w.empty()) params["weight"] = w;
  else params["maxEntry"] = max_entry_;
  return emit("tableaux", params, {{"count", list.size()}, {"tableaux", arr}}, text);
}

int Runner::cmd_mappings_special() {
  SkewDiagram f(parse_partition(source_, "--source"), parse_partition(source_inner_, "--source-inner"));
  SkewDiagram e(parse_partition(target_, "--target"), parse_partition(target_inner_, "--target-inner"));
  auto list = enumerate_special_mappings(f, e);
  json arr = json::array();
  std::string text;
  for (const auto& a : list) {
    arr.push_back(to_json(a)["pairs"]);
    text += to_string(a) + "\n";
  }
  text += std::to_string(list.size()) + " special mappings\n";
  return emit("mappings special", {{"source", to_json(f)}, {"target", to_json(e)}},
              {{"count", list.size()}, {"mappings", arr}}, text);
}

int Runner::cmd_mappings_represent() {
  SkewDiagram e(parse_partition(target_, "--target"), parse_partition(target_inner_, "--target-inner"));
  Tableau s = tableau_from_json(read_json("", tableau_));
  auto special = admissible_representative(s, e);
  auto all = admissible_representatives(s, e);
  json arr = json::array();
  std::string text = "S = " + to_string(s) + "\n";
  for (const auto& a : all) {
    arr.push_back(to_json(a)["pairs"]);
    text += (is_special(a) ? "special    " : "admissible ") + to_string(a) + "\n";
  }
  text += special ? "S is E-special\n" : "S is not E-special\n";
  json res = {{"special", special.has_value()}, {"admissible", arr}};
  if (special) res["representative"] = to_json(*special)["pairs"];
  return emit("mappings represent", {{"S", to_json(s)}, {"target", to_json(e)}}, res, text);
}

int Runner::cmd_mappings_triples() {
  HwvRequest q = request();
  validate(q);
  auto triples = enumerate_triples(q.r, q.s, q.m, q.mu, q.lambda, q.nu);
  json arr = json::array();
  std::string text;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    json t = to_json(triples[i]);
    t["twistOrder"] = twist_order(triples[i]);
    arr.push_back(std::move(t));
    text += std::to_string(i + 1) + ". P = " + to_string(triples[i].P) + "  Q = " + to_string(triples[i].Q) +
            "  alpha = " + to_string(triples[i].alpha) + "\n";
  }
  text += std::to_string(triples.size()) + " triples\n";
  json params = {{"r", q.r}, {"s", q.s}, {"m", q.m}, {"mu", to_json(q.mu)}, {"lambda", to_json(q.lambda)},
                 {"nu", q.nu}};
  return emit("mappings triples", params, {{"count", triples.size()}, {"triples", arr}}, text);
}

int Runner::cmd_bidet_eval() {
  json spec = read_json(spec_file_, spec_json_);
  if (!spec.is_object()) throw UsageError("the spec must be a JSON object");
  CoefficientRing ring = parse_ring(spec.contains("ring") ? spec["ring"].get<std::string>() : g_.ring);
  int r = spec.value("r", 0), s = spec.value("s", 0), m = spec.value("m", 1);
  if (r < 1 || s < 1 || m < 1) throw UsageError("the spec needs positive r and s (and m when given)");
  cap("r", r, g_.caps.r_max);
  cap("s", s, g_.caps.s_max);
  cap("m", m, g_.caps.m_max);
  if (!spec.contains("S") || !spec.contains("T")) throw UsageError("the spec needs S and T");

  json params = {{"r", r}, {"s", s}, {"m", m}, {"ring", ring.name()}};
  if (!spec.contains("triple")) {
    SkewDiagram shape;
    const SkewDiagram* sp = nullptr;
    if (spec.contains("shape")) {
      shape = skew_from_json(spec["shape"]);
      sp = &shape;
    }
    Tableau S = tableau_from_json(spec["S"], sp);
    Tableau T = tableau_from_json(spec["T"], &S.shape());
    if (m != 1) throw UsageError("an ordinary bideterminant lives in one matrix; drop m or add a triple");
    Polynomial f = bideterminant(S, T, ring, Ambient{r, s, 1, 'x'});
    params["S"] = to_json(S);
    params["T"] = to_json(T);
    return emit("bidet eval", params, {{"polynomial", to_json(f)}}, to_string(f) + "\n");
  }

  TwistedBidetSpec ts;
  ts.triple = triple_from_json(spec["triple"]);
  ts.S = tableau_from_json(spec["S"], &ts.triple.source());
  ts.T = tableau_from_json(spec["T"], &ts.triple.target());
  ts.r = r;
  ts.s = s;
  ts.m = m;
  validate(ts);
  params["triple"] = to_json(ts.triple);
  params["S"] = to_json(ts.S);
  params["T"] = to_json(ts.T);

  auto terms = column_ ? column_concat_expansion(ts) : row_concat_expansion(ts);
  Polynomial f = column_ ? assemble_column_expansion(terms, ts, ring) : assemble_row_expansion(terms, ts, ring);
  json res;
  res["polynomial"] = to_json(f);
  res["twistOrder"] = twist_order(ts.triple);
  std::string text = to_string(f) + "\n";
  if (expansion_) {
    json arr = json::array();
    for (const auto& t : terms) {
      arr.push_back({{"sign", t.sign}, {"S", to_json(t.S)}, {"T", to_json(t.T)}});
      text += std::string(t.sign > 0 ? "+ " : "- ") + "(" + to_string(t.S) + " | " + to_string(t.T) + ")\n";
    }
    res["expansion"] = std::move(arr);
  }
  if (naive_) {
    Polynomial naive = naive_double_sum(ts, CoefficientRing::integers(), g_.caps.coset_cap);
    Polynomial twisted_z = twisted_bideterminant(ts, CoefficientRing::integers());
    const bool divides = naive == twisted_z.scaled(mpq_class(static_cast<unsigned long>(twist_order(ts.triple))));
    res["naive"] = to_json(naive);
    res["naiveEqualsOrderTimesTwisted"] = divides;
    res["passed"] = divides;
    text += "naive: " + to_string(naive) + "\n";
    text += std::string("naive = |C_{P,Q,alpha}| * twisted: ") + (divides ? "yes" : "no") + "\n";
  }
  return emit("bidet eval", params, res, text);
}

int Runner::cmd_hwv(const std::string& which) {
  if (which == "filtration") {
    CoefficientRing ring = parse_ring(g_.ring);
    auto nu = parse_weight(nu_, "--nu");
    HwvRequest q;
    q.r = r_;
    q.s = s_;
    q.m = m_;
    q.nu = nu;
    check_request(q);
    if (static_cast<int>(nu.size()) != m_) throw UsageError("--nu needs exactly m entries");
    auto layers = build_filtration(r_, s_, m_, nu, ring);
    json res = to_json(verify_filtration(layers, r_, s_, m_, nu, ring));
    return emit("hwv filtration", {{"r", r_}, {"s", s_}, {"m", m_}, {"nu", nu}, {"ring", ring.name()}}, res);
  }
  HwvRequest q = request();
  validate(q);
  json params = {{"r", q.r},       {"s", q.s},
                 {"m", q.m},       {"mu", to_json(q.mu)},
                 {"lambda", to_json(q.lambda)},
                 {"nu", q.nu},     {"action", action_},
                 {"ring", q.ring.name()}};
  if (which == "basis") {
    auto basis = hwv_basis(q);
    json arr = json::array();
    std::string text;
    for (const auto& b : basis) {
      arr.push_back({{"triple", to_json(b.triple)}, {"polynomial", to_json(b.poly)}});
      text += "P = " + to_string(b.triple.P) + "  Q = " + to_string(b.triple.Q) + "  alpha = " +
              to_string(b.triple.alpha) + "\n  " + to_string(b.poly) + "\n";
    }
    text += std::to_string(basis.size()) + " elements\n";
    return emit("hwv basis", params, {{"count", basis.size()}, {"elements", arr}}, text);
  }
  if (which == "oracle") {
    auto basis = hwv_oracle(q);
    json arr = json::array();
    std::string text;
    for (const auto& f : basis) {
      arr.push_back(to_json(f));
      text += to_string(f) + "\n";
    }
    text += "dimension " + std::to_string(basis.size()) + "\n";
    return emit("hwv oracle", params, {{"dim", basis.size()}, {"basis", arr}}, text);
  }
  return emit("hwv verify", params, to_json(verify_basis(q)));
}

int Runner::cmd_conj(const std::string& which) {
  if (n_ < 1) throw UsageError("--n must be positive");
  if (n_ > 4) throw UsageError("n > 4 is out of reach");
  if (n_ == 4) {
    if (!allow_large_n_) throw UsageError("n = 4 needs --allow-large-n");
    err_ << "warning: n = 4 runs are slow\n";
  }
  Partition lambda = parse_partition(lambda_, "--lambda");
  Partition mu = parse_partition(mu_, "--mu");
  CoefficientRing ring = parse_ring(g_.ring);
  auto chi = conj_chi(lambda, mu, n_);
  cap("t", lambda.size(), g_.caps.t_max);
  json params = {{"n", n_}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"chi", chi}, {"ring", ring.name()}};
  if (which == "pullback") {
    auto list = pullback_basis(lambda, mu, n_, ring, conj_r_, conj_s_);
    json arr = json::array();
    std::string text;
    for (const auto& p : list) {
      arr.push_back({{"nu", p.nu}, {"degree", p.degree}, {"triple", to_json(p.triple)}, {"polynomial", to_json(p.poly)}});
      text += "nu = (";
      for (std::size_t i = 0; i < p.nu.size(); ++i) text += (i ? "," : "") + std::to_string(p.nu[i]);
      text += ")  degree " + std::to_string(p.degree) + "\n  " + to_string(p.poly) + "\n";
    }
    text += std::to_string(list.size()) + " pullbacks\n";
    return emit("conj pullback", params, {{"count", list.size()}, {"pullbacks", arr}}, text);
  }
  if (which == "verify") return emit("conj verify", params, to_json(verify_pullback_hwv(lambda, mu, n_, ring)));
  int d = degree_max_ > 0 ? degree_max_ : (n_ == 2 ? 5 : 4);
  cap("degree", d, g_.caps.degree_max);
  params["degreeMax"] = d;
  params["nilcone"] = nilcone_;
  auto rep = nilcone_ ? nilcone_spanning_check(lambda, mu, n_, d, ring) : module_spanning_check(lambda, mu, n_, d, ring);
  return emit("conj span", params, to_json(rep));
}

int Runner::cmd_sweep(bool hwv_only) {
  SweepConfig cfg;
  cfg.grid = grid_;
  cap("grid r", grid_.r, g_.caps.r_max);
  cap("grid s", grid_.s, g_.caps.s_max);
  cap("grid m", grid_.m, g_.caps.m_max);
  cap("grid t", grid_.t, g_.caps.t_max);
  cap("grid conj t", grid_.conj_t, g_.caps.t_max);
  cap("grid degree", grid_.degree, g_.caps.degree_max);
  if (grid_.n > 4) throw UsageError("--grid-n above 4 is out of reach");
  if (grid_.r < 0 || grid_.s < 0 || grid_.m < 0 || grid_.t < 0 || grid_.n < 0 || grid_.conj_t < 0 || grid_.degree < 0)
    throw UsageError("grid bounds must be non-negative");
  cfg.coset_cap = g_.caps.coset_cap;
  cfg.timings = g_.timings;
  cfg.workers = workers_from_env();
  std::stringstream ss(rings_);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) cfg.rings.push_back(parse_ring(item));
  std::stringstream as(actions_);
  for (std::string item; std::getline(as, item, ',');)
    if (!item.empty()) cfg.actions.push_back(parse_action(item));
  if (hwv_only) {
    cfg.sections = {Section::Basis};
  } else {
    std::stringstream sec(sections_);
    for (std::string item; std::getline(sec, item, ',');) {
      if (item.empty()) continue;
      bool found = false;
      for (Section s : {Section::Basis, Section::Filtration, Section::CharIndependence, Section::Pullback, Section::Span})
        if (section_name(s) == item) {
          cfg.sections.push_back(s);
          found = true;
        }
      if (!found) throw UsageError("unknown section '" + item + "'");
    }
  }
  json params = {{"grid",
                  {{"r", grid_.r},
                   {"s", grid_.s},
                   {"m", grid_.m},
                   {"t", grid_.t},
                   {"n", grid_.n},
                   {"conjT", grid_.conj_t},
                   {"degree", grid_.degree}}},
                 {"rings", json::array()},
                 {"actions", json::array()},
                 {"sections", json::array()}};
  for (const auto& r : cfg.rings) params["rings"].push_back(r.name());
  for (Action a : cfg.actions) params["actions"].push_back(a == Action::Transpose ? "transpose" : "inverse");
  for (Section s : cfg.sections) params["sections"].push_back(section_name(s));

  json res = run_sweep(cfg);
  const std::string command = hwv_only ? "hwv sweep" : "sweep";
  if (g_.format == "json") return emit(command, params, res);

  std::ostringstream text;
  text << command << ": " << res["summary"]["cells"] << " cells, " << res["summary"]["passed"] << " passed, "
       << res["summary"]["failed"] << " failed, " << res["summary"]["skipped"] << " skipped\n";
  text << "section            cells  passed  failed  skipped\n";
  for (auto it = res["table"].begin(); it != res["table"].end(); ++it) {
    const auto& row = it.value();
    char line[128];
    std::snprintf(line, sizeof line, "%-17s %6d %7d %7d %8d\n", it.key().c_str(), row["cells"].get<int>(),
                  row["passed"].get<int>(), row["failed"].get<int>(), row["skipped"].get<int>());
    text << line;
  }
  for (const auto& f : res["failures"]) text << "FAIL " << f["key"].get<std::string>() << "  " << f["note"] << "\n";
  for (const auto& c : res["cells"])
    if (c["status"] == "skip") text << "skip " << c["key"].get<std::string>() << "  " << c["note"].get<std::string>()
                                    << "\n";
  return emit(command, params, res, text.str());
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Exact twisted bideterminants and highest weight vectors", "hwvkit"};
  setup(app);
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("hwvkit");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out_, err_) == 0 ? 0 : 2;
  }
  try {
    check_caps();
    if (!action_fn_) throw UsageError("no command given");
    return action_fn_();
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err_ << "error: " << e.what() << " (raise --coset-cap or shrink the input)\n";
    return 2;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  return r.run(args);
}

}  // namespace hwvkit::cli
