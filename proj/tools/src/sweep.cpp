#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "hwvkit/errors.hpp"

namespace hwvkit::cli {

std::string section_name(Section s) {
  switch (s) {
    case Section::Basis: return "basis";
    case Section::Filtration: return "filtration";
    case Section::CharIndependence: return "charIndependence";
    case Section::Pullback: return "pullback";
    case Section::Span: return "span";
  }
  return "?";
}

unsigned workers_from_env() {
  const char* v = std::getenv("HWVKIT_WORKERS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 64L));
}

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  json result;
  std::string note;
};

struct Cell {
  Section section;
  std::string key;
  json params;
  std::function<Outcome()> run;
};

std::string csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "0" : s;
}

std::uint64_t column_order(const Partition& p) { return column_stabilizer(SkewDiagram(p)).order(); }

void guard(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a > cap || b > cap / a)
    throw CapExceeded("|C_F|·|C_E| = " + std::to_string(a) + "·" + std::to_string(b) + " exceeds the coset cap " +
                      std::to_string(cap));
}

const char* action_name(Action a) { return a == Action::Transpose ? "transpose" : "inverse"; }

json request_params(const HwvRequest& q) {
  return {{"r", q.r},
          {"s", q.s},
          {"m", q.m},
          {"mu", to_json(q.mu)},
          {"lambda", to_json(q.lambda)},
          {"nu", q.nu},
          {"action", action_name(q.action)},
          {"ring", q.ring.name()}};
}

std::string request_key(const HwvRequest& q) {
  return "r" + std::to_string(q.r) + "s" + std::to_string(q.s) + "m" + std::to_string(q.m) + "/mu=" +
         csv(q.mu.parts()) + "/lambda=" + csv(q.lambda.parts()) + "/nu=" + csv(q.nu);
}

Outcome from_passed(json result) {
  Outcome o;
  o.status = result.value("passed", false) ? Status::Pass : Status::Fail;
  o.result = std::move(result);
  return o;
}

std::vector<std::pair<Partition, Partition>> conj_pairs(int n, int t) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& lambda : partitions_of(t, n, t))
    for (const auto& mu : partitions_of(t, n, t))
      if (lambda.length() + mu.length() <= n) out.emplace_back(lambda, mu);
  return out;
}

std::vector<Cell> make_cells(const SweepConfig& cfg) {
  std::vector<Cell> cells;
  const Grid& g = cfg.grid;
  const std::uint64_t cap = cfg.coset_cap;
  for (Section sec : cfg.sections) {
    const std::string sname = section_name(sec);
    switch (sec) {
      case Section::Basis:
        for (const auto& ring : cfg.rings)
          for (Action action : cfg.actions)
            for (const auto& q : request_grid(g.r, g.s, g.m, g.t, action, ring))
              cells.push_back({sec, sname + "/" + ring.name() + "/" + action_name(action) + "/" + request_key(q),
                               request_params(q), [q, cap] {
                                 guard(column_order(q.mu), column_order(q.lambda), cap);
                                 return from_passed(to_json(verify_basis(q)));
                               }});
        break;
      case Section::Filtration:
        for (const auto& ring : cfg.rings)
          for (int r = 1; r <= g.r; ++r)
            for (int s = 1; s <= g.s; ++s)
              for (int m = 1; m <= g.m; ++m)
                for (int t = 1; t <= g.t; ++t)
                  for (const auto& nu : compositions_of(t, m)) {
                    json params = {{"r", r}, {"s", s}, {"m", m}, {"nu", nu}, {"ring", ring.name()}};
                    std::string key = sname + "/" + ring.name() + "/r" + std::to_string(r) + "s" + std::to_string(s) +
                                      "m" + std::to_string(m) + "/nu=" + csv(nu);
                    cells.push_back({sec, key, params, [=] {
                                       std::uint64_t a = 1, b = 1;
                                       for (const auto& p : partitions_of(t, r, t)) a = std::max(a, column_order(p));
                                       for (const auto& p : partitions_of(t, s, t)) b = std::max(b, column_order(p));
                                       guard(a, b, cap);
                                       auto layers = build_filtration(r, s, m, nu, ring);
                                       json res = to_json(verify_filtration(layers, r, s, m, nu, ring));
                                       res.erase("layers");
                                       res["layers"] = layers.size();
                                       return from_passed(std::move(res));
                                     }});
                  }
        break;
      case Section::CharIndependence: {
        const std::vector<CoefficientRing> rings = {CoefficientRing::rationals(), CoefficientRing::prime_field(2),
                                                    CoefficientRing::prime_field(3), CoefficientRing::prime_field(5)};
        for (const auto& q : request_grid(g.r, g.s, g.m, g.t, Action::Transpose, CoefficientRing::rationals())) {
          json params = request_params(q);
          params.erase("ring");
          cells.push_back({sec, sname + "/" + request_key(q), params, [q, rings, cap] {
                             guard(column_order(q.mu), column_order(q.lambda), cap);
                             auto rep = char_independence_check(q, rings);
                             Outcome o;
                             o.status = rep.passed ? Status::Pass : Status::Fail;
                             o.result = to_json(rep);
                             return o;
                           }});
        }
        break;
      }
      case Section::Pullback:
      case Section::Span:
        for (int n = 2; n <= g.n; ++n)
          for (int t = 0; t <= g.conj_t; ++t)
            for (const auto& [lambda, mu] : conj_pairs(n, t)) {
              json params = {{"n", n}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"ring", "Q"}};
              std::string key = sname + "/n" + std::to_string(n) + "/lambda=" + csv(lambda.parts()) +
                                "/mu=" + csv(mu.parts());
              if (sec == Section::Pullback) {
                cells.push_back({sec, key, params, [=] {
                                   guard(column_order(mu), column_order(lambda), cap);
                                   return from_passed(
                                       to_json(verify_pullback_hwv(lambda, mu, n, CoefficientRing::rationals())));
                                 }});
              } else {
                const int d = g.degree;
                params["degreeMax"] = d;
                cells.push_back({sec, key + "/d" + std::to_string(d), params, [=] {
                                   guard(column_order(mu), column_order(lambda), cap);
                                   return from_passed(to_json(
                                       module_spanning_check(lambda, mu, n, d, CoefficientRing::rationals())));
                                 }});
              }
            }
        break;
    }
  }
  return cells;
}

Outcome run_cell(const Cell& c) {
  try {
    return c.run();
  } catch (const CapExceeded& e) {
    return {Status::Skip, json(), std::string("CapExceeded: ") + e.what()};
  } catch (const std::exception& e) {
    return {Status::Fail, json(), e.what()};
  }
}

}  // namespace

json run_sweep(const SweepConfig& cfg) {
  std::vector<Cell> cells = make_cells(cfg);
  std::vector<Outcome> outcomes(cells.size());
  std::vector<double> ms(cells.size(), 0.0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      auto t0 = std::chrono::steady_clock::now();
      outcomes[i] = run_cell(cells[i]);
      ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned nw = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < nw; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json out_cells = json::array();
  json failures = json::array();
  json table = json::object();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (Section s : cfg.sections) table[section_name(s)] = {{"cells", 0}, {"passed", 0}, {"failed", 0}, {"skipped", 0}};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const auto& o = outcomes[i];
    const char* status = o.status == Status::Pass ? "pass" : o.status == Status::Fail ? "fail" : "skip";
    json cell = {{"key", c.key}, {"section", section_name(c.section)}, {"params", c.params}, {"status", status}};
    if (!o.result.is_null()) cell["result"] = o.result;
    if (!o.note.empty()) cell["note"] = o.note;
    if (cfg.timings) cell["ms"] = ms[i];
    auto& row = table[section_name(c.section)];
    row["cells"] = row["cells"].get<int>() + 1;
    switch (o.status) {
      case Status::Pass:
        ++passed;
        row["passed"] = row["passed"].get<int>() + 1;
        break;
      case Status::Fail:
        ++failed;
        row["failed"] = row["failed"].get<int>() + 1;
        failures.push_back({{"key", c.key}, {"params", c.params}, {"note", o.note}});
        break;
      case Status::Skip:
        ++skipped;
        row["skipped"] = row["skipped"].get<int>() + 1;
        break;
    }
    out_cells.push_back(std::move(cell));
  }
  json j;
  j["summary"] = {{"cells", cells.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  j["table"] = std::move(table);
  j["failures"] = std::move(failures);
  j["cells"] = std::move(out_cells);
  j["passed"] = failed == 0;
  return j;
}

}  // namespace hwvkit::cli
