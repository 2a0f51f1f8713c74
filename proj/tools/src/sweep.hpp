#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hwvkit/json_io.hpp"

namespace hwvkit::cli {

struct Caps {
  int t_max = 6;
  int r_max = 4;
  int s_max = 4;
  int m_max = 3;
  std::uint64_t coset_cap = 100000;
  int degree_max = 5;
};

struct Grid {
  int r = 2;
  int s = 2;
  int m = 2;
  int t = 3;
  int n = 3;
  int conj_t = 2;
  int degree = 3;
};

enum class Section { Basis, Filtration, CharIndependence, Pullback, Span };

struct SweepConfig {
  Grid grid;
  std::vector<Section> sections;
  std::vector<CoefficientRing> rings;  // basis and filtration cells
  std::vector<Action> actions;
  std::uint64_t coset_cap = 100000;
  bool timings = false;
  unsigned workers = 1;
};

std::string section_name(Section s);

// One entry per cell, in cell-key order; see README for the schema.
json run_sweep(const SweepConfig& cfg);

// HWVKIT_WORKERS, default 1.
unsigned workers_from_env();

}  // namespace hwvkit::cli
