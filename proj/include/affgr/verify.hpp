#pragma once

#include <functional>
#include <string>
#include <vector>

#include "affgr/root_datum.hpp"

namespace affgr {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  double seconds = 0;
  std::vector<std::string> failures{};  // capped; `failure_count` has the total
  long failure_count = 0;
  std::string summary{};

  void fail(std::string message);
};

/// Types swept by the classification and agreement suites.
std::vector<DynkinType> sweep_types();
/// Types of rank <= 6 used by the cover-equivalence suite.
std::vector<DynkinType> cover_types();

SuiteResult suite_classification();
SuiteResult suite_agreement();
SuiteResult suite_covers();
SuiteResult suite_figures();
SuiteResult suite_tables();
SuiteResult suite_rank1();
SuiteResult suite_properties(unsigned seed = 20240601, int cases_per_property = 1000);

/// Names accepted by run_suite: the seven above plus "all".
std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suite(const std::string& name);

/// Expected figures as (lower, upper, support) triples.
struct FigureEdge {
  Coweight lower;
  Coweight upper;
  std::vector<std::size_t> support;
};
std::vector<FigureEdge> figure_pso(int n);
std::vector<FigureEdge> figure_e6();
std::vector<FigureEdge> figure_e7();

/// Compares the DOT rendering of a Hasse diagram to the drawn edges: the
/// subgraph induced on the drawn nodes must consist of exactly the drawn
/// edges. Returns the mismatches.
std::vector<std::string> compare_figure(const RootDatum& datum,
                                        const std::vector<FigureEdge>& drawn);

}  // namespace affgr
