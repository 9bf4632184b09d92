#include <gtest/gtest.h>

#include "affgr/verify.hpp"

using namespace affgr;

TEST(Figures, DrawnEdgesReproduce) {
  EXPECT_TRUE(compare_figure(parse_datum("E6:adjoint"), figure_e6()).empty());
  EXPECT_TRUE(compare_figure(parse_datum("D5:adjoint"), figure_pso(5)).empty());
}

TEST(Figures, WrongLabelIsReported) {
  auto drawn = figure_e6();
  drawn[1].support = {1, 3, 4, 5};
  EXPECT_FALSE(compare_figure(parse_datum("E6:adjoint"), drawn).empty());
}

TEST(Figures, MissingEdgeIsReported) {
  // Dropping a drawn edge leaves an extra edge in the induced subgraph.
  auto drawn = figure_e7();
  drawn.pop_back();
  drawn.push_back({fundamental_coweight(7, 1) + fundamental_coweight(7, 7),
                   fundamental_coweight(7, 1) + fundamental_coweight(7, 7), {}});
  EXPECT_FALSE(compare_figure(parse_datum("E7:adjoint"), drawn).empty());
}

TEST(Suites, NamesAreRunnable) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 8u);
  EXPECT_TRUE(run_suite("tables").front().passed);
  EXPECT_THROW(run_suite("missing"), std::exception);
}
