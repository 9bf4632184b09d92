#include <gtest/gtest.h>

#include "affgr/bruhat.hpp"
#include "affgr/levi.hpp"

using namespace affgr;

namespace {
Coweight w(std::size_t n, std::size_t i) { return fundamental_coweight(n, i); }
const std::vector<std::size_t> kA3Ends{1, 3};
const std::vector<std::size_t> kD4Legs{1, 3, 4};
}  // namespace

TEST(Levi, GlobalVersusComponentPi1) {
  // In PGL4 the cocharacters in span(alpha_1, alpha_3) are c_1, c_3 in Z/2
  // with c_1 + c_3 integral: index 2 over the coroot lattice.
  const LeviData a3 = levi_data(parse_datum("A3:adjoint"), kA3Ends);
  EXPECT_EQ(a3.pi1_order(), 2);
  EXPECT_FALSE(a3.product_split);
  ASSERT_EQ(a3.components.size(), 2u);
  for (const auto& c : a3.components) EXPECT_EQ(c.pi1_order(), 1);

  const LeviData sc = levi_data(parse_datum("A3:sc"), kA3Ends);
  EXPECT_EQ(sc.pi1_order(), 1);
  EXPECT_TRUE(sc.product_split);
}

TEST(Levi, D4LegsGiveKleinFour) {
  const LeviData d4 = levi_data(parse_datum("D4:adjoint"), kD4Legs);
  EXPECT_EQ(d4.pi1_invariants, (std::vector<Int>{2, 2}));
  EXPECT_FALSE(d4.product_split);
  EXPECT_EQ(d4.components.size(), 3u);
}

TEST(Levi, FullSupportRecoversDatum) {
  for (const char* name : {"D6:half-spin", "E6:adjoint", "C4:PSp8", "A5:SL6/mu3"}) {
    const RootDatum d = parse_datum(name);
    std::vector<std::size_t> all;
    for (std::size_t i = 1; i <= d.rank(); ++i) all.push_back(i);
    const LeviData l = levi_data(d, all);
    EXPECT_EQ(l.pi1_order(), d.pi1_order()) << name;
    ASSERT_EQ(l.components.size(), 1u);
    EXPECT_EQ(l.components[0].datum.pi1_order(), d.pi1_order()) << name;
  }
}

TEST(Levi, ComponentTypesFollowBourbakiOrder) {
  // Removing node 2 of E6 leaves A5 on 1,3,4,5,6.
  const std::vector<std::size_t> nodes{1, 3, 4, 5, 6};
  const LeviData l = levi_data(parse_datum("E6:adjoint"), nodes);
  ASSERT_EQ(l.components.size(), 1u);
  EXPECT_EQ(l.components[0].type.name(), "A5");
  EXPECT_EQ(l.components[0].nodes, nodes);
}

TEST(Projection, Idempotent) {
  const RootDatum d = parse_datum("D5:adjoint");
  const std::vector<std::size_t> nodes{2, 3, 4, 5};
  const auto first = project_der(d, nodes, w(5, 4) + w(5, 5));
  ASSERT_TRUE(first.integral);
  Coweight again;
  for (const auto& r : first.la_der) {
    ASSERT_EQ(r.denominator(), 1);
    again.coords.push_back(r.numerator());
  }
  EXPECT_EQ(project_der(d, nodes, again).la_der, first.la_der);
}

TEST(Reduction, LowerStaysBelowAndSupportIsFull) {
  const RootDatum d = parse_datum("D5:adjoint");
  const Coweight la = w(5, 1) + w(5, 4);
  const Coweight mu = w(5, 2) + w(5, 5);
  ASSERT_TRUE(less(d, la, mu));
  const auto red = levi_reduction(d, la, mu);
  ASSERT_TRUE(red);
  const auto& p = red->derived;
  EXPECT_TRUE(leq(p.datum, p.la, p.mu));
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= p.datum.rank(); ++i) all.push_back(i);
  EXPECT_EQ(support(p.datum, p.la, p.mu), all);
  EXPECT_EQ(pairing_2rho(p.datum.system(), p.mu - p.la), pairing_2rho(d.system(), mu - la));
}
