#include <gtest/gtest.h>

#include <set>

#include "affgr/bruhat.hpp"
#include "affgr/error.hpp"

using namespace affgr;

namespace {
Coweight w(std::size_t n, std::size_t i) { return fundamental_coweight(n, i); }
}  // namespace

TEST(Order, DominanceInA2) {
  const RootDatum d = parse_datum("A2:adjoint");
  EXPECT_TRUE(leq(d, zero_coweight(2), w(2, 1) + w(2, 2)));
  // 3 omega_1 = 2 alpha_1 + alpha_2 (coweights), which dominates omega_1 + omega_2.
  EXPECT_TRUE(less(d, w(2, 1) + w(2, 2), 3 * w(2, 1)));
  EXPECT_FALSE(leq(d, w(2, 1), w(2, 2)));
}

TEST(Minuscule, SetsMatchClassicalLists) {
  EXPECT_EQ(minuscule_set(parse_datum("A3:adjoint")).size(), 4u);
  EXPECT_EQ(minuscule_set(parse_datum("E6:adjoint")),
            (std::vector<Coweight>{zero_coweight(6), w(6, 6), w(6, 1)}));  // sorted
  EXPECT_EQ(minuscule_set(parse_datum("B3:Spin7")), (std::vector<Coweight>{zero_coweight(3)}));
  EXPECT_EQ(minuscule_set(parse_datum("B3:adjoint")).size(), 2u);
  EXPECT_EQ(minuscule_set(parse_datum("C3:adjoint")).back(), w(3, 3));
}

TEST(Minuscule, RepresentativeIsInSameCoset) {
  const RootDatum d = parse_datum("D5:adjoint");
  const Coweight mu = w(5, 1) + w(5, 5);
  const Coweight rep = minuscule_representative(d, mu);
  EXPECT_EQ(rep, w(5, 4));
  EXPECT_TRUE(leq(d, rep, mu));
}

TEST(QuasiMinuscule, Table) {
  EXPECT_EQ(quasi_minuscule(*build_root_system({'A', 1})), (Coweight{2}));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'A', 4})), w(4, 1) + w(4, 4));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'B', 4})), w(4, 2));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'C', 4})), w(4, 1));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'D', 6})), w(6, 2));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'E', 6})), w(6, 2));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'E', 7})), w(7, 1));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'E', 8})), w(8, 8));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'F', 4})), w(4, 1));
  EXPECT_EQ(quasi_minuscule(*build_root_system({'G', 2})), w(2, 2));
}

TEST(Covers, MatchBruteForceInB3) {
  const RootDatum d = parse_datum("B3:adjoint");
  const auto nodes = dominant_up_to(d, 20);
  for (const auto& la : nodes) {
    std::set<Coweight> crit;
    for (const auto& e : covers_by_criteria(d, la)) crit.insert(e.upper);
    for (const auto& mu : nodes) {
      if (mu == la || pairing_2rho(d.system(), mu) > 20) continue;
      EXPECT_EQ(covers_bruteforce(d, la, mu), crit.count(mu) > 0)
          << la.to_string() << " -> " << mu.to_string();
    }
  }
}

TEST(Covers, KindsAndSupport) {
  const RootDatum d = parse_datum("D5:adjoint");
  const auto edges = covers_by_criteria(d, zero_coweight(5));
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].upper, w(5, 2));
  EXPECT_EQ(edges[0].kind, CoverKind::QuasiMinusculeZero);
  EXPECT_EQ(edges[0].support, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_THROW(support(parse_datum("D5:sc"), w(5, 1), w(5, 2)), Error);
}

TEST(Covers, G2IsRejected) {
  EXPECT_THROW(covers_by_criteria(parse_datum("G2:adjoint"), zero_coweight(2)), Error);
}

TEST(Hasse, DotIsDeterministicAndLabelled) {
  const RootDatum d = parse_datum("E6:adjoint");
  const std::string a = export_dot(hasse(d, 46));
  EXPECT_EQ(a, export_dot(hasse(d, 46)));
  EXPECT_NE(a.find("label=\"{1,3,4,5,6}\""), std::string::npos);
  EXPECT_NE(a.find("rankdir=BT"), std::string::npos);
}

TEST(Hasse, G2ByBruteForce) {
  const HasseDiagram h = hasse(parse_datum("G2:adjoint"), 12);
  ASSERT_FALSE(h.edges.empty());
  for (const auto& e : h.edges) EXPECT_EQ(e.kind, CoverKind::Unclassified);
}

TEST(Input, RejectsNonCocharacters) {
  const RootDatum sc = parse_datum("D6:half-spin");
  EXPECT_THROW(require_cocharacter(sc, w(6, 5)), Error);
}
