#include <gtest/gtest.h>

#include "affgr/error.hpp"
#include "affgr/root_datum.hpp"

using namespace affgr;

namespace {
std::size_t positive_root_count(DynkinType t) { return build_root_system(t)->positive_roots().size(); }
}  // namespace

TEST(DynkinType, ValidatesRanks) {
  EXPECT_THROW(validate({'D', 3}), Error);
  EXPECT_THROW(validate({'E', 5}), Error);
  EXPECT_THROW(validate({'G', 3}), Error);
  EXPECT_NO_THROW(validate({'B', 2}));
  EXPECT_EQ(parse_dynkin_type("E7").rank, 7);
}

TEST(RootSystem, PositiveRootCounts) {
  // |Phi+| is n(n+1)/2, n^2, n^2, n(n-1), 36, 63, 120, 24, 6.
  EXPECT_EQ(positive_root_count({'A', 5}), 15u);
  EXPECT_EQ(positive_root_count({'B', 4}), 16u);
  EXPECT_EQ(positive_root_count({'C', 3}), 9u);
  EXPECT_EQ(positive_root_count({'D', 5}), 20u);
  EXPECT_EQ(positive_root_count({'E', 6}), 36u);
  EXPECT_EQ(positive_root_count({'E', 7}), 63u);
  EXPECT_EQ(positive_root_count({'E', 8}), 120u);
  EXPECT_EQ(positive_root_count({'F', 4}), 24u);
  EXPECT_EQ(positive_root_count({'G', 2}), 6u);
}

TEST(RootSystem, ConnectionIndex) {
  EXPECT_EQ(connection_index({'A', 4}), 5);
  EXPECT_EQ(connection_index({'D', 6}), 4);
  EXPECT_EQ(connection_index({'E', 6}), 3);
  EXPECT_EQ(connection_index({'E', 8}), 1);
  EXPECT_EQ(std::abs(build_root_system({'B', 3})->cartan_det()), 2);
}

TEST(RootSystem, TwoRhoHeights) {
  // <2rho, omega_i^vee> equals twice the sum of the coroot coefficients of omega_i^vee.
  const auto e6 = build_root_system({'E', 6});
  EXPECT_EQ(e6->two_rho_row(), (IntVector{16, 22, 30, 42, 30, 16}));
  const auto e7 = build_root_system({'E', 7});
  EXPECT_EQ(e7->two_rho_row(), (IntVector{34, 49, 66, 96, 75, 52, 27}));
  const auto a2 = build_root_system({'A', 2});
  EXPECT_EQ(a2->two_rho_row(), (IntVector{2, 2}));
}

TEST(RootSystem, SimpleCorootIsCartanColumn) {
  const auto b2 = build_root_system({'B', 2});
  // B2: alpha_1 long, alpha_2 short.
  EXPECT_TRUE(b2->is_long(0));
  EXPECT_FALSE(b2->is_long(1));
  EXPECT_EQ(simple_coroot(*b2, 1).coords, b2->cartan().column(0));
}

TEST(DetectType, RelabeledDiagrams) {
  // D4 with the trivalent node listed first.
  const IntMatrix d4{{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}};
  const auto t = detect_type(d4);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->type.family, 'D');
  EXPECT_EQ(t->nodes[1], 0u);
  EXPECT_EQ(detect_type(bourbaki_cartan({'B', 2}))->type.family, 'C');
  EXPECT_EQ(detect_type(bourbaki_cartan({'F', 4}))->type.family, 'F');
}

TEST(Isogeny, LatticeCounts) {
  EXPECT_EQ(isogeny_lattices({'A', 5}).size(), 4u);  // divisors of 6
  EXPECT_EQ(isogeny_lattices({'D', 4}).size(), 5u);  // subgroups of Z2 x Z2
  EXPECT_EQ(isogeny_lattices({'D', 5}).size(), 3u);  // subgroups of Z4
  EXPECT_EQ(isogeny_lattices({'E', 8}).size(), 1u);
  for (const auto& d : isogeny_lattices({'D', 6})) {
    EXPECT_EQ(d.pi1_order() * invariants_order(quotient_invariants(
                                    d.system().coweight_lattice(), d.cochar())),
              4);
  }
}

TEST(Isogeny, ParseAndAliases) {
  EXPECT_TRUE(parse_datum("A3:sc").is_simply_connected());
  EXPECT_TRUE(parse_datum("A3:PGL4").is_adjoint());
  EXPECT_EQ(parse_datum("A3:SL4/mu2").pi1_order(), 2);
  EXPECT_EQ(parse_datum("D6:half-spin").name(), "D6:half-spin");
  EXPECT_EQ(parse_datum("B3:SO7").pi1_order(), 2);
  EXPECT_THROW(parse_datum("D6:nonsense"), Error);
  EXPECT_THROW(parse_datum("Q3:sc"), Error);
}

TEST(Isogeny, HalfSpinMembership) {
  const RootDatum hs = parse_datum("D6:half-spin");
  EXPECT_TRUE(hs.contains(fundamental_coweight(6, 6)));
  EXPECT_FALSE(hs.contains(fundamental_coweight(6, 5)));
  EXPECT_FALSE(hs.contains(fundamental_coweight(6, 1)));
  const RootDatum so = parse_datum("D6:SO12");
  EXPECT_TRUE(so.contains(fundamental_coweight(6, 1)));
  EXPECT_EQ(d_flip(Coweight{1, 2, 3, 4, 5, 6}), (Coweight{1, 2, 3, 4, 6, 5}));
}

TEST(Coweight, ParseCoords) {
  EXPECT_EQ(parse_coweight_coords("0,1,-2"), (Coweight{0, 1, -2}));
  EXPECT_THROW(parse_coweight_coords("1,x"), Error);
}
