#include <gtest/gtest.h>

#include "affgr/error.hpp"
#include "affgr/lattice.hpp"

using namespace affgr;

TEST(IntMatrix, DeterminantAndAdjugate) {
  const IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(determinant(a), 4);
  const IntMatrix adj = adjugate(a);
  EXPECT_EQ(a * adj, IntMatrix({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}));
}

TEST(IntMatrix, CheckedArithmeticThrows) {
  EXPECT_THROW(checked_mul(Int{1} << 62, 4), Error);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(gcd(-12, 18), 6);
}

TEST(Smith, KnownInvariants) {
  // Cartan matrix of D4 has cokernel Z/2 x Z/2.
  const IntMatrix d4{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  EXPECT_EQ(smith_invariants(d4), (std::vector<Int>{2, 2}));
  const IntMatrix a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(smith_invariants(a3), (std::vector<Int>{4}));
}

TEST(Hermite, RowSpaceIsPreserved) {
  const IntMatrix m{{4, 6}, {6, 9}, {2, 3}};
  const IntMatrix h = hermite_form(m);
  EXPECT_EQ(h.rows(), 1u);
  EXPECT_EQ(h.row_vector(0), (IntVector{2, 3}));
}

TEST(Lattice, MembershipAndIndex) {
  const Lattice full = Lattice::standard(2);
  const Lattice sub = Lattice::from_generators(IntMatrix{{2, 0}, {1, 3}});
  EXPECT_TRUE(sub.contains(IntVector{3, 3}));
  EXPECT_FALSE(sub.contains(IntVector{1, 0}));
  EXPECT_EQ(invariants_order(quotient_invariants(full, sub)), 6);
}

TEST(Lattice, RationalGenerators) {
  // Generated by (1/2, 1/2) and (1, 0).
  const Lattice l = Lattice::from_generators(IntMatrix{{1, 1}, {2, 0}}, 2);
  const RatVector half{Rational(1, 2), Rational(1, 2)};
  const RatVector quarter{Rational(1, 4), Rational(0)};
  EXPECT_TRUE(l.contains(half));
  EXPECT_FALSE(l.contains(quarter));
  EXPECT_EQ(invariants_order(quotient_invariants(l, Lattice::standard(2))), 2);
}

TEST(Lattice, SumAndKernel) {
  const Lattice a = Lattice::from_generators(IntMatrix{{2, 0}});
  const Lattice b = Lattice::from_generators(IntMatrix{{0, 3}});
  const Lattice s = lattice_sum(a, b);
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_EQ(invariants_order(quotient_invariants(Lattice::standard(2), s)), 6);
  const IntMatrix k = left_kernel(IntMatrix{{1, 2}, {2, 4}});
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k * IntMatrix({{1, 2}, {2, 4}}), IntMatrix({{0, 0}}));
}
