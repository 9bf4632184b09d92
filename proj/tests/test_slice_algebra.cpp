#include <gtest/gtest.h>

#include "affgr/error.hpp"
#include "affgr/slice_algebra.hpp"

using namespace affgr;

namespace {
SlicePoly mono(int m, int a, int b, int c) { return SlicePoly::monomial(m, {a, b, c}); }
}  // namespace

TEST(SliceRing, Presentation) {
  const SliceRingInfo r = gl2_slice_ring(3);
  EXPECT_EQ(r.dimension, 2);
  EXPECT_TRUE(r.singular_at_origin);
  EXPECT_THROW(gl2_slice_ring(1), Error);
}

TEST(SliceRing, ReductionUsesRelation) {
  // z^m = -xy.
  EXPECT_EQ(mono(3, 0, 0, 3), -mono(3, 1, 1, 0));
  EXPECT_EQ(mono(2, 0, 0, 4), mono(2, 2, 2, 0));
}

TEST(Subring, Characteristic2) {
  for (int m = 2; m <= 6; ++m) {
    const SubringBasis b = pgl2_subring(m, 2, 2 * m + 4);
    EXPECT_FALSE(b.contains(mono(m, 0, 0, 1))) << m;
    EXPECT_TRUE(b.contains(mono(m, 0, 0, 2))) << m;
    EXPECT_FALSE(b.equals_full_ring()) << m;
  }
}

TEST(Subring, OddCharacteristicAndIntegers) {
  for (int m = 2; m <= 6; ++m) {
    EXPECT_TRUE(pgl2_subring(m, 3, 2 * m + 4).equals_full_ring()) << m;
    const SubringBasis z = pgl2_subring(m, 0, 2 * m + 4);
    EXPECT_FALSE(z.equals_full_ring()) << m;  // z itself is missing, 2z is present
    EXPECT_TRUE(z.full_after_inverting_two()) << m;
    EXPECT_TRUE(z.contains(mono(m, 0, 0, 1).scaled(2))) << m;
  }
}

TEST(Witness, Rank1) {
  const Rank1Witness w2 = normality_witness_rank1(4, 2);
  EXPECT_EQ(w2.status, Status::NonNormal);
  EXPECT_EQ(w2.witness, "z");
  EXPECT_EQ(normality_witness_rank1(4, 5).status, Status::Normal);
  EXPECT_EQ(normality_witness_rank1(4, 0).status, Status::Normal);
}

TEST(AdjointRep, CoefficientsLieInSubring) {
  for (int m = 2; m <= 4; ++m) {
    const auto coeffs = adjoint_coefficients(m);
    const SubringBasis b = pgl2_subring(m, 0, 4 * m + 8);
    for (const auto& c : coeffs) EXPECT_TRUE(b.contains(c)) << c.to_string();
  }
}

TEST(AdjointRep, RejectsNonInvertible) {
  Matrix2 g;
  for (auto& row : g)
    for (auto& e : row) e = LaurentPoly::constant(2, 1);
  EXPECT_THROW(adjoint_rep(g), Error);
}
