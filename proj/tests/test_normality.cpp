#include <gtest/gtest.h>

#include <algorithm>

#include "affgr/error.hpp"
#include "affgr/normality.hpp"

using namespace affgr;

namespace {

Coweight w(std::size_t n, std::size_t i) { return fundamental_coweight(n, i); }

struct Case {
  const char* datum;
  Coweight mu;
  Int p;
  Status expected;
};

// Hand-derived values: characteristic coprime to pi_1, minuscule strata,
// quasi-minuscule strata when p | pi_1, and the exceptional lists.
std::vector<Case> cases() {
  return {
      {"E7:adjoint", w(7, 2), 2, Status::Normal},
      {"E7:adjoint", w(7, 7), 2, Status::Normal},
      {"E7:adjoint", w(7, 1), 2, Status::NonNormal},
      {"E7:adjoint", w(7, 6), 2, Status::NonNormal},
      {"E7:adjoint", w(7, 6), 3, Status::Normal},
      {"B3:SO7", w(3, 2), 2, Status::NonNormal},
      {"B3:SO7", w(3, 1), 2, Status::Normal},
      {"B3:SO7", w(3, 2), 3, Status::Normal},
      {"B3:Spin7", w(3, 2), 2, Status::Normal},
      {"A2:adjoint", Coweight{1, 1}, 3, Status::NonNormal},
      {"A2:adjoint", Coweight{1, 1}, 2, Status::Normal},
      {"A3:SL4/mu2", 2 * w(3, 1), 2, Status::Normal},
      {"A3:SL4/mu2", w(3, 1) + w(3, 3), 2, Status::NonNormal},
      {"D5:adjoint", w(5, 1) + w(5, 4), 2, Status::Normal},
      {"D5:adjoint", w(5, 2), 2, Status::NonNormal},
      {"E6:adjoint", w(6, 3), 3, Status::Normal},
      {"E6:adjoint", 2 * w(6, 6), 3, Status::Normal},
      {"E6:adjoint", w(6, 2), 3, Status::NonNormal},
      {"E6:adjoint", w(6, 4), 3, Status::NonNormal},
      {"E6:adjoint", w(6, 4), 0, Status::Normal},
      {"C3:PSp6", w(3, 1), 2, Status::NonNormal},
      {"C3:PSp6", w(3, 3), 2, Status::Normal},
  };
}

}  // namespace

TEST(Oracle, HandDerivedValues) {
  for (const auto& c : cases()) {
    const RootDatum d = parse_datum(c.datum);
    EXPECT_EQ(oracle(d, c.mu, c.p).status, c.expected) << c.datum << " " << c.mu.to_string() << " p=" << c.p;
  }
}

TEST(Certify, AgreesAndReplays) {
  for (const auto& c : cases()) {
    const RootDatum d = parse_datum(c.datum);
    const Verdict v = certify(d, c.mu, c.p);
    EXPECT_EQ(v.status, c.expected) << c.datum << " " << c.mu.to_string() << " p=" << c.p;
    EXPECT_FALSE(v.certificate.empty());
    const Verdict back = verdict_from_json(to_json(d, c.mu, c.p, v));
    EXPECT_EQ(back.status, v.status);
    EXPECT_EQ(replay(back), "") << c.datum << " " << c.mu.to_string();
  }
}

TEST(Certify, TamperedCertificateFailsReplay) {
  const RootDatum d = parse_datum("B3:SO7");
  Verdict v = certify(d, w(3, 2), 2);
  ASSERT_EQ(v.status, Status::NonNormal);
  v.status = Status::Normal;
  v.certificate.front().status = Status::Normal;
  EXPECT_NE(replay(v), "");
}

TEST(Certify, SliceAtMinusculeBottom) {
  const RootDatum d = parse_datum("B3:SO7");
  EXPECT_EQ(certify_slice(d, zero_coweight(3), w(3, 2), 2).status, Status::NonNormal);
  EXPECT_EQ(certify_slice(d, w(3, 2), w(3, 2), 2).status, Status::Normal);
}

TEST(Rules, NamesRoundTrip) {
  for (Rule r : {Rule::CharNotDividing, Rule::Minuscule, Rule::QmNonNormal, Rule::MinPlusQm,
                 Rule::UpwardPropagation, Rule::SliceDecomposition, Rule::LeviReduction,
                 Rule::MinDegNormal, Rule::MinDegNonNormal, Rule::PointSlice, Rule::ProductSplit,
                 Rule::ClassificationTheorem}) {
    EXPECT_EQ(parse_rule(to_string(r)), r);
    EXPECT_FALSE(rule_statement(r).empty());
  }
}

TEST(Input, Validation) {
  const RootDatum d = parse_datum("A2:adjoint");
  EXPECT_THROW(oracle(d, Coweight{1, 1}, 4), Error);
  EXPECT_THROW(oracle(parse_datum("A2:sc"), Coweight{1, 0}, 2), Error);  // not in the lattice
  EXPECT_THROW(oracle(d, Coweight{2, -1}, 2), Error);  // not dominant
  const RootDatum product = datum_from_descriptor(
      nlohmann::json{{"cartan", {{2, 0}, {0, 2}}}, {"lattice", {{1, 0}, {0, 1}}}});
  EXPECT_THROW(oracle(product, Coweight{1, 1}, 2), Error);
}

TEST(NormalLocus, TypeAOnly) {
  const RootDatum d = parse_datum("A2:adjoint");
  auto strata = normal_locus_lower_bound(d, Coweight{3, 0});
  std::sort(strata.begin(), strata.end());
  // 3 omega_1 - (omega_1 + omega_2) = alpha_1; 3 omega_1 - 0 has full support.
  EXPECT_EQ(strata, (std::vector<Coweight>{Coweight{1, 1}, Coweight{3, 0}}));
  EXPECT_THROW(normal_locus_lower_bound(parse_datum("B3:SO7"), w(3, 1)), Error);
}
