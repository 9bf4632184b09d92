#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affgr/bruhat.hpp"
#include "affgr/root_datum.hpp"

namespace affgr {

enum class Status { Normal, NonNormal, Unknown };

enum class Rule {
  CharNotDividing,
  Minuscule,
  QmNonNormal,
  MinPlusQm,
  UpwardPropagation,
  SliceDecomposition,
  LeviReduction,
  MinDegNormal,
  MinDegNonNormal,
  PointSlice,
  ProductSplit,
  ClassificationTheorem,
};

std::string_view to_string(Status s);
std::string_view to_string(Rule r);
Status parse_status(std::string_view text);
Rule parse_rule(std::string_view text);
/// Plain-language statement justifying a rule.
std::string_view rule_statement(Rule r);

/// One step of a certificate. Steps form a tree stored in pre-order; `depth`
/// gives the nesting and `status` what the step establishes.
struct RuleApplication {
  Rule rule;
  Status status = Status::Unknown;
  int depth = 0;
  nlohmann::json data;
};

struct Verdict {
  Status status = Status::Unknown;
  std::vector<RuleApplication> certificate;
  std::vector<std::string> undecided;  // slices nobody could settle
};

/// Throws Parse unless p is 0 or a prime.
void require_characteristic(Int p);
bool char_divides(Int p, Int order);

/// Direct evaluation of the classification list. Throws NotAlmostSimple.
Verdict oracle(const RootDatum& datum, const Coweight& mu, Int p);

/// Normality of the slice of a verified cover.
Status mindeg_slice_normality(const RootDatum& datum, const CoverEdge& edge, Int p);

/// Derives a verdict from local rules only, with a replayable certificate.
Verdict certify(const RootDatum& datum, const Coweight& mu, Int p);

/// Slice at la inside the closure of mu, decided by the same rules.
Verdict certify_slice(const RootDatum& datum, const Coweight& la, const Coweight& mu, Int p);

/// Re-checks every step of a certificate; returns an empty string on success
/// and a description of the first failing step otherwise.
std::string replay(const Verdict& v);

/// Strata of Gr_{<=mu} known to lie in the normal locus (type A).
std::vector<Coweight> normal_locus_lower_bound(const RootDatum& datum, const Coweight& mu);

nlohmann::json datum_descriptor(const RootDatum& datum);
RootDatum datum_from_descriptor(const nlohmann::json& j);

nlohmann::json to_json(const RootDatum& datum, const Coweight& mu, Int p, const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace affgr
