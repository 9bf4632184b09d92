#include "affgr/normality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "affgr/error.hpp"
#include "affgr/levi.hpp"

namespace affgr {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Normal: return "Normal";
    case Status::NonNormal: return "NonNormal";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr Rule kAllRules[] = {
    Rule::CharNotDividing, Rule::Minuscule,          Rule::QmNonNormal,
    Rule::MinPlusQm,       Rule::UpwardPropagation,  Rule::SliceDecomposition,
    Rule::LeviReduction,   Rule::MinDegNormal,       Rule::MinDegNonNormal,
    Rule::PointSlice,      Rule::ProductSplit,       Rule::ClassificationTheorem,
};

}  // namespace

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::CharNotDividing: return "CharNotDividing";
    case Rule::Minuscule: return "Minuscule";
    case Rule::QmNonNormal: return "QmNonNormal";
    case Rule::MinPlusQm: return "MinPlusQm";
    case Rule::UpwardPropagation: return "UpwardPropagation";
    case Rule::SliceDecomposition: return "SliceDecomposition";
    case Rule::LeviReduction: return "LeviReduction";
    case Rule::MinDegNormal: return "MinDegNormal";
    case Rule::MinDegNonNormal: return "MinDegNonNormal";
    case Rule::PointSlice: return "PointSlice";
    case Rule::ProductSplit: return "ProductSplit";
    case Rule::ClassificationTheorem: return "ClassificationTheorem";
  }
  return "?";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::Normal, Status::NonNormal, Status::Unknown})
    if (to_string(s) == text) return s;
  throw Error(ErrorCode::Parse, "unknown status '" + std::string(text) + "'");
}

Rule parse_rule(std::string_view text) {
  for (Rule r : kAllRules)
    if (to_string(r) == text) return r;
  throw Error(ErrorCode::Parse, "unknown rule '" + std::string(text) + "'");
}

std::string_view rule_statement(Rule r) {
  switch (r) {
    case Rule::CharNotDividing:
      return "Schubert varieties of G are normal when char(k) does not divide |pi1(G)|";
    case Rule::Minuscule:
      return "for minuscule mu the Schubert variety is a single smooth orbit";
    case Rule::QmNonNormal:
      return "the quasi-minuscule Schubert variety is non-normal when char(k) divides |pi1(G)|";
    case Rule::MinPlusQm:
      return "Gr_{<=mu} is non-normal when la + mu_qm <= mu for a minuscule la and "
             "char(k) divides |pi1(G)|";
    case Rule::UpwardPropagation:
      return "if Gr_{<=nu} is non-normal and nu <= mu then Gr_{<=mu} is non-normal";
    case Rule::SliceDecomposition:
      return "the slice at the minimal la of the component is smoothly equivalent to all "
             "of Gr_{<=mu}, so the two are normal together";
    case Rule::LeviReduction:
      return "the slice at la in Gr_{<=mu} is isomorphic to the slice for the derived "
             "group of the Levi on the support of mu - la when la_der is a cocharacter";
    case Rule::MinDegNormal:
      return "minimal degeneration singularity outside the three non-normal cases";
    case Rule::MinDegNonNormal:
      return "minimal degeneration singularity in one of the three non-normal cases";
    case Rule::PointSlice:
      return "the slice at mu itself is a point";
    case Rule::ProductSplit:
      return "a derived group that is a direct product has a product slice, normal iff "
             "every factor is";
    case Rule::ClassificationTheorem:
      return "classification of normal Schubert varieties when char(k) divides |pi1(G)|; "
             "all are normal otherwise";
  }
  return "";
}

void require_characteristic(Int p) {
  bool ok = p == 0;
  if (p >= 2) {
    ok = true;
    for (Int d = 2; d * d <= p && ok; ++d) ok = p % d != 0;
  }
  if (!ok) throw Error(ErrorCode::Parse, "characteristic must be 0 or a prime");
}

bool char_divides(Int p, Int order) { return p > 0 && order % p == 0; }

// ---------------------------------------------------------------------------
// Descriptors and JSON

json datum_descriptor(const RootDatum& datum) {
  if (!datum.label().empty() && datum.system().almost_simple()) return datum.name();
  json cartan = json::array();
  for (std::size_t r = 0; r < datum.rank(); ++r)
    cartan.push_back(datum.system().cartan().row_vector(r));
  json basis = json::array();
  for (std::size_t r = 0; r < datum.cochar().rank(); ++r)
    basis.push_back(datum.cochar().basis().row_vector(r));
  return {{"cartan", cartan}, {"lattice", basis}, {"denominator", datum.cochar().denominator()}};
}

RootDatum datum_from_descriptor(const json& j) {
  if (j.is_string()) return parse_datum(j.get<std::string>());
  try {
    const auto rows = j.at("cartan").get<std::vector<IntVector>>();
    const auto basis = j.at("lattice").get<std::vector<IntVector>>();
    const std::size_t n = rows.size();
    return RootDatum(RootSystem::from_cartan(IntMatrix::from_rows(rows, n)),
                     Lattice::from_generators(IntMatrix::from_rows(basis, n),
                                              j.value("denominator", Int{1})));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad datum descriptor: ") + e.what());
  }
}

json to_json(const RootDatum& datum, const Coweight& mu, Int p, const Verdict& v) {
  json cert = json::array();
  for (const auto& s : v.certificate) {
    cert.push_back({{"rule", std::string(to_string(s.rule))},
                    {"statement", std::string(rule_statement(s.rule))},
                    {"status", std::string(to_string(s.status))},
                    {"depth", s.depth},
                    {"data", s.data}});
  }
  json out = {{"datum", datum.name()},
              {"mu", mu.coords},
              {"p", p},
              {"status", std::string(to_string(v.status))},
              {"certificate", cert}};
  if (!v.undecided.empty()) out["undecided"] = v.undecided;
  return out;
}

Verdict verdict_from_json(const json& j) {
  try {
    Verdict v;
    v.status = parse_status(j.at("status").get<std::string>());
    for (const auto& s : j.at("certificate")) {
      v.certificate.push_back({parse_rule(s.at("rule").get<std::string>()),
                               parse_status(s.at("status").get<std::string>()),
                               s.at("depth").get<int>(), s.at("data")});
    }
    if (j.contains("undecided")) v.undecided = j["undecided"].get<std::vector<std::string>>();
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad verdict: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

bool in_minuscule_set(const RootDatum& datum, const Coweight& mu) {
  const auto mins = minuscule_set(datum);
  return std::find(mins.begin(), mins.end(), mu) != mins.end();
}

// mu <= target inside the coweight lattice.
bool below_in_coweights(const RootSystem& rs, const Coweight& mu, const Coweight& target) {
  const auto c = rs.integral_coroot_coefficients((target - mu).coords);
  return c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
}

void require_input(const RootDatum& datum, const Coweight& mu, Int p) {
  require_characteristic(p);
  if (!datum.system().almost_simple()) {
    throw Error(ErrorCode::NotAlmostSimple,
                datum.name() + " is not almost simple; decide each simple factor separately");
  }
  require_cocharacter(datum, mu);
  if (!is_dominant(mu)) {
    throw Error(ErrorCode::NotInLattice, "(" + mu.to_string() + ") is not dominant");
  }
}

// Which entry of the classification list applies; empty when none.
std::string classification_clause(const RootDatum& datum, const Coweight& mu) {
  if (in_minuscule_set(datum, mu)) return "minuscule";
  const DynkinType t = datum.system().type();
  const std::size_t n = t.rank;
  auto w = [&](std::size_t i) { return fundamental_coweight(n, i); };
  switch (t.family) {
    case 'A':
      if (n < 2) return {};
      for (Int d = 2; d <= static_cast<Int>(n); ++d) {
        if (below_in_coweights(datum.system(), mu, d * w(1)) ||
            below_in_coweights(datum.system(), mu, d * w(n)))
          return "type A, mu <= d*omega_1 or d*omega_n";
      }
      return {};
    case 'D': {
      const bool has_n = datum.contains(w(n));
      const bool has_n1 = datum.contains(w(n - 1));
      if (datum.is_adjoint() && n % 2 == 1 && (mu == w(1) + w(n - 1) || mu == w(1) + w(n)))
        return "PSO, n odd, mu in {omega_1+omega_(n-1), omega_1+omega_n}";
      if (n % 4 == 2 && datum.pi1_order() == 2) {
        if (has_n && !has_n1 && mu == w(1) + w(n - 1))
          return "half-spin, n = 2 mod 4, mu = omega_1+omega_(n-1)";
        if (has_n1 && !has_n && mu == w(1) + w(n))
          return "flipped half-spin, n = 2 mod 4, mu = omega_1+omega_n";
      }
      return {};
    }
    case 'E':
      if (n == 6 && datum.is_adjoint() &&
          (mu == 2 * w(1) || mu == w(3) || mu == w(5) || mu == 2 * w(6)))
        return "adjoint E6, mu in {2omega_1, omega_3, omega_5, 2omega_6}";
      if (n == 7 && datum.is_adjoint() && mu == w(2)) return "adjoint E7, mu = omega_2";
      return {};
    default: return {};
  }
}

}  // namespace

Verdict oracle(const RootDatum& datum, const Coweight& mu, Int p) {
  require_input(datum, mu, p);
  const Int pi1 = datum.pi1_order();
  std::string clause;
  Status status;
  if (!char_divides(p, pi1)) {
    clause = "char(k) does not divide |pi1|";
    status = Status::Normal;
  } else {
    clause = classification_clause(datum, mu);
    status = clause.empty() ? Status::NonNormal : Status::Normal;
    if (clause.empty()) clause = "not in the list";
  }
  Verdict v;
  v.status = status;
  v.certificate.push_back({Rule::ClassificationTheorem, status, 0,
                           {{"datum", datum_descriptor(datum)},
                            {"mu", mu.coords},
                            {"p", p},
                            {"pi1", pi1},
                            {"clause", clause}}});
  return v;
}

Status mindeg_slice_normality(const RootDatum& datum, const CoverEdge& edge, Int p) {
  const LeviData levi = levi_data(datum, edge.support);
  switch (edge.kind) {
    case CoverKind::SimpleCoroot:
      return levi.components.front().pi1_order() == 2 && p == 2 ? Status::NonNormal
                                                                 : Status::Normal;
    case CoverKind::QuasiMinusculeZero:
      return char_divides(p, levi.pi1_order()) ? Status::NonNormal : Status::Normal;
    case CoverKind::QuasiMinusculeCn:
      return levi.components.front().pi1_order() == 2 && p == 2 ? Status::NonNormal
                                                                 : Status::Normal;
    case CoverKind::Unclassified:
      if (!char_divides(p, levi.pi1_order())) return Status::Normal;
      throw Error(ErrorCode::WrongType, "no criterion for unclassified covers");
  }
  return Status::Unknown;
}

// ---------------------------------------------------------------------------
// Certifier

namespace {

struct Memo {
  std::mutex mutex;
  std::map<std::string, Verdict> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

Verdict leaf(Rule rule, Status status, json data) {
  Verdict v;
  v.status = status;
  v.certificate.push_back({rule, status, 0, std::move(data)});
  return v;
}

Verdict with_children(Rule rule, Status status, json data, const std::vector<Verdict>& kids) {
  Verdict v = leaf(rule, status, std::move(data));
  for (const auto& k : kids) {
    for (auto s : k.certificate) {
      s.depth += 1;
      v.certificate.push_back(std::move(s));
    }
    v.undecided.insert(v.undecided.end(), k.undecided.begin(), k.undecided.end());
  }
  return v;
}

json edge_data(const RootDatum& d, const CoverEdge& e, Int p) {
  return {{"datum", datum_descriptor(d)},
          {"lambda", e.lower.coords},
          {"mu", e.upper.coords},
          {"kind", std::string(to_string(e.kind))},
          {"support", e.support},
          {"p", p}};
}

json reduced_data(const ReducedProblem& r) {
  return {{"datum", datum_descriptor(r.datum)},
          {"lambda", r.la.coords},
          {"mu", r.mu.coords},
          {"nodes", r.nodes}};
}

class Session {
 public:
  explicit Session(Int p) : p_(p) {}

  Verdict schubert(const RootDatum& d, const Coweight& mu) {
    return memoized("G|" + d.key() + "|" + mu.to_string(),
                    [&] { return compute_schubert(d, mu); });
  }

  Verdict slice(const RootDatum& d, const Coweight& la, const Coweight& mu) {
    return memoized("S|" + d.key() + "|" + la.to_string() + "|" + mu.to_string(),
                    [&] { return compute_slice(d, la, mu); });
  }

 private:
  template <class F>
  Verdict memoized(std::string key, F&& compute) {
    key += "|" + std::to_string(p_);
    {
      std::lock_guard lock(memo().mutex);
      auto it = memo().table.find(key);
      if (it != memo().table.end()) return it->second;
    }
    if (!in_progress_.insert(key).second) {
      Verdict v;
      v.undecided.push_back("circular: " + key);
      return v;
    }
    Verdict v = compute();
    in_progress_.erase(key);
    if (v.status != Status::Unknown) {
      std::lock_guard lock(memo().mutex);
      memo().table.emplace(std::move(key), v);
    }
    return v;
  }

  Verdict compute_schubert(const RootDatum& d, const Coweight& mu) {
    const Int pi1 = d.pi1_order();
    const json datum = datum_descriptor(d);
    if (!char_divides(p_, pi1)) {
      return leaf(Rule::CharNotDividing, Status::Normal,
                  {{"datum", datum}, {"p", p_}, {"pi1", pi1}});
    }
    const auto mins = minuscule_set(d);
    if (std::find(mins.begin(), mins.end(), mu) != mins.end()) {
      return leaf(Rule::Minuscule, Status::Normal, {{"datum", datum}, {"mu", mu.coords}});
    }
    const RootSystem& rs = d.system();
    if (rs.almost_simple()) {
      const Coweight qm = quasi_minuscule(rs);
      if (leq(d, qm, mu)) {
        Verdict base = leaf(Rule::QmNonNormal, Status::NonNormal,
                            {{"datum", datum}, {"mu", qm.coords}, {"p", p_}});
        if (qm == mu) return base;
        return with_children(Rule::UpwardPropagation, Status::NonNormal,
                             {{"datum", datum}, {"nu", qm.coords}, {"mu", mu.coords}},
                             {base});
      }
      for (const auto& la : mins) {
        if (la.is_zero() || !leq(d, la + qm, mu)) continue;
        return leaf(Rule::MinPlusQm, Status::NonNormal,
                    {{"datum", datum},
                     {"lambda", la.coords},
                     {"qm", qm.coords},
                     {"mu", mu.coords},
                     {"p", p_}});
      }
    }
    const Coweight base = minuscule_representative(d, mu);
    if (!has_g2_component(rs)) {
      // Walk the interval [base, mu] upward looking for a non-normal cover.
      std::set<Coweight> seen{base};
      std::deque<Coweight> queue{base};
      while (!queue.empty()) {
        const Coweight la = queue.front();
        queue.pop_front();
        for (const auto& e : covers_by_criteria(d, la)) {
          if (!leq(d, e.upper, mu)) continue;
          if (mindeg_slice_normality(d, e, p_) == Status::NonNormal) {
            Verdict cover = leaf(Rule::MinDegNonNormal, Status::NonNormal, edge_data(d, e, p_));
            if (e.upper == mu) return cover;
            return with_children(Rule::UpwardPropagation, Status::NonNormal,
                                 {{"datum", datum}, {"nu", e.upper.coords}, {"mu", mu.coords}},
                                 {cover});
          }
          if (seen.insert(e.upper).second) queue.push_back(e.upper);
        }
      }
    }
    const Verdict child = slice(d, base, mu);
    return with_children(Rule::SliceDecomposition, child.status,
                         {{"datum", datum}, {"lambda", base.coords}, {"mu", mu.coords}},
                         {child});
  }

  Verdict compute_slice(const RootDatum& d, const Coweight& la, const Coweight& mu) {
    const json datum = datum_descriptor(d);
    if (la == mu) {
      return leaf(Rule::PointSlice, Status::Normal,
                  {{"datum", datum}, {"lambda", la.coords}, {"mu", mu.coords}});
    }
    const Int pi1 = d.pi1_order();
    if (!char_divides(p_, pi1)) {
      return leaf(Rule::CharNotDividing, Status::Normal,
                  {{"datum", datum}, {"p", p_}, {"pi1", pi1}});
    }
    const auto nodes = support(d, la, mu);
    if (nodes.size() < d.rank()) {
      if (auto red = levi_reduction(d, la, mu)) {
        json data = {{"datum", datum},
                     {"lambda", la.coords},
                     {"mu", mu.coords},
                     {"support", nodes},
                     {"reduced", reduced_data(red->derived)}};
        if (red->product_split && red->components.size() > 1) {
          std::vector<Verdict> kids;
          json comps = json::array();
          for (const auto& c : red->components) {
            kids.push_back(slice(c.datum, c.la, c.mu));
            comps.push_back(reduced_data(c));
          }
          Status s = Status::Normal;
          for (const auto& k : kids) {
            if (k.status == Status::NonNormal) s = Status::NonNormal;
            else if (k.status == Status::Unknown && s == Status::Normal) s = Status::Unknown;
          }
          Verdict split = with_children(
              Rule::ProductSplit, s,
              {{"datum", datum}, {"lambda", la.coords}, {"mu", mu.coords}, {"components", comps}},
              kids);
          return with_children(Rule::LeviReduction, s, data, {split});
        }
        const Verdict child = slice(red->derived.datum, red->derived.la, red->derived.mu);
        return with_children(Rule::LeviReduction, child.status, data, {child});
      }
    }
    if (!has_g2_component(d.system())) {
      for (const auto& e : covers_by_criteria(d, la)) {
        if (e.upper != mu) continue;
        const Status s = mindeg_slice_normality(d, e, p_);
        return leaf(s == Status::Normal ? Rule::MinDegNormal : Rule::MinDegNonNormal, s,
                    edge_data(d, e, p_));
      }
    }
    if (in_minuscule_set(d, la)) {
      const Verdict child = schubert(d, mu);
      return with_children(Rule::SliceDecomposition, child.status,
                           {{"datum", datum}, {"lambda", la.coords}, {"mu", mu.coords}},
                           {child});
    }
    Verdict v;
    v.undecided.push_back(d.name() + ": slice at (" + la.to_string() + ") in (" +
                          mu.to_string() + ")");
    return v;
  }

  Int p_;
  std::set<std::string> in_progress_;
};

}  // namespace

Verdict certify(const RootDatum& datum, const Coweight& mu, Int p) {
  require_input(datum, mu, p);
  Session session(p);
  return session.schubert(datum, mu);
}

Verdict certify_slice(const RootDatum& datum, const Coweight& la, const Coweight& mu, Int p) {
  require_characteristic(p);
  require_cocharacter(datum, la);
  require_cocharacter(datum, mu);
  Session session(p);
  return session.slice(datum, la, mu);
}

// ---------------------------------------------------------------------------
// Replay

namespace {

Coweight coweight_of(const json& j) { return Coweight(j.get<IntVector>()); }

std::vector<std::size_t> children_of(const std::vector<RuleApplication>& c, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t k = i + 1; k < c.size() && c[k].depth > c[i].depth; ++k)
    if (c[k].depth == c[i].depth + 1) out.push_back(k);
  return out;
}

bool same_problem(const ReducedProblem& r, const json& j) {
  return datum_from_descriptor(j.at("datum")).key() == r.datum.key() &&
         coweight_of(j.at("lambda")) == r.la && coweight_of(j.at("mu")) == r.mu;
}

// Empty string when the step checks out.
std::string check_step(const std::vector<RuleApplication>& cert, std::size_t i) {
  const RuleApplication& s = cert[i];
  const json& j = s.data;
  const RootDatum d = datum_from_descriptor(j.at("datum"));
  const auto kids = children_of(cert, i);
  auto p = [&] { return j.at("p").get<Int>(); };
  auto fail = [&](const std::string& why) {
    return std::string(to_string(s.rule)) + ": " + why;
  };
  switch (s.rule) {
    case Rule::CharNotDividing:
      if (char_divides(p(), d.pi1_order())) return fail("characteristic divides pi1");
      return s.status == Status::Normal ? "" : fail("status");
    case Rule::Minuscule:
      if (!in_minuscule_set(d, coweight_of(j.at("mu")))) return fail("not minuscule");
      return s.status == Status::Normal ? "" : fail("status");
    case Rule::QmNonNormal:
      if (!char_divides(p(), d.pi1_order())) return fail("characteristic does not divide pi1");
      if (quasi_minuscule(d.system()) != coweight_of(j.at("mu"))) return fail("not quasi-minuscule");
      return s.status == Status::NonNormal ? "" : fail("status");
    case Rule::MinPlusQm: {
      const Coweight la = coweight_of(j.at("lambda"));
      const Coweight qm = coweight_of(j.at("qm"));
      if (!char_divides(p(), d.pi1_order())) return fail("characteristic does not divide pi1");
      if (quasi_minuscule(d.system()) != qm) return fail("not quasi-minuscule");
      if (!in_minuscule_set(d, la)) return fail("lambda not minuscule");
      if (!leq(d, la + qm, coweight_of(j.at("mu")))) return fail("la + qm not below mu");
      return s.status == Status::NonNormal ? "" : fail("status");
    }
    case Rule::UpwardPropagation: {
      const Coweight nu = coweight_of(j.at("nu"));
      if (!leq(d, nu, coweight_of(j.at("mu")))) return fail("nu not below mu");
      if (kids.size() != 1 || cert[kids[0]].status != Status::NonNormal ||
          coweight_of(cert[kids[0]].data.at("mu")) != nu)
        return fail("needs one non-normal child for nu");
      return s.status == Status::NonNormal ? "" : fail("status");
    }
    case Rule::SliceDecomposition: {
      const Coweight la = coweight_of(j.at("lambda"));
      if (!in_minuscule_set(d, la) || !leq(d, la, coweight_of(j.at("mu"))))
        return fail("lambda is not the minimal element below mu");
      if (kids.size() != 1 || cert[kids[0]].status != s.status) return fail("child status");
      return "";
    }
    case Rule::LeviReduction: {
      const auto red = levi_reduction(d, coweight_of(j.at("lambda")), coweight_of(j.at("mu")));
      if (!red) return fail("reduction unavailable");
      if (j.at("support").get<std::vector<std::size_t>>() != red->support)
        return fail("support");
      if (!same_problem(red->derived, j.at("reduced"))) return fail("reduced problem");
      if (kids.size() != 1 || cert[kids[0]].status != s.status) return fail("child status");
      return "";
    }
    case Rule::ProductSplit: {
      const auto red = levi_reduction(d, coweight_of(j.at("lambda")), coweight_of(j.at("mu")));
      if (!red || !red->product_split) return fail("derived group does not split");
      const json& comps = j.at("components");
      if (comps.size() != red->components.size() || kids.size() != comps.size())
        return fail("component count");
      Status combined = Status::Normal;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (!same_problem(red->components[k], comps[k])) return fail("component problem");
        const Status cs = cert[kids[k]].status;
        if (cs == Status::NonNormal) combined = Status::NonNormal;
        else if (cs == Status::Unknown && combined == Status::Normal) combined = Status::Unknown;
      }
      return combined == s.status ? "" : fail("combined status");
    }
    case Rule::MinDegNormal:
    case Rule::MinDegNonNormal: {
      const Coweight la = coweight_of(j.at("lambda"));
      const Coweight mu = coweight_of(j.at("mu"));
      if (!covers_bruteforce(d, la, mu)) return fail("not a cover");
      const auto edges = covers_by_criteria(d, la);
      auto it = std::find_if(edges.begin(), edges.end(),
                             [&](const CoverEdge& e) { return e.upper == mu; });
      if (it == edges.end() || std::string(to_string(it->kind)) != j.at("kind"))
        return fail("cover kind");
      const Status expect = mindeg_slice_normality(d, *it, p());
      const Rule rule = expect == Status::Normal ? Rule::MinDegNormal : Rule::MinDegNonNormal;
      return expect == s.status && rule == s.rule ? "" : fail("status");
    }
    case Rule::PointSlice:
      if (coweight_of(j.at("lambda")) != coweight_of(j.at("mu"))) return fail("not a point");
      return s.status == Status::Normal ? "" : fail("status");
    case Rule::ClassificationTheorem:
      return oracle(d, coweight_of(j.at("mu")), p()).status == s.status ? "" : fail("status");
  }
  return fail("unknown rule");
}

}  // namespace

std::string replay(const Verdict& v) {
  if (v.certificate.empty()) {
    return v.status == Status::Unknown ? "" : "empty certificate for a decided verdict";
  }
  if (v.certificate.front().status != v.status) return "root step disagrees with verdict";
  for (std::size_t i = 0; i < v.certificate.size(); ++i) {
    try {
      auto why = check_step(v.certificate, i);
      if (!why.empty()) return "step " + std::to_string(i) + " " + why;
    } catch (const std::exception& e) {
      return "step " + std::to_string(i) + " raised: " + e.what();
    }
  }
  return "";
}

std::vector<Coweight> normal_locus_lower_bound(const RootDatum& datum, const Coweight& mu) {
  if (!datum.system().almost_simple() || datum.system().type().family != 'A') {
    throw Error(ErrorCode::WrongType, "normal locus bound is stated for type A only");
  }
  require_cocharacter(datum, mu);
  std::vector<Coweight> out;
  const RootSystem& rs = datum.system();
  for (const auto& la : dominant_up_to(datum, pairing_2rho(rs, mu))) {
    const auto c = rs.integral_coroot_coefficients((mu - la).coords);
    if (!c || std::any_of(c->begin(), c->end(), [](Int x) { return x < 0; })) continue;
    if (std::any_of(c->begin(), c->end(), [](Int x) { return x == 0; })) out.push_back(la);
  }
  return out;
}

}  // namespace affgr
