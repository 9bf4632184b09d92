#include "affgr/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "affgr/bruhat.hpp"
#include "affgr/error.hpp"
#include "affgr/levi.hpp"
#include "affgr/normality.hpp"
#include "affgr/slice_algebra.hpp"

namespace affgr {

namespace {

constexpr std::size_t kMaxReported = 20;
constexpr Int kSweepHeight = 40;
constexpr Int kCoverHeight = 30;
const Int kPrimes[] = {0, 2, 3, 5, 7};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs fn(i) for i in [0, count) on a small worker pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

Coweight w(std::size_t n, std::size_t i) { return fundamental_coweight(n, i); }

std::vector<std::size_t> range(std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  for (std::size_t i = a; i <= b; ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> join(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string describe(const RootDatum& d, const Coweight& mu, Int p) {
  return d.name() + " mu=(" + mu.to_string() + ") p=" + std::to_string(p);
}

struct Task {
  RootDatum datum;
  Int p;
};

std::vector<Task> sweep_tasks() {
  std::vector<Task> tasks;
  for (auto t : sweep_types())
    for (const auto& d : isogeny_lattices(t))
      for (Int p : kPrimes) tasks.push_back({d, p});
  return tasks;
}

}  // namespace

void SuiteResult::fail(std::string message) {
  passed = false;
  ++failure_count;
  if (failures.size() < kMaxReported) failures.push_back(std::move(message));
}

std::vector<DynkinType> sweep_types() {
  std::vector<DynkinType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

std::vector<DynkinType> cover_types() {
  std::vector<DynkinType> out;
  for (auto t : sweep_types())
    if (t.rank <= 6) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1

SuiteResult suite_classification() {
  Timer timer;
  SuiteResult r{.name = "classification"};
  const auto tasks = sweep_tasks();
  std::mutex mutex;
  std::atomic<long> cases{0};
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& [d, p] = tasks[i];
    const bool divides = char_divides(p, d.pi1_order());
    Coweight qm = quasi_minuscule(d.system());
    const auto mins = minuscule_set(d);
    for (const auto& mu : dominant_up_to(d, kSweepHeight)) {
      ++cases;
      const Verdict v = oracle(d, mu, p);
      if (v.status == Status::Unknown || v.certificate.empty()) {
        std::lock_guard lock(mutex);
        r.fail("oracle undecided: " + describe(d, mu, p));
        continue;
      }
      if (!divides && v.status != Status::Normal) {
        std::lock_guard lock(mutex);
        r.fail("char not dividing but not normal: " + describe(d, mu, p));
      }
      if (divides) {
        // Minuscule plus quasi-minuscule below mu forces non-normality.
        for (const auto& la : mins) {
          if (leq(d, la + qm, mu) && v.status != Status::NonNormal) {
            std::lock_guard lock(mutex);
            r.fail("minuscule + qm below a normal mu: " + describe(d, mu, p));
          }
        }
      }
    }
  });
  r.cases = cases;

  // Spot lists, swept past the height of their largest member.
  auto expect = [&](const std::string& name, Int p, Int bound, std::set<Coweight> want) {
    const RootDatum d = parse_datum(name);
    std::set<Coweight> got;
    for (const auto& mu : dominant_up_to(d, bound)) {
      ++r.cases;
      if (!mu.is_zero() && oracle(d, mu, p).status == Status::Normal) got.insert(mu);
    }
    if (got != want) {
      std::string g;
      for (const auto& c : got) g += " (" + c.to_string() + ")";
      r.fail("normal set of " + name + " at p=" + std::to_string(p) + " was" + g);
    }
  };
  expect("E6:adjoint", 3, 60, {w(6, 1), w(6, 6), 2 * w(6, 1), w(6, 3), w(6, 5), 2 * w(6, 6)});
  expect("E7:adjoint", 2, 80, {w(7, 7), w(7, 2)});
  for (int n = 2; n <= 8; ++n)
    expect("B" + std::to_string(n) + ":SO" + std::to_string(2 * n + 1), 2, kSweepHeight, {w(n, 1)});
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " oracle evaluations, spot lists checked";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 2

SuiteResult suite_agreement() {
  Timer timer;
  SuiteResult r{.name = "agreement"};
  const auto tasks = sweep_tasks();
  std::mutex mutex;
  std::atomic<long> cases{0}, unknown{0}, disagree{0}, replay_fail{0};
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& [d, p] = tasks[i];
    for (const auto& mu : dominant_up_to(d, kSweepHeight)) {
      ++cases;
      const Verdict o = oracle(d, mu, p);
      const Verdict c = certify(d, mu, p);
      std::string problem;
      if (c.status == Status::Unknown) {
        ++unknown;
        problem = "certify undecided";
      } else if (c.status != o.status) {
        ++disagree;
        problem = "certify " + std::string(to_string(c.status)) + " vs oracle " +
                  std::string(to_string(o.status));
      } else if (auto why = replay(verdict_from_json(to_json(d, mu, p, c))); !why.empty()) {
        ++replay_fail;
        problem = "replay failed: " + why;
      }
      if (!problem.empty()) {
        std::lock_guard lock(mutex);
        r.fail(problem + ": " + describe(d, mu, p));
      }
    }
  });
  r.cases = cases;
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " inputs, " + std::to_string(unknown) + " unknown, " +
              std::to_string(disagree) + " disagreements, " + std::to_string(replay_fail) +
              " replay failures";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 3

SuiteResult suite_covers() {
  Timer timer;
  SuiteResult r{.name = "covers"};
  std::vector<RootDatum> data;
  for (auto t : cover_types())
    for (const auto& d : isogeny_lattices(t)) data.push_back(d);
  std::mutex mutex;
  std::atomic<long> cases{0}, edges{0};
  parallel_for(data.size(), [&](std::size_t i) {
    const RootDatum& d = data[i];
    const RootSystem& rs = d.system();
    const bool g2 = has_g2_component(rs);
    const auto nodes = dominant_up_to(d, kCoverHeight);
    const std::set<Coweight> node_set(nodes.begin(), nodes.end());
    for (const auto& la : nodes) {
      std::set<Coweight> crit;
      if (!g2) {
        for (const auto& e : covers_by_criteria(d, la)) {
          if (pairing_2rho(rs, e.upper) <= kCoverHeight) crit.insert(e.upper);
        }
      }
      for (const auto& mu : nodes) {
        if (mu == la) continue;
        ++cases;
        const bool brute = covers_bruteforce(d, la, mu);
        if (brute) ++edges;
        const bool stem = g2 ? brute : crit.count(mu) > 0;
        if (brute != stem) {
          std::lock_guard lock(mutex);
          r.fail(d.name() + " la=(" + la.to_string() + ") mu=(" + mu.to_string() +
                 ") brute=" + std::to_string(brute) + " criteria=" + std::to_string(stem));
        }
      }
      for (const auto& mu : crit) {
        if (!node_set.count(mu)) {
          std::lock_guard lock(mutex);
          r.fail(d.name() + " cover outside the node set: (" + mu.to_string() + ")");
        }
      }
    }
  });
  r.cases = cases;
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " ordered pairs over " + std::to_string(data.size()) +
              " data, " + std::to_string(edges) + " covers";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 4

std::vector<FigureEdge> figure_pso(int n) {
  const std::size_t m = n;
  return {
      {zero_coweight(m), w(m, 2), range(1, m)},
      {w(m, 1), w(m, 3), range(2, m)},
      {w(m, m - 1), w(m, 1) + w(m, m), join(range(1, m - 2), {m})},
      {w(m, 1) + w(m, m), w(m, 2) + w(m, m - 1), range(2, m - 1)},
      {w(m, m), w(m, 1) + w(m, m - 1), range(1, m - 1)},
      {w(m, 1) + w(m, m - 1), w(m, 2) + w(m, m), join(range(2, m - 2), {m})},
  };
}

std::vector<FigureEdge> figure_e6() {
  auto v = [](std::size_t i) { return w(6, i); };
  return {
      {zero_coweight(6), v(2), range(1, 6)},
      {v(2), v(1) + v(6), {1, 3, 4, 5, 6}},
      {v(1) + v(6), v(4), range(2, 5)},
      {v(1), v(5), range(2, 6)},
      {v(5), 2 * v(6), {6}},
      {v(5), v(1) + v(2), range(1, 4)},
      {2 * v(6), v(3) + v(6), range(1, 5)},
      {v(1) + v(2), v(3) + v(6), range(3, 6)},
      {v(6), v(3), range(1, 5)},
      {v(3), 2 * v(1), {1}},
      {v(3), v(6) + v(2), {2, 4, 5, 6}},
      {2 * v(1), v(5) + v(1), range(2, 6)},
      {v(6) + v(2), v(5) + v(1), {1, 3, 4, 5}},
  };
}

std::vector<FigureEdge> figure_e7() {
  auto v = [](std::size_t i) { return w(7, i); };
  return {
      {zero_coweight(7), v(1), range(1, 7)},
      {v(1), v(6), range(2, 7)},
      {v(7), v(2), range(1, 6)},
      {v(2), v(1) + v(7), {1, 3, 4, 5, 6, 7}},
  };
}

std::vector<std::string> compare_figure(const RootDatum& datum,
                                        const std::vector<FigureEdge>& drawn) {
  const RootSystem& rs = datum.system();
  std::set<Coweight> nodes;
  Int bound = 0;
  for (const auto& e : drawn) {
    nodes.insert(e.lower);
    nodes.insert(e.upper);
    bound = std::max({bound, pairing_2rho(rs, e.lower), pairing_2rho(rs, e.upper)});
  }
  const std::string dot = export_dot(hasse(datum, bound));

  // Parse the DOT text back into labeled edges.
  std::map<std::string, std::string> label_of;
  std::set<std::tuple<std::string, std::string, std::string>> rendered;
  static const std::regex node_re(R"re(^\s*(n\d+) \[label="\(([^)]*)\)"\];)re");
  static const std::regex edge_re(R"re(^\s*(n\d+) -> (n\d+) \[label="(\{[^}]*\})"\];)re");
  std::istringstream in(dot);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_search(line, m, edge_re)) {
      rendered.insert({label_of.at(m[1]), label_of.at(m[2]), m[3]});
    } else if (std::regex_search(line, m, node_re)) {
      label_of[m[1]] = m[2];
    }
  }
  std::set<std::string> drawn_labels;
  for (const auto& v : nodes) drawn_labels.insert(v.to_string());

  std::vector<std::string> problems;
  std::set<std::string> present;
  for (const auto& [id, label] : label_of) present.insert(label);
  for (const auto& v : drawn_labels)
    if (!present.count(v)) problems.push_back("missing node (" + v + ")");

  std::set<std::tuple<std::string, std::string, std::string>> expected;
  for (const auto& e : drawn)
    expected.insert({e.lower.to_string(), e.upper.to_string(), support_label(e.support)});
  for (const auto& e : expected)
    if (!rendered.count(e))
      problems.push_back("missing edge (" + std::get<0>(e) + ") -> (" + std::get<1>(e) +
                         ") " + std::get<2>(e));
  for (const auto& e : rendered) {
    if (!drawn_labels.count(std::get<0>(e)) || !drawn_labels.count(std::get<1>(e))) continue;
    if (!expected.count(e))
      problems.push_back("extra edge (" + std::get<0>(e) + ") -> (" + std::get<1>(e) + ") " +
                         std::get<2>(e));
  }
  return problems;
}

SuiteResult suite_figures() {
  Timer timer;
  SuiteResult r{.name = "figures"};
  auto check = [&](const std::string& name, const std::vector<FigureEdge>& drawn) {
    ++r.cases;
    for (const auto& p : compare_figure(parse_datum(name), drawn)) r.fail(name + ": " + p);
  };
  for (int n : {5, 6, 7}) check("D" + std::to_string(n) + ":adjoint", figure_pso(n));
  check("E6:adjoint", figure_e6());
  check("E7:adjoint", figure_e7());
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " figures compared";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 5

namespace {

// Coroot expansions of the quasi-minuscule coweight as tabulated.
std::optional<IntVector> qm_expansion(DynkinType t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case 'A': return IntVector(n, 1);
    case 'B': {
      if (n < 3) return std::nullopt;
      IntVector c(n, 2);
      c.front() = 1;
      c.back() = 1;
      return c;
    }
    case 'C': return IntVector(n, 1);
    case 'D': {
      IntVector c(n, 2);
      c[0] = 1;
      c[n - 2] = 1;
      c[n - 1] = 1;
      return c;
    }
    case 'E':
      if (n == 6) return IntVector{1, 2, 2, 3, 2, 1};
      if (n == 7) return IntVector{2, 2, 3, 4, 3, 2, 1};
      return std::nullopt;
    default: return std::nullopt;
  }
}

Int expected_connection_index(DynkinType t) {
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

}  // namespace

SuiteResult suite_tables() {
  Timer timer;
  SuiteResult r{.name = "tables"};
  for (auto t : sweep_types()) {
    ++r.cases;
    const auto data = isogeny_lattices(t);
    const RootDatum& adj = data.back();
    const RootSystem& rs = adj.system();
    const std::string name = t.name();
    auto mins = minuscule_set(adj);
    auto ref_mins = minuscule_reference(t);
    std::sort(mins.begin(), mins.end());
    std::sort(ref_mins.begin(), ref_mins.end());
    if (mins != ref_mins) r.fail(name + ": minuscule set");
    const Coweight qm = quasi_minuscule(rs);
    std::vector<std::size_t> all = range(0, rs.rank() - 1);
    if (qm != subsystem_quasi_minuscule(rs, all))
      r.fail(name + ": enumerated qm differs from the dominant short coroot");
    if (auto ref = quasi_minuscule_reference(t); ref && qm != *ref)
      r.fail(name + ": quasi-minuscule (" + qm.to_string() + ")");
    if (auto exp = qm_expansion(t)) {
      const auto c = rs.integral_coroot_coefficients(qm.coords);
      if (!c || *c != *exp) r.fail(name + ": coroot expansion of the quasi-minuscule coweight");
    }
    if (adj.pi1_order() != expected_connection_index(t) ||
        connection_index(t) != expected_connection_index(t) ||
        std::abs(rs.cartan_det()) != expected_connection_index(t))
      r.fail(name + ": adjoint pi1 order " + std::to_string(adj.pi1_order()));
    if (!data.front().is_simply_connected() || !adj.is_adjoint())
      r.fail(name + ": isogeny list endpoints");
  }
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " types checked";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 6

SuiteResult suite_rank1() {
  Timer timer;
  SuiteResult r{.name = "rank1"};
  for (int m = 2; m <= 6; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    ++r.cases;
    const auto w2 = normality_witness_rank1(m, 2);
    if (w2.status != Status::NonNormal || w2.witness != "z" || w2.witness_in_ring ||
        !w2.witness_square_in_ring || !w2.witness_in_fraction_field)
      r.fail(tag + ": p=2 witness");
    for (Int p : {0, 3, 5}) {
      ++r.cases;
      const auto wp = normality_witness_rank1(m, p);
      const auto sub = pgl2_subring(m, p, 2 * m + 4);
      const bool spans = p == 0 ? sub.full_after_inverting_two() : sub.equals_full_ring();
      if (wp.status != Status::Normal || !spans)
        r.fail(tag + ": p=" + std::to_string(p) + " should be normal");
    }
    ++r.cases;
    // Generator provenance through the adjoint representation.
    const auto coeffs = adjoint_coefficients(m);
    std::vector<SlicePoly> wanted = pgl2_generators(m);
    wanted.push_back(SlicePoly::monomial(m, {2, 0, 0}));
    wanted.push_back(SlicePoly::monomial(m, {0, 2, 0}));
    for (const auto& g : wanted) {
      const bool found = std::any_of(coeffs.begin(), coeffs.end(), [&](const SlicePoly& c) {
        return c == g || c == -g;
      });
      if (!found) r.fail(tag + ": generator " + g.to_string() + " not among coefficients");
    }
    int top = 0;
    for (const auto& c : coeffs)
      for (const auto& [e, k] : c.terms()) top = std::max(top, weighted_degree(m, e));
    const auto sub = pgl2_subring(m, 0, top);
    for (const auto& c : coeffs)
      if (!sub.contains(c)) r.fail(tag + ": coefficient " + c.to_string() + " outside subring");
    const Matrix2 g = rank1_slice_matrix(m);
    if (!(g[0][0] * g[1][1] - g[0][1] * g[1][0] == LaurentPoly::constant(m, 1)))
      r.fail(tag + ": slice matrix determinant");
  }
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " checks for m in 2..6";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 7

namespace {

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {
    for (auto t : cover_types())
      for (const auto& d : isogeny_lattices(t)) data_.push_back(d);
  }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  const RootDatum& datum() { return data_[index(data_.size())]; }

  const std::vector<Coweight>& nodes(const RootDatum& d) {
    auto it = nodes_.find(d.key());
    if (it == nodes_.end()) it = nodes_.emplace(d.key(), dominant_up_to(d, 30)).first;
    return it->second;
  }

  Coweight dominant(const RootDatum& d) {
    const auto& n = nodes(d);
    return n[index(n.size())];
  }

  // A pair la < mu with mu = la + a random non-negative coroot combination.
  std::pair<Coweight, Coweight> chain(const RootDatum& d) {
    const RootSystem& rs = d.system();
    while (true) {
      const Coweight la = dominant(d);
      Coweight mu = la;
      bool moved = false;
      for (std::size_t i = 1; i <= rs.rank(); ++i) {
        const Int c = std::uniform_int_distribution<Int>(0, 2)(rng_);
        if (c) moved = true;
        mu = mu + c * simple_coroot(rs, i);
      }
      if (moved && is_dominant(mu)) return {la, mu};
    }
  }

  Int characteristic_for(const RootDatum& d) {
    const Int order = d.pi1_order();
    for (Int p : {2, 3, 5, 7})
      if (order % p == 0) return p;
    return 2;
  }

 private:
  std::mt19937 rng_;
  std::vector<RootDatum> data_;
  std::map<std::string, std::vector<Coweight>> nodes_;
};

}  // namespace

SuiteResult suite_properties(unsigned seed, int cases_per_property) {
  Timer timer;
  SuiteResult r{.name = "properties"};
  Sampler s(seed);
  long premise = 0;
  for (int k = 0; k < cases_per_property; ++k) {
    const RootDatum& d = s.datum();
    auto [la, mu] = s.chain(d);
    const RootSystem& rs = d.system();
    ++r.cases;
    if (!less(d, la, mu) || pairing_2rho(rs, la) >= pairing_2rho(rs, mu))
      r.fail("monotonicity: " + d.name() + " (" + la.to_string() + ") < (" + mu.to_string() + ")");
  }
  for (int k = 0; k < cases_per_property; ++k) {
    const RootDatum& d = s.datum();
    auto [nu, mu] = s.chain(d);
    const Int p = s.characteristic_for(d);
    ++r.cases;
    if (oracle(d, nu, p).status != Status::NonNormal) continue;
    ++premise;
    if (oracle(d, mu, p).status != Status::NonNormal || certify(d, mu, p).status != Status::NonNormal)
      r.fail("upward propagation: " + describe(d, mu, p) + " above (" + nu.to_string() + ")");
  }
  for (int k = 0; k < cases_per_property; ++k) {
    const RootDatum& d = s.datum();
    const Coweight mu = s.dominant(d);
    ++r.cases;
    const auto mins = minuscule_set(d);
    long same_coset = 0;
    for (const auto& m : mins)
      if (d.system().integral_coroot_coefficients((mu - m).coords)) ++same_coset;
    const Coweight rep = minuscule_representative(d, mu);
    if (static_cast<Int>(mins.size()) != d.pi1_order() || same_coset != 1 || !leq(d, rep, mu))
      r.fail("coset bijection: " + d.name() + " (" + mu.to_string() + ")");
  }
  {
    std::vector<std::pair<RootDatum, RootDatum>> pairs;
    for (int n : {4, 6, 8}) {
      const std::string t = "D" + std::to_string(n);
      pairs.emplace_back(parse_datum(t + ":half-spin"), parse_datum(t + ":half-spin-flip"));
    }
    for (int k = 0; k < cases_per_property; ++k) {
      const auto& [a, b] = pairs[s.index(pairs.size())];
      const Coweight mu = s.dominant(a);
      ++r.cases;
      const Coweight flipped = d_flip(mu);
      if (!b.contains(flipped)) {
        r.fail("flip leaves the lattice: " + a.name() + " (" + mu.to_string() + ")");
        continue;
      }
      for (Int p : {0, 2}) {
        if (oracle(a, mu, p).status != oracle(b, flipped, p).status ||
            certify(a, mu, p).status != certify(b, flipped, p).status)
          r.fail("flip equivariance: " + describe(a, mu, p));
      }
    }
  }
  for (int k = 0; k < cases_per_property; ++k) {
    const RootDatum& d = s.datum();
    auto [la, mu] = s.chain(d);
    ++r.cases;
    const auto nodes = support(d, la, mu);
    const LeviData levi = levi_data(d, nodes);
    const Coweight diff = restrict_to(mu - la, levi.derived_nodes);
    if (pairing_2rho(levi.derived.system(), diff) != pairing_2rho(d.system(), mu - la))
      r.fail("Levi height: " + d.name() + " (" + la.to_string() + ") < (" + mu.to_string() + ")");
  }
  r.seconds = timer.seconds();
  r.summary = std::to_string(r.cases) + " random cases over 5 properties (" +
              std::to_string(premise) + " with a non-normal lower end)";
  return r;
}

std::vector<std::string> suite_names() {
  return {"classification", "agreement", "covers", "figures", "tables", "rank1", "properties", "all"};
}

std::vector<SuiteResult> run_suite(const std::string& name) {
  if (name == "classification") return {suite_classification()};
  if (name == "agreement") return {suite_agreement()};
  if (name == "covers") return {suite_covers()};
  if (name == "figures") return {suite_figures()};
  if (name == "tables") return {suite_tables()};
  if (name == "rank1") return {suite_rank1()};
  if (name == "properties") return {suite_properties()};
  if (name == "all") {
    return {suite_classification(), suite_agreement(), suite_covers(), suite_figures(),
            suite_tables(),         suite_rank1(),     suite_properties()};
  }
  throw Error(ErrorCode::Parse, "unknown suite '" + name + "'");
}

}  // namespace affgr
