#include "affgr/root_datum.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "affgr/error.hpp"

namespace affgr {

// ---------------------------------------------------------------------------
// Dynkin types

std::string DynkinType::name() const {
  return std::string(1, family) + std::to_string(rank);
}

void validate(DynkinType t) {
  bool ok = false;
  switch (t.family) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 2; break;
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default:
      throw Error(ErrorCode::InvalidRank,
                  std::string("unknown family '") + t.family + "'");
  }
  if (!ok) throw Error(ErrorCode::InvalidRank, "no Dynkin type " + t.name());
}

DynkinType parse_dynkin_type(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorCode::Parse, "bad Dynkin type");
  DynkinType t;
  t.family = text[0];
  auto [ptr, ec] =
      std::from_chars(text.data() + 1, text.data() + text.size(), t.rank);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Parse, "bad Dynkin type '" + std::string(text) + "'");
  }
  validate(t);
  return t;
}

namespace {

// Bourbaki diagrams: 0-based edges and relative squared root lengths.
struct Diagram {
  std::vector<std::pair<int, int>> edges;
  std::vector<Int> lengths;
};

Diagram bourbaki_diagram(DynkinType t) {
  validate(t);
  const int n = t.rank;
  Diagram d;
  d.lengths.assign(n, 2);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A': chain(n); break;
    case 'B': chain(n); d.lengths[n - 1] = 1; break;
    case 'C':
      chain(n);
      std::fill(d.lengths.begin(), d.lengths.end(), 1);
      d.lengths[n - 1] = 2;
      break;
    case 'D':
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F': chain(4); d.lengths = {2, 2, 1, 1}; break;
    case 'G': chain(2); d.lengths = {1, 3}; break;
  }
  return d;
}

}  // namespace

IntMatrix bourbaki_cartan(DynkinType t) {
  const Diagram d = bourbaki_diagram(t);
  const std::size_t n = d.lengths.size();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  for (auto [i, j] : d.edges) {
    const Int m = std::max(d.lengths[i], d.lengths[j]);
    c(i, j) = -m / d.lengths[j];
    c(j, i) = -m / d.lengths[i];
  }
  return c;
}

Int connection_index(DynkinType t) {
  validate(t);
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1);
    default: return 1;
  }
}

// ---------------------------------------------------------------------------
// Diagram analysis

std::vector<std::vector<std::size_t>> diagram_components(
    const IntMatrix& cartan, std::span<const std::size_t> nodes) {
  std::vector<std::vector<std::size_t>> out;
  std::set<std::size_t> pending(nodes.begin(), nodes.end());
  while (!pending.empty()) {
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{*pending.begin()};
    pending.erase(pending.begin());
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (auto it = pending.begin(); it != pending.end();) {
        if (cartan(v, *it) != 0) {
          queue.push_back(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<DynkinType> candidate_types(int r) {
  std::vector<DynkinType> out{{'A', r}};
  if (r >= 3) out.push_back({'B', r});
  if (r >= 2) out.push_back({'C', r});
  if (r >= 4) out.push_back({'D', r});
  if (r >= 6 && r <= 8) out.push_back({'E', r});
  if (r == 4) out.push_back({'F', 4});
  if (r == 2) out.push_back({'G', 2});
  return out;
}

bool match_relabeling(const IntMatrix& ref, const IntMatrix& m,
                      std::vector<std::size_t>& assign,
                      std::vector<bool>& used, std::size_t k) {
  const std::size_t n = ref.rows();
  if (k == n) return true;
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool ok = m(v, v) == ref(k, k);
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = m(v, assign[j]) == ref(k, j) && m(assign[j], v) == ref(j, k);
    }
    if (!ok) continue;
    used[v] = true;
    assign[k] = v;
    if (match_relabeling(ref, m, assign, used, k + 1)) return true;
    used[v] = false;
  }
  return false;
}

}  // namespace

std::optional<DiagramComponent> detect_type(const IntMatrix& cartan) {
  const int r = static_cast<int>(cartan.rows());
  for (DynkinType t : candidate_types(r)) {
    const IntMatrix ref = bourbaki_cartan(t);
    std::vector<std::size_t> assign(r);
    std::vector<bool> used(r, false);
    if (match_relabeling(ref, cartan, assign, used, 0)) {
      return DiagramComponent{t, assign};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Root systems

namespace {

// Positive roots of the system whose pairing is <beta, alpha_j^vee> =
// sum_i beta_i * pair(i, j), generated by root strings from the simple roots.
std::vector<IntVector> closure_positive(const IntMatrix& pair) {
  const std::size_t n = pair.rows();
  std::set<IntVector> roots;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t j = 0; j < n; ++j) {
        Int p = 0;
        IntVector down = beta;
        while (true) {
          down[j] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        Int pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += beta[i] * pair(i, j);
        if (p - pairing > 0) {
          IntVector up = beta;
          up[j] += 1;
          if (!roots.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  std::vector<IntVector> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    Int ha = 0, hb = 0;
    for (Int x : a) ha += x;
    for (Int x : b) hb += x;
    return ha != hb ? ha < hb : a > b;
  });
  return out;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::from_cartan(const IntMatrix& cartan) {
  auto rs = std::make_shared<RootSystem>();
  const std::size_t n = cartan.rows();
  rs->cartan_ = cartan;
  rs->det_ = determinant(cartan);
  if (rs->det_ == 0) {
    throw Error(ErrorCode::NonInvertible, "singular Cartan matrix");
  }
  rs->adjugate_ = adjugate(cartan);

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  rs->root_length_.assign(n, 0);
  rs->max_length_.assign(n, 0);
  for (const auto& comp : diagram_components(cartan, all)) {
    const IntMatrix sub = cartan.submatrix(comp, comp);
    auto detected = detect_type(sub);
    if (!detected) {
      throw Error(ErrorCode::InvalidRank, "Cartan matrix is not of finite type");
    }
    for (auto& v : detected->nodes) v = comp[v];
    rs->components_.push_back(*detected);

    // l_j = l_i * C(j, i) / C(i, j) along edges, starting from 6.
    std::map<std::size_t, Int> len{{comp[0], 6}};
    std::deque<std::size_t> queue{comp[0]};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j : comp) {
        if (i == j || cartan(i, j) == 0 || len.count(j)) continue;
        len[j] = len[i] * cartan(j, i) / cartan(i, j);
        queue.push_back(j);
      }
    }
    Int mx = 0;
    for (auto [v, l] : len) mx = std::max(mx, l);
    for (auto [v, l] : len) {
      rs->root_length_[v] = l;
      rs->max_length_[v] = mx;
    }
  }
  std::sort(rs->components_.begin(), rs->components_.end(),
            [](const DiagramComponent& a, const DiagramComponent& b) {
              return *std::min_element(a.nodes.begin(), a.nodes.end()) <
                     *std::min_element(b.nodes.begin(), b.nodes.end());
            });

  rs->positive_roots_ = closure_positive(cartan);
  rs->positive_coroots_ = closure_positive(cartan.transpose());
  rs->two_rho_.assign(n, 0);
  for (const auto& beta : rs->positive_roots_)
    for (std::size_t j = 0; j < n; ++j) rs->two_rho_[j] += beta[j];
  return rs;
}

DynkinType RootSystem::type() const {
  if (components_.size() != 1) {
    throw Error(ErrorCode::NotAlmostSimple,
                "root system has " + std::to_string(components_.size()) +
                    " components");
  }
  return components_.front().type;
}

std::string RootSystem::type_name() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += "x";
    out += c.type.name();
  }
  return out.empty() ? "T0" : out;
}

RatVector RootSystem::coroot_coefficients(std::span<const Int> coords) const {
  const IntVector v(coords.begin(), coords.end());
  const IntVector num = adjugate_ * v;
  RatVector out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) out[i] = Rational(num[i], det_);
  return out;
}

RatVector RootSystem::coroot_coefficients(std::span<const Rational> coords) const {
  const std::size_t n = rank();
  RatVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i] += Rational(adjugate_(i, j)) * coords[j];
  for (auto& x : out) x /= Rational(det_);
  return out;
}

std::optional<IntVector> RootSystem::integral_coroot_coefficients(
    std::span<const Int> coords) const {
  const IntVector v(coords.begin(), coords.end());
  IntVector num = adjugate_ * v;
  for (auto& x : num) {
    if (x % det_ != 0) return std::nullopt;
    x /= det_;
  }
  return num;
}

Lattice RootSystem::coroot_lattice() const {
  return Lattice::from_generators(cartan_.transpose());
}

Lattice RootSystem::coweight_lattice() const { return Lattice::standard(rank()); }

std::shared_ptr<const RootSystem> build_root_system(DynkinType type) {
  static std::mutex mutex;
  static std::map<DynkinType, std::shared_ptr<const RootSystem>> cache;
  validate(type);
  std::lock_guard lock(mutex);
  auto it = cache.find(type);
  if (it != cache.end()) return it->second;
  auto rs = RootSystem::from_cartan(bourbaki_cartan(type));
  if (type.family == 'B' && type.rank == 2) {
    auto named = std::make_shared<RootSystem>(*rs);
    named->components_.front() = {type, {0, 1}};
    rs = named;
  }
  cache.emplace(type, rs);
  return rs;
}

// ---------------------------------------------------------------------------
// Coweights

bool Coweight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x == 0; });
}

std::ostream& operator<<(std::ostream& os, const Coweight& mu) {
  return os << "(" << mu.to_string() << ")";
}

std::string Coweight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Coweight operator*(Int k, const Coweight& a) {
  Coweight r = a;
  for (auto& x : r.coords) x *= k;
  return r;
}

Coweight zero_coweight(std::size_t rank) { return Coweight(IntVector(rank, 0)); }

Coweight fundamental_coweight(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) {
    throw Error(ErrorCode::IndexOutOfRange,
                "fundamental coweight index " + std::to_string(i));
  }
  Coweight w = zero_coweight(rank);
  w.coords[i - 1] = 1;
  return w;
}

Coweight parse_coweight_coords(std::string_view text) {
  Coweight mu;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::Parse, "bad coweight '" + std::string(text) + "'");
    }
    mu.coords.push_back(v);
    pos = end + 1;
  }
  return mu;
}

Coweight simple_coroot(const RootSystem& rs, std::size_t i) {
  if (i < 1 || i > rs.rank()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "simple coroot index " + std::to_string(i));
  }
  return Coweight(rs.cartan().column(i - 1));
}

Rational pairing_2rho(const RootSystem& rs, std::span<const Rational> coords) {
  Rational s(0);
  for (std::size_t j = 0; j < rs.rank(); ++j)
    s += Rational(rs.two_rho_row()[j]) * coords[j];
  return s;
}

Int pairing_2rho(const RootSystem& rs, const Coweight& mu) {
  Int s = 0;
  for (std::size_t j = 0; j < rs.rank(); ++j)
    s = checked_add(s, checked_mul(rs.two_rho_row()[j], mu[j]));
  return s;
}

bool is_dominant(const Coweight& mu) {
  return std::all_of(mu.coords.begin(), mu.coords.end(),
                     [](Int x) { return x >= 0; });
}

bool is_dominant(std::span<const Rational> coords) {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& x) { return x >= 0; });
}

RatVector epsilon_coordinates(DynkinType t, const Coweight& mu) {
  const std::size_t n = t.rank;
  RatVector eps(n, Rational(0));
  switch (t.family) {
    case 'B':
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) eps[i] += mu[j];
      break;
    case 'C':
      for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) eps[i] += mu[j];
      for (std::size_t i = 0; i < n; ++i) eps[i] += Rational(mu[n - 1], 2);
      break;
    case 'D':
      for (std::size_t j = 0; j + 2 < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) eps[i] += mu[j];
      for (std::size_t i = 0; i + 1 < n; ++i)
        eps[i] += Rational(mu[n - 2] + mu[n - 1], 2);
      eps[n - 1] += Rational(mu[n - 1] - mu[n - 2], 2);
      break;
    default:
      throw Error(ErrorCode::WrongType,
                  "epsilon coordinates only for types B, C, D");
  }
  return eps;
}

// ---------------------------------------------------------------------------
// Root data

RootDatum::RootDatum(std::shared_ptr<const RootSystem> system, Lattice cochar,
                     std::string label)
    : system_(std::move(system)), cochar_(std::move(cochar)), label_(std::move(label)) {
  const std::size_t n = system_->rank();
  if (cochar_.ambient_rank() != n) {
    throw Error(ErrorCode::NotSublattice, "cocharacter lattice has wrong rank");
  }
  if (cochar_.denominator() != 1) {
    throw Error(ErrorCode::NotSublattice,
                "cocharacter lattice is not inside the coweight lattice");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!cochar_.contains(system_->cartan().column(j))) {
      throw Error(ErrorCode::NotSublattice,
                  "coroot lattice is not inside the cocharacter lattice");
    }
  }
}

std::string RootDatum::name() const {
  if (!label_.empty() && system_->almost_simple()) {
    return system_->type().name() + ":" + label_;
  }
  return key();
}

std::string RootDatum::key() const {
  std::ostringstream os;
  os << system_->cartan() << "|" << cochar_.to_string();
  return os.str();
}

std::vector<Int> RootDatum::pi1_invariants() const {
  return quotient_invariants(cochar_, system_->coroot_lattice());
}

Int RootDatum::pi1_order() const { return invariants_order(pi1_invariants()); }

bool RootDatum::contains(const Coweight& mu) const {
  return mu.size() == rank() && cochar_.contains(mu.coords);
}

bool RootDatum::is_simply_connected() const {
  return cochar_ == system_->coroot_lattice();
}

bool RootDatum::is_adjoint() const { return cochar_ == system_->coweight_lattice(); }

namespace {

std::string isogeny_label(DynkinType t, const RootSystem& rs, const Lattice& x) {
  const int n = t.rank;
  const Int order = invariants_order(quotient_invariants(x, rs.coroot_lattice()));
  const Int full = connection_index(t);
  auto has = [&](std::size_t i) {
    return x.contains(fundamental_coweight(n, i).coords);
  };
  switch (t.family) {
    case 'A':
      if (order == 1) return "SL" + std::to_string(n + 1);
      return "SL" + std::to_string(n + 1) + "/mu" + std::to_string(order);
    case 'B': return order == 1 ? "Spin" + std::to_string(2 * n + 1)
                                : "SO" + std::to_string(2 * n + 1);
    case 'C': return order == 1 ? "Sp" + std::to_string(2 * n)
                                : "PSp" + std::to_string(2 * n);
    case 'D':
      if (order == 1) return "Spin" + std::to_string(2 * n);
      if (order == full) return "PSO" + std::to_string(2 * n);
      if (has(1)) return "SO" + std::to_string(2 * n);
      if (has(n)) return "half-spin";
      return "half-spin-flip";
    default:
      return order == full && full > 1 ? "adjoint" : "simply-connected";
  }
}

}  // namespace

std::vector<RootDatum> isogeny_lattices(DynkinType type) {
  static std::mutex mutex;
  static std::map<DynkinType, std::vector<RootDatum>> cache;
  validate(type);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(type);
    if (it != cache.end()) return it->second;
  }
  auto rs = build_root_system(type);
  const std::size_t n = rs->rank();
  const Lattice q = rs->coroot_lattice();
  const Int index = connection_index(type);
  std::vector<Lattice> found{q};
  auto add = [&](const Lattice& l) {
    if (std::find(found.begin(), found.end(), l) == found.end()) found.push_back(l);
  };
  // Every proper subgroup of P/Q (cyclic, or Z/2 x Z/2) is cyclic, so single
  // generators together with P itself exhaust the lattices.
  for (std::size_t i = 1; i <= n; ++i) {
    for (Int k = 1; k <= index; ++k) {
      IntMatrix g = rs->cartan().transpose();
      g.append_row((k * fundamental_coweight(n, i)).coords);
      add(Lattice::from_generators(g));
    }
  }
  add(rs->coweight_lattice());

  std::vector<std::pair<Int, RootDatum>> data;
  for (const auto& l : found) {
    const Int order = invariants_order(quotient_invariants(l, q));
    data.emplace_back(order, RootDatum(rs, l, isogeny_label(type, *rs, l)));
  }
  std::stable_sort(data.begin(), data.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.label() < b.second.label();
  });
  std::vector<RootDatum> out;
  for (auto& [o, d] : data) out.push_back(std::move(d));
  std::lock_guard lock(mutex);
  cache.emplace(type, out);
  return out;
}

RootDatum parse_datum(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::Parse,
                "datum must look like <family><rank>:<label>, got '" +
                    std::string(text) + "'");
  }
  const DynkinType t = parse_dynkin_type(text.substr(0, colon));
  const std::string label(text.substr(colon + 1));
  auto data = isogeny_lattices(t);
  for (const auto& d : data)
    if (d.label() == label) return d;
  if (label == "sc" || label == "simply-connected") return data.front();
  if (label == "ad" || label == "adjoint") return data.back();
  if (t.family == 'A') {
    const std::string m = std::to_string(t.rank + 1);
    if (label == "PGL" + m || label == "SL" + m + "/mu" + m) return data.back();
    if (label == "SL" + m) return data.front();
  }
  throw Error(ErrorCode::Parse, "unknown isogeny label '" + label + "' for " + t.name());
}

Coweight d_flip(const Coweight& mu) {
  Coweight r = mu;
  const std::size_t n = r.size();
  if (n >= 2) std::swap(r.coords[n - 2], r.coords[n - 1]);
  return r;
}

}  // namespace affgr
