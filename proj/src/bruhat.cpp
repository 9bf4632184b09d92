#include "affgr/bruhat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "affgr/error.hpp"

namespace affgr {

std::string_view to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::SimpleCoroot: return "SimpleCoroot";
    case CoverKind::QuasiMinusculeZero: return "QuasiMinusculeZero";
    case CoverKind::QuasiMinusculeCn: return "QuasiMinusculeCn";
    case CoverKind::Unclassified: return "Unclassified";
  }
  return "?";
}

void require_cocharacter(const RootDatum& datum, const Coweight& mu) {
  if (!datum.contains(mu)) {
    throw Error(ErrorCode::NotInLattice,
                "(" + mu.to_string() + ") is not a cocharacter of " + datum.name());
  }
}

bool has_g2_component(const RootSystem& rs) {
  return std::any_of(rs.components().begin(), rs.components().end(),
                     [](const DiagramComponent& c) { return c.type.family == 'G'; });
}

bool leq(const RootDatum& datum, const Coweight& la, const Coweight& mu) {
  require_cocharacter(datum, la);
  require_cocharacter(datum, mu);
  const auto c = datum.system().integral_coroot_coefficients((mu - la).coords);
  return c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
}

bool less(const RootDatum& datum, const Coweight& la, const Coweight& mu) {
  return la != mu && leq(datum, la, mu);
}

namespace {

std::string cartan_key(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.cartan();
  return os.str();
}

// Dominant coweights with height <= bound accepted by `keep`.
std::vector<Coweight> scan_dominant(const RootSystem& rs, Int bound,
                                    const std::function<bool(const Coweight&)>& keep) {
  const std::size_t n = rs.rank();
  const IntVector& w = rs.two_rho_row();
  std::vector<Coweight> out;
  Coweight cur = zero_coweight(n);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t j, Int left) {
    if (j == n) {
      if (keep(cur)) out.push_back(cur);
      return;
    }
    for (Int v = 0; v * w[j] <= left; ++v) {
      cur.coords[j] = v;
      rec(j + 1, left - v * w[j]);
    }
    cur.coords[j] = 0;
  };
  if (bound >= 0) rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_coroot_lattice(const RootSystem& rs, const Coweight& v) {
  return rs.integral_coroot_coefficients(v.coords).has_value();
}

}  // namespace

std::vector<Coweight> dominant_up_to(const RootDatum& datum, Int bound) {
  return scan_dominant(datum.system(), bound,
                       [&](const Coweight& c) { return datum.contains(c); });
}

std::vector<Coweight> minuscule_set(const RootDatum& datum) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<Coweight>> cache;
  const std::string key = datum.key();
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const RootSystem& rs = datum.system();
  const Int cosets = datum.pi1_order();
  Int bound = 2;
  std::vector<Coweight> reps;
  while (true) {
    auto cands = dominant_up_to(datum, bound);
    std::stable_sort(cands.begin(), cands.end(), [&](const Coweight& a, const Coweight& b) {
      return pairing_2rho(rs, a) < pairing_2rho(rs, b);
    });
    reps.clear();
    for (const auto& c : cands) {
      const bool fresh = std::none_of(reps.begin(), reps.end(), [&](const Coweight& r) {
        return in_coroot_lattice(rs, c - r);
      });
      if (fresh) reps.push_back(c);
    }
    if (static_cast<Int>(reps.size()) == cosets) break;
    bound *= 2;
  }
  std::sort(reps.begin(), reps.end());
  std::lock_guard lock(mutex);
  cache.emplace(key, reps);
  return reps;
}

Coweight minuscule_representative(const RootDatum& datum, const Coweight& mu) {
  for (const auto& m : minuscule_set(datum))
    if (in_coroot_lattice(datum.system(), mu - m)) return m;
  throw Error(ErrorCode::NotInLattice, "no minuscule element in coset of (" +
                                           mu.to_string() + ")");
}

Coweight quasi_minuscule(const RootSystem& rs) {
  Int bound = 2;
  while (true) {
    auto found = scan_dominant(rs, bound, [&](const Coweight& c) {
      return !c.is_zero() && in_coroot_lattice(rs, c);
    });
    if (!found.empty()) {
      return *std::min_element(found.begin(), found.end(),
                               [&](const Coweight& a, const Coweight& b) {
                                 return pairing_2rho(rs, a) < pairing_2rho(rs, b);
                               });
    }
    bound *= 2;
  }
}

std::optional<Coweight> quasi_minuscule_reference(DynkinType t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case 'A':
      if (n == 1) return Coweight{2};
      return fundamental_coweight(n, 1) + fundamental_coweight(n, n);
    case 'B':
      if (n < 3) return std::nullopt;
      return fundamental_coweight(n, 2);
    case 'C': return fundamental_coweight(n, 1);
    case 'D': return fundamental_coweight(n, 2);
    case 'E':
      if (n == 6) return fundamental_coweight(6, 2);
      if (n == 7) return fundamental_coweight(7, 1);
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::vector<Coweight> minuscule_reference(DynkinType t) {
  const std::size_t n = t.rank;
  std::vector<Coweight> out{zero_coweight(n)};
  auto w = [&](std::size_t i) { return fundamental_coweight(n, i); };
  switch (t.family) {
    case 'A':
      for (std::size_t i = 1; i <= n; ++i) out.push_back(w(i));
      break;
    case 'B': out.push_back(w(1)); break;
    case 'C': out.push_back(w(n)); break;
    case 'D': out.push_back(w(1)); out.push_back(w(n - 1)); out.push_back(w(n)); break;
    case 'E':
      if (n == 6) { out.push_back(w(1)); out.push_back(w(6)); }
      if (n == 7) out.push_back(w(7));
      break;
    default: break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Coweight subsystem_quasi_minuscule(const RootSystem& rs,
                                   std::span<const std::size_t> nodes) {
  const std::vector<std::size_t> idx(nodes.begin(), nodes.end());
  const IntMatrix& c = rs.cartan();
  const IntMatrix sub = c.submatrix(idx, idx);
  const auto sys = RootSystem::from_cartan(sub);
  const std::size_t k = idx.size();
  const IntVector* best = nullptr;
  Int best_height = 0;
  for (const auto& beta : sys->positive_coroots()) {
    bool dominant = true;
    for (std::size_t j = 0; j < k && dominant; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += beta[i] * sub(j, i);
      dominant = s >= 0;
    }
    if (!dominant) continue;
    Int h = 0;
    for (Int x : beta) h += x;
    if (!best || h < best_height) {
      best = &beta;
      best_height = h;
    }
  }
  Coweight out = zero_coweight(rs.rank());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < rs.rank(); ++r)
      out.coords[r] += (*best)[i] * c(r, idx[i]);
  return out;
}

namespace {

struct Subdiagram {
  std::vector<std::size_t> nodes;  // 0-based, sorted
  Coweight qm;                     // ambient coordinates
  bool type_c = false;
  std::size_t long_end = 0;        // ambient index of Bourbaki node m when type C_m
};

const std::vector<Subdiagram>& connected_subdiagrams(const RootSystem& rs) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<Subdiagram>> cache;
  const std::string key = cartan_key(rs);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const std::size_t n = rs.rank();
  std::vector<Subdiagram> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) nodes.push_back(i);
    if (nodes.size() < 2) continue;
    if (diagram_components(rs.cartan(), nodes).size() != 1) continue;
    Subdiagram s;
    s.nodes = nodes;
    s.qm = subsystem_quasi_minuscule(rs, nodes);
    const auto detected = detect_type(rs.cartan().submatrix(nodes, nodes));
    if (detected && detected->type.family == 'C') {
      s.type_c = true;
      s.long_end = nodes[detected->nodes.back()];
    }
    out.push_back(std::move(s));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<std::size_t> one_based(std::span<const std::size_t> nodes) {
  std::vector<std::size_t> out;
  for (auto v : nodes) out.push_back(v + 1);
  return out;
}

}  // namespace

std::vector<CoverEdge> covers_by_criteria(const RootDatum& datum, const Coweight& la) {
  const RootSystem& rs = datum.system();
  if (has_g2_component(rs)) {
    throw Error(ErrorCode::AmbientG2,
                "cover criteria exclude type G2; use the exhaustive search");
  }
  require_cocharacter(datum, la);
  if (!is_dominant(la)) {
    throw Error(ErrorCode::NotInLattice, "(" + la.to_string() + ") is not dominant");
  }
  const std::size_t n = rs.rank();
  std::vector<CoverEdge> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Coweight mu = la + simple_coroot(rs, i);
    if (is_dominant(mu)) out.push_back({la, mu, {i}, CoverKind::SimpleCoroot});
  }
  for (const auto& s : connected_subdiagrams(rs)) {
    Coweight mu = la + s.qm;
    if (!is_dominant(mu)) continue;
    const bool vanishes = std::all_of(s.nodes.begin(), s.nodes.end(),
                                      [&](std::size_t v) { return la[v] == 0; });
    if (vanishes) {
      out.push_back({la, mu, one_based(s.nodes), CoverKind::QuasiMinusculeZero});
      continue;
    }
    if (s.type_c) {
      const bool indicator = std::all_of(s.nodes.begin(), s.nodes.end(), [&](std::size_t v) {
        return la[v] == (v == s.long_end ? 1 : 0);
      });
      if (indicator)
        out.push_back({la, mu, one_based(s.nodes), CoverKind::QuasiMinusculeCn});
    }
  }
  std::sort(out.begin(), out.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return a.upper < b.upper;
  });
  return out;
}

bool covers_bruteforce(const RootDatum& datum, const Coweight& la, const Coweight& mu) {
  if (!less(datum, la, mu)) return false;
  const RootSystem& rs = datum.system();
  const IntMatrix& c = rs.cartan();
  const std::size_t n = rs.rank();
  const IntVector top = *rs.integral_coroot_coefficients((mu - la).coords);
  IntVector d(n, 0);
  // partial[i] = la_i + sum over assigned j of C(i, j) d_j
  IntVector partial(la.coords);
  bool found = false;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (found) return;
    if (j == n) {
      if (d == top) return;
      if (std::all_of(d.begin(), d.end(), [](Int x) { return x == 0; })) return;
      found = std::all_of(partial.begin(), partial.end(), [](Int x) { return x >= 0; });
      return;
    }
    for (Int v = 0; v <= top[j] && !found; ++v) {
      d[j] = v;
      for (std::size_t i = 0; i < n; ++i) partial[i] += c(i, j) * v;
      bool viable = true;
      for (std::size_t i = 0; i < n && viable; ++i) {
        // Unassigned off-diagonal terms only decrease, the diagonal one may add 2*top_i.
        const Int room = i > j ? 2 * top[i] : 0;
        viable = partial[i] + room >= 0;
      }
      if (viable) rec(j + 1);
      for (std::size_t i = 0; i < n; ++i) partial[i] -= c(i, j) * v;
    }
    d[j] = 0;
  };
  rec(0);
  return !found;
}

std::vector<std::size_t> support(const RootDatum& datum, const Coweight& la,
                                 const Coweight& mu) {
  if (!leq(datum, la, mu)) {
    throw Error(ErrorCode::NotComparable,
                "(" + la.to_string() + ") is not below (" + mu.to_string() + ")");
  }
  const IntVector c = *datum.system().integral_coroot_coefficients((mu - la).coords);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > 0) out.push_back(i + 1);
  return out;
}

HasseDiagram hasse(const RootDatum& datum, Int height_bound) {
  const RootSystem& rs = datum.system();
  HasseDiagram h{datum, height_bound, {}, {}};
  if (has_g2_component(rs)) {
    h.nodes = dominant_up_to(datum, height_bound);
    for (const auto& lo : h.nodes)
      for (const auto& hi : h.nodes)
        if (covers_bruteforce(datum, lo, hi))
          h.edges.push_back({lo, hi, support(datum, lo, hi), CoverKind::Unclassified});
  } else {
    std::set<Coweight> seen;
    std::deque<Coweight> queue;
    for (const auto& m : minuscule_set(datum)) {
      if (pairing_2rho(rs, m) <= height_bound) {
        seen.insert(m);
        queue.push_back(m);
      }
    }
    while (!queue.empty()) {
      const Coweight la = queue.front();
      queue.pop_front();
      for (auto& e : covers_by_criteria(datum, la)) {
        if (pairing_2rho(rs, e.upper) > height_bound) continue;
        if (seen.insert(e.upper).second) queue.push_back(e.upper);
        h.edges.push_back(std::move(e));
      }
    }
    h.nodes.assign(seen.begin(), seen.end());
  }
  std::sort(h.edges.begin(), h.edges.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  return h;
}

std::string support_label(std::span<const std::size_t> support) {
  std::string out = "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(support[i]);
  }
  return out + "}";
}

std::string export_dot(const HasseDiagram& h) {
  std::map<Coweight, std::size_t> id;
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& v : h.nodes) {
    const std::size_t k = id.size();
    id.emplace(v, k);
    os << "  n" << k << " [label=\"(" << v.to_string() << ")\"];\n";
  }
  for (const auto& e : h.edges) {
    os << "  n" << id.at(e.lower) << " -> n" << id.at(e.upper) << " [label=\""
       << support_label(e.support) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const CoverEdge& e) {
  return {{"lo", e.lower.coords},
          {"hi", e.upper.coords},
          {"support", e.support},
          {"kind", std::string(to_string(e.kind))}};
}

nlohmann::json to_json(const HasseDiagram& h) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& v : h.nodes) nodes.push_back(v.coords);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges) edges.push_back(to_json(e));
  return {{"datum", h.datum.name()},
          {"height_bound", h.height_bound},
          {"nodes", nodes},
          {"edges", edges}};
}

}  // namespace affgr
