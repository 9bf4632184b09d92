#include "affgr/levi.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "affgr/bruhat.hpp"
#include "affgr/error.hpp"

namespace affgr {

Coweight restrict_to(const Coweight& mu, std::span<const std::size_t> nodes) {
  Coweight out;
  for (auto v : nodes) out.coords.push_back(mu[v - 1]);
  return out;
}

namespace {

std::vector<RatVector> coroot_span(const RootSystem& rs,
                                   std::span<const std::size_t> nodes) {
  std::vector<RatVector> out;
  for (auto v : nodes) {
    RatVector r;
    for (Int x : rs.cartan().column(v - 1)) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

Lattice coroot_sublattice(const RootSystem& rs, std::span<const std::size_t> nodes) {
  IntMatrix g(0, rs.rank());
  for (auto v : nodes) g.append_row(rs.cartan().column(v - 1));
  return Lattice::from_generators(g);
}

// Lattice in the coordinates <alpha_v, .> for v in nodes.
Lattice restrict_lattice(const Lattice& l, std::span<const std::size_t> nodes) {
  IntMatrix g(0, nodes.size());
  for (std::size_t r = 0; r < l.rank(); ++r) {
    IntVector row;
    for (auto v : nodes) row.push_back(l.basis()(r, v - 1));
    g.append_row(row);
  }
  return Lattice::from_generators(g, l.denominator());
}

RootDatum standard_datum(DynkinType type, const Lattice& lattice) {
  for (const auto& d : isogeny_lattices(type))
    if (d.cochar() == lattice) return d;
  return RootDatum(build_root_system(type), lattice);
}

}  // namespace

LeviData levi_data(const RootDatum& datum, std::span<const std::size_t> support) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::vector<std::size_t>>, LeviData> cache;
  std::vector<std::size_t> nodes(support.begin(), support.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (auto v : nodes) {
    if (v < 1 || v > datum.rank()) {
      throw Error(ErrorCode::IndexOutOfRange, "Levi node " + std::to_string(v));
    }
  }
  auto key = std::make_pair(datum.key(), nodes);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const RootSystem& rs = datum.system();
  const Lattice derived = intersect_saturate(datum.cochar(), coroot_span(rs, nodes));
  const Lattice coroots = coroot_sublattice(rs, nodes);

  std::vector<std::size_t> zero_based;
  for (auto v : nodes) zero_based.push_back(v - 1);
  std::vector<LeviComponent> components;
  Lattice sum = Lattice::zero(rs.rank());
  for (const auto& comp : diagram_components(rs.cartan(), zero_based)) {
    const auto detected = detect_type(rs.cartan().submatrix(comp, comp));
    std::vector<std::size_t> ordered;
    for (auto k : detected->nodes) ordered.push_back(comp[k] + 1);
    const Lattice comp_lattice =
        intersect_saturate(datum.cochar(), coroot_span(rs, ordered));
    sum = lattice_sum(sum, comp_lattice);
    components.push_back(LeviComponent{
        detected->type, ordered, comp_lattice,
        quotient_invariants(comp_lattice, coroot_sublattice(rs, ordered)),
        standard_datum(detected->type, restrict_lattice(comp_lattice, ordered))});
  }

  std::vector<std::size_t> derived_nodes = nodes;
  std::optional<RootDatum> derived_datum;
  if (components.size() == 1) {
    derived_nodes = components.front().nodes;
    derived_datum = components.front().datum;
  } else {
    const IntMatrix sub = rs.cartan().submatrix(zero_based, zero_based);
    derived_datum.emplace(RootSystem::from_cartan(sub), restrict_lattice(derived, nodes));
  }

  LeviData out{datum,
               nodes,
               std::move(components),
               derived,
               coroots,
               quotient_invariants(derived, coroots),
               sum == derived,
               *derived_datum,
               derived_nodes};
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), out);
  return out;
}

ProjectionResult project_der(const RootDatum& datum, std::span<const std::size_t> support,
                             const Coweight& la) {
  const RootSystem& rs = datum.system();
  const std::size_t n = rs.rank();
  std::vector<std::size_t> idx;
  for (auto v : support) idx.push_back(v - 1);
  ProjectionResult out;
  out.la_der.assign(n, Rational(0));
  if (!idx.empty()) {
    // Solve C_I x = la_I, then la_der = sum x_i alpha_i^vee.
    const IntMatrix sub = rs.cartan().submatrix(idx, idx);
    const IntMatrix adj = adjugate(sub);
    const Int det = determinant(sub);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      Rational x(0);
      for (std::size_t b = 0; b < idx.size(); ++b) x += Rational(adj(a, b) * la[idx[b]]);
      x /= Rational(det);
      for (std::size_t r = 0; r < n; ++r) out.la_der[r] += x * rs.cartan()(r, idx[a]);
    }
  }
  out.kappa.resize(n);
  for (std::size_t r = 0; r < n; ++r) out.kappa[r] = Rational(la[r]) - out.la_der[r];
  out.integral = levi_data(datum, support).derived_lattice.contains(out.la_der);
  return out;
}

std::optional<LeviReduction> levi_reduction(const RootDatum& datum, const Coweight& la,
                                            const Coweight& mu) {
  const auto nodes = support(datum, la, mu);
  if (nodes.empty()) return std::nullopt;
  if (!project_der(datum, nodes, la).integral) return std::nullopt;
  const LeviData levi = levi_data(datum, nodes);
  LeviReduction out{nodes,
                    {levi.derived, restrict_to(la, levi.derived_nodes),
                     restrict_to(mu, levi.derived_nodes), levi.derived_nodes},
                    {},
                    levi.product_split,
                    levi.pi1_invariants};
  for (const auto& c : levi.components) {
    out.components.push_back(
        {c.datum, restrict_to(la, c.nodes), restrict_to(mu, c.nodes), c.nodes});
  }
  return out;
}

}  // namespace affgr
