#pragma once

#include <optional>
#include <span>
#include <vector>

#include "affgr/lattice.hpp"
#include "affgr/root_datum.hpp"

namespace affgr {

/// One connected piece of a Levi subdiagram, with its own derived datum in
/// Bourbaki numbering.
struct LeviComponent {
  DynkinType type;
  std::vector<std::size_t> nodes;  // 1-based ambient nodes; nodes[k] is Bourbaki node k+1
  Lattice derived_lattice;         // ambient coordinates
  std::vector<Int> pi1_invariants;
  RootDatum datum;

  Int pi1_order() const { return invariants_order(pi1_invariants); }
};

struct LeviData {
  RootDatum ambient;
  std::vector<std::size_t> support;  // 1-based, sorted
  std::vector<LeviComponent> components;
  Lattice derived_lattice;  // cocharacters of the derived torus, ambient coordinates
  Lattice coroot_lattice;
  std::vector<Int> pi1_invariants;
  bool product_split = true;  // derived lattice is the sum of the component lattices

  /// Derived group as a datum: Bourbaki numbering for one component, support
  /// order otherwise (see derived_nodes).
  RootDatum derived;
  std::vector<std::size_t> derived_nodes;

  Int pi1_order() const { return invariants_order(pi1_invariants); }
};

/// Levi analysis of the node set `support` (1-based). Results are memoized.
LeviData levi_data(const RootDatum& datum, std::span<const std::size_t> support);

struct ProjectionResult {
  RatVector la_der;  // ambient fundamental-coweight coordinates
  RatVector kappa;
  bool integral = false;
};

ProjectionResult project_der(const RootDatum& datum, std::span<const std::size_t> support,
                             const Coweight& la);

struct ReducedProblem {
  RootDatum datum;
  Coweight la;
  Coweight mu;
  std::vector<std::size_t> nodes;  // ambient nodes matching the datum's numbering
};

struct LeviReduction {
  std::vector<std::size_t> support;
  ReducedProblem derived;                 // the whole derived group
  std::vector<ReducedProblem> components; // one per connected piece
  bool product_split = true;
  std::vector<Int> pi1_invariants;
};

/// Transfers the slice at la in the closure of mu to the derived group of the
/// Levi on the support of mu - la. nullopt when the projection of la is not a
/// cocharacter of that derived group.
std::optional<LeviReduction> levi_reduction(const RootDatum& datum, const Coweight& la,
                                            const Coweight& mu);

/// Restriction of a coweight to the given 1-based nodes.
Coweight restrict_to(const Coweight& mu, std::span<const std::size_t> nodes);

}  // namespace affgr
