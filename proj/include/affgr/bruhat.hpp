#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affgr/root_datum.hpp"

namespace affgr {

/// Which criterion certified a cover. Unclassified marks covers found only by
/// exhaustive search (ambient G2).
enum class CoverKind { SimpleCoroot, QuasiMinusculeZero, QuasiMinusculeCn, Unclassified };

std::string_view to_string(CoverKind kind);

struct CoverEdge {
  Coweight lower;
  Coweight upper;
  std::vector<std::size_t> support;  // 1-based node indices
  CoverKind kind = CoverKind::Unclassified;

  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// Throws NotInLattice when mu is not a cocharacter of the datum.
void require_cocharacter(const RootDatum& datum, const Coweight& mu);

/// Dominance order: mu - la is a non-negative integral sum of simple coroots.
bool leq(const RootDatum& datum, const Coweight& la, const Coweight& mu);
bool less(const RootDatum& datum, const Coweight& la, const Coweight& mu);

/// Order-minimal dominant cocharacters, one per coset of the coroot lattice,
/// sorted by coordinates.
std::vector<Coweight> minuscule_set(const RootDatum& datum);

/// The minuscule element in the coroot-lattice coset of mu.
Coweight minuscule_representative(const RootDatum& datum, const Coweight& mu);

/// Minimal dominant nonzero element of the coroot lattice, by enumeration.
Coweight quasi_minuscule(const RootSystem& rs);

/// Reference values for the classical and E6/E7 types (nullopt otherwise).
std::optional<Coweight> quasi_minuscule_reference(DynkinType type);
std::vector<Coweight> minuscule_reference(DynkinType type);

/// Dominant short coroot of the subsystem on a connected node set, written in
/// the ambient fundamental-coweight basis.
Coweight subsystem_quasi_minuscule(const RootSystem& rs,
                                   std::span<const std::size_t> nodes);

/// All dominant cocharacters of the datum with <2rho, mu> <= bound, sorted,
/// found by scanning a coordinate box.
std::vector<Coweight> dominant_up_to(const RootDatum& datum, Int bound);

/// Covers la < mu by the three criteria for minimal degenerations.
/// Throws AmbientG2 for G2 components.
std::vector<CoverEdge> covers_by_criteria(const RootDatum& datum, const Coweight& la);

/// Exhaustive check that no dominant nu lies strictly between la and mu.
bool covers_bruteforce(const RootDatum& datum, const Coweight& la,
                       const Coweight& mu);

/// Support of mu - la as 1-based node indices. Throws NotComparable unless la <= mu.
std::vector<std::size_t> support(const RootDatum& datum, const Coweight& la,
                                 const Coweight& mu);

struct HasseDiagram {
  RootDatum datum;
  Int height_bound = 0;
  std::vector<Coweight> nodes;
  std::vector<CoverEdge> edges;
};

HasseDiagram hasse(const RootDatum& datum, Int height_bound);
std::string export_dot(const HasseDiagram& h);

std::string support_label(std::span<const std::size_t> support);
nlohmann::json to_json(const CoverEdge& e);
nlohmann::json to_json(const HasseDiagram& h);

bool has_g2_component(const RootSystem& rs);

}  // namespace affgr
