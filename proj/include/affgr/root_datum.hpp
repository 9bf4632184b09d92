#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affgr/int_matrix.hpp"
#include "affgr/lattice.hpp"

namespace affgr {

/// A connected Dynkin type with Bourbaki numbering.
struct DynkinType {
  char family = 'A';
  int rank = 1;

  std::string name() const;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

/// Throws InvalidRank unless the rank is admissible for the family
/// (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2).
void validate(DynkinType type);
DynkinType parse_dynkin_type(std::string_view text);

/// Cartan matrix with entry (i, j) = <alpha_i, alpha_j^vee>, Bourbaki numbering.
IntMatrix bourbaki_cartan(DynkinType type);

/// Connection index |P^vee / Q^vee| of a connected type.
Int connection_index(DynkinType type);

/// A connected piece of a Dynkin diagram. nodes[k] is the local index of
/// Bourbaki node k+1 of `type`.
struct DiagramComponent {
  DynkinType type;
  std::vector<std::size_t> nodes;
};

/// Identifies a connected Cartan matrix up to relabeling. A rank-2 double
/// bond is reported as C2.
std::optional<DiagramComponent> detect_type(const IntMatrix& cartan);

/// Connected components of the diagram of `cartan`, each as a sorted list of
/// node indices.
std::vector<std::vector<std::size_t>> diagram_components(
    const IntMatrix& cartan, std::span<const std::size_t> nodes);

class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> from_cartan(const IntMatrix& cartan);

  const IntMatrix& cartan() const noexcept { return cartan_; }
  std::size_t rank() const noexcept { return cartan_.rows(); }
  const std::vector<DiagramComponent>& components() const noexcept {
    return components_;
  }
  bool almost_simple() const noexcept { return components_.size() == 1; }
  /// Type of an almost simple system; throws NotAlmostSimple otherwise.
  DynkinType type() const;
  std::string type_name() const;

  /// Positive roots in the simple-root basis.
  const std::vector<IntVector>& positive_roots() const noexcept {
    return positive_roots_;
  }
  /// Positive coroots in the simple-coroot basis.
  const std::vector<IntVector>& positive_coroots() const noexcept {
    return positive_coroots_;
  }
  /// Entries <2rho, omega_j^vee>.
  const IntVector& two_rho_row() const noexcept { return two_rho_; }
  Int cartan_det() const noexcept { return det_; }

  /// Coefficients x with sum_j x_j alpha_j^vee == v (v in omega^vee coords).
  RatVector coroot_coefficients(std::span<const Int> coords) const;
  RatVector coroot_coefficients(std::span<const Rational> coords) const;
  /// Same, or nullopt when some coefficient is not an integer.
  std::optional<IntVector> integral_coroot_coefficients(
      std::span<const Int> coords) const;

  Lattice coroot_lattice() const;
  Lattice coweight_lattice() const;

  /// True when alpha_i is a long root of its component.
  bool is_long(std::size_t i) const { return root_length_[i] == max_length_[i]; }

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(DynkinType type);

  IntMatrix cartan_;
  IntMatrix adjugate_;
  Int det_ = 1;
  std::vector<DiagramComponent> components_;
  std::vector<IntVector> positive_roots_;
  std::vector<IntVector> positive_coroots_;
  IntVector two_rho_;
  std::vector<Int> root_length_;
  std::vector<Int> max_length_;
};

/// Bourbaki root system of a connected type. Results are cached. B2 keeps its
/// declared name although detect_type reports the diagram as C2.
std::shared_ptr<const RootSystem> build_root_system(DynkinType type);

/// A cocharacter in the fundamental-coweight basis.
struct Coweight {
  IntVector coords;

  Coweight() = default;
  explicit Coweight(IntVector c) : coords(std::move(c)) {}
  Coweight(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const noexcept { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;
  std::string to_string() const;

  friend Coweight operator+(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a, const Coweight& b);
  friend Coweight operator*(Int k, const Coweight& a);
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Coweight& mu);

Coweight zero_coweight(std::size_t rank);
Coweight fundamental_coweight(std::size_t rank, std::size_t i);  // 1-based
Coweight parse_coweight_coords(std::string_view text);

/// alpha_i^vee in the omega^vee basis (column i of the Cartan matrix), 1-based.
Coweight simple_coroot(const RootSystem& rs, std::size_t i);
Rational pairing_2rho(const RootSystem& rs, std::span<const Rational> coords);
Int pairing_2rho(const RootSystem& rs, const Coweight& mu);
bool is_dominant(const Coweight& mu);
bool is_dominant(std::span<const Rational> coords);

/// Debug pretty-printer: epsilon coordinates for types B, C, D.
RatVector epsilon_coordinates(DynkinType type, const Coweight& mu);

/// A root system together with a cocharacter lattice between the coroot
/// lattice and the coweight lattice.
class RootDatum {
 public:
  RootDatum(std::shared_ptr<const RootSystem> system, Lattice cochar,
            std::string label = {});

  const RootSystem& system() const noexcept { return *system_; }
  std::shared_ptr<const RootSystem> system_ptr() const noexcept {
    return system_;
  }
  const Lattice& cochar() const noexcept { return cochar_; }
  std::size_t rank() const noexcept { return system_->rank(); }

  /// Canonical name such as "half-spin"; empty for anonymous data.
  const std::string& label() const noexcept { return label_; }
  /// "<family><rank>:<label>" for named data, a structural key otherwise.
  std::string name() const;
  /// Structural identity (Cartan matrix + lattice), used as a memo key.
  std::string key() const;

  std::vector<Int> pi1_invariants() const;
  Int pi1_order() const;
  bool contains(const Coweight& mu) const;
  bool is_simply_connected() const;
  bool is_adjoint() const;

 private:
  std::shared_ptr<const RootSystem> system_;
  Lattice cochar_;
  std::string label_;
};

/// One datum per subgroup of P^vee/Q^vee, simply connected first and adjoint
/// last.
std::vector<RootDatum> isogeny_lattices(DynkinType type);

/// Parses "<family><rank>:<label>", accepting the canonical label and the
/// aliases sc, simply-connected, ad, adjoint, PGLn, SLn.
RootDatum parse_datum(std::string_view text);

/// The Dynkin flip n-1 <-> n for D_n applied to coordinates.
Coweight d_flip(const Coweight& mu);

}  // namespace affgr
