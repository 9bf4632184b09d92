#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affgr/int_matrix.hpp"
#include "affgr/normality.hpp"

namespace affgr {

/// Exponents (a, b, c) of x^a y^b z^c.
using Monomial = std::array<int, 3>;

/// Element of Z[x,y,z]/(z^m + xy), or of F_p[x,y,z]/(z^m + xy) when p > 0,
/// kept in the reduced basis x^a y^b z^c with c < m.
class SlicePoly {
 public:
  SlicePoly() = default;
  SlicePoly(int m, Int p = 0) : m_(m), p_(p) {}
  static SlicePoly constant(int m, Int value, Int p = 0);
  static SlicePoly monomial(int m, Monomial e, Int coeff = 1, Int p = 0);
  static SlicePoly x(int m, Int p = 0) { return monomial(m, {1, 0, 0}, 1, p); }
  static SlicePoly y(int m, Int p = 0) { return monomial(m, {0, 1, 0}, 1, p); }
  static SlicePoly z(int m, Int p = 0) { return monomial(m, {0, 0, 1}, 1, p); }

  int m() const noexcept { return m_; }
  Int characteristic() const noexcept { return p_; }
  const std::map<Monomial, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::string to_string() const;

  SlicePoly operator+(const SlicePoly& o) const;
  SlicePoly operator-(const SlicePoly& o) const;
  SlicePoly operator-() const;
  SlicePoly operator*(const SlicePoly& o) const;
  SlicePoly scaled(Int k) const;
  friend bool operator==(const SlicePoly&, const SlicePoly&) = default;

 private:
  void add_term(Monomial e, Int coeff);

  int m_ = 2;
  Int p_ = 0;
  std::map<Monomial, Int> terms_;
};

/// Weighted degree with deg x = deg y = m and deg z = 2, which makes z^m + xy
/// homogeneous.
int weighted_degree(int m, const Monomial& e);

/// Reduced monomials of the given weighted degree.
std::vector<Monomial> monomials_of_degree(int m, int degree);

struct SliceRingInfo {
  int m = 2;
  std::string relation;
  int dimension = 2;
  int jacobian_rank_at_origin = 0;
  bool singular_at_origin = true;
};

/// Presentation Z[x,y,z]/(z^m + xy). Throws BadExponent for m < 2.
SliceRingInfo gl2_slice_ring(int m);

/// Laurent polynomial in the uniformizer with SlicePoly coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int m, Int p = 0) : m_(m), p_(p) {}
  static LaurentPoly term(const SlicePoly& c, int exponent);
  static LaurentPoly constant(int m, Int value, Int p = 0);

  const std::map<int, SlicePoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int ring_m() const noexcept { return m_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(Int k) const;
  LaurentPoly shifted(int k) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add(int exponent, const SlicePoly& c);

  int m_ = 2;
  Int p_ = 0;
  std::map<int, SlicePoly> coeffs_;
};

using Matrix2 = std::array<std::array<LaurentPoly, 2>, 2>;
using Matrix4 = std::array<std::array<LaurentPoly, 4>, 4>;

/// Image under the adjoint action on 2x2 matrices. Throws NonInvertible
/// unless the determinant is +-(a power of the uniformizer).
Matrix4 adjoint_rep(const Matrix2& g);

/// The rank-one slice matrix for <2rho, mu> = m (entries in Z[x,y,z]/(z^m+xy)).
Matrix2 rank1_slice_matrix(int m);

/// Every uniformizer coefficient of every entry of adjoint_rep(rank1_slice_matrix(m)).
std::vector<SlicePoly> adjoint_coefficients(int m);

/// The subring generated by x, y, xz, yz, z^2, 2z. Products of monomials are
/// signed monomials, so each graded piece is spanned by scaled monomials:
/// `generators` maps a monomial to the gcd of its attainable coefficients
/// (integer mode, p = 0) or to 1 (p > 0).
struct SubringBasis {
  int m = 2;
  Int p = 0;
  int degree_bound = 0;
  std::map<Monomial, Int> basis;

  bool contains(const SlicePoly& f) const;
  /// Every reduced monomial of degree <= bound is in the subring.
  bool equals_full_ring() const;
  /// Every index [full : subring] is a power of two (integer mode only).
  bool full_after_inverting_two() const;
};

std::vector<SlicePoly> pgl2_generators(int m, Int p = 0);
SubringBasis pgl2_subring(int m, Int p, int degree_bound);
SubringBasis generated_subring(int m, Int p, int degree_bound,
                               const std::vector<SlicePoly>& generators);

struct Rank1Witness {
  Status status = Status::Unknown;
  int m = 2;
  Int p = 0;
  std::optional<std::string> witness;
  bool witness_in_fraction_field = false;  // z * x == xz
  bool witness_square_in_ring = false;     // z^2 in the subring
  bool witness_in_ring = false;
};

Rank1Witness normality_witness_rank1(int m, Int p);

nlohmann::json to_json(const SubringBasis& b);
nlohmann::json to_json(const Rank1Witness& w);

}  // namespace affgr
