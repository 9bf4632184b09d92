#pragma once

#include <span>
#include <string>
#include <vector>

#include "affgr/int_matrix.hpp"

namespace affgr {

/// Row Hermite normal form with zero rows dropped: pivots strictly increase
/// left to right, are positive, and entries above a pivot lie in [0, pivot).
/// The row span is unchanged.
IntMatrix hermite_form(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix form;       // same shape as the input; zero rows at the bottom
  IntMatrix transform;  // unimodular, transform * input == form
  std::size_t rank = 0;
};
HermiteDecomposition hermite_decompose(const IntMatrix& m);

/// Invariant factors d1 | d2 | ... of Z^cols / rowspan(m). Factors equal to
/// one are omitted; each free summand is reported as a trailing 0.
std::vector<Int> smith_invariants(const IntMatrix& m);

/// Z-basis (in Hermite form) of { a : a * m == 0 }.
IntMatrix left_kernel(const IntMatrix& m);

/// A full-rank-or-not sublattice of Q^n, stored as (1/denominator) times the
/// row span of an integer matrix in canonical Hermite form. Equal lattices
/// have identical representations.
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_generators(const IntMatrix& generators,
                                 Int denominator = 1);
  static Lattice standard(std::size_t n);
  static Lattice zero(std::size_t n);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  Int denominator() const noexcept { return denominator_; }

  bool contains(std::span<const Int> v) const;
  bool contains(std::span<const Rational> v) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

  std::string to_string() const;

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
  Int denominator_ = 1;
};

bool member(std::span<const Rational> v, const Lattice& lattice);

/// L intersected with the rational span of `span_vectors`.
Lattice intersect_saturate(const Lattice& lattice,
                           const std::vector<RatVector>& span_vectors);

/// Invariant factors of sup / sub (same conventions as smith_invariants).
/// Throws NotSublattice when sub is not contained in sup.
std::vector<Int> quotient_invariants(const Lattice& sup, const Lattice& sub);

/// Order of a finite quotient; 0 when a free summand is present.
Int invariants_order(std::span<const Int> invariants);

Lattice lattice_sum(const Lattice& a, const Lattice& b);

}  // namespace affgr
