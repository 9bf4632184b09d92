#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace affgr {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using Rational = boost::rational<Int>;
using RatVector = std::vector<Rational>;

// Overflow-checked primitives. All lattice arithmetic funnels through these so
// that a silent wrap can never produce a wrong normal form.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int floor_div(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Int> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector row_vector(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;
  void swap_rows(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);
  void append_row(std::span<const Int> values);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntVector operator*(const IntMatrix& m, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Int determinant(const IntMatrix& m);
// Adjugate, so that m * adjugate(m) == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace affgr
