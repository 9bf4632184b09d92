#include "affgr/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "affgr/error.hpp"

namespace affgr {

namespace {

Int abs_int(Int a) { return a < 0 ? -a : a; }

// Common denominator of a rational vector.
Int denominator_of(std::span<const Rational> v) {
  Int d = 1;
  for (const auto& x : v) d = lcm(d, x.denominator());
  return d;
}

IntVector scale_to_integers(std::span<const Rational> v, Int d) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = checked_mul(v[i].numerator(), d / v[i].denominator());
  }
  return out;
}

// Reduce `v` by the echelon rows of `h`. Returns false when some pivot entry
// is not divisible; on success `coords` holds the coefficients.
bool reduce_by_echelon(const IntMatrix& h, IntVector& v, IntVector* coords) {
  if (coords) coords->assign(h.rows(), 0);
  std::size_t col = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    while (h(r, col) == 0) ++col;
    const Int pivot = h(r, col);
    if (v[col] % pivot != 0) return false;
    const Int q = v[col] / pivot;
    if (q != 0) {
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = checked_sub(v[c], checked_mul(q, h(r, c)));
    }
    if (coords) (*coords)[r] = q;
  }
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

}  // namespace

HermiteDecomposition hermite_decompose(const IntMatrix& m) {
  HermiteDecomposition out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on column `col` among rows row..end.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = row; r < h.rows(); ++r) {
        if (h(r, col) != 0 &&
            (best == h.rows() || abs_int(h(r, col)) < abs_int(h(best, col))))
          best = r;
      }
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool done = true;
      for (std::size_t r = row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        const Int q = floor_div(h(r, col), h(row, col));
        h.add_row_multiple(r, row, -q);
        u.add_row_multiple(r, row, -q);
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    const Int pivot = h(row, col);
    for (std::size_t r = 0; r < row; ++r) {
      const Int q = floor_div(h(r, col), pivot);
      h.add_row_multiple(r, row, -q);
      u.add_row_multiple(r, row, -q);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

IntMatrix hermite_form(const IntMatrix& m) {
  auto d = hermite_decompose(m);
  IntMatrix h(0, m.cols());
  for (std::size_t r = 0; r < d.rank; ++r) h.append_row(d.form.row(r));
  return h;
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 &&
              (pr == rows || abs_int(a(r, c)) < abs_int(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) goto finished;
      a.swap_rows(t, pr);
      if (pc != t)
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, pc));
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const Int q = floor_div(a(r, t), a(t, t));
        a.add_row_multiple(r, t, -q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const Int q = floor_div(a(t, c), a(t, t));
        if (q != 0)
          for (std::size_t r = 0; r < rows; ++r)
            a(r, c) = checked_sub(a(r, c), checked_mul(q, a(r, t)));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            a.add_row_multiple(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs_int(a(t, t)));
  }
finished:
  std::vector<Int> out;
  for (Int d : diag)
    if (d != 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  for (std::size_t i = diag.size(); i < cols; ++i) out.push_back(0);
  return out;
}

IntMatrix left_kernel(const IntMatrix& m) {
  auto d = hermite_decompose(m);
  IntMatrix k(0, m.rows());
  for (std::size_t r = d.rank; r < m.rows(); ++r) k.append_row(d.transform.row(r));
  return hermite_form(k);
}

Lattice Lattice::from_generators(const IntMatrix& generators, Int denominator) {
  if (denominator <= 0) {
    throw Error(ErrorCode::NotInLattice, "lattice denominator must be positive");
  }
  Lattice l;
  l.ambient_rank_ = generators.cols();
  l.basis_ = hermite_form(generators);
  Int g = denominator;
  for (std::size_t r = 0; r < l.basis_.rows(); ++r)
    for (std::size_t c = 0; c < l.basis_.cols(); ++c) g = gcd(g, l.basis_(r, c));
  if (g > 1) {
    for (std::size_t r = 0; r < l.basis_.rows(); ++r)
      for (std::size_t c = 0; c < l.basis_.cols(); ++c) l.basis_(r, c) /= g;
    denominator /= g;
  }
  l.denominator_ = denominator;
  return l;
}

Lattice Lattice::standard(std::size_t n) {
  return from_generators(IntMatrix::identity(n));
}

Lattice Lattice::zero(std::size_t n) { return from_generators(IntMatrix(0, n)); }

bool Lattice::contains(std::span<const Int> v) const {
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = checked_mul(v[i], denominator_);
  return reduce_by_echelon(basis_, w, nullptr);
}

bool Lattice::contains(std::span<const Rational> v) const {
  // v * denominator_ must be integral.
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational x = v[i] * Rational(denominator_);
    if (x.denominator() != 1) return false;
    w[i] = x.numerator();
  }
  return reduce_by_echelon(basis_, w, nullptr);
}

std::string Lattice::to_string() const {
  std::ostringstream os;
  os << basis_;
  if (denominator_ != 1) os << "/" << denominator_;
  return os.str();
}

bool member(std::span<const Rational> v, const Lattice& lattice) {
  return lattice.contains(v);
}

Lattice intersect_saturate(const Lattice& lattice,
                           const std::vector<RatVector>& span_vectors) {
  const std::size_t n = lattice.ambient_rank();
  if (span_vectors.empty() || lattice.rank() == 0) return Lattice::zero(n);
  IntMatrix s(0, n);
  for (const auto& v : span_vectors) {
    s.append_row(scale_to_integers(v, denominator_of(v)));
  }
  // Columns of w span the orthogonal complement of S.
  IntMatrix w = left_kernel(s.transpose()).transpose();
  const IntMatrix& b = lattice.basis();
  IntMatrix coeffs = w.cols() == 0 ? IntMatrix::identity(b.rows())
                                   : left_kernel(b * w);
  return Lattice::from_generators(coeffs * b, lattice.denominator());
}

std::vector<Int> quotient_invariants(const Lattice& sup, const Lattice& sub) {
  if (sup.ambient_rank() != sub.ambient_rank()) {
    throw Error(ErrorCode::NotSublattice, "ambient ranks differ");
  }
  const Int d = lcm(sup.denominator(), sub.denominator());
  IntMatrix hs = sup.basis();
  const Int s_sup = d / sup.denominator(), s_sub = d / sub.denominator();
  for (std::size_t r = 0; r < hs.rows(); ++r)
    for (std::size_t c = 0; c < hs.cols(); ++c) hs(r, c) = checked_mul(hs(r, c), s_sup);
  IntMatrix coords(0, sup.rank());
  for (std::size_t r = 0; r < sub.rank(); ++r) {
    IntVector v = sub.basis().row_vector(r);
    for (auto& x : v) x = checked_mul(x, s_sub);
    IntVector k;
    if (!reduce_by_echelon(hs, v, &k)) {
      throw Error(ErrorCode::NotSublattice,
                  sub.to_string() + " is not contained in " + sup.to_string());
    }
    coords.append_row(k);
  }
  return smith_invariants(coords);
}

Int invariants_order(std::span<const Int> invariants) {
  Int order = 1;
  for (Int d : invariants) {
    if (d == 0) return 0;
    order = checked_mul(order, d);
  }
  return order;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  const Int d = lcm(a.denominator(), b.denominator());
  IntMatrix g(0, a.ambient_rank());
  for (const Lattice* l : {&a, &b}) {
    const Int s = d / l->denominator();
    for (std::size_t r = 0; r < l->rank(); ++r) {
      IntVector v = l->basis().row_vector(r);
      for (auto& x : v) x = checked_mul(x, s);
      g.append_row(v);
    }
  }
  return Lattice::from_generators(g, d);
}

}  // namespace affgr
