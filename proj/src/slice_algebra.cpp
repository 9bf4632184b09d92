#include "affgr/slice_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "affgr/error.hpp"

namespace affgr {

namespace {

void require_exponent(int m) {
  if (m < 2) throw Error(ErrorCode::BadExponent, "slice exponent must be at least 2");
}

Int normalize_coeff(Int c, Int p) {
  if (p == 0) return c;
  c %= p;
  return c < 0 ? c + p : c;
}

// Reduces x^a y^b z^c modulo z^m = -xy; returns the sign picked up.
int reduce_monomial(int m, Monomial& e) {
  int sign = 1;
  while (e[2] >= m) {
    e[2] -= m;
    e[0] += 1;
    e[1] += 1;
    sign = -sign;
  }
  return sign;
}

std::string monomial_string(const Monomial& e) {
  std::string out;
  const char* names = "xyz";
  for (int k = 0; k < 3; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SlicePoly

SlicePoly SlicePoly::constant(int m, Int value, Int p) {
  return monomial(m, {0, 0, 0}, value, p);
}

SlicePoly SlicePoly::monomial(int m, Monomial e, Int coeff, Int p) {
  SlicePoly f(m, p);
  f.add_term(e, coeff);
  return f;
}

void SlicePoly::add_term(Monomial e, Int coeff) {
  const int sign = reduce_monomial(m_, e);
  const Int c = normalize_coeff(checked_add(terms_[e], sign * coeff), p_);
  if (c == 0) terms_.erase(e);
  else terms_[e] = c;
}

SlicePoly SlicePoly::operator+(const SlicePoly& o) const {
  SlicePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SlicePoly SlicePoly::operator-() const { return scaled(-1); }

SlicePoly SlicePoly::operator-(const SlicePoly& o) const { return *this + (-o); }

SlicePoly SlicePoly::operator*(const SlicePoly& o) const {
  SlicePoly r(m_, p_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, checked_mul(c1, c2));
  return r;
}

SlicePoly SlicePoly::scaled(Int k) const {
  SlicePoly r(m_, p_);
  for (const auto& [e, c] : terms_) r.add_term(e, checked_mul(c, k));
  return r;
}

std::string SlicePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (!out.empty()) out += a < 0 ? " - " : " + ";
    else if (a < 0) out += "-";
    a = a < 0 ? -a : a;
    const std::string mono = monomial_string(e);
    if (mono == "1") out += std::to_string(a);
    else if (a == 1) out += mono;
    else out += std::to_string(a) + "*" + mono;
  }
  return out;
}

int weighted_degree(int m, const Monomial& e) { return m * (e[0] + e[1]) + 2 * e[2]; }

std::vector<Monomial> monomials_of_degree(int m, int degree) {
  std::vector<Monomial> out;
  for (int c = 0; c < m && 2 * c <= degree; ++c) {
    const int rest = degree - 2 * c;
    if (rest % m != 0) continue;
    const int ab = rest / m;
    for (int a = 0; a <= ab; ++a) out.push_back({a, ab - a, c});
  }
  return out;
}

SliceRingInfo gl2_slice_ring(int m) {
  require_exponent(m);
  SliceRingInfo info;
  info.m = m;
  info.relation = "z^" + std::to_string(m) + " + x*y";
  // Partials of z^m + xy are (y, x, m z^(m-1)); at the origin each vanishes
  // exactly when its value there is zero.
  const std::array<Int, 3> at_origin = {0, 0, m == 1 ? 1 : 0};
  info.jacobian_rank_at_origin =
      std::any_of(at_origin.begin(), at_origin.end(), [](Int v) { return v != 0; }) ? 1 : 0;
  info.singular_at_origin = info.jacobian_rank_at_origin == 0;
  return info;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::term(const SlicePoly& c, int exponent) {
  LaurentPoly r(c.m(), c.characteristic());
  r.add(exponent, c);
  return r;
}

LaurentPoly LaurentPoly::constant(int m, Int value, Int p) {
  return term(SlicePoly::constant(m, value, p), 0);
}

void LaurentPoly::add(int exponent, const SlicePoly& c) {
  auto it = coeffs_.find(exponent);
  SlicePoly sum = it == coeffs_.end() ? c : it->second + c;
  if (sum.is_zero()) {
    if (it != coeffs_.end()) coeffs_.erase(it);
  } else {
    coeffs_.insert_or_assign(exponent, std::move(sum));
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, c] : o.coeffs_) r.add(k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o.scaled(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(m_, p_);
  for (const auto& [k1, c1] : coeffs_)
    for (const auto& [k2, c2] : o.coeffs_) r.add(k1 + k2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(Int k) const {
  LaurentPoly r(m_, p_);
  for (const auto& [e, c] : coeffs_) r.add(e, c.scaled(k));
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(m_, p_);
  for (const auto& [e, c] : coeffs_) r.add(e + k, c);
  return r;
}

Matrix4 adjoint_rep(const Matrix2& g) {
  const LaurentPoly& a = g[0][0];
  const LaurentPoly& b = g[0][1];
  const LaurentPoly& c = g[1][0];
  const LaurentPoly& d = g[1][1];
  const int m = a.ring_m();
  const LaurentPoly det = a * d - b * c;
  // det must be a single term +-1 * uniformizer^k.
  if (det.coefficients().size() != 1) {
    throw Error(ErrorCode::NonInvertible, "determinant is not a unit");
  }
  const auto& [k, lead] = *det.coefficients().begin();
  Int sign = 0;
  if (lead == SlicePoly::constant(m, 1, lead.characteristic())) sign = 1;
  else if (lead == SlicePoly::constant(m, -1, lead.characteristic())) sign = -1;
  if (sign == 0) throw Error(ErrorCode::NonInvertible, "determinant is not a unit");
  auto inv = [&](const LaurentPoly& e) { return e.scaled(sign).shifted(-k); };

  const LaurentPoly zero(m, lead.characteristic());
  Matrix4 out;
  for (auto& row : out) row.fill(zero);
  out[0][0] = inv(det);
  out[1][1] = inv(a * d + b * c);
  out[1][2] = inv((a * c).scaled(-1));
  out[1][3] = inv(b * d);
  out[2][1] = inv((a * b).scaled(-2));
  out[2][2] = inv(a * a);
  out[2][3] = inv((b * b).scaled(-1));
  out[3][1] = inv((c * d).scaled(2));
  out[3][2] = inv((c * c).scaled(-1));
  out[3][3] = inv(d * d);
  return out;
}

Matrix2 rank1_slice_matrix(int m) {
  require_exponent(m);
  const int n = m - 2;
  const SlicePoly one = SlicePoly::constant(m, 1);
  const SlicePoly z = SlicePoly::z(m);
  LaurentPoly a = LaurentPoly::term(one, 0);
  SlicePoly power = one;
  for (int i = 0; i <= n; ++i) {
    power = power * (-z);
    a = a + LaurentPoly::term(power, -(i + 1));
  }
  const LaurentPoly b = LaurentPoly::term(SlicePoly::x(m).scaled(n % 2 == 0 ? 1 : -1), -1);
  const LaurentPoly c = LaurentPoly::term(SlicePoly::y(m), -n - 1);
  const LaurentPoly d = LaurentPoly::term(one, 0) + LaurentPoly::term(z, -1);
  return {{{a, b}, {c, d}}};
}

std::vector<SlicePoly> adjoint_coefficients(int m) {
  std::vector<SlicePoly> out;
  for (const auto& row : adjoint_rep(rank1_slice_matrix(m)))
    for (const auto& entry : row)
      for (const auto& [k, c] : entry.coefficients()) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Subrings

bool SubringBasis::contains(const SlicePoly& f) const {
  for (const auto& [e, c] : f.terms()) {
    if (weighted_degree(m, e) > degree_bound) {
      throw Error(ErrorCode::IndexOutOfRange, "element exceeds the computed degree range");
    }
    auto it = basis.find(e);
    if (it == basis.end()) return false;
    if (p == 0 && c % it->second != 0) return false;
  }
  return true;
}

bool SubringBasis::equals_full_ring() const {
  for (int d = 0; d <= degree_bound; ++d)
    for (const auto& e : monomials_of_degree(m, d)) {
      auto it = basis.find(e);
      if (it == basis.end() || it->second != 1) return false;
    }
  return true;
}

bool SubringBasis::full_after_inverting_two() const {
  if (p != 0) return false;
  for (int d = 0; d <= degree_bound; ++d)
    for (const auto& e : monomials_of_degree(m, d)) {
      auto it = basis.find(e);
      if (it == basis.end()) return false;
      Int g = it->second;
      while (g % 2 == 0) g /= 2;
      if (g != 1) return false;
    }
  return true;
}

std::vector<SlicePoly> pgl2_generators(int m, Int p) {
  return {SlicePoly::monomial(m, {1, 0, 0}, 1, p), SlicePoly::monomial(m, {0, 1, 0}, 1, p),
          SlicePoly::monomial(m, {1, 0, 1}, 1, p), SlicePoly::monomial(m, {0, 1, 1}, 1, p),
          SlicePoly::monomial(m, {0, 0, 2}, 1, p), SlicePoly::monomial(m, {0, 0, 1}, 2, p)};
}

SubringBasis generated_subring(int m, Int p, int degree_bound,
                               const std::vector<SlicePoly>& generators) {
  require_exponent(m);
  struct Gen {
    Monomial e;
    Int c;
    int degree;
  };
  std::vector<Gen> gens;
  for (const auto& g : generators) {
    if (g.terms().empty()) continue;  // e.g. 2z in characteristic 2
    if (g.terms().size() != 1) {
      throw Error(ErrorCode::WrongType, "generators must be scaled monomials");
    }
    const auto& [e, c] = *g.terms().begin();
    const int deg = weighted_degree(m, e);
    if (deg == 0) throw Error(ErrorCode::WrongType, "constant generator");
    gens.push_back({e, c, deg});
  }
  // piece[d]: monomial -> gcd of attainable coefficients in degree d.
  std::vector<std::map<Monomial, Int>> piece(degree_bound + 1);
  piece[0][{0, 0, 0}] = 1;
  for (int d = 1; d <= degree_bound; ++d) {
    for (const auto& g : gens) {
      if (g.degree > d) continue;
      for (const auto& [w, cw] : piece[d - g.degree]) {
        Monomial e = {w[0] + g.e[0], w[1] + g.e[1], w[2] + g.e[2]};
        reduce_monomial(m, e);
        Int c = checked_mul(cw, g.c);
        c = c < 0 ? -c : c;
        if (p > 0) {
          if (c % p == 0) continue;
          piece[d][e] = 1;
        } else {
          auto it = piece[d].find(e);
          piece[d][e] = it == piece[d].end() ? c : std::gcd(it->second, c);
        }
      }
    }
  }
  SubringBasis out{m, p, degree_bound, {}};
  for (const auto& level : piece) out.basis.insert(level.begin(), level.end());
  return out;
}

SubringBasis pgl2_subring(int m, Int p, int degree_bound) {
  require_characteristic(p);
  return generated_subring(m, p, degree_bound, pgl2_generators(m, p));
}

Rank1Witness normality_witness_rank1(int m, Int p) {
  require_exponent(m);
  require_characteristic(p);
  Rank1Witness w;
  w.m = m;
  w.p = p;
  const int bound = 2 * m + 4;
  const SubringBasis r = pgl2_subring(m, p, bound);
  const SlicePoly z = SlicePoly::z(m, p);
  const SlicePoly x = SlicePoly::x(m, p);
  w.witness_in_fraction_field = z * x == SlicePoly::monomial(m, {1, 0, 1}, 1, p);
  w.witness_square_in_ring = r.contains(z * z);
  w.witness_in_ring = r.contains(z);
  if (p == 2) {
    if (w.witness_in_fraction_field && w.witness_square_in_ring && !w.witness_in_ring) {
      w.status = Status::NonNormal;
      w.witness = "z";
    }
  } else if (p == 0 ? r.full_after_inverting_two() : r.equals_full_ring()) {
    w.status = Status::Normal;
  }
  return w;
}

nlohmann::json to_json(const SubringBasis& b) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& [e, c] : b.basis) {
    basis.push_back({{"monomial", monomial_string(e)},
                     {"exponents", {e[0], e[1], e[2]}},
                     {"coefficient", c}});
  }
  return {{"m", b.m}, {"p", b.p}, {"degree_bound", b.degree_bound}, {"basis", basis}};
}

nlohmann::json to_json(const Rank1Witness& w) {
  nlohmann::json j = {{"m", w.m},
                      {"p", w.p},
                      {"status", std::string(to_string(w.status))},
                      {"witness_in_fraction_field", w.witness_in_fraction_field},
                      {"witness_square_in_ring", w.witness_square_in_ring},
                      {"witness_in_ring", w.witness_in_ring}};
  j["witness"] = w.witness ? nlohmann::json(*w.witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace affgr
