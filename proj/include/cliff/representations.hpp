#pragma once

// Concrete models of the algebras used by the conformal and twistor code:
//
//  * a faithful 4x4 complex representation of C (x) Cl(1,3) (the gamma oracle),
//  * Cl(4,1) -> C (x) Cl(1,3),  E_0 = i g0, E_k = g_k g0, E_4 = g5 g0,
//  * Cl(4,1) -> M(2, Cl(3,0))  with E_+ = (0 0; 1 0), E_- = (0 1; 0 0),
//  * Cl(3,0) <-> the subalgebra of Cl(4,1) generated by e_i = E_i E_0 E_4.
//
// Gamma matrices (blocks are 2x2, s_k the Pauli matrices):
//
//   g0 = [[0, -1], [-1, 0]]   g1 = [[0, -s1], [s1, 0]]
//   g2 = [[0,  s2], [-s2, 0]] g3 = [[0, -s3], [s3, 0]]
//
// so g5 = g0 g1 g2 g3 = diag(-i, -i, i, i), the projector (1 - i g5)/2 keeps
// the lower two components, and a spacetime vector x = x^mu g_mu has upper
// right block -X with X = [[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]].

#include <array>
#include <optional>
#include <vector>

#include "cliff/algebra.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

// ---------------------------------------------------------------------------
// Gamma oracle

namespace detail {

template <CliffordScalar S>
Matrix<S> off_diagonal_blocks(const std::array<S, 4>& upper_right, const std::array<S, 4>& lower_left) {
  Matrix<S> m(4, 4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c + 2) = upper_right[r * 2 + c];
      m(r + 2, c) = lower_left[r * 2 + c];
    }
  }
  return m;
}

template <CliffordScalar S>
std::array<Matrix<S>, 4> make_gammas() {
  const S o{}, one = scalar_from_int<S>(1), i = ScalarTraits<S>::i();
  const std::array<S, 4> id{one, o, o, one};
  const std::array<S, 4> s1{o, one, one, o};
  const std::array<S, 4> s2{o, -i, i, o};
  const std::array<S, 4> s3{one, o, o, -one};
  auto neg = [](std::array<S, 4> a) {
    for (auto& x : a) x = -x;
    return a;
  };
  return {off_diagonal_blocks<S>(neg(id), neg(id)), off_diagonal_blocks<S>(neg(s1), s1),
          off_diagonal_blocks<S>(s2, neg(s2)), off_diagonal_blocks<S>(neg(s3), s3)};
}

template <CliffordScalar S>
const std::vector<Matrix<S>>& cl13_blade_matrices() {
  static const std::vector<Matrix<S>> table = [] {
    const auto g = make_gammas<S>();
    std::vector<Matrix<S>> t;
    for (unsigned mask = 0; mask < 16; ++mask) {
      Matrix<S> m = Matrix<S>::identity(4);
      for (int k = 0; k < 4; ++k) {
        if (mask & (1u << k)) m = m * g[k];
      }
      t.push_back(std::move(m));
    }
    return t;
  }();
  return table;
}

}  // namespace detail

template <CliffordScalar S>
const Matrix<S>& gamma_matrix(int mu) {
  if (mu < 0 || mu > 3) throw DomainError("gamma index must be 0..3");
  return detail::cl13_blade_matrices<S>()[1u << mu];
}

template <CliffordScalar S>
const Matrix<S>& gamma5_matrix() {
  return detail::cl13_blade_matrices<S>()[15];
}

// g5 = g0 g1 g2 g3 as a multivector of Cl(1,3).
template <CliffordScalar S>
Multivector<S> gamma5() {
  return Multivector<S>::blade(sig::cl13(), 0b1111);
}

template <CliffordScalar S>
Multivector<S> gamma(int mu) {
  return Multivector<S>::basis(sig::cl13(), mu);
}

template <CliffordScalar S>
Matrix<S> gamma_matrix_of(const Multivector<S>& a) {
  if (!(a.signature() == sig::cl13())) throw SignatureMismatch("gamma_matrix_of expects Cl(1,3), got " + a.signature().to_string());
  const auto& table = detail::cl13_blade_matrices<S>();
  Matrix<S> m(4, 4);
  for (const auto& [mask, c] : a.terms()) m += table[mask] * c;
  return m;
}

// Inverse of gamma_matrix_of by trace orthogonality: coefficient of blade A is
// tr(G_A^{-1} M) / 4 with G_A^{-1} = (G_A)^2 G_A.
template <CliffordScalar S>
Multivector<S> multivector_of_matrix(const Matrix<S>& m, double tol = kDefaultTolerance) {
  if (m.rows() != 4 || m.cols() != 4) throw DomainError("multivector_of_matrix expects a 4x4 matrix");
  const auto sig = sig::cl13();
  const auto& table = detail::cl13_blade_matrices<S>();
  Multivector<S> r(sig);
  const S quarter = scalar_fraction<S>(1, 4);
  for (unsigned mask = 0; mask < 16; ++mask) {
    auto b = static_cast<BladeMask>(mask);
    S c = (table[mask] * m).trace() * quarter;
    if (blade_product_sign(sig, b, b) < 0) c = -c;
    if constexpr (!ScalarTraits<S>::exact) {
      if (ScalarTraits<S>::is_zero(c, tol * 1e-3)) continue;
    }
    r.accumulate(b, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Algebra morphisms

// Extends generator images multiplicatively: blade e_{i1..ik} maps to
// images[i1] * ... * images[ik]. A homomorphism whenever the images satisfy
// the source Clifford relations.
template <CliffordScalar S>
Multivector<S> map_generators(const Multivector<S>& a, const std::vector<Multivector<S>>& images, Signature target) {
  if (static_cast<int>(images.size()) != a.signature().dim()) throw DomainError("one image per generator required");
  Multivector<S> r(target);
  for (const auto& [mask, c] : a.terms()) {
    Multivector<S> term = Multivector<S>::scalar(target, c);
    for (int i = 0; i < a.signature().dim(); ++i) {
      if (mask & (1u << i)) term = term * images[i];
    }
    r += term;
  }
  return r;
}

// Images of E_0..E_4 in C (x) Cl(1,3).
template <CliffordScalar S>
std::vector<Multivector<S>> cl41_generators_in_cl13() {
  const auto g0 = gamma<S>(0);
  std::vector<Multivector<S>> images;
  images.push_back(g0 * ScalarTraits<S>::i());
  for (int k = 1; k <= 3; ++k) images.push_back(gamma<S>(k) * g0);
  images.push_back(gamma5<S>() * g0);
  return images;
}

template <CliffordScalar S>
Multivector<S> cl41_to_complex_cl13(const Multivector<S>& a) {
  if (!(a.signature() == sig::cl41())) throw SignatureMismatch("cl41_to_complex_cl13 expects Cl(4,1)");
  static const auto images = cl41_generators_in_cl13<S>();
  return map_generators(a, images, sig::cl13());
}

// e_i -> E_i E_0 E_4.
template <CliffordScalar S>
std::vector<Multivector<S>> cl30_generators_in_cl41() {
  const auto s41 = sig::cl41();
  std::vector<Multivector<S>> images;
  for (int i = 1; i <= 3; ++i) {
    images.push_back(Multivector<S>::basis(s41, i) * Multivector<S>::basis(s41, 0) * Multivector<S>::basis(s41, 4));
  }
  return images;
}

template <CliffordScalar S>
Multivector<S> cl30_to_cl41(const Multivector<S>& a) {
  if (!(a.signature() == sig::cl30())) throw SignatureMismatch("cl30_to_cl41 expects Cl(3,0)");
  static const auto images = cl30_generators_in_cl41<S>();
  return map_generators(a, images, sig::cl41());
}

// Inverse of cl30_to_cl41 on its image. Every Cl(3,0) blade lands on a single
// signed Cl(4,1) blade, so the inverse is a blade lookup.
template <CliffordScalar S>
Multivector<S> cl41_to_cl30(const Multivector<S>& a) {
  if (!(a.signature() == sig::cl41())) throw SignatureMismatch("cl41_to_cl30 expects Cl(4,1)");
  struct Entry {
    BladeMask source;
    bool negate;
  };
  static const std::array<std::optional<Entry>, 32> lookup = [] {
    std::array<std::optional<Entry>, 32> t{};
    for (unsigned m = 0; m < 8; ++m) {
      auto img = cl30_to_cl41(Multivector<S>::blade(sig::cl30(), static_cast<BladeMask>(m)));
      const auto& [target, coeff] = *img.terms().begin();
      t[target] = Entry{static_cast<BladeMask>(m), coeff != scalar_from_int<S>(1)};
    }
    return t;
  }();
  Multivector<S> r(sig::cl30());
  for (const auto& [mask, c] : a.terms()) {
    const auto& e = lookup[mask];
    if (!e) throw DomainError("element lies outside the Cl(3,0) subalgebra of Cl(4,1)");
    r.accumulate(e->source, e->negate ? -c : c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// 2x2 matrices over Cl(3,0)

// [[a, c], [b, d]]; acts on paravectors by x -> (a x + c)(b x + d)^{-1}.
template <CliffordScalar S>
struct Mat2 {
  Multivector<S> a, b, c, d;

  static Mat2 from_rows(Multivector<S> top_left, Multivector<S> top_right, Multivector<S> bottom_left,
                        Multivector<S> bottom_right) {
    return Mat2{std::move(top_left), std::move(bottom_left), std::move(top_right), std::move(bottom_right)};
  }
  static Mat2 scalars(const S& tl, const S& tr, const S& bl, const S& br) {
    const auto s = sig::cl30();
    using MV = Multivector<S>;
    return from_rows(MV::scalar(s, tl), MV::scalar(s, tr), MV::scalar(s, bl), MV::scalar(s, br));
  }
  static Mat2 identity() { return scalars(scalar_from_int<S>(1), S{}, S{}, scalar_from_int<S>(1)); }
  static Mat2 zero() { return scalars(S{}, S{}, S{}, S{}); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return from_rows(x.a * y.a + x.c * y.b, x.a * y.c + x.c * y.d, x.b * y.a + x.d * y.b, x.b * y.c + x.d * y.d);
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const S& s) { return Mat2{x.a * s, x.b * s, x.c * s, x.d * s}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  // Cl(4,1) reversion in this model: (d̄ c̄; b̄ ā), bar = Cl(3,0) conjugation.
  Mat2 reversed() const {
    return from_rows(clifford_conjugation(d), clifford_conjugation(c), clifford_conjugation(b), clifford_conjugation(a));
  }
  // Cl(4,1) Clifford conjugation in this model: (d̃ -c̃; -b̃ ã), tilde = Cl(3,0) reversion.
  Mat2 conjugated() const { return from_rows(reversion(d), -reversion(c), -reversion(b), reversion(a)); }
  // Cl(4,1) grade involution: (â -ĉ; -b̂ d̂).
  Mat2 graded() const {
    return from_rows(grade_involution(a), -grade_involution(c), -grade_involution(b), grade_involution(d));
  }
};

template <CliffordScalar S>
bool approx_equal(const Mat2<S>& x, const Mat2<S>& y, double tol = kDefaultTolerance) {
  return approx_equal(x.a, y.a, tol) && approx_equal(x.b, y.b, tol) && approx_equal(x.c, y.c, tol) &&
         approx_equal(x.d, y.d, tol);
}

template <CliffordScalar S>
std::vector<Mat2<S>> cl41_generators_in_mat2() {
  const S zero{}, one = scalar_from_int<S>(1);
  std::vector<Mat2<S>> images;
  images.push_back(Mat2<S>::scalars(zero, -one, one, zero));  // E_0 = E_+ - E_-
  for (int i = 0; i < 3; ++i) {
    auto e = Multivector<S>::basis(sig::cl30(), i);
    auto z = Multivector<S>(sig::cl30());
    images.push_back(Mat2<S>::from_rows(e, z, z, -e));  // E_i = diag(e_i, -e_i)
  }
  images.push_back(Mat2<S>::scalars(zero, one, one, zero));  // E_4 = E_+ + E_-
  return images;
}

// Full homomorphism Cl(4,1) -> M(2, Cl(3,0)).
template <CliffordScalar S>
Mat2<S> cl41_to_mat2(const Multivector<S>& a) {
  if (!(a.signature() == sig::cl41())) throw SignatureMismatch("cl41_to_mat2 expects Cl(4,1)");
  static const auto images = cl41_generators_in_mat2<S>();
  Mat2<S> r = Mat2<S>::zero();
  for (const auto& [mask, c] : a.terms()) {
    Mat2<S> term = Mat2<S>::identity() * c;
    for (int i = 0; i < 5; ++i) {
      if (mask & (1u << i)) term = term * images[i];
    }
    r = r + term;
  }
  return r;
}

// Inverse of cl41_to_mat2. Entries are lifted through the commutant copy of
// Cl(3,0), whose generator diag(e_i, e_i) is -E_i E_0 E_4 in this model, and
// placed with the matrix units E_-E_+, E_-, E_+, E_+E_-.
template <CliffordScalar S>
Multivector<S> mat2_to_cl41(const Mat2<S>& m) {
  const auto s41 = sig::cl41();
  using MV = Multivector<S>;
  static const auto lifted = [] {
    auto imgs = cl30_generators_in_cl41<S>();
    for (auto& x : imgs) x = -x;
    return imgs;
  }();
  const S half = scalar_fraction<S>(1, 2);
  const MV e0 = MV::basis(s41, 0), e4 = MV::basis(s41, 4);
  const MV plus = (e4 + e0) * half, minus = (e4 - e0) * half;
  auto lift = [&](const MV& x) { return map_generators(x, lifted, s41); };
  return lift(m.a) * (minus * plus) + lift(m.c) * minus + lift(m.b) * plus + lift(m.d) * (plus * minus);
}

// True when b is alpha^5 + alpha^A E_A in Cl(4,1).
template <CliffordScalar S>
bool is_paravector(const Multivector<S>& b) {
  return b.has_only_grades({0, 1});
}

// b = alpha^5 + alpha^A E_A  ->  [[alpha^5 + alpha^i e_i, alpha^4 - alpha^0],
//                                 [alpha^0 + alpha^4,     alpha^5 - alpha^i e_i]]
template <CliffordScalar S>
Mat2<S> paravector_to_mat2(const Multivector<S>& b) {
  if (!(b.signature() == sig::cl41())) throw SignatureMismatch("paravector_to_mat2 expects Cl(4,1)");
  if (!is_paravector(b)) throw DomainError("input is not a paravector of Cl(4,1)");
  const auto s30 = sig::cl30();
  auto coeff = [&](int a) { return b.coefficient(static_cast<BladeMask>(1u << a)); };
  Multivector<S> spatial(s30);
  for (int i = 1; i <= 3; ++i) spatial.accumulate(static_cast<BladeMask>(1u << (i - 1)), coeff(i));
  const S a5 = b.scalar_part(), a0 = coeff(0), a4 = coeff(4);
  return Mat2<S>::from_rows(spatial + a5, Multivector<S>::scalar(s30, a4 - a0), Multivector<S>::scalar(s30, a0 + a4),
                            a5 - spatial);
}

template <CliffordScalar S>
Multivector<S> mat2_to_paravector(const Mat2<S>& m, double tol = kDefaultTolerance) {
  if (!m.a.has_only_grades({0, 1}) || !m.b.is_scalar() || !m.c.is_scalar()) {
    throw DomainError("matrix is not in the paravector image");
  }
  if (!approx_equal(m.d, clifford_conjugation(m.a), tol)) throw DomainError("diagonal entries are not conjugate paravectors");
  const auto s41 = sig::cl41();
  const S half = scalar_fraction<S>(1, 2);
  const S a5 = m.a.scalar_part();
  const S lambda = m.c.scalar_part(), mu = m.b.scalar_part();
  Multivector<S> r = Multivector<S>::scalar(s41, a5);
  r.accumulate(0b00001, (mu - lambda) * half);
  for (int i = 1; i <= 3; ++i) r.accumulate(static_cast<BladeMask>(1u << i), m.a.coefficient(static_cast<BladeMask>(1u << (i - 1))));
  r.accumulate(0b10000, (mu + lambda) * half);
  return r;
}

}  // namespace cliff
