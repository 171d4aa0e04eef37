#pragma once

// Paravector model of spacetime conformal maps. A spacetime point x in
// R^{1,3} is the Cl(3,0) paravector x0 + x^i e_i (so x x̄ = g(x, x)), and its
// compactification is the projective triple (x, lambda, mu) shown as the
// matrix (x lambda; mu x̄) in M(2, Cl(3,0)) ~ Cl(4,1).

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliff/algebra.hpp"
#include "cliff/representations.hpp"

namespace cliff {

template <CliffordScalar S>
bool is_cl30_paravector(const Multivector<S>& x) {
  return x.signature() == sig::cl30() && x.has_only_grades({0, 1});
}

// x0 + x1 e1 + x2 e2 + x3 e3.
template <CliffordScalar S>
Multivector<S> paravector(const std::array<S, 4>& coords) {
  Multivector<S> x = Multivector<S>::scalar(sig::cl30(), coords[0]);
  for (int i = 1; i <= 3; ++i) x.accumulate(static_cast<BladeMask>(1u << (i - 1)), coords[i]);
  return x;
}

template <CliffordScalar S>
std::array<S, 4> paravector_coords(const Multivector<S>& x) {
  if (!is_cl30_paravector(x)) throw DomainError("not a Cl(3,0) paravector");
  return {x.scalar_part(), x.coefficient(0b001), x.coefficient(0b010), x.coefficient(0b100)};
}

// Real scalar part of a Cl(3,0) element that must be a scalar.
template <CliffordScalar S>
S scalar_value(const Multivector<S>& m, double tol, const char* what) {
  if constexpr (!ScalarTraits<S>::exact) tol *= std::max(1.0, max_magnitude(m));
  for (const auto& [mask, c] : m.terms()) {
    if (mask != 0 && !ScalarTraits<S>::is_zero(c, tol)) throw DomainError(std::string(what) + " is not a scalar");
  }
  return m.scalar_part();
}

// Compactified point of R^{p,q}: (x, g(x,x), 1) up to projective scale.
template <CliffordScalar S>
struct ConformalPoint {
  std::vector<S> x;
  S lambda;
  S mu;
  Signature sig;

  // x.x - lambda mu.
  S klein_residual() const {
    S r{};
    for (int i = 0; i < sig.dim(); ++i) r += x[i] * x[i] * scalar_from_int<S>(sig.metric(i));
    return r - lambda * mu;
  }
};

template <CliffordScalar S>
ConformalPoint<S> compactify(const Signature& sig, const std::vector<S>& x) {
  if (static_cast<int>(x.size()) != sig.dim()) throw DomainError("point dimension does not match signature");
  S norm{};
  for (int i = 0; i < sig.dim(); ++i) norm += x[i] * x[i] * scalar_from_int<S>(sig.metric(i));
  return {x, norm, scalar_from_int<S>(1), sig};
}

template <CliffordScalar S>
struct ParavectorPoint {
  Multivector<S> x;  // Cl(3,0) paravector
  S lambda;
  S mu;

  Mat2<S> as_matrix() const {
    const auto s30 = sig::cl30();
    return Mat2<S>::from_rows(x, Multivector<S>::scalar(s30, lambda), Multivector<S>::scalar(s30, mu),
                              clifford_conjugation(x));
  }

  // Reads (x lambda; mu x̄), checking the shape.
  static ParavectorPoint from_matrix(const Mat2<S>& m, double tol = kDefaultTolerance) {
    if (!m.a.has_only_grades({0, 1}) && ScalarTraits<S>::exact) throw DomainError("upper-left entry is not a paravector");
    Multivector<S> x = m.a;
    if constexpr (!ScalarTraits<S>::exact) x = grade_project(m.a, 0) + grade_project(m.a, 1);
    if (!approx_equal(m.d, clifford_conjugation(m.a), tol)) throw DomainError("lower-right entry is not the conjugate of x");
    return {x, scalar_value(m.c, tol, "lambda"), scalar_value(m.b, tol, "mu")};
  }

  // alpha^5 + alpha^A E_A with lambda = alpha^4 - alpha^0, mu = alpha^4 + alpha^0.
  Multivector<S> to_cl41() const { return mat2_to_paravector(as_matrix()); }
  static ParavectorPoint from_cl41(const Multivector<S>& b) { return from_matrix(paravector_to_mat2(b)); }

  bool at_infinity(double tol = kDefaultTolerance) const { return ScalarTraits<S>::is_zero(mu, tol); }

  // Representative with mu = 1. Throws AtInfinity when mu = 0.
  ParavectorPoint normalized(double tol = kDefaultTolerance) const {
    if (at_infinity(tol)) throw AtInfinity("point at infinity has no mu = 1 representative");
    S inv = scalar_from_int<S>(1) / mu;
    return {x * inv, lambda * inv, scalar_from_int<S>(1)};
  }

  // x x̄ - lambda mu as a Cl(3,0) element (a scalar for paravectors).
  Multivector<S> klein_residual() const { return x * clifford_conjugation(x) - lambda * mu; }
};

// Same projective class: (x, lambda, mu) = k (x', lambda', mu') for some k != 0.
template <CliffordScalar S>
bool projectively_equal(const ParavectorPoint<S>& p, const ParavectorPoint<S>& q, double tol = kDefaultTolerance) {
  std::vector<S> u{p.lambda, p.mu}, v{q.lambda, q.mu};
  auto pc = paravector_coords(p.x), qc = paravector_coords(q.x);
  u.insert(u.end(), pc.begin(), pc.end());
  v.insert(v.end(), qc.begin(), qc.end());
  // Cross products u_i v_j - u_j v_i vanish iff u and v are parallel.
  bool nonzero_u = false, nonzero_v = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    nonzero_u |= !ScalarTraits<S>::is_zero(u[i], tol);
    nonzero_v |= !ScalarTraits<S>::is_zero(v[i], tol);
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (!ScalarTraits<S>::is_zero(u[i] * v[j] - u[j] * v[i], tol)) return false;
    }
  }
  return nonzero_u && nonzero_v;
}

// (x, g(x,x), 1) for x in R^{1,3}, as a paravector point.
template <CliffordScalar S>
ParavectorPoint<S> compactify_spacetime(const std::array<S, 4>& x) {
  auto px = paravector(x);
  S norm = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
  return {px, norm, scalar_from_int<S>(1)};
}

// x x̄ = lambda mu. The Cl(3,0) residual and the full Cl(4,1) product b b̄
// are both evaluated; they must agree.
template <CliffordScalar S>
bool klein_check(const ParavectorPoint<S>& b, double tol = kDefaultTolerance) {
  bool on_quadric = is_zero(b.klein_residual(), tol);
  auto bb = b.to_cl41();
  bool full = is_zero(bb * clifford_conjugation(bb), tol);
  if (on_quadric != full) throw std::logic_error("Klein residual and b b̄ disagree");
  return on_quadric;
}

// Element g of $pin+(2,4) as a 2x2 matrix over Cl(3,0) with g ḡ = 1.
template <CliffordScalar S>
class MobiusElement {
 public:
  static MobiusElement from_matrix(Mat2<S> m, double tol = kDefaultTolerance) {
    if (!approx_equal(m * m.conjugated(), Mat2<S>::identity(), tol)) throw DomainError("matrix is not a unit of $pin+(2,4)");
    return MobiusElement(std::move(m));
  }

  const Mat2<S>& matrix() const { return m_; }

  friend bool operator==(const MobiusElement&, const MobiusElement&) = default;

 private:
  explicit MobiusElement(Mat2<S> m) : m_(std::move(m)) {}
  Mat2<S> m_;
};

template <CliffordScalar S>
MobiusElement<S> make_identity() {
  return MobiusElement<S>::from_matrix(Mat2<S>::identity());
}

// x -> x + h, matrix (1 h; 0 1).
template <CliffordScalar S>
MobiusElement<S> make_translation(const Multivector<S>& h) {
  if (!is_cl30_paravector(h)) throw DomainError("translation vector must be a Cl(3,0) paravector");
  const auto s30 = sig::cl30();
  const auto one = Multivector<S>::scalar(s30, scalar_from_int<S>(1));
  return MobiusElement<S>::from_matrix(Mat2<S>::from_rows(one, h, Multivector<S>(s30), one));
}

// x -> rho x, matrix (sqrt(rho) 0; 0 1/sqrt(rho)). The exact backend needs a
// rational square.
template <CliffordScalar S>
MobiusElement<S> make_dilation(const S& rho) {
  if (!ScalarTraits<S>::is_real(rho, 0.0)) throw DomainError("dilation factor must be real");
  if (ScalarTraits<S>::to_complex(rho).real() <= 0.0) throw DomainError("dilation factor must be positive");
  auto root = ScalarTraits<S>::sqrt(rho);
  if (!root) throw DomainError("dilation factor is not a rational square");
  return MobiusElement<S>::from_matrix(Mat2<S>::scalars(*root, S{}, S{}, scalar_from_int<S>(1) / *root));
}

// x -> g x ĝ^{-1}, matrix (g 0; 0 ĝ), for g in Cl(3,0) with g ḡ = 1.
template <CliffordScalar S>
MobiusElement<S> make_rotation(const Multivector<S>& g, double tol = kDefaultTolerance) {
  if (!(g.signature() == sig::cl30())) throw SignatureMismatch("rotor must live in Cl(3,0)");
  if (!approx_equal(g * clifford_conjugation(g), Multivector<S>::scalar(sig::cl30(), scalar_from_int<S>(1)), tol)) {
    throw DomainError("rotor does not satisfy g ḡ = 1");
  }
  const auto z = Multivector<S>(sig::cl30());
  return MobiusElement<S>::from_matrix(Mat2<S>::from_rows(g, z, z, grade_involution(g)), tol);
}

// Matrix (0 -1; 1 0): x -> -x^{-1}, which is -x̄ on x x̄ = 1.
template <CliffordScalar S>
MobiusElement<S> make_inversion() {
  return MobiusElement<S>::from_matrix(Mat2<S>::scalars(S{}, -scalar_from_int<S>(1), scalar_from_int<S>(1), S{}));
}

// Matrix (1 0; h 1): x -> x (h x + 1)^{-1}.
template <CliffordScalar S>
MobiusElement<S> make_transvection(const Multivector<S>& h) {
  if (!is_cl30_paravector(h)) throw DomainError("transvection vector must be a Cl(3,0) paravector");
  const auto s30 = sig::cl30();
  const auto one = Multivector<S>::scalar(s30, scalar_from_int<S>(1));
  return MobiusElement<S>::from_matrix(Mat2<S>::from_rows(one, Multivector<S>(s30), h, one));
}

// g1 after g2.
template <CliffordScalar S>
MobiusElement<S> compose(const MobiusElement<S>& g1, const MobiusElement<S>& g2, double tol = kDefaultTolerance) {
  return MobiusElement<S>::from_matrix(g1.matrix() * g2.matrix(), tol);
}

template <CliffordScalar S>
struct MobiusImage {
  Multivector<S> x;  // normalized image paravector
  S delta;           // conformal factor (b x + d)(b x + d)‾
};

// x' = (a x + c)(b x + d)^{-1}, Delta = (b x + d)(b x + d)‾. Throws AtInfinity
// when Delta = 0.
template <CliffordScalar S>
MobiusImage<S> apply_mobius(const MobiusElement<S>& g, const Multivector<S>& x, double tol = kDefaultTolerance) {
  if (!is_cl30_paravector(x)) throw DomainError("apply_mobius expects a Cl(3,0) paravector");
  const auto& m = g.matrix();
  const auto denom = m.b * x + m.d;
  const auto denom_bar = clifford_conjugation(denom);
  const S delta = scalar_value(denom * denom_bar, tol, "conformal factor");
  if (ScalarTraits<S>::is_zero(delta, tol)) throw AtInfinity("point is sent to infinity (Delta = 0)");
  auto image = (m.a * x + m.c) * denom_bar * (scalar_from_int<S>(1) / delta);
  if constexpr (!ScalarTraits<S>::exact) image = grade_project(image, 0) + grade_project(image, 1);
  return {std::move(image), delta};
}

// g b g̃ on the matrix form of b. Defined everywhere, including where
// apply_mobius reports infinity.
template <CliffordScalar S>
ParavectorPoint<S> twisted_adjoint(const MobiusElement<S>& g, const ParavectorPoint<S>& b, double tol = kDefaultTolerance) {
  const auto& m = g.matrix();
  return ParavectorPoint<S>::from_matrix(m * b.as_matrix() * m.reversed(), tol);
}

}  // namespace cliff
