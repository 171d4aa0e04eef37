#pragma once

// Spinors as columns of the fixed 4x4 gamma representation. In that
// representation g5 = diag(-i, -i, i, i), so the dotted-covariant Weyl spinor
// (1 - i g5)/2 psi = (0, 0, xi0, xi1) and the minimal left ideal used by the
// algebraic construction is the one cut out by the first-column idempotent.

#include <array>
#include <stdexcept>
#include <vector>

#include "cliff/conformal.hpp"
#include "cliff/representations.hpp"

namespace cliff {

template <CliffordScalar S>
using SpacetimeVector = std::array<S, 4>;

template <CliffordScalar S>
struct DiracSpinor {
  std::array<S, 4> components{};

  friend DiracSpinor operator+(const DiracSpinor& a, const DiracSpinor& b) {
    DiracSpinor r;
    for (int k = 0; k < 4; ++k) r.components[k] = a.components[k] + b.components[k];
    return r;
  }
  friend DiracSpinor operator-(const DiracSpinor& a, const DiracSpinor& b) {
    DiracSpinor r;
    for (int k = 0; k < 4; ++k) r.components[k] = a.components[k] - b.components[k];
    return r;
  }
  friend DiracSpinor operator*(const S& c, const DiracSpinor& a) {
    DiracSpinor r;
    for (int k = 0; k < 4; ++k) r.components[k] = c * a.components[k];
    return r;
  }
  friend bool operator==(const DiracSpinor&, const DiracSpinor&) = default;

  bool is_zero(double tol = kDefaultTolerance) const {
    for (const auto& c : components) {
      if (!ScalarTraits<S>::is_zero(c, tol)) return false;
    }
    return true;
  }
};

template <CliffordScalar S>
bool approx_equal(const DiracSpinor<S>& a, const DiracSpinor<S>& b, double tol = kDefaultTolerance) {
  return (a - b).is_zero(tol);
}

template <CliffordScalar S>
DiracSpinor<S> operator*(const Matrix<S>& m, const DiracSpinor<S>& psi) {
  DiracSpinor<S> r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r.components[i] += m(i, j) * psi.components[j];
  }
  return r;
}

// Row spinor, e.g. the adjoint psi^dagger g0.
template <CliffordScalar S>
struct RowSpinor {
  std::array<S, 4> components{};

  S operator*(const DiracSpinor<S>& psi) const {
    S r{};
    for (int k = 0; k < 4; ++k) r += components[k] * psi.components[k];
    return r;
  }
  RowSpinor operator*(const Matrix<S>& m) const {
    RowSpinor r;
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t i = 0; i < 4; ++i) r.components[j] += components[i] * m(i, j);
    }
    return r;
  }
  friend bool operator==(const RowSpinor&, const RowSpinor&) = default;
};

// Outer product psi * row as a 4x4 matrix.
template <CliffordScalar S>
Matrix<S> outer(const DiracSpinor<S>& psi, const RowSpinor<S>& row) {
  Matrix<S> m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi.components[i] * row.components[j];
  }
  return m;
}

// dotted: image of (1 - i g5)/2, lower components. undotted: (1 + i g5)/2.
enum class Chirality { dotted, undotted };

template <CliffordScalar S>
Matrix<S> chirality_projector(Chirality c) {
  const S sign = c == Chirality::dotted ? -ScalarTraits<S>::i() : ScalarTraits<S>::i();
  return (Matrix<S>::identity(4) + gamma5_matrix<S>() * sign) * scalar_fraction<S>(1, 2);
}

template <CliffordScalar S>
class WeylSpinor {
 public:
  // Throws DomainError unless the complementary projector annihilates base.
  WeylSpinor(DiracSpinor<S> base, Chirality c, double tol = kDefaultTolerance) : base_(std::move(base)), chirality_(c) {
    const auto other = c == Chirality::dotted ? Chirality::undotted : Chirality::dotted;
    if (!(chirality_projector<S>(other) * base_).is_zero(tol)) throw DomainError("spinor does not have the stated chirality");
  }

  // (0, 0, xi0, xi1).
  static WeylSpinor dotted(const S& xi0, const S& xi1) { return WeylSpinor({{S{}, S{}, xi0, xi1}}, Chirality::dotted); }

  const DiracSpinor<S>& base() const { return base_; }
  Chirality chirality() const { return chirality_; }
  // The two-component spinor xi of a dotted spinor.
  std::array<S, 2> xi() const {
    if (chirality_ == Chirality::dotted) return {base_.components[2], base_.components[3]};
    return {base_.components[0], base_.components[1]};
  }

  WeylSpinor scaled(const S& c) const { return WeylSpinor(c * base_, chirality_); }

 private:
  DiracSpinor<S> base_;
  Chirality chirality_;
};

template <CliffordScalar S>
WeylSpinor<S> weyl_project(const DiracSpinor<S>& psi, Chirality c) {
  return WeylSpinor<S>(chirality_projector<S>(c) * psi, c);
}

template <CliffordScalar S>
Multivector<S> spacetime_multivector(const SpacetimeVector<S>& x) {
  Multivector<S> r(sig::cl13());
  for (int mu = 0; mu < 4; ++mu) r.accumulate(static_cast<BladeMask>(1u << mu), x[mu]);
  return r;
}

// The Hermitian matrix [[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]].
template <CliffordScalar S>
Matrix<S> spacetime_matrix(const SpacetimeVector<S>& x) {
  const S i = ScalarTraits<S>::i();
  return Matrix<S>(2, 2, {x[0] + x[3], x[1] + i * x[2], x[1] - i * x[2], x[0] - x[3]});
}

template <CliffordScalar S>
RowSpinor<S> adjoint_spinor(const DiracSpinor<S>& psi) {
  RowSpinor<S> row;
  for (int k = 0; k < 4; ++k) row.components[k] = ScalarTraits<S>::conj(psi.components[k]);
  return row * gamma_matrix<S>(0);
}

template <CliffordScalar S>
struct Twistor {
  DiracSpinor<S> eta;
  SpacetimeVector<S> x;
  WeylSpinor<S> pi;
};

namespace detail {

template <CliffordScalar S>
void require_dotted(const WeylSpinor<S>& pi) {
  if (pi.chirality() != Chirality::dotted) throw DomainError("twistor constructions need a dotted-covariant spinor");
}

// 1 + g5 x
template <CliffordScalar S>
Multivector<S> twistor_operator(const SpacetimeVector<S>& x) {
  return gamma5<S>() * spacetime_multivector(x) + scalar_from_int<S>(1);
}

}  // namespace detail

// eta_x = (1 + g5 x) Pi, evaluated in the multivector engine and the oracle.
template <CliffordScalar S>
Twistor<S> reference_twistor(const SpacetimeVector<S>& x, const WeylSpinor<S>& pi) {
  detail::require_dotted(pi);
  return {gamma_matrix_of(detail::twistor_operator(x)) * pi.base(), x, pi};
}

// (i X xi, xi) with X the Hermitian matrix of x.
template <CliffordScalar S>
DiracSpinor<S> reference_twistor_closed_form(const SpacetimeVector<S>& x, const WeylSpinor<S>& pi) {
  detail::require_dotted(pi);
  const auto m = spacetime_matrix(x);
  const auto xi = pi.xi();
  const S i = ScalarTraits<S>::i();
  return {{i * (m(0, 0) * xi[0] + m(0, 1) * xi[1]), i * (m(1, 0) * xi[0] + m(1, 1) * xi[1]), xi[0], xi[1]}};
}

// J_{x x'} = Pi° g5 (x - x') Pi.
template <CliffordScalar S>
S incidence(const SpacetimeVector<S>& x, const SpacetimeVector<S>& x_prime, const WeylSpinor<S>& pi) {
  detail::require_dotted(pi);
  SpacetimeVector<S> d;
  for (int mu = 0; mu < 4; ++mu) d[mu] = x[mu] - x_prime[mu];
  const auto op = gamma_matrix_of(gamma5<S>() * spacetime_multivector(d));
  return adjoint_spinor(pi.base()) * (op * pi.base());
}

// Dirac pairing of two twistors, eta_a^dagger g0 eta_b. Equals -J_{x_a x_b}
// for twistors built on a common Pi.
template <CliffordScalar S>
S twistor_inner(const Twistor<S>& a, const Twistor<S>& b) {
  return adjoint_spinor(a.eta) * b.eta;
}

// Pi° (1 + g5 x) (1 + g5 x) Pi. Checked against 2 Pi° g5 x Pi: the Pi° Pi and
// x^2 Pi° Pi terms vanish.
template <CliffordScalar S>
S scalar_pairing(const SpacetimeVector<S>& x, const WeylSpinor<S>& pi, double tol = kDefaultTolerance) {
  detail::require_dotted(pi);
  const auto op = gamma_matrix_of(detail::twistor_operator(x));
  const auto row = adjoint_spinor(pi.base()) * op;
  const S value = row * (op * pi.base());
  const S expected = scalar_from_int<S>(2) * (adjoint_spinor(pi.base()) *
                                              (gamma_matrix_of(gamma5<S>() * spacetime_multivector(x)) * pi.base()));
  if (!ScalarTraits<S>::is_zero(value - expected, tol)) throw std::logic_error("scalar pairing does not reduce to 2 Pi° g5 x Pi");
  return value;
}

// q = Pi Pi° as a multivector.
template <CliffordScalar S>
Multivector<S> pi_outer(const WeylSpinor<S>& pi) {
  return multivector_of_matrix(outer(pi.base(), adjoint_spinor(pi.base())));
}

// Q = psi psi°.
template <CliffordScalar S>
Multivector<S> dirac_outer(const DiracSpinor<S>& psi) {
  return multivector_of_matrix(outer(psi, adjoint_spinor(psi)));
}

// zeta_x = eta_x Pi° = (1 + g5 x) q. Checked against (1 - i x) q.
template <CliffordScalar S>
Multivector<S> flagpole(const SpacetimeVector<S>& x, const WeylSpinor<S>& pi, double tol = kDefaultTolerance) {
  detail::require_dotted(pi);
  const auto q = outer(pi.base(), adjoint_spinor(pi.base()));
  const auto zeta = gamma_matrix_of(detail::twistor_operator(x)) * q;
  const auto xm = gamma_matrix_of(spacetime_multivector(x));
  const auto chain = q - xm * q * ScalarTraits<S>::i();
  if (!approx_equal(zeta, chain, tol)) throw std::logic_error("(1 + g5 x) q differs from (1 - i x) q");
  return multivector_of_matrix(zeta, tol);
}

namespace detail {

template <CliffordScalar S>
void require_cl41_paravector(const Multivector<S>& b) {
  if (!(b.signature() == sig::cl41())) throw SignatureMismatch("expected a Cl(4,1) paravector");
  if (!is_paravector(b)) throw DomainError("input is not a paravector of Cl(4,1)");
}

}  // namespace detail

// chi Pi with chi = b E_4, through C (x) Cl(1,3) and the gamma oracle. For
// b = x0 + a0 E_0 + x^k E_k + a4 E_4 this is mu Pi + g5 x Pi with mu = a0 + a4,
// so it equals the reference twistor at (x0, x1, x2, x3) when mu = 1.
template <CliffordScalar S>
DiracSpinor<S> algebraic_twistor(const Multivector<S>& b, const WeylSpinor<S>& pi) {
  detail::require_cl41_paravector(b);
  detail::require_dotted(pi);
  const auto chi = b * Multivector<S>::basis(sig::cl41(), 4);
  return gamma_matrix_of(cl41_to_complex_cl13(chi)) * pi.base();
}

// Spacetime point (x0, x1, x2, x3) read off a Cl(4,1) paravector.
template <CliffordScalar S>
SpacetimeVector<S> spacetime_part(const Multivector<S>& b) {
  detail::require_cl41_paravector(b);
  return {b.scalar_part(), b.coefficient(0b00010), b.coefficient(0b00100), b.coefficient(0b01000)};
}

// J = (b E_4 U)‾ (b E_4 U) for a Cl(4,1) multivector U. Equals
// -Ū E_4 b̄ b E_4 U and vanishes when b lies on the Klein absolute.
template <CliffordScalar S>
Multivector<S> algebraic_incidence(const Multivector<S>& b, const Multivector<S>& u) {
  detail::require_cl41_paravector(b);
  const auto chi_u = b * Multivector<S>::basis(sig::cl41(), 4) * u;
  return clifford_conjugation(chi_u) * chi_u;
}

template <CliffordScalar S>
std::vector<SpacetimeVector<S>> integer_grid(long lo, long hi) {
  std::vector<SpacetimeVector<S>> grid;
  for (long a = lo; a <= hi; ++a)
    for (long b = lo; b <= hi; ++b)
      for (long c = lo; c <= hi; ++c)
        for (long d = lo; d <= hi; ++d) grid.push_back({scalar_from_int<S>(a), scalar_from_int<S>(b), scalar_from_int<S>(c), scalar_from_int<S>(d)});
  return grid;
}

// Grid points x' with J_{x x'} = 0 (exact) or |J| <= tol (float).
template <CliffordScalar S>
std::vector<SpacetimeVector<S>> robinson_locus(const SpacetimeVector<S>& x, const WeylSpinor<S>& pi,
                                               const std::vector<SpacetimeVector<S>>& grid, double tol = kDefaultTolerance) {
  std::vector<SpacetimeVector<S>> hits;
  for (const auto& xp : grid) {
    if (ScalarTraits<S>::is_zero(incidence(x, xp, pi), tol)) hits.push_back(xp);
  }
  return hits;
}

}  // namespace cliff
