#pragma once

// Clifford algebra core: multivectors, involutions, grades and inverses.

#include "cliff/linalg.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

// Two-sided inverse, found by solving a * y = 1 as a linear system over the
// 2^d blade coordinates. Throws NotInvertible.
template <CliffordScalar S>
Multivector<S> inverse(const Multivector<S>& a, double tol = kDefaultTolerance) {
  const Signature& sig = a.signature();
  const std::size_t n = sig.blade_count();
  Matrix<S> left(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = a * Multivector<S>::blade(sig, static_cast<BladeMask>(j));
    for (const auto& [mask, c] : col.terms()) left(mask, j) = c;
  }
  std::vector<S> rhs(n);
  rhs[0] = scalar_from_int<S>(1);
  auto y = solve(left, rhs, tol);
  if (!y) throw NotInvertible("multivector is not invertible");
  Multivector<S> r(sig);
  for (std::size_t j = 0; j < n; ++j) {
    if (ScalarTraits<S>::exact || !ScalarTraits<S>::is_zero((*y)[j], 0.0)) r.accumulate(static_cast<BladeMask>(j), (*y)[j]);
  }
  return r;
}

// Wedge of two grade-1 elements as the antisymmetrized product (ab - ba)/2.
template <CliffordScalar S>
Multivector<S> wedge_vectors(const Multivector<S>& a, const Multivector<S>& b) {
  if (!a.has_only_grades({1}) || !b.has_only_grades({1})) throw DomainError("wedge_vectors expects vectors");
  return commutator(a, b) * scalar_fraction<S>(1, 2);
}

// Every grade projection, indexed by grade.
template <CliffordScalar S>
std::vector<Multivector<S>> grade_decomposition(const Multivector<S>& a) {
  std::vector<Multivector<S>> parts;
  for (int k = 0; k <= a.signature().dim(); ++k) parts.push_back(grade_project(a, k));
  return parts;
}

}  // namespace cliff
