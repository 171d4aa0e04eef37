#pragma once

#include <array>
#include <vector>

#include "cliff/conformal.hpp"
#include "cliff/sampler.hpp"

namespace cliff {

// Multivector with random Gaussian-rational coefficients on a random subset of blades.
template <CliffordScalar S>
Multivector<S> random_multivector(Sampler& s, const Signature& sig, bool complex_coeffs = true) {
  Multivector<S> m(sig);
  for (unsigned mask = 0; mask < sig.blade_count(); ++mask) {
    if (s.integer(0, 2) == 0) continue;
    m.accumulate(static_cast<BladeMask>(mask), complex_coeffs ? s.complex<S>() : s.real<S>());
  }
  return m;
}

template <CliffordScalar S>
std::array<S, 4> random_spacetime_vector(Sampler& s) {
  return {s.real<S>(), s.real<S>(), s.real<S>(), s.real<S>()};
}

template <CliffordScalar S>
Multivector<S> random_paravector(Sampler& s) {
  return paravector(random_spacetime_vector<S>(s));
}

// Unit element of Cl(3,0) with rational coefficients: a product of
// Pythagorean plane rotations (a + b e_ij)/c and boosts c + s e_i with c^2 - s^2 = 1.
template <CliffordScalar S>
Multivector<S> random_rotor(Sampler& s) {
  static constexpr std::array<std::array<long, 3>, 4> triples{{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}}};
  const auto s30 = sig::cl30();
  auto g = Multivector<S>::scalar(s30, scalar_from_int<S>(1));
  const long factors = s.integer(1, 3);
  for (long f = 0; f < factors; ++f) {
    Multivector<S> r(s30);
    if (s.coin()) {
      const auto& t = triples[s.integer(0, 3)];
      const long sign = s.coin() ? 1 : -1;
      const int i = static_cast<int>(s.integer(0, 2));
      const int j = (i + 1 + static_cast<int>(s.integer(0, 1))) % 3;
      r = Multivector<S>::scalar(s30, scalar_fraction<S>(t[0], t[2])) +
          Multivector<S>::from_indices(s30, {std::min(i, j), std::max(i, j)}, scalar_fraction<S>(sign * t[1], t[2]));
    } else {
      const long m = s.integer(2, 4), n = s.integer(1, m - 1);
      const long sign = s.coin() ? 1 : -1;
      const int i = static_cast<int>(s.integer(0, 2));
      r = Multivector<S>::scalar(s30, scalar_fraction<S>(m * m + n * n, 2 * m * n)) +
          Multivector<S>::basis(s30, i) * scalar_fraction<S>(sign * (m * m - n * n), 2 * m * n);
    }
    g = g * r;
  }
  return g;
}

enum class MobiusKind { translation, dilation, rotation, inversion, transvection };

template <CliffordScalar S>
MobiusElement<S> random_generator(Sampler& s, MobiusKind kind) {
  switch (kind) {
    case MobiusKind::translation:
      return make_translation(random_paravector<S>(s));
    case MobiusKind::dilation: {
      const long num = s.integer(1, 4);
      Rational root(num, s.integer(1, 4));
      root.canonicalize();
      return make_dilation(ScalarTraits<S>::from_rational(root * root));
    }
    case MobiusKind::rotation:
      return make_rotation(random_rotor<S>(s));
    case MobiusKind::inversion:
      return make_inversion<S>();
    case MobiusKind::transvection:
      return make_transvection(random_paravector<S>(s));
  }
  throw std::logic_error("unknown Mobius kind");
}

// Word of length 1..max_length in the five constructors.
template <CliffordScalar S>
MobiusElement<S> random_mobius_word(Sampler& s, int max_length = 6) {
  const long length = s.integer(1, max_length);
  auto g = make_identity<S>();
  for (long k = 0; k < length; ++k) {
    g = compose(g, random_generator<S>(s, static_cast<MobiusKind>(s.integer(0, 4))));
  }
  return g;
}

}  // namespace cliff
