#include <gtest/gtest.h>

#include <set>

#include "cliff/purespinor.hpp"
#include "cliff/random.hpp"

using namespace cliff;
using MV = Multivector<Exact>;

namespace {

// Creation/annihilation operators straight from the occupation-set definition.
Matrix<Exact> oracle_ladder(int n, int mode, bool create) {
  const std::size_t size = std::size_t{1} << n;
  Matrix<Exact> m(size, size);
  for (std::size_t s = 0; s < size; ++s) {
    std::set<int> occ;
    for (int k = 0; k < n; ++k)
      if (s & (std::size_t{1} << k)) occ.insert(k);
    if (create == static_cast<bool>(occ.count(mode))) continue;
    long before = 0;
    for (int k : occ) before += k < mode;
    if (create) occ.insert(mode); else occ.erase(mode);
    std::size_t t = 0;
    for (int k : occ) t |= std::size_t{1} << k;
    m(t, s) = Exact(before % 2 ? -1 : 1);
  }
  return m;
}

Matrix<Exact> oracle_generator(int n, int j) {
  auto a = oracle_ladder(n, j / 2, false), ad = oracle_ladder(n, j / 2, true);
  return j % 2 == 0 ? a + ad : (a - ad) * Exact::i();
}

FockSpinor random_spinor(Sampler& rng, int n, int parity) { return random_fock_spinor(rng, n, parity); }
FockSpinor random_pure(Sampler& rng, int n) { return random_pure_spinor(rng, n); }

std::vector<Exact> random_vector(Sampler& rng, int n) {
  std::vector<Exact> v(2 * n);
  for (auto& x : v) x = rng.complex<Exact>();
  return v;
}

}  // namespace

TEST(FockRep, MatchesOccupationOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto& rep = FockRep::get(n);
    for (int j = 0; j < 2 * n; ++j) EXPECT_EQ(rep.generator(j).dense(), oracle_generator(n, j)) << n << " " << j;
  }
}

TEST(FockRep, CliffordRelations) {
  for (int n = 1; n <= 5; ++n) {
    const auto& rep = FockRep::get(n);
    const auto id = Matrix<Exact>::identity(std::size_t{1} << n);
    for (int a = 0; a < 2 * n; ++a) {
      for (int b = 0; b < 2 * n; ++b) {
        auto ea = rep.generator(a).dense(), eb = rep.generator(b).dense();
        EXPECT_EQ(ea * eb + eb * ea, id * Exact(a == b ? 2 : 0));
      }
    }
  }
  EXPECT_THROW(FockRep::get(6), DomainError);
  EXPECT_THROW(FockSpinor(0), DomainError);
}

TEST(VectorAction, LadderExamples) {
  const int n = 3;
  for (int i = 0; i < n; ++i) {
    // a_i^dagger = (e_{2i} + i e_{2i+1})/2, a_i = (e_{2i} - i e_{2i+1})/2
    std::vector<Exact> create(2 * n), annihilate(2 * n);
    create[2 * i] = annihilate[2 * i] = Exact(Rational(1, 2));
    create[2 * i + 1] = Exact(Rational(0), Rational(1, 2));
    annihilate[2 * i + 1] = Exact(Rational(0), Rational(-1, 2));
    EXPECT_EQ(vector_action(create, FockSpinor::vacuum(n)), FockSpinor::occupation(n, {i}));
    EXPECT_TRUE(vector_action(annihilate, FockSpinor::vacuum(n)).is_zero());
  }
  EXPECT_THROW(vector_action(std::vector<Exact>(3), FockSpinor::vacuum(2)), DomainError);
}

TEST(VectorAction, SquaresToQuadraticForm) {
  Sampler rng(61);
  for (int t = 0; t < 50; ++t) {
    int n = static_cast<int>(rng.integer(1, 4));
    auto v = random_vector(rng, n);
    auto u = random_spinor(rng, n, -1);
    EXPECT_EQ(vector_action(v, vector_action(v, u)), quadratic_form(v) * u);
  }
}

TEST(Annihilator, Examples) {
  for (int n = 1; n <= 5; ++n) {
    auto s = annihilator(FockSpinor::vacuum(n));
    EXPECT_EQ(s.dim(), static_cast<std::size_t>(n));
    EXPECT_TRUE(is_totally_null(s));
    EXPECT_TRUE(is_pure(FockSpinor::vacuum(n)));
  }
  auto impure = FockSpinor::vacuum(4) + FockSpinor::occupation(4, {0, 1, 2, 3});
  EXPECT_EQ(annihilator(impure).dim(), 0u);
  EXPECT_FALSE(is_pure(impure));
  EXPECT_THROW(annihilator(FockSpinor(2)), DomainError);
  EXPECT_THROW(is_pure(FockSpinor(3)), DomainError);
}

TEST(Annihilator, Census) {
  Sampler rng(62);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 100; ++t) {
      auto u = random_spinor(rng, n, static_cast<int>(rng.integer(0, 1)));
      auto s = annihilator(u);
      ASSERT_EQ(s.dim(), static_cast<std::size_t>(n));
      EXPECT_TRUE(is_totally_null(s));
      for (const auto& v : s.basis) EXPECT_TRUE(vector_action(v, u).is_zero());
    }
  }
}

TEST(Annihilator, MixedParityIsNotPure) {
  auto u = FockSpinor::vacuum(2) + FockSpinor::occupation(2, {0});
  EXPECT_LT(annihilator(u).dim(), 2u);
}

TEST(ChargeConjugation, Properties) {
  EXPECT_EQ(charge_conjugation_square(2), 1);
  EXPECT_EQ(charge_conjugation_square(3), 1);
  EXPECT_EQ(charge_conjugation_square(4), -1);
  Sampler rng(63);
  for (int t = 0; t < 50; ++t) {
    int n = static_cast<int>(rng.integer(1, 4));
    auto u = random_spinor(rng, n, -1);
    auto v = random_vector(rng, n);
    Exact c = rng.complex<Exact>();
    EXPECT_EQ(charge_conjugate(c * u), c.conj() * charge_conjugate(u));
    EXPECT_EQ(charge_conjugate(vector_action(v, u)), vector_action(real_conjugate_vector(v), charge_conjugate(u)));
    EXPECT_EQ(charge_conjugate(charge_conjugate(u)), Exact(charge_conjugation_square(n)) * u);
  }
}

TEST(Bilinear, RoundTripsThroughAction) {
  // (u w~) s = u (w~ s) with w~ s = w^T B s, so the multivector acts as u w^T B.
  Sampler rng(64);
  for (int n = 1; n <= 3; ++n) {
    const auto& rep = FockRep::get(n);
    auto b = rep.blade(rep.reversion_form_blade()).dense();
    for (int t = 0; t < 10; ++t) {
      auto u = random_spinor(rng, n, -1), w = random_spinor(rng, n, -1), s = random_spinor(rng, n, -1);
      Exact pairing;
      for (std::size_t r = 0; r < u.size(); ++r)
        for (std::size_t c = 0; c < u.size(); ++c) pairing += w[r] * b(r, c) * s[c];
      EXPECT_EQ(apply(spinor_bilinear(u, w), s), pairing * u);
    }
  }
}

TEST(Flagpole, VacuumFixtures) {
  const auto s = Signature::of(4, 0);
  auto p = flag_vector(FockSpinor::vacuum(2));
  EXPECT_EQ(p, MV::basis(s, 2) * Exact(Rational(1, 4)) - MV::basis(s, 3) * Exact(Rational(0), Rational(1, 4)));
  auto f = penrose_flagpole(FockSpinor::vacuum(2));
  EXPECT_EQ(f, MV::from_indices(s, {1, 2}, Exact(Rational(-1, 4))) +
                   MV::from_indices(s, {1, 3}, Exact(Rational(0), Rational(1, 4))));
}

TEST(Flagpole, RealNullPhaseInvariant) {
  Sampler rng(65);
  const Exact phase(Rational(3, 5), Rational(4, 5));
  for (int n = 2; n <= 3; ++n) {
    for (int t = 0; t < 30; ++t) {
      auto u = random_pure(rng, n);
      auto p = flag_vector(u);
      EXPECT_EQ(real_conjugate(p), p);
      EXPECT_FALSE(p.is_zero());
      EXPECT_TRUE(grade_project(p * p, 0).is_zero());
      EXPECT_EQ(flag_vector(phase * u), p);
      auto f = penrose_flagpole(u);
      EXPECT_EQ(real_conjugate(f), f);
      EXPECT_EQ(penrose_flagpole(Exact::i() * u), -f);
    }
  }
}

TEST(Flagpole, GeneralizedRotationLaw) {
  Sampler rng(66);
  const Exact i = Exact::i(), half(Rational(1, 2));
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      auto u = random_pure(rng, n);
      ASSERT_TRUE(conjugation_identity_holds(u));
      auto g = generalized_flagpole(u);
      EXPECT_EQ(g, penrose_flagpole(u));
      EXPECT_EQ(generalized_flagpole(i * u), -g);
      auto x = grade_project(spinor_bilinear(u, u) * i, 2);
      auto re = (x + real_conjugate(x)) * half, im = (x - real_conjugate(x)) * (half / i);
      // theta = pi/4: cos 2theta = 0, sin 2theta = 1.
      EXPECT_EQ(phase_rotated_flagpole(u, i), -im);
      // Rational phase (3 + 4i)/5 checked against the literal definition.
      const Exact z(Rational(3, 5), Rational(4, 5));
      const Exact w = z * z;
      EXPECT_EQ(generalized_flagpole(z * u), phase_rotated_flagpole(u, w));
      EXPECT_EQ(phase_rotated_flagpole(u, w), re * Exact(w.real()) - im * Exact(w.imag()));
    }
  }
}

TEST(Orbit, DimensionMatchesCoset) {
  EXPECT_EQ(coset_dim(2), 2);
  EXPECT_EQ(coset_dim(3), 6);
  EXPECT_EQ(coset_dim(4), 12);
  EXPECT_EQ(coset_dim(1), 0);
  EXPECT_THROW(coset_dim(0), DomainError);
  Sampler rng(67);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(orbit_dimension(FockSpinor::vacuum(n)), coset_dim(n));
    for (int t = 0; t < 5; ++t) EXPECT_EQ(orbit_dimension(random_pure(rng, n)), coset_dim(n));
  }
  EXPECT_THROW(orbit_dimension(FockSpinor::vacuum(4) + FockSpinor::occupation(4, {0, 1, 2, 3})), DomainError);
}

TEST(Json, FockSpinorRoundTrip) {
  Sampler rng(68);
  auto u = random_spinor(rng, 3, -1);
  EXPECT_EQ(fock_spinor_from_json(fock_spinor_to_json(u)), u);
  auto j = json::parse(R"({"n":4,"terms":[{"occ":[],"re":"1","im":"0"},{"occ":[1,2,3,4],"re":"1","im":"0"}]})");
  EXPECT_EQ(fock_spinor_from_json(j), FockSpinor::vacuum(4) + FockSpinor::occupation(4, {0, 1, 2, 3}));
  EXPECT_THROW(fock_spinor_from_json(json::parse(R"({"n":2,"terms":[{"occ":[3]}]})")), InputError);
  EXPECT_THROW(fock_spinor_from_json(json::parse(R"({"n":6,"terms":[]})")), DomainError);
  EXPECT_THROW(fock_spinor_from_json(json::parse(R"({"terms":[]})")), InputError);
}
