#include <gtest/gtest.h>

#include <cmath>

#include "cliff/conformal.hpp"
#include "cliff/random.hpp"

using namespace cliff;
using MV = Multivector<Exact>;
using Point = ParavectorPoint<Exact>;

namespace {

const Signature s30 = sig::cl30();

MV e(int i) { return MV::basis(s30, i - 1); }
MV sc(const Exact& v) { return MV::scalar(s30, v); }

Point compactified(const MV& x) { return {x, (x * clifford_conjugation(x)).scalar_part(), Exact(1)}; }

// (a x + c)(b x + d)^{-1} with a general linear-solve inverse.
MV oracle_image(const MobiusElement<Exact>& g, const MV& x) {
  const auto& m = g.matrix();
  return (m.a * x + m.c) * inverse(m.b * x + m.d);
}

}  // namespace

TEST(Compactify, Examples) {
  auto p = compactify<Exact>(Signature::of(1, 3), {0, 0, 0, 0});
  EXPECT_EQ(p.lambda, Exact(0));
  EXPECT_EQ(p.mu, Exact(1));
  auto null = compactify<Exact>(Signature::of(1, 3), {1, 1, 0, 0});
  EXPECT_EQ(null.lambda, Exact(0));
  EXPECT_EQ(null.klein_residual(), Exact(0));
  auto q = compactify_spacetime<Exact>({1, 1, 0, 0});
  EXPECT_EQ(q.lambda, Exact(0));
  EXPECT_TRUE(klein_check(q));
  EXPECT_THROW(compactify<Exact>(Signature::of(1, 3), {1, 2}), DomainError);
}

TEST(Compactify, KleinOnRandomPointsAndSignatures) {
  Sampler rng(21);
  for (auto s : {Signature::of(1, 3), Signature::of(2, 2), Signature::of(4, 0)}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<Exact> x;
      for (int i = 0; i < s.dim(); ++i) x.push_back(rng.real<Exact>());
      EXPECT_EQ(compactify(s, x).klein_residual(), Exact(0));
    }
  }
  for (int t = 0; t < 100; ++t) {
    auto p = compactify_spacetime(random_spacetime_vector<Exact>(rng));
    EXPECT_TRUE(klein_check(p));
    auto b = p.to_cl41();
    EXPECT_TRUE((b * clifford_conjugation(b)).is_zero());
  }
}

TEST(KleinCheck, Examples) {
  EXPECT_TRUE(klein_check(Point{MV(s30), Exact(0), Exact(1)}));
  EXPECT_TRUE(klein_check(Point{e(1), Exact(-1), Exact(1)}));
  EXPECT_FALSE(klein_check(Point{e(1), Exact(1), Exact(1)}));
}

// (alpha5)^2 + (alpha0)^2 - sum (alpha^i)^2 - (alpha4)^2 = 0 iff b b̄ = 0.
TEST(KleinCheck, QuadricFormEquivalence) {
  Sampler rng(22);
  const auto s41 = sig::cl41();
  for (int t = 0; t < 200; ++t) {
    std::array<Exact, 6> a;
    for (auto& v : a) v = Exact(rng.integer(-3, 3));
    MV b = MV::scalar(s41, a[5]);
    for (int k = 0; k < 5; ++k) b.accumulate(static_cast<BladeMask>(1u << k), a[k]);
    Exact form = a[5] * a[5] + a[0] * a[0] - a[1] * a[1] - a[2] * a[2] - a[3] * a[3] - a[4] * a[4];
    auto point = Point::from_cl41(b);
    EXPECT_EQ(klein_check(point), form.is_zero());
  }
}

TEST(MobiusElement, RejectsNonUnit) {
  EXPECT_THROW(MobiusElement<Exact>::from_matrix(Mat2<Exact>::scalars(2, 0, 0, 1)), DomainError);
  EXPECT_THROW(make_rotation<Exact>(sc(2)), DomainError);
  EXPECT_THROW(make_dilation<Exact>(Exact(2)), DomainError);
  EXPECT_THROW(make_dilation<Exact>(Exact(-4)), DomainError);
  EXPECT_THROW(make_dilation<Exact>(Exact(0)), DomainError);
  EXPECT_THROW(make_translation<Exact>(MV::from_indices(s30, {0, 1})), DomainError);
}

TEST(Translation, Examples) {
  EXPECT_EQ(make_translation(MV(s30)).matrix(), Mat2<Exact>::identity());
  auto r = apply_mobius(make_translation(e(1)), e(2));
  EXPECT_EQ(r.x, e(1) + e(2));
  EXPECT_EQ(r.delta, Exact(1));
  Sampler rng(23);
  for (int t = 0; t < 20; ++t) {
    auto h1 = random_paravector<Exact>(rng), h2 = random_paravector<Exact>(rng), x = random_paravector<Exact>(rng);
    EXPECT_EQ(apply_mobius(compose(make_translation(h1), make_translation(h2)), x).x, x + h1 + h2);
  }
  auto h = random_paravector<Exact>(rng);
  EXPECT_EQ(compose(make_translation(h), make_translation(-h)).matrix(), Mat2<Exact>::identity());
}

TEST(Dilation, Examples) {
  EXPECT_EQ(make_dilation(Exact(1)).matrix(), Mat2<Exact>::identity());
  auto r = apply_mobius(make_dilation(Exact(4)), e(1));
  EXPECT_EQ(r.x, e(1) * Exact(4));
  EXPECT_EQ(r.delta, Exact(Rational(1, 4)));
  EXPECT_EQ(compose(make_dilation(Exact(4)), make_dilation(Exact(Rational(1, 4)))).matrix(), Mat2<Exact>::identity());
}

TEST(Rotation, Examples) {
  EXPECT_EQ(make_rotation(sc(1)).matrix(), Mat2<Exact>::identity());
  Sampler rng(24);
  for (int t = 0; t < 20; ++t) {
    auto g = random_rotor<Exact>(rng);
    auto x = random_paravector<Exact>(rng);
    auto r = apply_mobius(make_rotation(g), x);
    EXPECT_EQ(r.x, g * x * inverse(grade_involution(g)));
    // Spatial rotors fix the time axis; boosts do not.
    if (g.has_only_grades({0, 2})) EXPECT_EQ(apply_mobius(make_rotation(g), sc(1)).x, sc(1));
  }
}

TEST(Rotation, QuarterTurnInFloat) {
  using MC = Multivector<Complex>;
  const double r = 1.0 / std::sqrt(2.0);
  auto g = MC::scalar(s30, r) + MC::from_indices(s30, {0, 1}, Complex(r));
  auto img = apply_mobius(make_rotation(g), MC::basis(s30, 0)).x;
  EXPECT_TRUE(approx_equal(img, -MC::basis(s30, 1), 1e-12));
  EXPECT_TRUE(approx_equal(img, g * MC::basis(s30, 0) * reversion(g), 1e-12));
}

TEST(Inversion, Examples) {
  auto inv = make_inversion<Exact>();
  EXPECT_EQ(apply_mobius(inv, sc(1)).x, sc(-1));
  EXPECT_EQ(apply_mobius(inv, sc(2)).x, sc(Exact(Rational(-1, 2))));
  EXPECT_EQ(compose(inv, inv).matrix(), Mat2<Exact>::identity() * Exact(-1));
  Sampler rng(25);
  for (int t = 0; t < 20; ++t) {
    auto x = random_paravector<Exact>(rng);
    if (x.is_zero()) continue;
    auto p = twisted_adjoint(compose(inv, inv), compactified(x));
    EXPECT_TRUE(projectively_equal(p, compactified(x)));
  }
  EXPECT_THROW(apply_mobius(inv, MV(s30)), AtInfinity);
}

TEST(Transvection, Examples) {
  EXPECT_EQ(make_transvection(MV(s30)).matrix(), Mat2<Exact>::identity());
  EXPECT_EQ(apply_mobius(make_transvection(e(1)), e(1)).x, e(1) * Exact(Rational(1, 2)));
  Sampler rng(26);
  auto inv = make_inversion<Exact>();
  for (int t = 0; t < 20; ++t) {
    auto h = random_paravector<Exact>(rng);
    auto x = random_paravector<Exact>(rng);
    auto conj = compose(inv, compose(make_translation(-h), inv));
    EXPECT_EQ(conj.matrix(), make_transvection(h).matrix() * Exact(-1));
    try {
      EXPECT_EQ(apply_mobius(make_transvection(h), x).x, x * inverse(h * x + Exact(1)));
    } catch (const AtInfinity&) {
    }
  }
}

TEST(ApplyMobius, AgreesWithLinearSolveOracle) {
  Sampler rng(27);
  for (int t = 0; t < 50; ++t) {
    auto g = random_mobius_word<Exact>(rng);
    auto x = random_paravector<Exact>(rng);
    try {
      auto r = apply_mobius(g, x);
      EXPECT_EQ(r.x, oracle_image(g, x));
      EXPECT_TRUE(r.x.has_only_grades({0, 1}));
    } catch (const AtInfinity&) {
    }
  }
}

TEST(ApplyMobius, IdentityAndComposeExample) {
  Sampler rng(28);
  auto h = random_paravector<Exact>(rng);
  auto g = compose(make_dilation(Exact(4)), make_translation(h));
  for (int t = 0; t < 20; ++t) {
    auto x = random_paravector<Exact>(rng);
    auto r = apply_mobius(make_identity<Exact>(), x);
    EXPECT_EQ(r.x, x);
    EXPECT_EQ(r.delta, Exact(1));
    EXPECT_EQ(apply_mobius(g, x).x, (x + h) * Exact(4));
  }
}

TEST(TwistedAdjoint, Examples) {
  Sampler rng(29);
  auto x = random_paravector<Exact>(rng), h = random_paravector<Exact>(rng);
  auto p = compactified(x);
  EXPECT_EQ(twisted_adjoint(make_identity<Exact>(), p).x, p.x);
  auto q = twisted_adjoint(make_translation(h), p);
  auto expect = compactified(x + h);
  EXPECT_EQ(q.x, expect.x);
  EXPECT_EQ(q.lambda, expect.lambda);
  EXPECT_EQ(q.mu, expect.mu);
  auto inf = twisted_adjoint(make_inversion<Exact>(), compactified(MV(s30)));
  EXPECT_EQ(inf.mu, Exact(0));
  EXPECT_EQ(inf.lambda, Exact(1));
  EXPECT_TRUE(inf.x.is_zero());
  EXPECT_TRUE(klein_check(inf));
  EXPECT_THROW(inf.normalized(), AtInfinity);
}

// The table's -x̄ holds on the unit quadric; elsewhere the formula gives -x^{-1}.
TEST(Inversion, TableFormOnUnitQuadric) {
  auto inv = make_inversion<Exact>();
  for (auto [a, b, c] : std::vector<std::array<long, 3>>{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}) {
    // x0^2 - |x|^2 = 1 with x0 = c/b, |x| = a/b
    auto x = sc(Exact(Rational(c, b))) + e(1) * Exact(Rational(a, b));
    ASSERT_EQ(x * clifford_conjugation(x), sc(1));
    EXPECT_EQ(apply_mobius(inv, x).x, -clifford_conjugation(x));
  }
  auto x = sc(2) + e(3);
  EXPECT_NE(apply_mobius(inv, x).x, -clifford_conjugation(x));
  EXPECT_EQ(apply_mobius(inv, x).x, -inverse(x));
}

TEST(Properties, RandomWords) {
  Sampler rng(30);
  for (int t = 0; t < 100; ++t) {
    auto g1 = random_mobius_word<Exact>(rng), g2 = random_mobius_word<Exact>(rng);
    auto g12 = compose(g1, g2);
    EXPECT_EQ(g12.matrix() * g12.matrix().conjugated(), Mat2<Exact>::identity());
    auto x = random_paravector<Exact>(rng);
    auto b = compactified(x);
    auto image = twisted_adjoint(g12, b);
    EXPECT_TRUE(klein_check(image));
    try {
      auto r2 = apply_mobius(g2, x);
      auto r1 = apply_mobius(g1, r2.x);
      auto r12 = apply_mobius(g12, x);
      EXPECT_EQ(r12.x, r1.x);
      EXPECT_EQ(r12.delta, r1.delta * r2.delta);
      EXPECT_TRUE(projectively_equal(image, compactified(r12.x)));
    } catch (const AtInfinity&) {
    }
  }
}

TEST(Properties, FloatBackendAgrees) {
  Sampler a(31), b(31);
  for (int t = 0; t < 20; ++t) {
    auto ge = random_mobius_word<Exact>(a);
    auto gf = random_mobius_word<Complex>(b);
    auto xe = random_paravector<Exact>(a);
    auto xf = random_paravector<Complex>(b);
    try {
      auto re = apply_mobius(ge, xe);
      auto rf = apply_mobius(gf, xf);
      EXPECT_TRUE(approx_equal(to_complex(re.x), rf.x, 1e-9));
    } catch (const AtInfinity&) {
    }
  }
}
