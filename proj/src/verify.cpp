#include "cliff/verify.hpp"

#include <algorithm>

#include "cliff/algebra.hpp"
#include "cliff/generators.hpp"
#include "cliff/purespinor.hpp"
#include "cliff/random.hpp"
#include "cliff/twistor.hpp"

namespace cliff {

namespace {

using MV = Multivector<Exact>;
using Point = ParavectorPoint<Exact>;

double residual_of(const MV& a, const MV& b) {
  return a.signature() == b.signature() ? max_magnitude(a - b) : 1.0;
}
double residual_of(const Mat2<Exact>& a, const Mat2<Exact>& b) {
  auto d = a - b;
  return std::max({max_magnitude(d.a), max_magnitude(d.b), max_magnitude(d.c), max_magnitude(d.d)});
}
double residual_of(const Exact& a, const Exact& b) { return ScalarTraits<Exact>::magnitude(a - b); }
double residual_of(const Matrix<Exact>& a, const Matrix<Exact>& b) { return max_magnitude(a - b); }
double residual_of(const DiracSpinor<Exact>& a, const DiracSpinor<Exact>& b) {
  double r = 0.0;
  for (int k = 0; k < 4; ++k) r = std::max(r, ScalarTraits<Exact>::magnitude(a.components[k] - b.components[k]));
  return r;
}

template <class T>
void expect_equal(VerificationReport& r, const std::string& family, std::vector<long> idx, const T& a, const T& b) {
  const bool ok = a == b;
  r.add(family, std::move(idx), ok, ok ? 0.0 : residual_of(a, b));
}

void expect_true(VerificationReport& r, const std::string& family, std::vector<long> idx, bool ok,
                 const std::string& note) {
  r.add(family, std::move(idx), ok, ok ? 0.0 : 1.0, true, ok ? std::string{} : note);
}

Point compactified(const MV& x) { return {x, (x * clifford_conjugation(x)).scalar_part(), Exact(1)}; }

// Rational point on x x̄ = 1: x0 = (1 + s)/(1 - s), x_k = 2 v_k/(1 - s), s = |v|^2.
MV unit_quadric_point(Sampler& rng) {
  for (;;) {
    std::array<Rational, 3> v{rng.rational(3, 4), rng.rational(3, 4), rng.rational(3, 4)};
    Rational s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (s == 1) continue;
    Rational d = 1 - s;
    return paravector<Exact>({Exact(Rational((1 + s) / d)), Exact(Rational(2 * v[0] / d)), Exact(Rational(2 * v[1] / d)),
                              Exact(Rational(2 * v[2] / d))});
  }
}

MV random_cl41_paravector(Sampler& rng) {
  MV b = MV::scalar(sig::cl41(), rng.real<Exact>());
  for (int a = 0; a < 5; ++a) b.accumulate(static_cast<BladeMask>(1u << a), rng.real<Exact>());
  return b;
}

WeylSpinor<Exact> random_dotted(Sampler& rng) {
  Exact a = rng.complex<Exact>();
  Exact b = rng.complex<Exact>();
  if (a.is_zero() && b.is_zero()) a = Exact(1);
  return WeylSpinor<Exact>::dotted(a, b);
}

}  // namespace

const std::vector<std::string>& scope_names() {
  static const std::vector<std::string> names{"all", "algebra", "conformal", "generators", "twistor", "pure"};
  return names;
}

std::optional<VerifyScope> parse_scope(const std::string& name) {
  const auto& names = scope_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return static_cast<VerifyScope>(k);
  }
  return std::nullopt;
}

std::string to_string(VerifyScope scope) { return scope_names()[static_cast<std::size_t>(scope)]; }

VerificationReport verify_algebra(std::uint64_t seed) {
  VerificationReport r("algebra");
  Sampler rng(seed);
  const std::vector<Signature> sigs{sig::cl30(), sig::cl13(), sig::cl41()};
  for (long si = 0; si < static_cast<long>(sigs.size()); ++si) {
    const auto& s = sigs[si];
    for (long t = 0; t < 200; ++t) {
      auto a = random_multivector<Exact>(rng, s);
      auto b = random_multivector<Exact>(rng, s);
      auto c = random_multivector<Exact>(rng, s);
      expect_equal(r, "associativity", {si, t}, (a * b) * c, a * (b * c));
    }
    for (long t = 0; t < 50; ++t) {
      auto a = random_multivector<Exact>(rng, s);
      auto b = random_multivector<Exact>(rng, s);
      expect_equal(r, "reversion_anti_automorphism", {si, t}, reversion(a * b), reversion(b) * reversion(a));
      expect_equal(r, "grade_involution_automorphism", {si, t}, grade_involution(a * b),
                   grade_involution(a) * grade_involution(b));
      expect_equal(r, "conjugation_composite", {si, t}, clifford_conjugation(a), grade_involution(reversion(a)));
      expect_equal(r, "involutions_commute", {si, t}, grade_involution(reversion(a)), reversion(grade_involution(a)));
    }
    for (long t = 0; t < 20; ++t) {
      auto a = random_multivector<Exact>(rng, s);
      MV sum(s);
      bool ok = true;
      for (int k = 0; k <= s.dim(); ++k) {
        auto pk = grade_project(a, k);
        ok = ok && grade_project(pk, k) == pk;
        for (int l = 0; l <= s.dim(); ++l) ok = ok && (l == k || grade_project(pk, l).is_zero());
        sum += pk;
      }
      expect_true(r, "grade_partition", {si, t}, ok && sum == a, "grade projections do not partition the element");
    }
  }

  for (long t = 0; t < 200; ++t) {
    auto a = random_multivector<Exact>(rng, sig::cl41());
    auto b = random_multivector<Exact>(rng, sig::cl41());
    expect_equal(r, "homomorphism_complex_cl13", {t}, cl41_to_complex_cl13(a * b),
                 cl41_to_complex_cl13(a) * cl41_to_complex_cl13(b));
    expect_equal(r, "homomorphism_mat2", {t}, cl41_to_mat2(a * b), cl41_to_mat2(a) * cl41_to_mat2(b));
    auto x = random_multivector<Exact>(rng, sig::cl30());
    auto y = random_multivector<Exact>(rng, sig::cl30());
    expect_equal(r, "homomorphism_cl30", {t}, cl30_to_cl41(x * y), cl30_to_cl41(x) * cl30_to_cl41(y));
    auto u = random_multivector<Exact>(rng, sig::cl13());
    auto v = random_multivector<Exact>(rng, sig::cl13());
    expect_equal(r, "gamma_oracle", {t}, gamma_matrix_of(u * v), gamma_matrix_of(u) * gamma_matrix_of(v));
  }

  const auto images = cl41_generators_in_cl13<Exact>();
  for (long a = 0; a < 5; ++a) {
    for (long b = 0; b < 5; ++b) {
      const long g = a != b ? 0 : (a == 0 ? -2 : 2);
      expect_equal(r, "generator_signature", {a, b}, anticommutator(images[a], images[b]), MV::scalar(sig::cl13(), g));
    }
  }

  for (long t = 0; t < 50; ++t) {
    auto b = random_cl41_paravector(rng);
    expect_equal(r, "roundtrip_paravector", {t}, mat2_to_paravector(paravector_to_mat2(b)), b);
    auto a = random_multivector<Exact>(rng, sig::cl13());
    expect_equal(r, "roundtrip_gamma_matrix", {t}, multivector_of_matrix(gamma_matrix_of(a)), a);
    auto c = random_multivector<Exact>(rng, sig::cl41());
    expect_equal(r, "roundtrip_mat2", {t}, mat2_to_cl41(cl41_to_mat2(c)), c);
  }
  return r;
}

VerificationReport verify_klein(std::uint64_t seed) {
  VerificationReport r("klein");
  Sampler rng(seed);
  for (long t = 0; t < 500; ++t) {
    auto b = compactify_spacetime(random_spacetime_vector<Exact>(rng)).to_cl41();
    expect_true(r, "compactified_on_absolute", {t}, (b * clifford_conjugation(b)).is_zero(), "b b̄ is not zero");
  }
  long on = 0;
  for (long t = 0; t < 200; ++t) {
    std::array<Exact, 6> a;
    for (auto& v : a) v = Exact(rng.integer(-2, 2));
    MV b = MV::scalar(sig::cl41(), a[5]);
    for (int k = 0; k < 5; ++k) b.accumulate(static_cast<BladeMask>(1u << k), a[k]);
    const bool form_zero = (a[5] * a[5] + a[0] * a[0] - a[1] * a[1] - a[2] * a[2] - a[3] * a[3] - a[4] * a[4]).is_zero();
    on += form_zero;
    expect_true(r, "quadric_equivalence", {t}, klein_check(Point::from_cl41(b)) == form_zero,
                "Klein test disagrees with the quadric form");
  }
  r.observe({{"quadric_samples_on_absolute", on}, {"quadric_samples_off_absolute", 200 - on}});
  return r;
}

VerificationReport verify_maps(std::uint64_t seed) {
  VerificationReport r("maps");
  Sampler rng(seed);
  const auto inv = make_inversion<Exact>();
  for (long t = 0; t < 100; ++t) {
    auto h = random_paravector<Exact>(rng);
    auto x = random_paravector<Exact>(rng);
    expect_equal(r, "translation", {t}, apply_mobius(make_translation(h), x).x, x + h);

    const long num = rng.integer(1, 4);
    Rational root(num, rng.integer(1, 4));
    root.canonicalize();
    const Exact rho(Rational(root * root));
    auto dil = apply_mobius(make_dilation(rho), x);
    expect_equal(r, "dilation", {t}, dil.x, x * rho);
    expect_equal(r, "dilation_factor", {t}, dil.delta, Exact(1) / rho);

    auto g = random_rotor<Exact>(rng);
    expect_equal(r, "rotation", {t}, apply_mobius(make_rotation(g), x).x, g * x * inverse(grade_involution(g)));

    auto u = unit_quadric_point(rng);
    expect_equal(r, "inversion_unit_quadric", {t}, apply_mobius(inv, u).x, -clifford_conjugation(u));
    const Exact norm = (x * clifford_conjugation(x)).scalar_part();
    auto image = twisted_adjoint(inv, compactified(x));
    const bool ok = norm.is_zero() ? image.at_infinity()
                                   : projectively_equal(image, compactified(-clifford_conjugation(x) / norm));
    expect_true(r, "inversion_projective", {t}, ok, "twisted adjoint disagrees with -x^{-1}");

    try {
      auto tv = apply_mobius(make_transvection(h), x);
      expect_equal(r, "transvection", {t}, tv.x, x * inverse(h * x + Exact(1)));
    } catch (const AtInfinity&) {
      bool singular = false;
      try {
        inverse(h * x + Exact(1));
      } catch (const NotInvertible&) {
        singular = true;
      }
      expect_true(r, "transvection", {t}, singular, "infinity reported for invertible hx + 1");
    }
  }

  long at_infinity = 0;
  for (long t = 0; t < 100; ++t) {
    auto g1 = random_mobius_word<Exact>(rng);
    auto g2 = random_mobius_word<Exact>(rng);
    auto g12 = compose(g1, g2);
    expect_equal(r, "unit_closure", {t}, g12.matrix() * g12.matrix().conjugated(), Mat2<Exact>::identity());
    auto x = random_paravector<Exact>(rng);
    auto image = twisted_adjoint(g12, compactified(x));
    expect_true(r, "klein_preservation", {t}, klein_check(image), "image left the Klein absolute");
    try {
      auto r2 = apply_mobius(g2, x);
      auto r1 = apply_mobius(g1, r2.x);
      auto r12 = apply_mobius(g12, x);
      expect_equal(r, "composition_homomorphism", {t}, r12.x, r1.x);
      expect_equal(r, "conformal_factor_multiplicative", {t}, r12.delta, r1.delta * r2.delta);
      expect_true(r, "projective_compatibility", {t}, projectively_equal(image, compactified(r12.x)),
                  "twisted adjoint and Mobius action disagree");
    } catch (const AtInfinity&) {
      ++at_infinity;
    }
  }
  r.observe({{"words_reaching_infinity", at_infinity}});
  return r;
}

VerificationReport verify_conformal(std::uint64_t seed) {
  VerificationReport r("conformal");
  r.merge(verify_klein(seed));
  r.merge(verify_maps(seed));
  return r;
}

VerificationReport verify_generators(MConvention convention) {
  VerificationReport r("generators");
  const auto table = commutation_table(convention);
  const auto dual = duality_check(convention);
  for (const auto& c : table.checks()) r.add(c);
  for (auto c : dual.checks()) {
    if (!c.passed) c.note = "dual: " + c.note;
    r.add(std::move(c));
  }
  for (auto conv : {MConvention::standard, MConvention::reversed}) {
    const auto sweep = commutation_table(conv);
    nlohmann::json fams = nlohmann::json::object();
    for (const auto& f : relation_families()) {
      const auto checks = sweep.family(f);
      fams[f] = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    r.observe({{"m_convention", to_string(conv)}, {"families_passing", fams}, {"all_pass", sweep.passed()}});
  }
  return r;
}

VerificationReport verify_twistor(std::uint64_t seed) {
  VerificationReport r("twistor");
  Sampler rng(seed);
  const auto s41 = sig::cl41();
  const SpacetimeVector<Exact> origin{0, 0, 0, 0};
  for (long t = 0; t < 100; ++t) {
    auto x = random_spacetime_vector<Exact>(rng);
    auto xp = random_spacetime_vector<Exact>(rng);
    auto pi = random_dotted(rng);
    expect_equal(r, "two_path_twistor", {t}, reference_twistor(x, pi).eta, reference_twistor_closed_form(x, pi));

    auto q = pi_outer(pi);
    auto xm = spacetime_multivector(x);
    expect_equal(r, "chirality_chain", {t}, gamma5<Exact>() * xm * q, -(xm * q) * Exact::i());
    expect_equal(r, "flagpole_chain", {t}, flagpole(x, pi), q - xm * q * Exact::i());

    expect_equal(r, "self_incidence", {t}, incidence(x, x, pi), Exact(0));
    const Exact c = rng.complex<Exact>();
    expect_equal(r, "incidence_scaling", {t}, incidence(x, xp, pi.scaled(c)), Exact(c.norm()) * incidence(x, xp, pi));
    expect_equal(r, "scalar_pairing", {t}, scalar_pairing(x, pi), Exact(2) * incidence(x, origin, pi));

    const Exact a0 = rng.real<Exact>();
    MV b = MV::scalar(s41, x[0]) + MV::basis(s41, 0) * a0 + MV::basis(s41, 4) * (Exact(1) - a0);
    for (int k = 1; k <= 3; ++k) b.accumulate(static_cast<BladeMask>(1u << k), x[k]);
    expect_equal(r, "algebraic_twistor", {t}, algebraic_twistor(b, pi), reference_twistor(x, pi).eta);

    auto klein = compactify_spacetime(x).to_cl41();
    expect_true(r, "algebraic_incidence_on_absolute", {t},
                algebraic_incidence(klein, random_multivector<Exact>(rng, s41)).is_zero(),
                "incidence of a Klein point does not vanish");
  }
  auto pi = WeylSpinor<Exact>::dotted(1, 0);
  auto hits = robinson_locus(origin, pi, integer_grid<Exact>(-2, 2));
  expect_true(r, "robinson_locus_fixture", {}, hits.size() == 125, "locus size differs from 125");
  r.observe({{"robinson_locus_size", hits.size()}, {"incident_points_other_than_x", hits.size() - 1}});
  return r;
}

VerificationReport verify_purity(std::uint64_t seed) {
  VerificationReport r("purity");
  Sampler rng(seed);
  for (long n = 1; n <= 3; ++n) {
    for (long t = 0; t < 100; ++t) {
      const int parity = static_cast<int>(rng.integer(0, 1));
      auto u = random_fock_spinor(rng, static_cast<int>(n), parity);
      auto s = annihilator(u);
      r.add("census", {n, t}, s.dim() == static_cast<std::size_t>(n),
            std::abs(static_cast<double>(s.dim()) - static_cast<double>(n)));
      expect_true(r, "totally_null", {n, t}, is_totally_null(s), "annihilator is not totally null");
    }
  }
  auto vac = annihilator(FockSpinor::vacuum(4));
  r.add("census", {4, 0}, vac.dim() == 4, std::abs(static_cast<double>(vac.dim()) - 4.0));
  expect_true(r, "totally_null", {4, 0}, is_totally_null(vac), "annihilator is not totally null");
  auto witness = annihilator(FockSpinor::vacuum(4) + FockSpinor::occupation(4, {0, 1, 2, 3}));
  r.add("impure_witness", {4}, witness.dim() == 0, static_cast<double>(witness.dim()));
  return r;
}

VerificationReport verify_orbits(std::uint64_t seed) {
  VerificationReport r("orbits");
  Sampler rng(seed);
  for (long n = 2; n <= 4; ++n) {
    const int ni = static_cast<int>(n);
    std::vector<FockSpinor> samples{FockSpinor::vacuum(ni)};
    for (int k = 0; k < 4; ++k) samples.push_back(random_pure_spinor(rng, ni));
    for (long t = 0; t < static_cast<long>(samples.size()); ++t) {
      const int d = orbit_dimension(samples[t]);
      r.add("orbit_dimension", {n, t}, d == coset_dim(ni), std::abs(d - coset_dim(ni)));
    }
  }
  return r;
}

VerificationReport verify_flagpoles(std::uint64_t seed) {
  VerificationReport r("flagpoles");
  Sampler rng(seed);
  const Exact i = Exact::i(), half(Rational(1, 2));
  const Exact z(Rational(3, 5), Rational(4, 5));
  const Exact w = z * z;
  for (long n = 2; n <= 3; ++n) {
    const int ni = static_cast<int>(n);
    expect_true(r, "charge_conjugation_square", {n}, charge_conjugation_square(ni) == 1,
                "charge conjugation does not square to +1");
    for (long t = 0; t < 20; ++t) {
      auto u = random_pure_spinor(rng, ni);
      auto p = flag_vector(u);
      expect_equal(r, "flag_vector_real", {n, t}, real_conjugate(p), p);
      expect_equal(r, "flag_vector_phase_invariant", {n, t}, flag_vector(z * u), p);
      expect_true(r, "flag_vector_null", {n, t}, !p.is_zero() && grade_project(p * p, 0).is_zero(),
                  "flag vector is zero or not null");
      auto f = penrose_flagpole(u);
      expect_equal(r, "flagpole_self_conjugate", {n, t}, real_conjugate(f), f);
      const bool identity = conjugation_identity_holds(u);
      expect_true(r, "conjugation_identity", {n, t}, identity, "conjugation identity fails");
      if (!identity) continue;
      auto x = grade_project(spinor_bilinear(u, u) * i, 2);
      auto re = (x + real_conjugate(x)) * half;
      auto im = (x - real_conjugate(x)) * (half / i);
      expect_equal(r, "rotation_law", {n, t}, generalized_flagpole(z * u), re * Exact(w.real()) - im * Exact(w.imag()));
      expect_equal(r, "rotation_law_quarter_turn", {n, t}, phase_rotated_flagpole(u, i), -im);
      expect_equal(r, "rotation_law_half_turn", {n, t}, generalized_flagpole(i * u), -generalized_flagpole(u));
    }
  }
  r.observe({{"charge_conjugation_square",
              {{"n2", charge_conjugation_square(2)}, {"n3", charge_conjugation_square(3)}, {"n4", charge_conjugation_square(4)}}}});
  return r;
}

VerificationReport verify_pure(std::uint64_t seed) {
  VerificationReport r("pure");
  r.merge(verify_purity(seed));
  r.merge(verify_orbits(seed));
  r.merge(verify_flagpoles(seed));
  return r;
}

VerificationReport run_verify(VerifyScope scope, std::uint64_t seed, MConvention convention) {
  switch (scope) {
    case VerifyScope::algebra: return verify_algebra(seed);
    case VerifyScope::conformal: return verify_conformal(seed);
    case VerifyScope::generators: return verify_generators(convention);
    case VerifyScope::twistor: return verify_twistor(seed);
    case VerifyScope::pure: return verify_pure(seed);
    case VerifyScope::all: break;
  }
  VerificationReport all("all");
  all.merge(verify_algebra(seed));
  all.merge(verify_conformal(seed));
  all.merge(verify_generators(convention));
  all.merge(verify_twistor(seed));
  all.merge(verify_pure(seed));
  return all;
}

}  // namespace cliff
