#include <gtest/gtest.h>

#include "cliff/generators.hpp"
#include "cliff/representations.hpp"

using namespace cliff;
using MV = Multivector<Exact>;

namespace {

const Signature s13 = sig::cl13();

MV gam(int mu) { return MV::basis(s13, mu); }

std::map<std::string, bool> family_verdicts(const VerificationReport& r) {
  std::map<std::string, bool> out;
  for (const auto& f : r.families()) {
    bool ok = true;
    for (const auto& c : r.family(f)) ok = ok && c.passed;
    out[f] = ok;
  }
  return out;
}

}  // namespace

TEST(Generator, Examples) {
  EXPECT_EQ(generator(GeneratorKind::D).value, MV::blade(s13, 0b1111, Exact(Rational(0), Rational(1, 2))));
  EXPECT_EQ(generator(GeneratorKind::M, {1, 2}, MConvention::reversed).value, gam(2) * gam(1) * Exact(Rational(1, 2)));
  EXPECT_EQ(generator(GeneratorKind::M, {1, 2}).value, gam(1) * gam(2) * Exact(Rational(1, 2)));
  auto sum = generator(GeneratorKind::P, {0}).value + generator(GeneratorKind::K, {0}).value;
  EXPECT_EQ(sum, gam(0) * MV::blade(s13, 0b1111) * Exact::i());
}

TEST(Generator, Errors) {
  EXPECT_THROW(generator(GeneratorKind::P, {4}), DomainError);
  EXPECT_THROW(generator(GeneratorKind::P, {}), DomainError);
  EXPECT_THROW(generator(GeneratorKind::M, {1, 1}), DomainError);
  EXPECT_THROW(generator(GeneratorKind::D, {0}), DomainError);
}

TEST(Generator, SpotRelations) {
  auto P = [](int m) { return generator(GeneratorKind::P, {m}).value; };
  auto K = [](int m) { return generator(GeneratorKind::K, {m}).value; };
  auto D = generator(GeneratorKind::D).value;
  EXPECT_EQ(commutator(P(0), K(0)), D * Exact(2));
  EXPECT_EQ(commutator(P(1), D), P(1));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (m != n) EXPECT_TRUE(commutator(generator(GeneratorKind::M, {m, n}).value, D).is_zero());
}

// P_mu goes to -K_mu under i -> -i: recorded as a computed fact.
TEST(Generator, ComplexConjugationSwapsPAndMinusK) {
  for (int m = 0; m < 4; ++m) {
    EXPECT_EQ(conjugate_coefficients(generator(GeneratorKind::P, {m}).value), -generator(GeneratorKind::K, {m}).value);
  }
}

TEST(CommutationTable, StandardConventionPassesEverything) {
  auto r = commutation_table();
  EXPECT_TRUE(r.passed());
  const std::map<std::string, std::size_t> counts{{"[P,P]", 16}, {"[K,K]", 16}, {"[M,D]", 16},
                                                  {"[M,P]", 64}, {"[M,K]", 64}, {"[M,M]", 256},
                                                  {"[P,K]", 16}, {"[P,D]", 4},  {"[K,D]", 4}};
  EXPECT_EQ(r.families(), relation_families());
  for (const auto& [f, n] : counts) {
    auto checks = r.family(f);
    EXPECT_EQ(checks.size(), n) << f;
    for (const auto& c : checks) EXPECT_EQ(c.residual, 0.0);
  }
}

TEST(CommutationTable, PrintedOrderFailsFourFamilies) {
  auto v = family_verdicts(commutation_table(MConvention::reversed));
  EXPECT_FALSE(v["[M,P]"]);
  EXPECT_FALSE(v["[M,K]"]);
  EXPECT_FALSE(v["[M,M]"]);
  EXPECT_FALSE(v["[P,K]"]);
  for (auto f : {"[P,P]", "[K,K]", "[M,D]", "[P,D]", "[K,D]"}) EXPECT_TRUE(v[f]) << f;
}

TEST(Duality, Holds) {
  auto r = duality_check();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks().size(), 456u);
}

TEST(Report, Json) {
  VerificationReport r("demo");
  r.add("a", {1}, true);
  r.add("a", {2}, false, 0.5, false);
  r.observe({{"k", 1}});
  auto j = r.to_json();
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["families"][0]["max_residual"], 0.5);
  EXPECT_EQ(j["checks"].size(), 2u);
  VerificationReport all("all");
  all.merge(r);
  EXPECT_EQ(all.checks()[0].family, "demo/a");
}
