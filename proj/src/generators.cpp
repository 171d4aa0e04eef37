#include "cliff/generators.hpp"

#include <functional>

#include "cliff/representations.hpp"

namespace cliff {

namespace {

using MV = Multivector<Exact>;
using Mat = Matrix<Exact>;

int metric(int mu, int nu) {
  if (mu != nu) return 0;
  return mu == 0 ? 1 : -1;
}

void check_index(int mu) {
  if (mu < 0 || mu > 3) throw DomainError("generator index must be 0..3");
}

// A concrete realization of the generators in some associative algebra.
template <class T>
struct GeneratorSet {
  std::function<T(int)> P, K;
  T D;
  std::function<T(int, int)> M;  // zero on the diagonal
};

template <class T>
T bracket(const T& a, const T& b) {
  return a * b - b * a;
}

template <class T>
GeneratorSet<T> dual(const GeneratorSet<T>& g) {
  return GeneratorSet<T>{[g](int mu) { return g.K(mu) * Exact(-1); }, [g](int mu) { return g.P(mu) * Exact(-1); },
                         g.D * Exact(-1), g.M};
}

struct Relation {
  std::string family;
  std::vector<long> indices;
};

// Calls visit(relation, lhs - rhs) for every relation instance.
template <class T, class Visit>
void for_each_relation(const GeneratorSet<T>& g, Visit visit) {
  auto gm = [](int a, int b) { return Exact(metric(a, b)); };
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) visit(Relation{"[P,P]", {m, n}}, bracket(g.P(m), g.P(n)));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) visit(Relation{"[K,K]", {m, n}}, bracket(g.K(m), g.K(n)));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) visit(Relation{"[M,D]", {m, n}}, bracket(g.M(m, n), g.D));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l) {
        T rhs = (g.P(n) * gm(m, l) - g.P(m) * gm(n, l)) * Exact(-1);
        visit(Relation{"[M,P]", {m, n, l}}, bracket(g.M(m, n), g.P(l)) - rhs);
      }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l) {
        T rhs = (g.K(n) * gm(m, l) - g.K(m) * gm(n, l)) * Exact(-1);
        visit(Relation{"[M,K]", {m, n, l}}, bracket(g.M(m, n), g.K(l)) - rhs);
      }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r) {
          T rhs = g.M(n, s) * gm(m, r) + g.M(m, r) * gm(n, s) - g.M(n, r) * gm(m, s) - g.M(m, s) * gm(n, r);
          visit(Relation{"[M,M]", {m, n, s, r}}, bracket(g.M(m, n), g.M(s, r)) - rhs);
        }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      T rhs = (g.D * gm(m, n) - g.M(m, n)) * Exact(2);
      visit(Relation{"[P,K]", {m, n}}, bracket(g.P(m), g.K(n)) - rhs);
    }
  for (int m = 0; m < 4; ++m) visit(Relation{"[P,D]", {m}}, bracket(g.P(m), g.D) - g.P(m));
  for (int m = 0; m < 4; ++m) visit(Relation{"[K,D]", {m}}, bracket(g.K(m), g.D) + g.K(m));
}

GeneratorSet<MV> engine_generators(MConvention convention) {
  const auto s = sig::cl13();
  return GeneratorSet<MV>{
      [convention](int mu) { return generator(GeneratorKind::P, {mu}, convention).value; },
      [convention](int mu) { return generator(GeneratorKind::K, {mu}, convention).value; },
      generator(GeneratorKind::D).value,
      [convention, s](int mu, int nu) {
        return mu == nu ? MV(s) : generator(GeneratorKind::M, {mu, nu}, convention).value;
      }};
}

// Built from the literal gamma matrices, never through the multivector engine.
GeneratorSet<Mat> oracle_generators(MConvention convention) {
  const Exact half(Rational(1, 2)), i = Exact::i();
  const Mat& g5 = gamma5_matrix<Exact>();
  GeneratorSet<Mat> g{};
  g.P = [=](int mu) {
    const Mat& gm = gamma_matrix<Exact>(mu);
    return (gm + gm * g5 * i) * half;
  };
  g.K = [=](int mu) {
    const Mat& gm = gamma_matrix<Exact>(mu);
    return (gm - gm * g5 * i) * (-half);
  };
  g.D = g5 * (i * half);
  g.M = [=](int mu, int nu) {
    if (mu == nu) return Mat(4, 4);
    int a = mu, b = nu;
    if (convention == MConvention::reversed) std::swap(a, b);
    const Mat& ga = gamma_matrix<Exact>(a);
    const Mat& gb = gamma_matrix<Exact>(b);
    return (ga * gb - gb * ga) * (half * half);
  };
  return g;
}

VerificationReport run_table(const std::string& suite, const GeneratorSet<MV>& engine, const GeneratorSet<Mat>& oracle) {
  VerificationReport report(suite);
  std::vector<std::pair<Relation, MV>> engine_rows;
  for_each_relation(engine, [&](const Relation& r, MV residual) { engine_rows.emplace_back(r, std::move(residual)); });
  std::size_t k = 0;
  for_each_relation(oracle, [&](const Relation& r, const Mat& residual) {
    const auto& [er, ev] = engine_rows[k++];
    const bool agree = gamma_matrix_of(ev) == residual;
    const double res = std::max(max_magnitude(ev), max_magnitude(residual));
    std::string note;
    if (!agree) note = "engine and gamma oracle disagree";
    report.add(r.family, r.indices, ev.is_zero() && max_magnitude(residual) == 0.0 && agree, res, true, note);
  });
  return report;
}

}  // namespace

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::P: return "P";
    case GeneratorKind::K: return "K";
    case GeneratorKind::D: return "D";
    case GeneratorKind::M: return "M";
  }
  return "?";
}

std::string to_string(MConvention c) { return c == MConvention::standard ? "standard" : "reversed"; }

ConfGenerator generator(GeneratorKind kind, const std::vector<int>& indices, MConvention convention) {
  const auto s = sig::cl13();
  const Exact half(Rational(1, 2)), i = Exact::i();
  const MV g5 = MV::blade(s, 0b1111);
  auto expect_count = [&](std::size_t n) {
    if (indices.size() != n) throw DomainError(to_string(kind) + " takes " + std::to_string(n) + " indices");
    for (int mu : indices) check_index(mu);
  };
  switch (kind) {
    case GeneratorKind::P: {
      expect_count(1);
      MV g = MV::basis(s, indices[0]);
      return {kind, indices, (g + g * g5 * i) * half};
    }
    case GeneratorKind::K: {
      expect_count(1);
      MV g = MV::basis(s, indices[0]);
      return {kind, indices, (g - g * g5 * i) * (-half)};
    }
    case GeneratorKind::D:
      expect_count(0);
      return {kind, indices, g5 * (i * half)};
    case GeneratorKind::M: {
      expect_count(2);
      if (indices[0] == indices[1]) throw DomainError("M needs distinct indices");
      int a = indices[0], b = indices[1];
      if (convention == MConvention::reversed) std::swap(a, b);
      return {kind, indices, wedge_vectors(MV::basis(s, a), MV::basis(s, b)) * half};
    }
  }
  throw DomainError("unknown generator kind");
}

const std::vector<std::string>& relation_families() {
  static const std::vector<std::string> names{"[P,P]", "[K,K]", "[M,D]", "[M,P]", "[M,K]",
                                              "[M,M]", "[P,K]", "[P,D]", "[K,D]"};
  return names;
}

VerificationReport commutation_table(MConvention convention) {
  return run_table("commutation_table", engine_generators(convention), oracle_generators(convention));
}

VerificationReport duality_check(MConvention convention) {
  return run_table("duality", dual(engine_generators(convention)), dual(oracle_generators(convention)));
}

}  // namespace cliff
