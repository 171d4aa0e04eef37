#include "cliff/purespinor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cliff {

namespace {

void check_modes(int n) {
  if (n < 1 || n > kMaxFockModes) throw DomainError("Fock spinors need 1 <= n <= " + std::to_string(kMaxFockModes));
}

Exact conj(const Exact& z) { return z.conj(); }

FockMonomial conjugated(const FockMonomial& m) {
  FockMonomial r = m;
  for (auto& c : r.coeff) c = conj(c);
  return r;
}

FockMonomial transposed(const FockMonomial& m) {
  FockMonomial r{std::vector<std::uint32_t>(m.target.size()), std::vector<Exact>(m.coeff.size())};
  for (std::uint32_t k = 0; k < m.target.size(); ++k) {
    r.target[m.target[k]] = k;
    r.coeff[m.target[k]] = m.coeff[k];
  }
  return r;
}

FockMonomial scaled(FockMonomial m, const Exact& s) {
  for (auto& c : m.coeff) c *= s;
  return m;
}

// Blade masks of Cl(2n) ordered by grade, then by mask value.
std::vector<BladeMask> graded_order(int dim) {
  std::vector<BladeMask> masks;
  for (unsigned m = 0; m < (1u << dim); ++m) masks.push_back(static_cast<BladeMask>(m));
  std::stable_sort(masks.begin(), masks.end(), [](BladeMask a, BladeMask b) { return grade_of(a) < grade_of(b); });
  return masks;
}

// Real vector of length 2N from a complex one: real parts, then imaginary parts.
void append_real_row(Matrix<Exact>& m, std::size_t row, const FockSpinor& u) {
  const std::size_t n = u.size();
  for (std::size_t k = 0; k < n; ++k) {
    m(row, k) = Exact(u[k].real());
    m(row, n + k) = Exact(u[k].imag());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FockSpinor

FockSpinor::FockSpinor(int n) : n_(n) {
  check_modes(n);
  components_.assign(std::size_t{1} << n, Exact(0));
}

FockSpinor::FockSpinor(int n, std::vector<Exact> components) : n_(n), components_(std::move(components)) {
  check_modes(n);
  if (components_.size() != (std::size_t{1} << n)) throw DomainError("Fock spinor needs 2^n components");
}

FockSpinor FockSpinor::vacuum(int n) { return occupation(n, {}); }

FockSpinor FockSpinor::occupation(int n, const std::vector<int>& modes, const Exact& coeff) {
  FockSpinor u(n);
  std::size_t k = 0;
  for (int m : modes) {
    if (m < 0 || m >= n) throw DomainError("occupied mode out of range");
    if (k & (std::size_t{1} << m)) throw DomainError("mode listed twice");
    k |= std::size_t{1} << m;
  }
  u.components_[k] = coeff;
  return u;
}

bool FockSpinor::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Exact& c) { return c.is_zero(); });
}

int FockSpinor::parity() const {
  int p = -1;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].is_zero()) continue;
    int pk = std::popcount(k) % 2;
    if (p == -1) {
      p = pk;
    } else if (p != pk) {
      return -1;
    }
  }
  return p;
}

FockSpinor& FockSpinor::operator+=(const FockSpinor& o) {
  if (o.n_ != n_) throw DomainError("Fock spinor size mismatch");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += o.components_[k];
  return *this;
}

FockSpinor& FockSpinor::operator-=(const FockSpinor& o) {
  if (o.n_ != n_) throw DomainError("Fock spinor size mismatch");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] -= o.components_[k];
  return *this;
}

FockSpinor operator*(const Exact& c, FockSpinor a) {
  for (auto& x : a.components_) x *= c;
  return a;
}

// ---------------------------------------------------------------------------
// Monomials and the per-n representation

FockSpinor FockMonomial::apply(const FockSpinor& u) const {
  if (u.size() != target.size()) throw DomainError("Fock spinor size mismatch");
  FockSpinor r(u.n());
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (!u[k].is_zero()) r[target[k]] += coeff[k] * u[k];
  }
  return r;
}

FockMonomial FockMonomial::operator*(const FockMonomial& o) const {
  FockMonomial r{std::vector<std::uint32_t>(o.target.size()), std::vector<Exact>(o.coeff.size())};
  for (std::size_t k = 0; k < o.target.size(); ++k) {
    r.target[k] = target[o.target[k]];
    r.coeff[k] = coeff[o.target[k]] * o.coeff[k];
  }
  return r;
}

Matrix<Exact> FockMonomial::dense() const {
  Matrix<Exact> m(target.size(), target.size());
  for (std::size_t k = 0; k < target.size(); ++k) m(target[k], k) = coeff[k];
  return m;
}

FockRep::FockRep(int n) : n_(n) {
  check_modes(n);
  const std::uint32_t size = 1u << n;
  std::vector<FockMonomial> gens;
  for (int i = 0; i < n; ++i) {
    FockMonomial even{std::vector<std::uint32_t>(size), std::vector<Exact>(size)};
    FockMonomial odd = even;
    for (std::uint32_t s = 0; s < size; ++s) {
      const long sign = std::popcount(s & ((1u << i) - 1)) % 2 ? -1 : 1;
      const bool occupied = s & (1u << i);
      even.target[s] = odd.target[s] = s ^ (1u << i);
      even.coeff[s] = Exact(sign);
      // i (a - a^dagger): +i on occupied modes, -i on empty ones
      odd.coeff[s] = Exact(Rational(0), Rational(occupied ? sign : -sign));
    }
    gens.push_back(std::move(even));
    gens.push_back(std::move(odd));
  }
  const int dim = 2 * n;
  FockMonomial id{std::vector<std::uint32_t>(size), std::vector<Exact>(size, Exact(1))};
  for (std::uint32_t s = 0; s < size; ++s) id.target[s] = s;
  blades_.assign(std::size_t{1} << dim, id);
  for (unsigned mask = 1; mask < (1u << dim); ++mask) {
    const int top = std::bit_width(mask) - 1;
    blades_[mask] = blades_[mask & ~(1u << top)] * gens[top];
  }

  const auto eps = real_structure(n);
  const auto order = graded_order(dim);
  bool found_c = false, found_b = false;
  for (BladeMask m : order) {
    const auto& cand = blades_[m];
    if (!found_c) {
      bool ok = true;
      for (int j = 0; j < dim && ok; ++j) {
        ok = cand * conjugated(gens[j]) == scaled(gens[j] * cand, Exact(eps[j]));
      }
      if (ok) {
        c_blade_ = m;
        found_c = true;
      }
    }
    if (!found_b) {
      bool ok = true;
      for (int j = 0; j < dim && ok; ++j) ok = transposed(gens[j]) * cand == cand * gens[j];
      if (ok) {
        b_blade_ = m;
        found_b = true;
      }
    }
  }
  if (!found_c || !found_b) throw std::logic_error("Fock representation has no monomial intertwiner");
}

const FockRep& FockRep::get(int n) {
  check_modes(n);
  static std::array<std::unique_ptr<FockRep>, kMaxFockModes + 1> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  if (!cache[n]) cache[n].reset(new FockRep(n));
  return *cache[n];
}

// ---------------------------------------------------------------------------
// Real structure

std::vector<int> real_structure(int n) {
  check_modes(n);
  std::vector<int> eps(2 * n, 1);
  if (n > 1) {
    for (int j = 3; j < 2 * n; ++j) eps[j] = -1;
  }
  return eps;
}

Multivector<Exact> real_conjugate(const Multivector<Exact>& a) {
  const int dim = a.signature().dim();
  if (dim % 2 != 0 || !(a.signature() == Signature::of(dim, 0))) throw SignatureMismatch("expected Cl(2n, 0)");
  const auto eps = real_structure(dim / 2);
  Multivector<Exact> r(a.signature());
  for (const auto& [mask, c] : a.terms()) {
    int sign = 1;
    for (int j = 0; j < dim; ++j) {
      if (mask & (1u << j)) sign *= eps[j];
    }
    r.accumulate(mask, sign < 0 ? -conj(c) : conj(c));
  }
  return r;
}

std::vector<Exact> real_conjugate_vector(const std::vector<Exact>& v) {
  if (v.size() % 2 != 0) throw DomainError("vector must have even dimension");
  const auto eps = real_structure(static_cast<int>(v.size() / 2));
  std::vector<Exact> r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) r[j] = eps[j] < 0 ? -conj(v[j]) : conj(v[j]);
  return r;
}

// ---------------------------------------------------------------------------
// Clifford action

FockSpinor apply(const Multivector<Exact>& a, const FockSpinor& u) {
  const auto& rep = FockRep::get(u.n());
  if (!(a.signature() == rep.signature())) throw SignatureMismatch("multivector does not act on this spinor space");
  FockSpinor r(u.n());
  for (const auto& [mask, c] : a.terms()) r += c * rep.blade(mask).apply(u);
  return r;
}

FockSpinor vector_action(const std::vector<Exact>& v, const FockSpinor& u) {
  if (v.size() != static_cast<std::size_t>(2 * u.n())) throw DomainError("vector dimension must be 2n");
  const auto& rep = FockRep::get(u.n());
  FockSpinor r(u.n());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) r += v[j] * rep.generator(static_cast<int>(j)).apply(u);
  }
  return r;
}

Exact quadratic_form(const std::vector<Exact>& v) { return polarization(v, v); }

Exact polarization(const std::vector<Exact>& v, const std::vector<Exact>& w) {
  if (v.size() != w.size()) throw DomainError("vector dimension mismatch");
  Exact r;
  for (std::size_t j = 0; j < v.size(); ++j) r += v[j] * w[j];
  return r;
}

// ---------------------------------------------------------------------------
// Annihilators

IsotropicSubspace annihilator(const FockSpinor& u) {
  if (u.is_zero()) throw DomainError("the zero spinor has no annihilator dimension");
  const auto& rep = FockRep::get(u.n());
  const std::size_t dim = 2 * static_cast<std::size_t>(u.n());
  Matrix<Exact> m(u.size(), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto col = rep.generator(static_cast<int>(j)).apply(u);
    for (std::size_t k = 0; k < u.size(); ++k) m(k, j) = col[k];
  }
  return {nullspace(m)};
}

bool is_pure(const FockSpinor& u) { return annihilator(u).dim() == static_cast<std::size_t>(u.n()); }

bool is_totally_null(const IsotropicSubspace& s) {
  for (std::size_t a = 0; a < s.basis.size(); ++a) {
    for (std::size_t b = a; b < s.basis.size(); ++b) {
      if (!polarization(s.basis[a], s.basis[b]).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Charge conjugation and bilinears

FockSpinor charge_conjugate(const FockSpinor& u) {
  const auto& rep = FockRep::get(u.n());
  std::vector<Exact> c(u.components());
  for (auto& x : c) x = conj(x);
  return rep.blade(rep.charge_conjugation_blade()).apply(FockSpinor(u.n(), std::move(c)));
}

int charge_conjugation_square(int n) {
  auto u = FockSpinor::vacuum(n);
  auto twice = charge_conjugate(charge_conjugate(u));
  if (twice == u) return 1;
  if (twice == Exact(-1) * u) return -1;
  throw std::logic_error("charge conjugation does not square to a sign");
}

// u w~ = u w^T B decomposed over the blade monomials: the coefficient of e_A is
// tr(e_A^{-1} X) / 2^n = sum_S X[t(S), S] / (2^n phi(S)) for e_A = (t, phi).
Multivector<Exact> spinor_bilinear(const FockSpinor& u, const FockSpinor& w) {
  if (u.n() != w.n()) throw DomainError("Fock spinor size mismatch");
  const auto& rep = FockRep::get(u.n());
  const auto& b = rep.blade(rep.reversion_form_blade());
  const std::size_t size = u.size();
  std::vector<Exact> row(size);
  for (std::size_t c = 0; c < size; ++c) row[c] = w[b.target[c]] * b.coeff[c];
  const Exact norm(Rational(1, static_cast<long>(size)));
  Multivector<Exact> r(rep.signature());
  for (unsigned mask = 0; mask < (1u << (2 * u.n())); ++mask) {
    const auto& e = rep.blade(static_cast<BladeMask>(mask));
    Exact sum;
    for (std::size_t s = 0; s < size; ++s) {
      const Exact& x = u[e.target[s]];
      if (x.is_zero() || row[s].is_zero()) continue;
      sum += x * row[s] / e.coeff[s];
    }
    if (!sum.is_zero()) r.accumulate(static_cast<BladeMask>(mask), sum * norm);
  }
  return r;
}

Multivector<Exact> flag_vector(const FockSpinor& u) {
  return grade_project(spinor_bilinear(u, charge_conjugate(u)) * Exact::i(), 1);
}

Multivector<Exact> penrose_flagpole(const FockSpinor& u) {
  auto x = grade_project(spinor_bilinear(u, u) * Exact::i(), 2);
  return (x + real_conjugate(x)) * Exact(Rational(1, 2));
}

Multivector<Exact> generalized_flagpole(const FockSpinor& u) { return phase_rotated_flagpole(u, Exact(1)); }

Multivector<Exact> phase_rotated_flagpole(const FockSpinor& u, const Exact& w) {
  const auto uc = charge_conjugate(u);
  const Exact i = Exact::i();
  auto g = spinor_bilinear(u, u) * (i * w) - spinor_bilinear(uc, uc) * (i * w.conj());
  return grade_project(g, 2) * Exact(Rational(1, 2));
}

bool conjugation_identity_holds(const FockSpinor& u) {
  const auto uc = charge_conjugate(u);
  return spinor_bilinear(uc, uc) * (-Exact::i()) == real_conjugate(spinor_bilinear(u, u) * Exact::i());
}

// ---------------------------------------------------------------------------
// Orbits

int orbit_dimension(const FockSpinor& u) {
  if (!is_pure(u)) throw DomainError("orbit_dimension expects a pure spinor");
  const auto& rep = FockRep::get(u.n());
  const int dim = 2 * u.n();
  std::vector<FockSpinor> tangent;
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      tangent.push_back(rep.blade(static_cast<BladeMask>((1u << a) | (1u << b))).apply(u));
    }
  }
  tangent.push_back(u);
  tangent.push_back(Exact::i() * u);
  Matrix<Exact> m(tangent.size(), 2 * u.size());
  for (std::size_t r = 0; r < tangent.size(); ++r) append_real_row(m, r, tangent[r]);
  // The complex line through u is quotiented out.
  return static_cast<int>(rank(m)) - 2;
}

int coset_dim(int n) {
  if (n < 1) throw DomainError("coset_dim needs n >= 1");
  return n * (n - 1);
}

// ---------------------------------------------------------------------------
// Sampling

FockSpinor random_fock_spinor(Sampler& rng, int n, int parity) {
  FockSpinor u(n);
  while (u.is_zero()) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (parity >= 0 && std::popcount(k) % 2 != parity) continue;
      u[k] = rng.integer(0, 2) ? rng.complex<Exact>() : Exact(0);
    }
  }
  return u;
}

FockSpinor random_pure_spinor(Sampler& rng, int n) {
  const auto s = Signature::of(2 * n, 0);
  auto u = FockSpinor::vacuum(n);
  for (int k = 0; k < 3 * n; ++k) {
    const int a = static_cast<int>(rng.integer(0, 2 * n - 1));
    int b = static_cast<int>(rng.integer(0, 2 * n - 2));
    if (b >= a) ++b;
    const long re = rng.integer(-3, 3);
    const Exact t(Rational(re), Rational(rng.integer(-3, 3)));
    if ((t * t + Exact(1)).is_zero()) continue;
    u = apply(Multivector<Exact>::scalar(s, 1) + Multivector<Exact>::basis(s, a) * Multivector<Exact>::basis(s, b) * t, u);
  }
  return u;
}

// ---------------------------------------------------------------------------
// JSON

json fock_spinor_to_json(const FockSpinor& u) {
  json terms = json::array();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    json occ = json::array();
    for (int m = 0; m < u.n(); ++m) {
      if (k & (std::size_t{1} << m)) occ.push_back(m + 1);
    }
    terms.push_back({{"occ", occ}, {"re", format_rational(u[k].real())}, {"im", format_rational(u[k].imag())}});
  }
  return {{"n", u.n()}, {"terms", terms}};
}

FockSpinor fock_spinor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw InputError("spinor needs an integer \"n\"");
  const int n = j["n"].get<int>();
  FockSpinor u(n);
  if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("spinor needs a \"terms\" array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("occ") || !t["occ"].is_array()) throw InputError("term needs an \"occ\" array");
    std::size_t k = 0;
    for (const auto& m : t["occ"]) {
      if (!m.is_number_integer()) throw InputError("occupied modes must be integers");
      int mode = m.get<int>();
      if (mode < 1 || mode > n) throw InputError("occupied mode out of range 1..n");
      if (k & (std::size_t{1} << (mode - 1))) throw InputError("occupied mode listed twice");
      k |= std::size_t{1} << (mode - 1);
    }
    u[k] += complex_from_parts<Exact>(t.value("re", json("0")), t.value("im", json("0")));
  }
  return u;
}

}  // namespace cliff
