#pragma once

// Spinors of complexified Cl(2n) in the Fock (occupation-number) model.
// Generators e_0..e_{2n-1} square to +1 and act as
//   e_{2i} = a_i + a_i^dagger,   e_{2i+1} = i (a_i - a_i^dagger)
// with Jordan-Wigner signs, so a_i = (e_{2i} - i e_{2i+1})/2. Component k of
// a spinor is the amplitude of the occupation set {modes whose bit is set in k}.
// Modes are numbered from 1 in JSON ("occ") and from 0 in code.

#include <cstdint>
#include <vector>

#include "cliff/json_io.hpp"
#include "cliff/linalg.hpp"
#include "cliff/multivector.hpp"
#include "cliff/sampler.hpp"

namespace cliff {

inline constexpr int kMaxFockModes = 5;

class FockSpinor {
 public:
  // Zero spinor. Throws DomainError unless 1 <= n <= 5.
  explicit FockSpinor(int n);
  FockSpinor(int n, std::vector<Exact> components);

  static FockSpinor vacuum(int n);
  // |S> for an occupation set of 0-based modes.
  static FockSpinor occupation(int n, const std::vector<int>& modes, const Exact& coeff = Exact(1));

  int n() const { return n_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<Exact>& components() const { return components_; }
  const Exact& operator[](std::size_t k) const { return components_[k]; }
  Exact& operator[](std::size_t k) { return components_[k]; }

  bool is_zero() const;
  // 0 (even), 1 (odd) or -1 (mixed or zero).
  int parity() const;

  FockSpinor& operator+=(const FockSpinor& o);
  FockSpinor& operator-=(const FockSpinor& o);
  friend FockSpinor operator+(FockSpinor a, const FockSpinor& b) { return a += b; }
  friend FockSpinor operator-(FockSpinor a, const FockSpinor& b) { return a -= b; }
  friend FockSpinor operator*(const Exact& c, FockSpinor a);
  friend bool operator==(const FockSpinor&, const FockSpinor&) = default;

 private:
  int n_;
  std::vector<Exact> components_;
};

// Signed permutation: column k goes to row target[k] with coefficient coeff[k].
struct FockMonomial {
  std::vector<std::uint32_t> target;
  std::vector<Exact> coeff;

  FockSpinor apply(const FockSpinor& u) const;
  FockMonomial operator*(const FockMonomial& o) const;
  Matrix<Exact> dense() const;
  friend bool operator==(const FockMonomial&, const FockMonomial&) = default;
};

// Per-n tables: the generator monomials and every blade monomial.
class FockRep {
 public:
  static const FockRep& get(int n);

  int n() const { return n_; }
  Signature signature() const { return Signature::of(2 * n_, 0); }
  const FockMonomial& generator(int j) const { return blades_[1u << j]; }
  const FockMonomial& blade(BladeMask mask) const { return blades_[mask]; }
  // Intertwiner of charge conjugation, C conj(e_j) = eps_j e_j C.
  BladeMask charge_conjugation_blade() const { return c_blade_; }
  // Matrix of the reversion form, e_j^T B = B e_j.
  BladeMask reversion_form_blade() const { return b_blade_; }

 private:
  explicit FockRep(int n);
  int n_;
  std::vector<FockMonomial> blades_;
  BladeMask c_blade_ = 0;
  BladeMask b_blade_ = 0;
};

// Real structure on C^{2n}: e_j is real (eps = +1) for j < 3 and imaginary
// (eps = -1) otherwise. For n = 1 both generators are real.
std::vector<int> real_structure(int n);

// Coefficientwise conjugation c_A -> conj(c_A) prod_{j in A} eps_j.
Multivector<Exact> real_conjugate(const Multivector<Exact>& a);
// v_j -> eps_j conj(v_j).
std::vector<Exact> real_conjugate_vector(const std::vector<Exact>& v);

// Clifford action of a multivector of Cl(2n).
FockSpinor apply(const Multivector<Exact>& a, const FockSpinor& u);
// sum_j v_j e_j u. Throws DomainError on dimension mismatch.
FockSpinor vector_action(const std::vector<Exact>& v, const FockSpinor& u);

// Complex bilinear form with Q(e_j) = 1.
Exact quadratic_form(const std::vector<Exact>& v);
Exact polarization(const std::vector<Exact>& v, const std::vector<Exact>& w);

struct IsotropicSubspace {
  std::vector<std::vector<Exact>> basis;  // vectors in C^{2n}
  std::size_t dim() const { return basis.size(); }
};

// {v : v.u = 0}. Throws DomainError for u = 0.
IsotropicSubspace annihilator(const FockSpinor& u);
bool is_pure(const FockSpinor& u);
bool is_totally_null(const IsotropicSubspace& s);

// u_C = C conj(u).
FockSpinor charge_conjugate(const FockSpinor& u);
// Sign s with (u_C)_C = s u.
int charge_conjugation_square(int n);

// The multivector u w~ of Cl(2n), via trace orthogonality.
Multivector<Exact> spinor_bilinear(const FockSpinor& u, const FockSpinor& w);

// p = <i u u_C~>_1.
Multivector<Exact> flag_vector(const FockSpinor& u);
// F = Re <i u u~>_2 for the fixed real structure.
Multivector<Exact> penrose_flagpole(const FockSpinor& u);
// G = <(i u u~ - i u_C u_C~)/2>_2.
Multivector<Exact> generalized_flagpole(const FockSpinor& u);
// G of e^{i theta} u given w = e^{2 i theta}: <(i w u u~ - i w̄ u_C u_C~)/2>_2.
Multivector<Exact> phase_rotated_flagpole(const FockSpinor& u, const Exact& w);
// -i u_C u_C~ = conj(i u u~).
bool conjugation_identity_holds(const FockSpinor& u);

// Real dimension of the so(2n) orbit of [u] in projective spinor space.
// Throws DomainError unless u is pure.
int orbit_dimension(const FockSpinor& u);
// dim SO(2n) - dim U(n) = n(n - 1). Throws DomainError for n < 1.
int coset_dim(int n);

// Nonzero spinor with random Gaussian-rational components of the given parity
// (0 even, 1 odd, -1 unrestricted).
FockSpinor random_fock_spinor(Sampler& rng, int n, int parity);
// Vacuum moved by random invertible elements 1 + t e_a e_b; always pure.
FockSpinor random_pure_spinor(Sampler& rng, int n);

json fock_spinor_to_json(const FockSpinor& u);
// Throws InputError on schema violations, DomainError for n out of range.
FockSpinor fock_spinor_from_json(const json& j);

}  // namespace cliff
