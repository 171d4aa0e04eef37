#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "cliff/error.hpp"
#include "cliff/scalar.hpp"
#include "cliff/signature.hpp"

namespace cliff {

// Sparse element of Cl(p,q) (complexified: coefficients live in S).
// Zero coefficients are never stored.
template <CliffordScalar S>
class Multivector {
 public:
  using Scalar = S;
  using Terms = std::map<BladeMask, S>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, const S& value) { return blade(sig, 0, value); }

  static Multivector blade(Signature sig, BladeMask mask, const S& coeff = scalar_from_int<S>(1)) {
    if (mask & ~sig.full_mask()) throw DomainError("blade outside " + sig.to_string());
    Multivector m(sig);
    m.accumulate(mask, coeff);
    return m;
  }

  // Generator e_i (0-based).
  static Multivector basis(Signature sig, int i) {
    if (i < 0 || i >= sig.dim()) throw DomainError("generator index out of range");
    return blade(sig, static_cast<BladeMask>(1u << i));
  }

  // Blade from an ascending index list, e.g. {0, 2} -> e_0 e_2.
  static Multivector from_indices(Signature sig, std::initializer_list<int> idx, const S& coeff = scalar_from_int<S>(1)) {
    return from_indices(sig, std::vector<int>(idx), coeff);
  }
  static Multivector from_indices(Signature sig, const std::vector<int>& idx, const S& coeff = scalar_from_int<S>(1)) {
    Multivector m = scalar(sig, coeff);
    for (int i : idx) m = m * basis(sig, i);
    return m;
  }

  // Vector sum_i v[i] e_i.
  static Multivector vector(Signature sig, const std::vector<S>& v) {
    if (static_cast<int>(v.size()) != sig.dim()) throw DomainError("vector length does not match signature");
    Multivector m(sig);
    for (int i = 0; i < sig.dim(); ++i) m.accumulate(static_cast<BladeMask>(1u << i), v[i]);
    return m;
  }

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }

  S coefficient(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? S{} : it->second;
  }
  S scalar_part() const { return coefficient(0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  // Largest grade with a nonzero term, -1 for zero.
  int max_grade() const {
    int g = -1;
    for (const auto& [mask, c] : terms_) g = std::max(g, grade_of(mask));
    return g;
  }
  bool has_only_grades(std::initializer_list<int> grades) const {
    for (const auto& [mask, c] : terms_) {
      if (std::find(grades.begin(), grades.end(), grade_of(mask)) == grades.end()) return false;
    }
    return true;
  }

  void accumulate(BladeMask mask, const S& value) {
    if (value == S{}) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
      it->second += value;
      if (it->second == S{}) terms_.erase(it);
    }
  }

  Multivector operator-() const {
    Multivector r(sig_);
    for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
    return r;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (const auto& [mask, c] : o.terms_) accumulate(mask, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (const auto& [mask, c] : o.terms_) accumulate(mask, -c);
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (s == S{}) {
      terms_.clear();
      return *this;
    }
    for (auto& [mask, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, const S& s) { return a *= (scalar_from_int<S>(1) / s); }

  // Scalar shifts, e.g. 1 + e1.
  friend Multivector operator+(Multivector a, const S& s) {
    a.accumulate(0, s);
    return a;
  }
  friend Multivector operator+(const S& s, Multivector a) { return std::move(a) + s; }
  friend Multivector operator-(Multivector a, const S& s) {
    a.accumulate(0, -s);
    return a;
  }
  friend Multivector operator-(const S& s, const Multivector& a) { return -a + s; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same(b);
    Multivector r(a.sig_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        int sign = blade_product_sign(a.sig_, ma, mb);
        S c = ca * cb;
        if (sign < 0) c = -c;
        r.accumulate(static_cast<BladeMask>(ma ^ mb), c);
      }
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  void require_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) {
      throw SignatureMismatch("operands in " + sig_.to_string() + " and " + o.sig_.to_string());
    }
  }

 private:
  Signature sig_;
  Terms terms_;
};

template <CliffordScalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b;
}

namespace detail {
template <CliffordScalar S, class SignFn>
Multivector<S> map_grades(const Multivector<S>& a, SignFn sign_of_grade) {
  Multivector<S> r(a.signature());
  for (const auto& [mask, c] : a.terms()) r.accumulate(mask, sign_of_grade(grade_of(mask)) < 0 ? -c : c);
  return r;
}
}  // namespace detail

// Grade k scaled by (-1)^floor(k/2).
template <CliffordScalar S>
Multivector<S> reversion(const Multivector<S>& a) {
  return detail::map_grades(a, [](int k) { return (k / 2) % 2 ? -1 : 1; });
}

// Grade k scaled by (-1)^k.
template <CliffordScalar S>
Multivector<S> grade_involution(const Multivector<S>& a) {
  return detail::map_grades(a, [](int k) { return k % 2 ? -1 : 1; });
}

// Grade k scaled by (-1)^(k(k+1)/2).
template <CliffordScalar S>
Multivector<S> clifford_conjugation(const Multivector<S>& a) {
  return detail::map_grades(a, [](int k) { return (k * (k + 1) / 2) % 2 ? -1 : 1; });
}

template <CliffordScalar S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  if (k < 0 || k > a.signature().dim()) throw DomainError("grade out of range");
  Multivector<S> r(a.signature());
  for (const auto& [mask, c] : a.terms()) {
    if (grade_of(mask) == k) r.accumulate(mask, c);
  }
  return r;
}

template <CliffordScalar S>
Multivector<S> commutator(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b - b * a;
}

template <CliffordScalar S>
Multivector<S> anticommutator(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b + b * a;
}

// Complex conjugation of the coefficients (the real structure of the
// complexified algebra in the given orthonormal basis).
template <CliffordScalar S>
Multivector<S> conjugate_coefficients(const Multivector<S>& a) {
  Multivector<S> r(a.signature());
  for (const auto& [mask, c] : a.terms()) r.accumulate(mask, ScalarTraits<S>::conj(c));
  return r;
}

// Largest coefficient magnitude; 0 for the zero multivector.
template <CliffordScalar S>
double max_magnitude(const Multivector<S>& a) {
  double m = 0.0;
  for (const auto& [mask, c] : a.terms()) m = std::max(m, ScalarTraits<S>::magnitude(c));
  return m;
}

// Exact equality for the exact backend, coefficientwise tolerance otherwise.
template <CliffordScalar S>
bool approx_equal(const Multivector<S>& a, const Multivector<S>& b, double tol = kDefaultTolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return max_magnitude(a - b) <= tol;
  }
}

template <CliffordScalar S>
bool is_zero(const Multivector<S>& a, double tol = kDefaultTolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return a.is_zero();
  } else {
    return max_magnitude(a) <= tol;
  }
}

Multivector<Complex> to_complex(const Multivector<Exact>& a);

template <CliffordScalar S>
std::ostream& operator<<(std::ostream& os, const Multivector<S>& m) {
  if (m.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [mask, c] : m.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (mask != 0) {
      os << "*e";
      for (int i = 0; i < m.signature().dim(); ++i) {
        if (mask & (1u << i)) os << i;
      }
    }
  }
  return os;
}

}  // namespace cliff
