#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace cliff {

using Rational = mpq_class;

inline constexpr double kDefaultTolerance = 1e-9;

// Parses "num/den", "num" or "-num/den". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational fraction(long num, long den) { return Rational(num, den); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  Rational re_{0};
  Rational im_{0};
};

using Exact = GaussianRational;
using Complex = std::complex<double>;

// Backend-specific behaviour. Exact and floating scalars never mix: every
// algebra object is parameterized on exactly one of them.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Exact> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static Exact from_rational(const Rational& re, const Rational& im = 0) { return {re, im}; }
  static Exact from_int(long v) { return Exact(v); }
  static Exact i() { return Exact::i(); }
  static Exact conj(const Exact& s) { return s.conj(); }
  static bool is_zero(const Exact& s, double /*tol*/ = kDefaultTolerance) { return s.is_zero(); }
  static bool is_real(const Exact& s, double /*tol*/ = kDefaultTolerance) { return s.is_real(); }
  static double magnitude(const Exact& s) { return std::abs(s.to_complex()); }
  static Complex to_complex(const Exact& s) { return s.to_complex(); }
  static Exact real_part(const Exact& s) { return {s.real()}; }
  static Exact imag_part(const Exact& s) { return {s.imag()}; }
  // Square root of a non-negative rational that is a perfect square.
  static std::optional<Exact> sqrt(const Exact& s);
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static Complex from_rational(const Rational& re, const Rational& im = 0) {
    return {re.get_d(), im.get_d()};
  }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex i() { return {0.0, 1.0}; }
  static Complex conj(const Complex& s) { return std::conj(s); }
  static bool is_zero(const Complex& s, double tol = kDefaultTolerance) { return std::abs(s) <= tol; }
  static bool is_real(const Complex& s, double tol = kDefaultTolerance) { return std::abs(s.imag()) <= tol; }
  static double magnitude(const Complex& s) { return std::abs(s); }
  static Complex to_complex(const Complex& s) { return s; }
  static Complex real_part(const Complex& s) { return {s.real(), 0.0}; }
  static Complex imag_part(const Complex& s) { return {s.imag(), 0.0}; }
  static std::optional<Complex> sqrt(const Complex& s) {
    if (s.imag() != 0.0 || s.real() < 0.0) return std::nullopt;
    return Complex{std::sqrt(s.real()), 0.0};
  }
};

template <class S>
concept CliffordScalar = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
};

template <CliffordScalar S>
S scalar_from_int(long v) {
  return ScalarTraits<S>::from_int(v);
}

template <CliffordScalar S>
S scalar_fraction(long num, long den) {
  return ScalarTraits<S>::from_rational(Rational(num, den));
}

}  // namespace cliff
