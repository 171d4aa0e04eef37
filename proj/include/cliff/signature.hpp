#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "cliff/error.hpp"

namespace cliff {

inline constexpr int kMaxDimension = 12;

using BladeMask = std::uint16_t;

inline int grade_of(BladeMask mask) { return std::popcount(static_cast<unsigned>(mask)); }

// Metric of a non-degenerate Clifford algebra: one sign per generator.
// Signature::of(p, q) puts the p positive generators first; from_metric keeps
// an arbitrary order so an algebra can be indexed the way it is written down
// (Cl(4,1) with a timelike E_0, for instance).
class Signature {
 public:
  static Signature of(int p, int q) {
    if (p < 0 || q < 0 || p + q > kMaxDimension) {
      throw DomainError("signature out of range: (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    Signature s;
    s.dim_ = p + q;
    for (int i = 0; i < s.dim_; ++i) s.metric_[i] = i < p ? 1 : -1;
    return s;
  }

  static Signature from_metric(std::initializer_list<int> metric) {
    return from_metric(std::span<const int>(metric.begin(), metric.size()));
  }

  static Signature from_metric(std::span<const int> metric) {
    if (metric.size() > static_cast<std::size_t>(kMaxDimension)) throw DomainError("too many generators");
    Signature s;
    for (int m : metric) {
      if (m != 1 && m != -1) throw DomainError("metric entries must be +1 or -1");
      s.metric_[s.dim_++] = static_cast<std::int8_t>(m);
    }
    return s;
  }

  int dim() const { return dim_; }
  int p() const {
    int n = 0;
    for (int i = 0; i < dim_; ++i) n += metric_[i] > 0;
    return n;
  }
  int q() const { return dim_ - p(); }
  int metric(int i) const { return metric_.at(i); }
  std::size_t blade_count() const { return std::size_t{1} << dim_; }
  BladeMask full_mask() const { return static_cast<BladeMask>((1u << dim_) - 1u); }

  // True when the positive generators come first.
  bool canonical_order() const {
    for (int i = 1; i < dim_; ++i) {
      if (metric_[i - 1] < metric_[i]) return false;
    }
    return true;
  }

  std::string to_string() const {
    return "Cl(" + std::to_string(p()) + "," + std::to_string(q()) + ")";
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Signature() = default;
  std::array<std::int8_t, kMaxDimension> metric_{};
  int dim_ = 0;
};

// The algebras used throughout.
namespace sig {
// Pauli algebra, e_1..e_3 at indices 0..2.
inline Signature cl30() { return Signature::of(3, 0); }
// Spacetime algebra, gamma_0 (timelike, +1) at index 0.
inline Signature cl13() { return Signature::of(1, 3); }
// Conformal paravector algebra, E_0 (timelike, -1) at index 0, E_1..E_4 at 1..4.
inline Signature cl41() { return Signature::from_metric({-1, 1, 1, 1, 1}); }
}  // namespace sig

// Sign of e_A e_B = sign * e_{A xor B}: transposition parity times the
// metric signs of the shared generators.
inline int blade_product_sign(const Signature& s, BladeMask a, BladeMask b) {
  int swaps = 0;
  unsigned rest = static_cast<unsigned>(a) >> 1;
  while (rest != 0) {
    swaps += std::popcount(rest & b);
    rest >>= 1;
  }
  int sign = (swaps & 1) ? -1 : 1;
  unsigned common = static_cast<unsigned>(a & b);
  while (common != 0) {
    int i = std::countr_zero(common);
    sign *= s.metric(i);
    common &= common - 1;
  }
  return sign;
}

}  // namespace cliff
