#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliff/linalg.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

using json = nlohmann::json;

// Malformed or schema-violating payload.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Real component of a scalar: exact backends use "num/den" strings, the float
// backend plain JSON numbers. Exact parsing also accepts JSON integers.
template <CliffordScalar S>
json real_to_json(const Rational& q) {
  if constexpr (ScalarTraits<S>::exact) {
    return format_rational(q);
  } else {
    return q.get_d();
  }
}

inline json component_to_json(const Rational& q) { return format_rational(q); }
inline json component_to_json(double d) { return d; }

template <CliffordScalar S>
json scalar_pair_to_json(const S& s) {
  if constexpr (ScalarTraits<S>::exact) {
    return json::array({format_rational(s.real()), format_rational(s.imag())});
  } else {
    return json::array({s.real(), s.imag()});
  }
}

Rational rational_from_json(const json& j);
double double_from_json(const json& j);

template <CliffordScalar S>
S real_from_json(const json& j) {
  if constexpr (ScalarTraits<S>::exact) {
    return Exact(rational_from_json(j));
  } else {
    return Complex{double_from_json(j), 0.0};
  }
}

template <CliffordScalar S>
S complex_from_parts(const json& re, const json& im) {
  if constexpr (ScalarTraits<S>::exact) {
    return Exact(rational_from_json(re), rational_from_json(im));
  } else {
    return Complex{double_from_json(re), double_from_json(im)};
  }
}

// Accepts ["re","im"] pairs or a bare real.
template <CliffordScalar S>
S scalar_pair_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("complex scalar must be a [re, im] pair");
    return complex_from_parts<S>(j[0], j[1]);
  }
  return real_from_json<S>(j);
}

template <CliffordScalar S>
std::vector<S> scalar_list_from_json(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    throw InputError("expected an array of " + std::to_string(expected) + " scalars");
  }
  std::vector<S> out;
  for (const auto& e : j) out.push_back(scalar_pair_from_json<S>(e));
  return out;
}

json signature_to_json(const Signature& sig);
Signature signature_from_json(const json& j);

// {"sig":[p,q],"terms":[{"blade":[i,...],"re":"n/d","im":"n/d"}]}
template <CliffordScalar S>
json multivector_to_json(const Multivector<S>& m) {
  json j;
  j["sig"] = signature_to_json(m.signature());
  if (!m.signature().canonical_order()) {
    json metric = json::array();
    for (int i = 0; i < m.signature().dim(); ++i) metric.push_back(m.signature().metric(i));
    j["metric"] = metric;
  }
  json terms = json::array();
  for (const auto& [mask, c] : m.terms()) {
    json blade = json::array();
    for (int i = 0; i < m.signature().dim(); ++i) {
      if (mask & (1u << i)) blade.push_back(i);
    }
    json t;
    t["blade"] = blade;
    auto pair = scalar_pair_to_json(c);
    t["re"] = pair[0];
    t["im"] = pair[1];
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

template <CliffordScalar S>
Multivector<S> multivector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sig") || !j.contains("terms")) {
    throw InputError("multivector needs \"sig\" and \"terms\"");
  }
  Signature sig = signature_from_json(j);
  Multivector<S> m(sig);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("blade")) throw InputError("term without \"blade\"");
    BladeMask mask = 0;
    int last = -1;
    for (const auto& idx : t.at("blade")) {
      if (!idx.is_number_integer()) throw InputError("blade indices must be integers");
      int i = idx.get<int>();
      if (i <= last || i >= sig.dim()) throw InputError("blade indices must be ascending and in range");
      last = i;
      mask = static_cast<BladeMask>(mask | (1u << i));
    }
    json re = t.value("re", json("0"));
    json im = t.value("im", json("0"));
    m.accumulate(mask, complex_from_parts<S>(re, im));
  }
  return m;
}

// Row-major array of rows of ["re","im"] pairs.
template <CliffordScalar S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_pair_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <CliffordScalar S>
Matrix<S> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix<S> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_pair_from_json<S>(j[r][c]);
  }
  return m;
}

}  // namespace cliff
