#include "cliff/json_io.hpp"

#include <cstdlib>

namespace cliff {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("exact scalar must be an integer or a \"num/den\" string, got " + j.dump());
}

double double_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos) return rational_from_json(j).get_d();
    char* end = nullptr;
    double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw InputError("malformed number: " + s);
    return d;
  }
  throw InputError("expected a number, got " + j.dump());
}

json signature_to_json(const Signature& sig) { return json::array({sig.p(), sig.q()}); }

Signature signature_from_json(const json& j) {
  const json& s = j.at("sig");
  if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
    throw InputError("\"sig\" must be [p, q]");
  }
  int p = s[0].get<int>();
  int q = s[1].get<int>();
  if (p < 0 || q < 0 || p + q > kMaxDimension) throw InputError("signature out of range");
  if (!j.contains("metric")) return Signature::of(p, q);
  const json& metric = j.at("metric");
  if (!metric.is_array() || static_cast<int>(metric.size()) != p + q) throw InputError("\"metric\" length mismatch");
  int pos = 0;
  for (const auto& m : metric) {
    if (!m.is_number_integer() || (m.get<int>() != 1 && m.get<int>() != -1)) throw InputError("metric entries are +1/-1");
    pos += m.get<int>() > 0;
  }
  if (pos != p) throw InputError("\"metric\" disagrees with \"sig\"");
  std::vector<int> values;
  for (const auto& m : metric) values.push_back(m.get<int>());
  return Signature::from_metric(std::span<const int>(values));
}

}  // namespace cliff
