#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cliff {

struct Check {
  std::string family;
  std::vector<long> indices;
  double residual = 0.0;
  bool exact = true;  // residual computed in exact arithmetic
  bool passed = false;
  std::string note;
};

// Pass/fail record of an identity suite. Checks keep insertion order.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string family, std::vector<long> indices, bool passed, double residual = 0.0, bool exact = true,
           std::string note = {}) {
    checks_.push_back({std::move(family), std::move(indices), residual, exact, passed, std::move(note)});
  }
  // Informational entries that do not affect the verdict.
  void observe(nlohmann::json entry) { observations_.push_back(std::move(entry)); }
  // Appends another report's checks, prefixing their family with its suite name.
  void merge(const VerificationReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  const nlohmann::json& observations() const { return observations_; }
  std::size_t passed_count() const;
  std::size_t failed_count() const { return checks_.size() - passed_count(); }
  bool passed() const { return failed_count() == 0; }
  // Checks whose family equals `family`.
  std::vector<Check> family(const std::string& family) const;
  std::vector<std::string> families() const;

  // {"suite","passed","summary","families":[...],"checks":[...],"observations":[...]}
  nlohmann::json to_json(bool include_checks = true) const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
  nlohmann::json observations_ = nlohmann::json::array();
};

}  // namespace cliff
