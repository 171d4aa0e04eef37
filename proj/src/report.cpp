#include "cliff/report.hpp"

#include <algorithm>

namespace cliff {

void VerificationReport::merge(const VerificationReport& other) {
  for (auto c : other.checks_) {
    c.family = other.suite_ + "/" + c.family;
    checks_.push_back(std::move(c));
  }
  for (const auto& o : other.observations_) {
    auto entry = o;
    entry["suite"] = other.suite_;
    observations_.push_back(std::move(entry));
  }
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; }));
}

std::vector<Check> VerificationReport::family(const std::string& family) const {
  std::vector<Check> r;
  for (const auto& c : checks_) {
    if (c.family == family) r.push_back(c);
  }
  return r;
}

std::vector<std::string> VerificationReport::families() const {
  std::vector<std::string> r;
  for (const auto& c : checks_) {
    if (std::find(r.begin(), r.end(), c.family) == r.end()) r.push_back(c.family);
  }
  return r;
}

nlohmann::json VerificationReport::to_json(bool include_checks) const {
  using nlohmann::json;
  json fams = json::array();
  for (const auto& name : families()) {
    auto members = family(name);
    double worst = 0.0;
    bool all_exact = true, ok = true;
    for (const auto& c : members) {
      worst = std::max(worst, c.residual);
      all_exact = all_exact && c.exact;
      ok = ok && c.passed;
    }
    fams.push_back({{"family", name},
                    {"checks", members.size()},
                    {"max_residual", worst},
                    {"exact", all_exact},
                    {"passed", ok}});
  }
  json out = {{"suite", suite_},
              {"passed", passed()},
              {"summary", {{"total", checks_.size()}, {"passed", passed_count()}, {"failed", failed_count()}}},
              {"families", fams}};
  if (include_checks) {
    json list = json::array();
    for (const auto& c : checks_) {
      json entry = {{"family", c.family}, {"indices", c.indices}, {"residual", c.residual},
                    {"exact_zero", c.exact && c.residual == 0.0}, {"passed", c.passed}};
      if (!c.note.empty()) entry["note"] = c.note;
      list.push_back(std::move(entry));
    }
    out["checks"] = std::move(list);
  }
  out["observations"] = observations_;
  return out;
}

}  // namespace cliff
