#pragma once
// Result carriers for the randomized property checks.  A CheckResult records
// what was tested, how many trials ran, the worst residual seen, and one
// failure entry (seed + human detail) per trial that missed its bound, so a
// red check can be replayed exactly.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace daghilb {

struct CheckFailure {
  std::uint64_t seed{0};
  std::string detail;
};

struct CheckResult {
  std::string check;          // machine key, e.g. "biproduct.induced-addition"
  std::string statement_ref;  // property family the check witnesses
  int trials{0};
  double worst_residual{0.0};
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  void observe(double residual) { worst_residual = std::max(worst_residual, residual); }

  void require(bool ok, std::uint64_t seed, const std::string& detail) {
    if (!ok) failures.push_back({seed, detail});
  }

  // Records a residual-vs-bound trial in one step.
  void trial(double residual, double bound, std::uint64_t seed, const std::string& what) {
    ++trials;
    observe(residual);
    if (!(residual <= bound))
      failures.push_back({seed, what + ": residual " + std::to_string(residual) +
                                    " exceeds " + std::to_string(bound)});
  }
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed(); });
  }

  double worst_residual() const {
    double w = 0.0;
    for (const CheckResult& c : checks) w = std::max(w, c.worst_residual);
    return w;
  }

  const CheckResult* find(const std::string& key) const {
    for (const CheckResult& c : checks)
      if (c.check == key) return &c;
    return nullptr;
  }
};

}  // namespace daghilb
