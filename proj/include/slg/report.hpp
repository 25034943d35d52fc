#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slg {

// A falsifying assignment for one named check, with both evaluated sides
// when the check compares two terms.
struct Witness {
  std::string check;
  std::vector<std::pair<std::string, int>> assignment;
  std::optional<int> lhs;
  std::optional<int> rhs;

  std::string to_string() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool applicable = true;
  std::string note;
  std::optional<Witness> witness;

  static CheckResult pass(std::string name, std::string note = "");
  static CheckResult fail(std::string name, Witness w, std::string note = "");
  static CheckResult fail(std::string name, std::string note);
  static CheckResult not_applicable(std::string name, std::string note = "");
};

// A batch of named checks. `passed()` ignores non-applicable entries.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  Report() = default;
  explicit Report(std::string t) : title(std::move(t)) {}

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const Report& other, const std::string& prefix = "");
  bool passed() const;
  const CheckResult* first_failure() const;
  std::string summary() const;
};

}  // namespace slg
