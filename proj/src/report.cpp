#include "slg/report.hpp"

#include <sstream>

namespace slg {

std::string Witness::to_string() const {
  std::ostringstream os;
  os << check << " fails at ";
  bool first = true;
  for (const auto& [var, val] : assignment) {
    if (!first) os << ", ";
    os << var << "=" << val;
    first = false;
  }
  if (lhs && rhs) os << ": lhs=" << *lhs << " rhs=" << *rhs;
  return os.str();
}

CheckResult CheckResult::pass(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = true;
  r.note = std::move(note);
  return r;
}

CheckResult CheckResult::fail(std::string name, Witness w, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = false;
  r.note = std::move(note);
  r.witness = std::move(w);
  return r;
}

CheckResult CheckResult::fail(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = false;
  r.note = std::move(note);
  return r;
}

CheckResult CheckResult::not_applicable(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = true;
  r.applicable = false;
  r.note = std::move(note);
  return r;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckResult c : other.checks) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.applicable && !c.passed) return false;
  return true;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks)
    if (c.applicable && !c.passed) return &c;
  return nullptr;
}

std::string Report::summary() const {
  int total = 0, ok = 0, na = 0;
  for (const auto& c : checks) {
    if (!c.applicable) {
      ++na;
      continue;
    }
    ++total;
    if (c.passed) ++ok;
  }
  std::ostringstream os;
  os << title << ": " << ok << "/" << total << " checks passed";
  if (na) os << " (" << na << " not applicable)";
  return os.str();
}

}  // namespace slg
