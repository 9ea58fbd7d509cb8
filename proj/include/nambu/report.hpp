#pragma once

#include <string>
#include <vector>

namespace nambu {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // first violation, empty on PASS
};

/// Ordered list of named PASS/FAIL checks.
struct Report {
  std::vector<Check> checks;

  void pass(const std::string& name) { checks.push_back({name, true, ""}); }
  void fail(const std::string& name, const std::string& witness) {
    checks.push_back({name, false, witness});
  }
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    checks.push_back({name, ok, ok ? "" : witness});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->pass;
  }
  std::string str() const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.pass ? "PASS " : "FAIL ") + c.name;
      if (!c.pass) s += ": " + c.witness;
      s += "\n";
    }
    return s;
  }
};

}  // namespace nambu
