#pragma once

#include <optional>
#include <string>
#include <vector>

namespace grpt {

/// A single axiom-level violation: the element tuple it was found at and the
/// two values that should have been equal.
struct Violation {
  std::vector<int> witness;
  std::string lhs;
  std::string rhs;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::optional<Violation> violation;
};

/// Per-axiom verdicts. A report with zero failures passes.
struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const {
    for (auto const& c : checks)
      if (!c.pass) return false;
    return true;
  }

  AxiomCheck const* find(std::string const& axiom) const {
    for (auto const& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }

  void add_pass(std::string axiom) { checks.push_back({std::move(axiom), true, std::nullopt}); }

  void add_fail(std::string axiom, Violation v) {
    checks.push_back({std::move(axiom), false, std::move(v)});
  }
};

}  // namespace grpt
