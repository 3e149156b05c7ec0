#pragma once

#include "superroots/finite.hpp"

#include <string>
#include <vector>

namespace superroots {

struct AxiomCheck {
  std::string id;    // "a" .. "f"
  std::string name;
  bool passed = true;
  std::string detail;  // first witness on failure
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck& get(const std::string& id) const;
  std::vector<std::string> failed_ids() const;
};

/// (a) finite with 0, (b) symmetric, (c) integrality, (d) root strings,
/// (e) nonsingular axiom, (f) nondegenerate form on the span.
AxiomReport check_supersystem_axioms(const FiniteRootSet& set);

struct RootString {
  int p = 0;
  int q = 0;
  std::vector<Root> string;  // beta - p alpha, ..., beta + q alpha
};

/// The alpha-string through beta. Throws AxiomViolation if broken or if
/// p - q differs from <beta, alpha>.
RootString root_string(const FiniteRootSet& set, const Root& alpha, const Root& beta);

/// Connected components of the nonzero, non-imaginary elements under
/// (a, b) != 0, each with 0 adjoined. Ordered by their least element.
std::vector<FiniteRootSet> irreducible_components(const FiniteRootSet& set);

/// Reduced crystallographic, no isotropic roots, closed under reflections.
bool is_finite_root_system(const FiniteRootSet& set, std::string* why = nullptr);

/// Simple roots of the lexicographically positive system, largest first.
/// Throws NotAFiniteRootSystem.
std::vector<Root> find_base(const FiniteRootSet& component);

/// Nonnegative integer coefficients of r in the base, or nullopt if r is not
/// a one-signed integer combination.
std::optional<std::vector<std::int64_t>> base_coefficients(const std::vector<Root>& base, const Root& r);

struct HighestRoot {
  Root theta;
  std::vector<std::int64_t> coeffs;
};

HighestRoot highest_root(const FiniteRootSet& component, const std::vector<Root>& base);

/// Cartan type name of an irreducible finite root system, e.g. "A2", "B3".
std::string cartan_label(const FiniteRootSet& component);

}  // namespace superroots
