#pragma once

#include <string>
#include <vector>

#include "grpt/groupement.hpp"
#include "grpt/morphism.hpp"
#include "grpt/transformation.hpp"

namespace grpt {

enum class StructureClass { Groupement, Category, Star, Alexandroff, TwoGroupement };

struct EnumerationQuery {
  int n = 1;
  StructureClass cls = StructureClass::Groupement;
  // One representative per presque-égalité class. The pruned generator
  // always emits canonical tables; switching this off only affects the
  // naive full scan used as a cross-check at n <= 2.
  bool canonical_only = true;
  bool naive = false;
  int bound = 3;  // feasibility bound for the pruned generator (4 for naive-free queries is refused)
};

/// All canonical groupements on {0,...,n-1}, deterministic order: (s, t)
/// lexicographic, then composable-entry assignment lexicographic.
/// Throws std::invalid_argument beyond the feasibility bound.
std::vector<FiniteGroupement> enum_structures(EnumerationQuery const& q);

/// Full scan over every (s, t, comp) table on n elements (n <= 2), GR-filtered;
/// optionally deduplicated to canonical representatives. Oracle cross-check
/// for the pruned generator.
std::vector<FiniteGroupement> enum_structures_naive(int n, bool canonical_only);

/// All maps g1 -> g2 satisfying GMOR, lexicographic order.
std::vector<GMorphism> enum_morphisms(FiniteGroupement const& g1, FiniteGroupement const& g2);

/// All (eta1, eta2) pairs satisfying GTRANS 1-2 between the parallel
/// morphisms f1 ~> f2, lexicographic order.
std::vector<GTransformation> enum_transformations(GMorphism const& f1, GMorphism const& f2);

struct TheoremResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample description or witness note
};

struct SuiteReport {
  int n = 0;
  std::vector<TheoremResult> results;
  bool ok() const {
    for (auto const& r : results)
      if (!r.pass) return false;
    return true;
  }
};

/// Runs every module's invariant battery over all enumerated structures,
/// morphisms, and transformations within the carrier bound.
SuiteReport theorem_suite(int n);

}  // namespace grpt
