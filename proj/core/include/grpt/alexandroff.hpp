#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpt/groupement.hpp"
#include "grpt/morphism.hpp"
#include "grpt/report.hpp"
#include "grpt/transformation.hpp"

namespace grpt {

/// A groupement with a distinguished alexis: neutral under composition
/// against everything (GALEX 2) and unreachable by s/t from any other
/// element (GALEX 1). The axioms do not constrain s/t at the alexis itself:
/// complete() and monoid_hat() build s(alpha) = alpha, but the union
/// structure on the opens of a space has constant s = t = full set.
struct AlexandroffGroupement {
  FiniteGroupement base;
  int alpha = 0;

  bool operator==(AlexandroffGroupement const&) const = default;
};

/// A finite topology on {0,...,m-1}: opens as bitmasks, containing the empty
/// set and the full set, closed under pairwise union and intersection.
struct FiniteTopology {
  int m = 0;
  std::vector<std::uint32_t> opens;
};

/// Alexandroff transformations share the shape of g-transformations; only
/// the axioms checked against them differ (GTRALEX 1 allows alexis escapes).
using AlexTransformation = GTransformation;

void validate(FiniteTopology const& t);

/// The unique element satisfying GALEX 1-2 (unreachable via s/t from the
/// rest of the carrier, neutral on the full table), if any.
std::optional<int> find_alexis(FiniteGroupement const& g);

/// Adjoin a fresh neutral element (index n) to an arbitrary groupement.
AlexandroffGroupement complete(FiniteGroupement const& g);

/// Canonical Alexandroff groupement of a monoid: carrier M ⊔ {beta, alpha}
/// with beta = n the common source/target over M ∪ {beta} and alpha = n+1
/// the alexis. Mixed pairs inside M ∪ {beta} compose to beta.
AlexandroffGroupement monoid_hat(FiniteMonoid const& m);

/// Opens under union: s = t = constant full set, alexis = empty set.
AlexandroffGroupement topology_union_groupement(FiniteTopology const& t);
/// Opens under intersection: s = t = identity, alexis = full set.
AlexandroffGroupement topology_inter_groupement(FiniteTopology const& t);

/// Contravariant open-preimage morphism between union groupements of two
/// topologies, induced by a continuous point map from t1's ground set to
/// t2's. Throws std::invalid_argument when some preimage is not open.
GMorphism preimage_morphism_union(FiniteTopology const& t1, FiniteTopology const& t2,
                                  std::vector<int> const& point_map);
GMorphism preimage_morphism_inter(FiniteTopology const& t1, FiniteTopology const& t2,
                                  std::vector<int> const& point_map);

/// MALEX: f maps alexis to alexis.
bool check_malex(GMorphism const& f, int alpha1, int alpha2);

/// Extend f between the completions of its endpoints, new alexis to new
/// alexis.
GMorphism tilde_functor(GMorphism const& f);

/// (alpha2, alpha2) : f ~> f.
AlexTransformation const_alexis_trans(GMorphism const& f, int alpha2);

/// GTRALEX 1-2 verdicts plus the derived eta relations as a cross-check.
/// Requires Alexandroff endpoints and MALEX morphisms.
AxiomReport check_gtralex(AlexTransformation const& t);

/// Pointwise pairing when the middle morphism matches, else fallback t1.
AlexTransformation alex_compose(AlexTransformation const& t2, AlexTransformation const& t1);

AlexTransformation alex_boxtimes(AlexTransformation const& t2, AlexTransformation const& t1);
AlexTransformation alex_boxdot(AlexTransformation const& t2, AlexTransformation const& t1);

AlexTransformation alex_sigma0(AlexTransformation const& t);
AlexTransformation alex_tau0(AlexTransformation const& t);
AlexTransformation alex_sigma1(AlexTransformation const& t);
AlexTransformation alex_tau1(AlexTransformation const& t);

struct InterchangeBounds {
  int n = 2;                              // max base carrier size before completion
  unsigned long long quad_cap = 200'000'000;  // max quadruples evaluated
  std::size_t witness_cap = 100;          // witnesses retained per identity
};

struct InterchangeWitness {
  // Indices of the base groupements (into the enumerated canonical list)
  // and of the transformations (into the per-pair family, deterministic
  // order). Four entries for the interchange identities, two for the
  // boxtimes-vs-boxdot comparison.
  int b1 = 0, b2 = 0, b3 = 0;
  std::vector<int> trans;
};

struct IdentitySearchResult {
  std::string identity;
  unsigned long long checked = 0;
  unsigned long long violations = 0;
  std::vector<InterchangeWitness> witnesses;  // first witness_cap, scan order
};

struct InterchangeReport {
  InterchangeBounds bounds;
  int num_base_groupements = 0;
  unsigned long long num_transformations = 0;
  IdentitySearchResult boxtimes_interchange;  // (t4#t3) ⊠ (t2#t1) = (t4⊠t2) # (t3⊠t1)
  IdentitySearchResult boxdot_interchange;
  IdentitySearchResult boxtimes_vs_boxdot;    // t1 ⊠ t2 = t1 ⊡ t2
  IdentitySearchResult lemma_pairing;         // the (eta1, eta3) pairing, where well-typed
};

/// Exhaustive scan over Alexandroff transformations between completions of
/// all canonical groupements with carrier size <= bounds.n. Throws
/// std::runtime_error when quad_cap is exceeded.
InterchangeReport interchange_search(InterchangeBounds const& bounds = {});

}  // namespace grpt
