#pragma once

#include <vector>

#include "grpt/groupement.hpp"
#include "grpt/report.hpp"

namespace grpt {

/// A map between the carriers of two finite groupements. The endpoint
/// structures travel with the map: "same groupement" questions are decided
/// by structural equality of the tables, never by reference identity.
struct GMorphism {
  FiniteGroupement src;
  FiniteGroupement dst;
  std::vector<int> map;

  bool operator==(GMorphism const&) const = default;

  int operator()(int x) const { return map[x]; }
};

GMorphism identity_morphism(FiniteGroupement const& g);

/// Shape validation: map length and index ranges. Throws std::invalid_argument.
void validate_shape(GMorphism const& f);

/// GMOR: on composable pairs, s2(f(x)) = t2(f(y)) and f(x #1 y) = f(x) #2 f(y).
AxiomReport check_gmor(GMorphism const& f);

/// GFONC 1: f∘s1 = s2∘f and f∘t1 = t2∘f pointwise. Together with GMOR this
/// makes f a g-foncteur.
bool check_gfonc(GMorphism const& f);

/// f2 # f1: function composition when f1.dst equals f2.src structurally,
/// else the fallback f1.
GMorphism compose_gmor(GMorphism const& f2, GMorphism const& f1);

/// The same map viewed between the dual groupements.
GMorphism dual_gmor(GMorphism const& f);

struct ClosureOptions {
  std::size_t cap = 10000;
};

/// Closes fs under compose_gmor (bounded by opts.cap, throws
/// std::runtime_error beyond it) and checks that the closed family with
/// s(f) = Id_src, t(f) = Id_dst forms a groupement and a category.
/// Requires the identity g-morphism of every groupement in gs to be in fs.
AxiomReport verify_morphism_category(std::vector<FiniteGroupement> const& gs,
                                     std::vector<GMorphism> const& fs,
                                     ClosureOptions const& opts = {});

/// The closure itself, for callers that need the materialized family.
std::vector<GMorphism> close_under_composition(std::vector<GMorphism> const& fs,
                                               ClosureOptions const& opts = {});

}  // namespace grpt
