#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "grpt/alexandroff.hpp"
#include "grpt/groupement.hpp"
#include "grpt/report.hpp"

namespace grpt {

/// One carrier bearing two groupement structures, subject to the commutation
/// of the endomaps (2-GR 2) and the interchange law on guarded quadruples
/// (2-GR 3).
struct TwoGroupement {
  FiniteGroupement first;
  FiniteGroupement second;

  bool operator==(TwoGroupement const&) const = default;
};

/// Shape validation: equal carriers, both structures well-formed.
void validate_shape(TwoGroupement const& tg);

/// 2-GR 1 (both structures pass GR 1-3), 2-GR 2 (four endomap commutation
/// equalities), 2-GR 3 (existence and equality of the interchange composites
/// on every guarded quadruple).
AxiomReport check_2gr(TwoGroupement const& tg);

/// Opens of a topology under union (s = t = constant full set) and
/// intersection (s = t = identity) as a 2-groupement.
TwoGroupement topology_2gr(FiniteTopology const& t);

/// The commuting squares of a finite category: quadruples (x1, x2, y1, y2)
/// of carrier elements with matching endpoints and x2#y1 = y2#x1. Both
/// structures are categories.
struct SquareGroupement {
  TwoGroupement tg;
  std::vector<std::array<int, 4>> squares;  // carrier index -> quadruple
};

/// Requires is_category(g) (throws std::invalid_argument otherwise).
SquareGroupement gcarres(FiniteGroupement const& g);

/// Sampled 2-GR battery on random Moore surfaces: endomap commutation on
/// random surfaces, interchange on random edge-matched quadruples.
AxiomReport moore_surface_2gr_sampled(int trials, std::uint64_t seed);

/// All 2-groupement structures whose two layers are canonical groupements on
/// {0,...,n-1} (pairs filtered by 2-GR 2 and 2-GR 3).
std::vector<TwoGroupement> enum_two_groupements(int n);

}  // namespace grpt
