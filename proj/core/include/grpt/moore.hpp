#pragma once

#include <random>
#include <vector>

#include "grpt/rational.hpp"
#include "grpt/report.hpp"

namespace grpt {

/// A piecewise-multilinear map prod_i [0, delta_i] -> Q^dim, represented by a
/// tensor grid: per axis a strictly increasing rational grid from 0 (>= 2
/// entries, last entry = delta_i > 0), and a row-major tensor (axis 0
/// slowest) of dim-vectors at the grid nodes. Between nodes the map is the
/// multilinear interpolation of its cell corners. k = 1 gives Moore paths,
/// k = 2 surfaces, general k the cube spaces.
struct MooreCube {
  int k = 1;
  int dim = 1;
  std::vector<std::vector<Rat>> grids;
  std::vector<std::vector<Rat>> values;  // prod(grid sizes) entries of dim rationals

  bool operator==(MooreCube const&) const = default;
};

/// Shape/invariant validation; throws std::invalid_argument.
void validate(MooreCube const& c);

Rat duration(MooreCube const& c, int axis);

/// Exact multilinear interpolation. Throws std::out_of_range off the domain.
std::vector<Rat> eval(MooreCube const& c, std::vector<Rat> const& p);

/// Re-express c on a nodewise finer tensor grid (each new_grids[i] must
/// contain grids[i]); eval-equivalent.
MooreCube refine(MooreCube const& c, std::vector<std::vector<Rat>> const& new_grids);

/// Minimal grid form: drops every interior coordinate whose slice is the
/// exact interpolation of its neighbors. Two cubes define the same function
/// iff their canonical forms compare equal.
MooreCube canonicalize(MooreCube const& c);

/// Boundary slice extruded to duration 1 on the chosen axis, canonical form.
MooreCube source_axis(MooreCube const& c, int axis);
MooreCube target_axis(MooreCube const& c, int axis);

/// Concatenation along the axis when canonical source_axis(c2) equals
/// canonical target_axis(c1) (off-axis grids refined to their union first);
/// otherwise the fallback c1. Throws std::invalid_argument on k/dim mismatch.
MooreCube compose_axis(MooreCube const& c2, MooreCube const& c1, int axis);

/// Random cube with small rational grids and values; deterministic in the
/// engine state.
MooreCube random_cube(std::mt19937_64& rng, int k, int dim, int max_breakpoints = 4);

/// Random cube composable after c1 along the axis: shares c1's off-axis
/// grids, source slice copied from c1's target slice.
MooreCube random_composable_after(std::mt19937_64& rng, MooreCube const& c1, int axis);

/// Random quadruple satisfying the four interchange preconditions on axes
/// (i, j): returns {c1, c2, c3, c4} with s_j(c2)=t_j(c1), s_j(c4)=t_j(c3),
/// s_i(c3)=t_i(c1), s_i(c4)=t_i(c2).
std::vector<MooreCube> random_interchange_quadruple(std::mt19937_64& rng, int k, int dim, int i,
                                                    int j);

/// GR 1 on random cubes, GR 2 on random composable pairs, GR 3 on random
/// composable triples — all equalities bit-exact on canonical forms.
AxiomReport check_groupement_sampled(int k, int dim, int axis, int trials,
                                     std::uint64_t seed, int max_breakpoints = 4);

/// s_i s_j = s_j s_i and the three companion identities, canonical forms.
bool check_axis_commutation(MooreCube const& c, int i, int j);

/// Both interchange composites exist (no fallback) and agree bit-exactly.
/// Throws std::invalid_argument naming the failed precondition.
bool check_interchange(MooreCube const& c1, MooreCube const& c2, MooreCube const& c3,
                       MooreCube const& c4, int i, int j);

}  // namespace grpt
