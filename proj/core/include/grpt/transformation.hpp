#pragma once

#include <stdexcept>
#include <vector>

#include "grpt/morphism.hpp"
#include "grpt/report.hpp"

namespace grpt {

/// A pair of maps (eta1, eta2) between two parallel g-morphisms
/// f1, f2 : B1 -> B2, subject to GTRANS 1-2.
struct GTransformation {
  GMorphism f1;
  GMorphism f2;
  std::vector<int> eta1;
  std::vector<int> eta2;

  bool operator==(GTransformation const&) const = default;
};

/// Thrown by sigma1/tau1 when the destination groupement is not a
/// star-groupement; the construction needs t(x)#x = x#s(x) there.
struct NotStarError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void validate_shape(GTransformation const& t);

/// GTRANS 1, GTRANS 2 verdicts plus the derived eta relations
/// (eta1 = eta2∘s1 etc.) as a consistency cross-check.
AxiomReport check_gtrans(GTransformation const& t);

/// Evaluates GTRANS 2' independently and reports whether its verdict
/// matches GTRANS 2's.
bool check_gtrans2_prime_equiv(GTransformation const& t);

/// (s2∘f, t2∘f) : f ~> f. Requires is_star(f.dst).
GTransformation sigma1(GMorphism const& f);
GTransformation sigma1(GTransformation const& t);  // sigma1 of t.f1
GTransformation tau1(GTransformation const& t);    // sigma1 of t.f2

/// Vertical composition: pointwise #2 pairing when t2.f1 equals t1.f2
/// structurally, else the fallback t1.
GTransformation otimes(GTransformation const& t2, GTransformation const& t1);

/// Precompose with f : B1' -> B1.
GTransformation whisker_right(GTransformation const& t, GMorphism const& f);
/// Postcompose with g : B2 -> B2'.
GTransformation whisker_left(GMorphism const& g, GTransformation const& t);

/// (s1, t1) : Id_B1 ~> Id_B1 and (s2, t2) : Id_B2 ~> Id_B2.
GTransformation sigma0(GTransformation const& t);
GTransformation tau0(GTransformation const& t);

/// Horizontal compositions; fallback t1 when the middle groupement
/// does not match.
GTransformation boxtimes(GTransformation const& t2, GTransformation const& t1);
GTransformation boxdot(GTransformation const& t2, GTransformation const& t1);

/// The single-map presentation: eta1 alone determines the transformation
/// when f1, f2 are g-foncteurs.
std::vector<int> to_single(GTransformation const& t);
GTransformation from_single(std::vector<int> const& eta, GMorphism const& f1,
                            GMorphism const& f2);

}  // namespace grpt
