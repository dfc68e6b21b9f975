#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grpt/enumerate.hpp"
#include "grpt/morphism.hpp"

using namespace grpt;

namespace {

FiniteMonoid const xor_monoid{2, {{0, 1}, {1, 0}}, 0};
FiniteMonoid const and_monoid{2, {{0, 0}, {0, 1}}, 1};

}  // namespace

TEST_CASE("identity morphisms satisfy both axiom sets") {
  auto const g = from_monoid(xor_monoid, 0);
  auto const id = identity_morphism(g);
  CHECK(check_gmor(id).ok());
  CHECK(check_gfonc(id));
}

TEST_CASE("a morphism can pass the composable-pair axiom yet not be a g-foncteur") {
  // Identity map between the same monoid based at different elements: the
  // endomaps differ pointwise, but every composable pair still maps well.
  GMorphism f{from_monoid(xor_monoid, 0), from_monoid(xor_monoid, 1), {0, 1}};
  CHECK(check_gmor(f).ok());
  CHECK_FALSE(check_gfonc(f));
}

TEST_CASE("composition preservation failures carry a witness") {
  // f(1 # 1) = f(0) = 0 but f(1) # f(1) = 1 in the AND structure.
  GMorphism f{from_monoid(xor_monoid, 0), from_monoid(and_monoid, 0), {0, 1}};
  auto const rep = check_gmor(f);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.find("GMOR")->violation.has_value());
}

TEST_CASE("composition and its fallback") {
  auto const gx = from_monoid(xor_monoid, 0);
  auto const ga = from_monoid(and_monoid, 0);
  auto const idx = identity_morphism(gx);
  auto const ida = identity_morphism(ga);
  CHECK(compose_gmor(idx, idx) == idx);
  // Endpoint mismatch: falls back to the first argument of the pair order.
  CHECK(compose_gmor(idx, ida) == ida);
}

TEST_CASE("duals of g-morphisms are g-morphisms between the duals") {
  EnumerationQuery q;
  q.n = 2;
  auto const gs = enum_structures(q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (auto const& f : enum_morphisms(gs[i], gs[j])) {
        auto const d = dual_gmor(f);
        CHECK(d.src == dual(f.src));
        CHECK(check_gmor(d).ok());
      }
}

TEST_CASE("closure cap is enforced") {
  EnumerationQuery q;
  q.n = 2;
  auto const gs = enum_structures(q);
  std::vector<GMorphism> fs;
  for (std::size_t i = 0; i < 6; ++i) {
    fs.push_back(identity_morphism(gs[i]));
    for (std::size_t j = 0; j < 6; ++j)
      for (auto const& f : enum_morphisms(gs[i], gs[j])) fs.push_back(f);
  }
  CHECK_THROWS_AS(close_under_composition(fs, ClosureOptions{3}), std::runtime_error);
  CHECK_NOTHROW(close_under_composition(fs));
}

TEST_CASE("morphism families close into a category") {
  // Small slice; the full n <= 2 family is exercised by the acceptance gate.
  std::vector<FiniteGroupement> gs{from_monoid(xor_monoid, 0), from_monoid(and_monoid, 0)};
  std::vector<GMorphism> fs;
  for (auto const& a : gs)
    for (auto const& b : gs)
      for (auto const& f : enum_morphisms(a, b)) fs.push_back(f);
  auto const rep = verify_morphism_category(gs, fs);
  CHECK(rep.ok());
  REQUIRE(rep.find("CAT 3") != nullptr);
  CHECK(rep.find("CAT 3")->pass);
}
