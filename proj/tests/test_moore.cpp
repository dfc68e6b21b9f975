#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grpt/moore.hpp"
#include "grpt/rational.hpp"

using namespace grpt;

namespace {

Rat r(long long p, long long q = 1) { return Rat{p} / Rat{q}; }

MooreCube path(std::vector<Rat> grid, std::vector<Rat> values) {
  MooreCube c;
  c.k = 1;
  c.dim = 1;
  c.grids = {std::move(grid)};
  for (auto const& v : values) c.values.push_back({v});
  return c;
}

}  // namespace

TEST_CASE("exact rational arithmetic") {
  CHECK(parse_rational("3/6") == r(1, 2));
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(r(-4, 2)) == "-2");
  CHECK(r(1, 3) + r(1, 6) == r(1, 2));
  CHECK(r(2, 3) * r(3, 4) == r(1, 2));
  CHECK(r(1, 2) < r(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("validation rejects malformed cubes") {
  CHECK_THROWS_AS(validate(path({r(1), r(2)}, {r(0), r(1)})), std::invalid_argument);  // no 0
  CHECK_THROWS_AS(validate(path({r(0), r(0)}, {r(0), r(1)})), std::invalid_argument);  // flat
  CHECK_THROWS_AS(validate(path({r(0)}, {r(0)})), std::invalid_argument);              // delta 0
  CHECK_NOTHROW(validate(path({r(0), r(1)}, {r(0), r(1)})));
}

TEST_CASE("evaluation is the exact piecewise-linear interpolation") {
  auto const c = path({r(0), r(1, 2), r(1)}, {r(0), r(1), r(0)});
  CHECK(eval(c, {r(0)}) == std::vector<Rat>{r(0)});
  CHECK(eval(c, {r(1, 4)}) == std::vector<Rat>{r(1, 2)});
  CHECK(eval(c, {r(1, 2)}) == std::vector<Rat>{r(1)});
  CHECK(eval(c, {r(3, 4)}) == std::vector<Rat>{r(1, 2)});
  CHECK_THROWS_AS(eval(c, {r(2)}), std::out_of_range);
}

TEST_CASE("refinement is eval-equivalent and canonicalization undoes it") {
  auto const c = path({r(0), r(1)}, {r(0), r(2)});
  auto const fine = refine(c, {{r(0), r(1, 3), r(1, 2), r(1)}});
  CHECK(fine.values[1] == std::vector<Rat>{r(2, 3)});
  CHECK(eval(fine, {r(1, 4)}) == eval(c, {r(1, 4)}));
  CHECK(canonicalize(fine) == canonicalize(c));
}

TEST_CASE("boundaries and concatenation") {
  auto const c1 = path({r(0), r(1)}, {r(0), r(1)});
  auto const c2 = path({r(0), r(1, 2), r(1)}, {r(1), r(3, 2), r(0)});
  auto const s = source_axis(c2, 0);
  auto const t = target_axis(c1, 0);
  CHECK(s == t);  // both the constant-1 unit extrusion

  auto const cc = compose_axis(c2, c1, 0);
  CHECK(duration(cc, 0) == r(2));
  CHECK(eval(cc, {r(1)}) == std::vector<Rat>{r(1)});
  CHECK(eval(cc, {r(3, 2)}) == std::vector<Rat>{r(3, 2)});
  CHECK(eval(cc, {r(1, 2)}) == std::vector<Rat>{r(1, 2)});

  // Non-matching boundary: fallback to the second operand.
  auto const other = path({r(0), r(1)}, {r(5), r(6)});
  CHECK(compose_axis(other, c1, 0) == c1);
}

TEST_CASE("sampled groupement laws on paths and surfaces") {
  CHECK(check_groupement_sampled(1, 2, 0, 60, 101).ok());
  CHECK(check_groupement_sampled(2, 2, 0, 25, 102).ok());
  CHECK(check_groupement_sampled(2, 2, 1, 25, 103).ok());
}

TEST_CASE("axis commutation on random surfaces") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) CHECK(check_axis_commutation(random_cube(rng, 2, 2), 0, 1));
}

TEST_CASE("interchange on random edge-matched quadruples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    auto const q = random_interchange_quadruple(rng, 2, 1, 0, 1);
    CHECK(check_interchange(q[0], q[1], q[2], q[3], 0, 1));
  }
  // cube families: three axes, each axis pair
  for (int i = 0; i < 5; ++i)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        auto const q = random_interchange_quadruple(rng, 3, 1, a, b);
        CHECK(check_interchange(q[0], q[1], q[2], q[3], a, b));
      }
}

TEST_CASE("interchange preconditions are named when violated") {
  std::mt19937_64 rng(13);
  auto const c = random_cube(rng, 2, 1);
  auto const unrelated = random_cube(rng, 2, 1);
  CHECK_THROWS_AS(check_interchange(c, unrelated, unrelated, unrelated, 0, 1),
                  std::invalid_argument);
}
