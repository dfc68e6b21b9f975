#include "grpt/two_groupement.hpp"

#include <stdexcept>
#include <string>

#include "grpt/enumerate.hpp"
#include "grpt/moore.hpp"

namespace grpt {

void validate_shape(TwoGroupement const& tg) {
  validate_shape(tg.first);
  validate_shape(tg.second);
  if (tg.first.n != tg.second.n)
    throw std::invalid_argument("both structures must share one carrier");
}

AxiomReport check_2gr(TwoGroupement const& tg) {
  validate_shape(tg);
  AxiomReport report;
  auto const& a = tg.first;
  auto const& b = tg.second;
  int const n = a.n;

  {
    bool const ok = check_axioms(a).ok() && check_axioms(b).ok();
    if (ok)
      report.add_pass("2-GR 1");
    else
      report.add_fail("2-GR 1", Violation{{}, "GR 1-3 of a layer", "see per-layer check_axioms"});
  }

  {
    std::optional<Violation> v;
    for (int x = 0; x < n && !v; ++x) {
      if (a.s[b.s[x]] != b.s[a.s[x]] || a.t[b.t[x]] != b.t[a.t[x]] ||
          a.s[b.t[x]] != b.t[a.s[x]] || b.s[a.t[x]] != a.t[b.s[x]])
        v = Violation{{x}, "endomap commutation at " + std::to_string(x), "2-GR 2"};
    }
    if (v)
      report.add_fail("2-GR 2", *v);
    else
      report.add_pass("2-GR 2");
  }

  {
    // Guarded quadruples: x2 after x1 and x4 after x3 along #2,
    // x3 after x1 and x4 after x2 along #1.
    std::optional<Violation> v;
    for (int x1 = 0; x1 < n && !v; ++x1) {
      for (int x2 = 0; x2 < n && !v; ++x2) {
        if (b.s[x2] != b.t[x1]) continue;
        for (int x3 = 0; x3 < n && !v; ++x3) {
          if (a.s[x3] != a.t[x1]) continue;
          for (int x4 = 0; x4 < n && !v; ++x4) {
            if (b.s[x4] != b.t[x3] || a.s[x4] != a.t[x2]) continue;
            int const bot = b.comp[x2][x1];
            int const top = b.comp[x4][x3];
            int const left = a.comp[x3][x1];
            int const right = a.comp[x4][x2];
            if (a.s[top] != a.t[bot])
              v = Violation{{x1, x2, x3, x4}, "s1(x4#2x3)", "t1(x2#2x1) (existence)"};
            else if (b.s[right] != b.t[left])
              v = Violation{{x1, x2, x3, x4}, "s2(x4#1x2)", "t2(x3#1x1) (existence)"};
            else if (a.comp[top][bot] != b.comp[right][left])
              v = Violation{{x1, x2, x3, x4},
                            "(x4#2x3)#1(x2#2x1) = " + std::to_string(a.comp[top][bot]),
                            "(x4#1x2)#2(x3#1x1) = " + std::to_string(b.comp[right][left])};
          }
        }
      }
    }
    if (v)
      report.add_fail("2-GR 3", *v);
    else
      report.add_pass("2-GR 3");
  }

  return report;
}

TwoGroupement topology_2gr(FiniteTopology const& t) {
  return TwoGroupement{topology_union_groupement(t).base, topology_inter_groupement(t).base};
}

SquareGroupement gcarres(FiniteGroupement const& g) {
  if (!check_axioms(g).ok() || !is_category(g))
    throw std::invalid_argument("gcarres needs a category");
  SquareGroupement out;
  std::vector<int> lookup;
  int const n = g.n;
  auto square_ix = [&](int x1, int x2, int y1, int y2) -> int {
    return lookup[((static_cast<std::size_t>(x1) * n + x2) * n + y1) * n + y2];
  };
  lookup.assign(static_cast<std::size_t>(n) * n * n * n, -1);
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2) {
          if (g.s[y1] != g.s[x1] || g.t[y1] != g.s[x2] || g.s[y2] != g.t[x1] ||
              g.t[y2] != g.t[x2])
            continue;
          if (g.comp[x2][y1] != g.comp[y2][x1]) continue;
          lookup[((static_cast<std::size_t>(x1) * n + x2) * n + y1) * n + y2] =
              static_cast<int>(out.squares.size());
          out.squares.push_back({x1, x2, y1, y2});
        }

  int const m = static_cast<int>(out.squares.size());
  FiniteGroupement one{m, std::vector<int>(m), std::vector<int>(m),
                       std::vector<std::vector<int>>(m, std::vector<int>(m))};
  FiniteGroupement two = one;
  for (int q = 0; q < m; ++q) {
    auto const [x1, x2, y1, y2] = out.squares[q];
    one.s[q] = square_ix(x1, x1, g.s[x1], g.t[x1]);
    one.t[q] = square_ix(x2, x2, g.s[x2], g.t[x2]);
    two.s[q] = square_ix(g.s[y1], g.t[y1], y1, y1);
    two.t[q] = square_ix(g.s[y2], g.t[y2], y2, y2);
  }
  for (int q = 0; q < m; ++q) {
    auto const [x1, x2, y1, y2] = out.squares[q];
    for (int p = 0; p < m; ++p) {
      auto const [x1p, x2p, y1p, y2p] = out.squares[p];
      // q #1 p: glue along the shared x-side when x1 = x2'.
      if (x1 == x2p)
        one.comp[q][p] = square_ix(x1p, x2, g.comp[y1][y1p], g.comp[y2][y2p]);
      else
        one.comp[q][p] = p;
      // q #2 p: glue along the shared y-side when y1 = y2'.
      if (y1 == y2p)
        two.comp[q][p] = square_ix(g.comp[x1][x1p], g.comp[x2][x2p], y1p, y2);
      else
        two.comp[q][p] = p;
    }
  }
  out.tg = TwoGroupement{std::move(one), std::move(two)};
  return out;
}

AxiomReport moore_surface_2gr_sampled(int trials, std::uint64_t seed) {
  AxiomReport report;
  std::mt19937_64 rng(seed);
  std::optional<Violation> v1, v2, v3;
  for (int trial = 0; trial < trials; ++trial) {
    {
      auto const c = random_cube(rng, 2, 2, 3);
      if (!v2 && !check_axis_commutation(c, 0, 1))
        v2 = Violation{{trial}, "endomap commutation", "2-GR 2"};
    }
    {
      auto const q = random_interchange_quadruple(rng, 2, 2, 0, 1);
      if (!v3 && !check_interchange(q[0], q[1], q[2], q[3], 0, 1))
        v3 = Violation{{trial}, "interchange composites", "2-GR 3"};
    }
    if (!v1) {
      // Layer axioms: one sampled GR pass per axis, small trial counts.
      for (int axis = 0; axis < 2 && !v1; ++axis)
        if (!check_groupement_sampled(2, 2, axis, 1, seed + 1000 * trial + axis).ok())
          v1 = Violation{{trial}, "layer GR axioms", "2-GR 1"};
    }
  }
  if (v1)
    report.add_fail("2-GR 1", *v1);
  else
    report.add_pass("2-GR 1");
  if (v2)
    report.add_fail("2-GR 2", *v2);
  else
    report.add_pass("2-GR 2");
  if (v3)
    report.add_fail("2-GR 3", *v3);
  else
    report.add_pass("2-GR 3");
  return report;
}

std::vector<TwoGroupement> enum_two_groupements(int n) {
  EnumerationQuery q;
  q.n = n;
  auto const layer = enum_structures(q);
  std::vector<TwoGroupement> out;
  for (auto const& a : layer)
    for (auto const& b : layer) {
      TwoGroupement tg{a, b};
      if (check_2gr(tg).ok()) out.push_back(std::move(tg));
    }
  return out;
}

}  // namespace grpt
