#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grpt/report.hpp"

namespace grpt {

/// Checks GR 1-3 (optionally CAT 3) on a finite family given by index-valued
/// source/target/composition functions. Guard-satisfying pairs and triples
/// are found through buckets keyed by source value, so the scan stays
/// proportional to the number of composable tuples rather than n^3.
inline AxiomReport check_family_axioms(int n,
                                       std::function<int(int)> const& s,
                                       std::function<int(int)> const& t,
                                       std::function<int(int, int)> const& comp,
                                       bool check_cat3 = false) {
  AxiomReport report;
  std::vector<int> sv(n), tv(n);
  for (int i = 0; i < n; ++i) {
    sv[i] = s(i);
    tv[i] = t(i);
  }

  {
    std::optional<Violation> v;
    for (int x = 0; x < n && !v; ++x) {
      if (sv[sv[x]] != sv[x] || sv[tv[x]] != tv[x] || tv[tv[x]] != tv[x] || tv[sv[x]] != sv[x])
        v = Violation{{x}, "s/t endomap equations at " + std::to_string(x), "GR 1"};
    }
    if (v)
      report.add_fail("GR 1", *v);
    else
      report.add_pass("GR 1");
  }

  // Bucket elements by target value so composable partners are direct hits.
  std::vector<std::vector<int>> by_target(n);
  for (int y = 0; y < n; ++y) by_target[tv[y]].push_back(y);

  {
    std::optional<Violation> v;
    for (int x = 0; x < n && !v; ++x)
      for (int y : by_target[sv[x]]) {
        int const xy = comp(x, y);
        if (sv[xy] != sv[y] || tv[xy] != tv[x]) {
          v = Violation{{x, y},
                        "s(x#y) = " + std::to_string(sv[xy]) + ", t(x#y) = " + std::to_string(tv[xy]),
                        "s(y) = " + std::to_string(sv[y]) + ", t(x) = " + std::to_string(tv[x])};
          break;
        }
      }
    if (v)
      report.add_fail("GR 2", *v);
    else
      report.add_pass("GR 2");
  }

  {
    std::optional<Violation> v;
    for (int x = 0; x < n && !v; ++x)
      for (int y : by_target[sv[x]]) {
        if (v) break;
        int const xy = comp(x, y);
        for (int z : by_target[sv[y]]) {
          int const l = comp(xy, z);
          int const r = comp(x, comp(y, z));
          if (l != r) {
            v = Violation{{x, y, z}, "(x#y)#z = " + std::to_string(l),
                          "x#(y#z) = " + std::to_string(r)};
            break;
          }
        }
      }
    if (v)
      report.add_fail("GR 3", *v);
    else
      report.add_pass("GR 3");
  }

  if (check_cat3) {
    std::optional<Violation> v;
    for (int x = 0; x < n && !v; ++x) {
      if (comp(x, sv[x]) != x || comp(tv[x], x) != x)
        v = Violation{{x},
                      "x#s(x) = " + std::to_string(comp(x, sv[x])) + ", t(x)#x = " +
                          std::to_string(comp(tv[x], x)),
                      "x = " + std::to_string(x)};
    }
    if (v)
      report.add_fail("CAT 3", *v);
    else
      report.add_pass("CAT 3");
  }

  return report;
}

}  // namespace grpt
