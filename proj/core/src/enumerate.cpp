#include "grpt/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "grpt/alexandroff.hpp"
#include "grpt/key.hpp"

namespace grpt {

namespace {

/// Odometer over [0,n)^k in lexicographic order; returns false after the
/// last tuple.
bool next_tuple(std::vector<int>& v, int n) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (++v[i] < n) return true;
    v[i] = 0;
  }
  return false;
}

bool gr1_ok(std::vector<int> const& s, std::vector<int> const& t) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[s[x]] != s[x] || s[t[x]] != t[x] || t[t[x]] != t[x] || t[s[x]] != s[x]) return false;
  return true;
}

// The Alexandroff axioms constrain non-composable table entries (x#alpha = x
// even when the pair is not composable), so the class representative of a
// canonical structure carries the alpha-repaired entries instead of the
// canonical fallback. Both are presque-equal; the repair changes nothing on
// composable pairs.
bool class_match(FiniteGroupement& g, StructureClass cls) {
  switch (cls) {
    case StructureClass::Groupement: return true;
    case StructureClass::Category: return is_category(g);
    case StructureClass::Star: return is_star(g);
    case StructureClass::Alexandroff:
      for (int a = 0; a < g.n; ++a) {
        bool candidate = true;
        for (int x = 0; x < g.n && candidate; ++x) {
          if (x != a && (g.s[x] == a || g.t[x] == a)) candidate = false;
          // Neutrality on composable pairs is part of the class; repairing
          // those entries would leave the presque-égalité class.
          if (g.s[x] == g.t[a] && g.comp[x][a] != x) candidate = false;
          if (g.s[a] == g.t[x] && g.comp[a][x] != x) candidate = false;
        }
        if (!candidate) continue;
        for (int x = 0; x < g.n; ++x) {
          if (g.s[x] != g.t[a]) g.comp[x][a] = x;
          if (g.s[a] != g.t[x]) g.comp[a][x] = x;
        }
        return true;
      }
      return false;
    case StructureClass::TwoGroupement: break;
  }
  throw std::invalid_argument("two-groupement enumeration is a separate operation over structure pairs");
}

/// Backtracking over the composable entries of a fixed GR 1-valid (s, t)
/// pair. GR 2 is enforced through the per-entry candidate sets; GR 3 is
/// pruned on every fully determined triple.
struct CompSearch {
  int n;
  std::vector<int> const& s;
  std::vector<int> const& t;
  StructureClass cls;
  std::vector<FiniteGroupement>& out;

  std::vector<std::pair<int, int>> pairs;       // composable pairs, lexicographic
  std::vector<std::vector<int>> pos;            // pos[x][y]: index into pairs, or -1
  std::vector<std::array<int, 3>> triples;      // composable triples
  std::vector<std::vector<int>> candidates;     // GR 2 candidates per pair
  FiniteGroupement g;

  void run() {
    g = FiniteGroupement{n, s, t, std::vector<std::vector<int>>(n, std::vector<int>(n, -1))};
    pos.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s[x] == t[y]) {
          pos[x][y] = static_cast<int>(pairs.size());
          pairs.emplace_back(x, y);
        }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (s[x] == t[y] && s[y] == t[z]) triples.push_back({x, y, z});
    for (auto [x, y] : pairs) {
      std::vector<int> cand;
      for (int e = 0; e < n; ++e)
        if (s[e] == s[y] && t[e] == t[x]) cand.push_back(e);
      candidates.push_back(std::move(cand));
    }
    assign(0);
  }

  bool triples_ok() const {
    for (auto const& [x, y, z] : triples) {
      int const yz = g.comp[y][z];
      int const xy = g.comp[x][y];
      if (yz < 0 || xy < 0) continue;
      // GR 2 guarantees s(x#y) = s(y) and t(y#z) = t(y), so both outer
      // pairs are composable whenever the inner ones are assigned.
      int const l = g.comp[xy][z];
      int const r = g.comp[x][yz];
      if (l < 0 || r < 0) continue;
      if (l != r) return false;
    }
    return true;
  }

  void assign(std::size_t k) {
    if (k == pairs.size()) {
      FiniteGroupement done = g;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (done.comp[x][y] < 0) done.comp[x][y] = y;  // canonical fallback
      if (class_match(done, cls)) out.push_back(done);
      return;
    }
    auto const [x, y] = pairs[k];
    for (int e : candidates[k]) {
      g.comp[x][y] = e;
      if (triples_ok()) assign(k + 1);
    }
    g.comp[x][y] = -1;
  }
};

}  // namespace

std::vector<FiniteGroupement> enum_structures(EnumerationQuery const& q) {
  if (q.n < 1) throw std::invalid_argument("carrier size must be at least 1");
  if (q.n > q.bound) throw std::invalid_argument("enumeration bound exceeded");
  if (q.naive) return enum_structures_naive(q.n, q.canonical_only);

  std::vector<FiniteGroupement> out;
  std::vector<int> s(q.n, 0);
  do {
    bool s_idem = true;
    for (int x = 0; x < q.n && s_idem; ++x) s_idem = s[s[x]] == s[x];
    if (!s_idem) continue;
    std::vector<int> t(q.n, 0);
    do {
      if (!gr1_ok(s, t)) continue;
      CompSearch search{q.n, s, t, q.cls, out};
      search.run();
    } while (next_tuple(t, q.n));
  } while (next_tuple(s, q.n));
  return out;
}

std::vector<FiniteGroupement> enum_structures_naive(int n, bool canonical_only) {
  if (n < 1 || n > 3) throw std::invalid_argument("naive full scan is bounded to n <= 3");
  std::vector<FiniteGroupement> out;
  std::map<std::vector<int>, bool> seen;
  std::vector<int> s(n, 0);
  do {
    std::vector<int> t(n, 0);
    do {
      std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
      do {
        FiniteGroupement g{n, s, t, std::vector<std::vector<int>>(n, std::vector<int>(n))};
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) g.comp[x][y] = flat[x * n + y];
        if (!check_axioms(g).ok()) continue;
        if (canonical_only) {
          auto const canon = canonicalize_comp(g);
          auto [it, inserted] = seen.try_emplace(flat_key(canon), true);
          if (inserted) out.push_back(canon);
        } else {
          out.push_back(g);
        }
      } while (next_tuple(flat, n));
    } while (next_tuple(t, n));
  } while (next_tuple(s, n));
  return out;
}

std::vector<GMorphism> enum_morphisms(FiniteGroupement const& g1, FiniteGroupement const& g2) {
  double space = 1;
  for (int i = 0; i < g1.n; ++i) space *= g2.n;
  if (space > 2e7) throw std::invalid_argument("morphism map-space bound exceeded");
  std::vector<GMorphism> out;
  std::vector<int> map(g1.n, 0);
  do {
    GMorphism f{g1, g2, map};
    if (check_gmor(f).ok()) out.push_back(std::move(f));
  } while (next_tuple(map, g2.n));
  return out;
}

std::vector<GTransformation> enum_transformations(GMorphism const& f1, GMorphism const& f2) {
  if (f1.src != f2.src || f1.dst != f2.dst)
    throw std::invalid_argument("enum_transformations needs parallel morphisms");
  int const n1 = f1.src.n;
  int const n2 = f1.dst.n;
  double space = 1;
  for (int i = 0; i < 2 * n1; ++i) space *= n2;
  if (space > 2e7) throw std::invalid_argument("transformation map-space bound exceeded");
  std::vector<GTransformation> out;
  std::vector<int> e1(n1, 0);
  do {
    std::vector<int> e2(n1, 0);
    do {
      GTransformation t{f1, f2, e1, e2};
      auto const rep = check_gtrans(t);
      if (rep.find("GTRANS 1")->pass && rep.find("GTRANS 2")->pass) out.push_back(std::move(t));
    } while (next_tuple(e2, n2));
  } while (next_tuple(e1, n2));
  return out;
}

}  // namespace grpt
