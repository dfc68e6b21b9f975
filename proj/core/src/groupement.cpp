#include "grpt/groupement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grpt {

namespace {

void require(bool cond, std::string const& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string elem(int x) { return std::to_string(x); }

}  // namespace

void validate_shape(FiniteGroupement const& g) {
  require(g.n >= 1, "carrier must be non-empty");
  require(static_cast<int>(g.s.size()) == g.n, "s must have n entries");
  require(static_cast<int>(g.t.size()) == g.n, "t must have n entries");
  require(static_cast<int>(g.comp.size()) == g.n, "comp must have n rows");
  for (int x = 0; x < g.n; ++x) {
    require(g.s[x] >= 0 && g.s[x] < g.n, "s(" + elem(x) + ") out of range");
    require(g.t[x] >= 0 && g.t[x] < g.n, "t(" + elem(x) + ") out of range");
    require(static_cast<int>(g.comp[x].size()) == g.n, "comp row " + elem(x) + " must have n entries");
    for (int y = 0; y < g.n; ++y)
      require(g.comp[x][y] >= 0 && g.comp[x][y] < g.n,
              "comp[" + elem(x) + "][" + elem(y) + "] out of range");
  }
}

void validate(ClassicCategory const& c) {
  require(c.objects >= 1, "category must have at least one object");
  int const m = static_cast<int>(c.morphisms.size());
  require(static_cast<int>(c.id.size()) == c.objects, "one identity per object required");
  for (auto [src, dst] : c.morphisms) {
    require(src >= 0 && src < c.objects, "morphism src out of range");
    require(dst >= 0 && dst < c.objects, "morphism dst out of range");
  }
  for (int o = 0; o < c.objects; ++o) {
    require(c.id[o] >= 0 && c.id[o] < m, "identity index out of range");
    require(c.morphisms[c.id[o]] == std::pair{o, o}, "id_x must have src = dst = x");
  }
  // Composition table: defined exactly on composable pairs, no duplicates.
  std::vector<std::vector<int>> lookup(m, std::vector<int>(m, -1));
  for (auto [f, g, fg] : c.comp) {
    require(f >= 0 && f < m && g >= 0 && g < m && fg >= 0 && fg < m, "comp triple out of range");
    require(c.morphisms[f].first == c.morphisms[g].second, "comp triple not composable");
    require(c.morphisms[fg] == std::pair{c.morphisms[g].first, c.morphisms[f].second},
            "composite endpoints wrong");
    require(lookup[f][g] == -1, "duplicate comp triple");
    lookup[f][g] = fg;
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (c.morphisms[f].first == c.morphisms[g].second)
        require(lookup[f][g] != -1, "missing comp triple");
  // Identity laws and associativity.
  for (int f = 0; f < m; ++f) {
    require(lookup[f][c.id[c.morphisms[f].first]] == f, "right identity law fails");
    require(lookup[c.id[c.morphisms[f].second]][f] == f, "left identity law fails");
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (c.morphisms[f].first != c.morphisms[g].second) continue;
      for (int h = 0; h < m; ++h) {
        if (c.morphisms[g].first != c.morphisms[h].second) continue;
        require(lookup[lookup[f][g]][h] == lookup[f][lookup[g][h]], "associativity fails");
      }
    }
}

void validate(FiniteMonoid const& m) {
  require(m.n >= 1, "monoid must be non-empty");
  require(m.e >= 0 && m.e < m.n, "identity index out of range");
  require(static_cast<int>(m.table.size()) == m.n, "table must have n rows");
  for (auto const& row : m.table) {
    require(static_cast<int>(row.size()) == m.n, "table row must have n entries");
    for (int v : row) require(v >= 0 && v < m.n, "table entry out of range");
  }
  for (int x = 0; x < m.n; ++x) {
    require(m.table[m.e][x] == x && m.table[x][m.e] == x, "e is not neutral");
    for (int y = 0; y < m.n; ++y)
      for (int z = 0; z < m.n; ++z)
        require(m.table[m.table[x][y]][z] == m.table[x][m.table[y][z]],
                "monoid operation not associative");
  }
}

AxiomReport check_axioms(FiniteGroupement const& g) {
  AxiomReport report;

  // GR 1: ss = s, st = t, tt = t, ts = s.
  {
    std::optional<Violation> v;
    for (int x = 0; x < g.n && !v; ++x) {
      if (g.s[g.s[x]] != g.s[x])
        v = Violation{{x}, "s(s(" + elem(x) + ")) = " + elem(g.s[g.s[x]]), "s(" + elem(x) + ") = " + elem(g.s[x])};
      else if (g.s[g.t[x]] != g.t[x])
        v = Violation{{x}, "s(t(" + elem(x) + ")) = " + elem(g.s[g.t[x]]), "t(" + elem(x) + ") = " + elem(g.t[x])};
      else if (g.t[g.t[x]] != g.t[x])
        v = Violation{{x}, "t(t(" + elem(x) + ")) = " + elem(g.t[g.t[x]]), "t(" + elem(x) + ") = " + elem(g.t[x])};
      else if (g.t[g.s[x]] != g.s[x])
        v = Violation{{x}, "t(s(" + elem(x) + ")) = " + elem(g.t[g.s[x]]), "s(" + elem(x) + ") = " + elem(g.s[x])};
    }
    if (v)
      report.add_fail("GR 1", *v);
    else
      report.add_pass("GR 1");
  }

  // GR 2: s(x#y) = s(y) and t(x#y) = t(x) on composable pairs.
  {
    std::optional<Violation> v;
    for (int x = 0; x < g.n && !v; ++x)
      for (int y = 0; y < g.n && !v; ++y) {
        if (!g.composable(x, y)) continue;
        int const xy = g.comp[x][y];
        if (g.s[xy] != g.s[y])
          v = Violation{{x, y}, "s(x#y) = " + elem(g.s[xy]), "s(y) = " + elem(g.s[y])};
        else if (g.t[xy] != g.t[x])
          v = Violation{{x, y}, "t(x#y) = " + elem(g.t[xy]), "t(x) = " + elem(g.t[x])};
      }
    if (v)
      report.add_fail("GR 2", *v);
    else
      report.add_pass("GR 2");
  }

  // GR 3: (x#y)#z = x#(y#z) on composable triples.
  {
    std::optional<Violation> v;
    for (int x = 0; x < g.n && !v; ++x)
      for (int y = 0; y < g.n && !v; ++y) {
        if (!g.composable(x, y)) continue;
        for (int z = 0; z < g.n && !v; ++z) {
          if (!g.composable(y, z)) continue;
          int const l = g.comp[g.comp[x][y]][z];
          int const r = g.comp[x][g.comp[y][z]];
          if (l != r)
            v = Violation{{x, y, z}, "(x#y)#z = " + elem(l), "x#(y#z) = " + elem(r)};
        }
      }
    if (v)
      report.add_fail("GR 3", *v);
    else
      report.add_pass("GR 3");
  }

  return report;
}

std::set<int> identities(FiniteGroupement const& g) {
  std::set<int> out;
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int y = 0; y < g.n && ok; ++y)
      if (g.s[y] == g.t[x] && g.comp[y][x] != y) ok = false;
    for (int z = 0; z < g.n && ok; ++z)
      if (g.s[x] == g.t[z] && g.comp[x][z] != z) ok = false;
    if (ok) out.insert(x);
  }
  return out;
}

std::set<int> invertibles(FiniteGroupement const& g) {
  auto const ids = identities(g);
  std::set<int> out;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (ids.contains(g.comp[x][y]) && ids.contains(g.comp[y][x])) {
        out.insert(x);
        break;
      }
  return out;
}

bool is_category(FiniteGroupement const& g) {
  for (int x = 0; x < g.n; ++x)
    if (g.comp[x][g.s[x]] != x || g.comp[g.t[x]][x] != x) return false;
  return true;
}

bool is_star(FiniteGroupement const& g) {
  for (int x = 0; x < g.n; ++x)
    if (g.comp[g.t[x]][x] != g.comp[x][g.s[x]]) return false;
  return true;
}

FiniteGroupement dual(FiniteGroupement const& g) {
  FiniteGroupement d;
  d.n = g.n;
  d.s = g.t;
  d.t = g.s;
  d.comp.assign(g.n, std::vector<int>(g.n));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) d.comp[x][y] = g.comp[y][x];
  return d;
}

bool presque_egal(FiniteGroupement const& a, FiniteGroupement const& b) {
  if (a.n != b.n || a.s != b.s || a.t != b.t) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.composable(x, y) && a.comp[x][y] != b.comp[x][y]) return false;
  return true;
}

FiniteGroupement canonicalize_comp(FiniteGroupement const& g) {
  FiniteGroupement c = g;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (!g.composable(x, y)) c.comp[x][y] = y;
  return c;
}

FiniteGroupement from_monoid(FiniteMonoid const& m, int c) {
  if (c < 0 || c >= m.n) throw std::invalid_argument("base point out of range");
  FiniteGroupement g;
  g.n = m.n;
  g.s.assign(m.n, c);
  g.t.assign(m.n, c);
  g.comp = m.table;
  return g;
}

ClassicCategory to_classic(FiniteGroupement const& g) {
  if (!is_category(g)) throw std::invalid_argument("to_classic requires a category");
  auto const ids = identities(g);
  ClassicCategory c;
  c.objects = static_cast<int>(ids.size());
  std::vector<int> object_of(g.n, -1);  // identity element -> object index
  {
    int o = 0;
    for (int x : ids) object_of[x] = o++;
  }
  // Morphism index i corresponds to carrier element i: the carrier order is
  // kept so that from_classic(to_classic(g)) matches g without relabeling.
  c.morphisms.resize(g.n);
  for (int f = 0; f < g.n; ++f) c.morphisms[f] = {object_of[g.s[f]], object_of[g.t[f]]};
  c.id.resize(c.objects);
  for (int x : ids) c.id[object_of[x]] = x;
  for (int f = 0; f < g.n; ++f)
    for (int h = 0; h < g.n; ++h)
      if (g.composable(f, h)) c.comp.push_back({f, h, g.comp[f][h]});
  return c;
}

FiniteGroupement from_classic(ClassicCategory const& c) {
  validate(c);
  int const m = static_cast<int>(c.morphisms.size());
  FiniteGroupement g;
  g.n = m;
  g.s.resize(m);
  g.t.resize(m);
  for (int f = 0; f < m; ++f) {
    g.s[f] = c.id[c.morphisms[f].first];
    g.t[f] = c.id[c.morphisms[f].second];
  }
  g.comp.assign(m, std::vector<int>(m));
  for (int f = 0; f < m; ++f)
    for (int h = 0; h < m; ++h) g.comp[f][h] = h;  // canonical fallback
  for (auto [f, h, fh] : c.comp) g.comp[f][h] = fh;
  return g;
}

std::set<int> image_of(std::vector<int> const& f) {
  return {f.begin(), f.end()};
}

std::set<int> fixed_points_of(std::vector<int> const& f) {
  std::set<int> out;
  for (int x = 0; x < static_cast<int>(f.size()); ++x)
    if (f[x] == x) out.insert(x);
  return out;
}

}  // namespace grpt
