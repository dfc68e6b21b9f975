#include "grpt/alexandroff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "grpt/enumerate.hpp"
#include "grpt/key.hpp"

namespace grpt {

void validate(FiniteTopology const& t) {
  // An empty ground set is rejected: the union-groupement of such a topology
  // would force s(x) = X = emptyset = alpha, breaking the alpha-escape axiom.
  if (t.m < 1 || t.m > 31) throw std::invalid_argument("topology ground set must have 1..31 points");
  std::uint32_t const full = (1u << t.m) - 1u;
  if (t.opens.empty()) throw std::invalid_argument("topology must list its opens");
  for (auto o : t.opens)
    if (o & ~full) throw std::invalid_argument("open set mentions a point outside the ground set");
  auto sorted = t.opens;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate open set");
  auto has = [&](std::uint32_t o) { return std::binary_search(sorted.begin(), sorted.end(), o); };
  if (!has(0u) || !has(full))
    throw std::invalid_argument("topology must contain the empty and full sets");
  for (auto a : t.opens)
    for (auto b : t.opens) {
      if (!has(a | b)) throw std::invalid_argument("opens not closed under union");
      if (!has(a & b)) throw std::invalid_argument("opens not closed under intersection");
    }
}

std::optional<int> find_alexis(FiniteGroupement const& g) {
  // Exactly the alpha-escape (no other element reaches a via s or t) and
  // neutrality conditions. s(a) = a is NOT required: the union structure on
  // the opens of a space has constant s = t = X with alexis the empty set.
  for (int a = 0; a < g.n; ++a) {
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x) {
      if (x != a && (g.s[x] == a || g.t[x] == a)) ok = false;
      if (g.comp[x][a] != x || g.comp[a][x] != x) ok = false;
    }
    if (ok) return a;
  }
  return std::nullopt;
}

AlexandroffGroupement complete(FiniteGroupement const& g) {
  int const n = g.n;
  FiniteGroupement out{n + 1, g.s, g.t, g.comp};
  out.s.push_back(n);
  out.t.push_back(n);
  for (int x = 0; x < n; ++x) out.comp[x].push_back(x);
  out.comp.emplace_back(n + 1);
  for (int y = 0; y <= n; ++y) out.comp[n][y] = y;
  return {out, n};
}

AlexandroffGroupement monoid_hat(FiniteMonoid const& m) {
  validate(m);
  int const n = m.n;
  int const beta = n;
  int const alpha = n + 1;
  FiniteGroupement g{n + 2, std::vector<int>(n + 2, beta), std::vector<int>(n + 2, beta),
                     std::vector<std::vector<int>>(n + 2, std::vector<int>(n + 2, beta))};
  g.s[alpha] = g.t[alpha] = alpha;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.comp[x][y] = m.table[x][y];
  for (int x = 0; x <= alpha; ++x) {
    g.comp[x][alpha] = x;
    g.comp[alpha][x] = x;
  }
  return {g, alpha};
}

namespace {

int open_index(FiniteTopology const& t, std::uint32_t mask) {
  for (std::size_t i = 0; i < t.opens.size(); ++i)
    if (t.opens[i] == mask) return static_cast<int>(i);
  return -1;
}

}  // namespace

AlexandroffGroupement topology_union_groupement(FiniteTopology const& t) {
  validate(t);
  int const n = static_cast<int>(t.opens.size());
  std::uint32_t const full = t.m == 0 ? 0u : (1u << t.m) - 1u;
  int const full_ix = open_index(t, full);
  int const empty_ix = open_index(t, 0u);
  // s = t = constant full set on every open, the alexis (empty set)
  // included: the alpha-escape axiom constrains s and t away from alpha only
  // on the other elements.
  FiniteGroupement g{n, std::vector<int>(n, full_ix), std::vector<int>(n, full_ix),
                     std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.comp[x][y] = open_index(t, t.opens[x] | t.opens[y]);
  return {g, empty_ix};
}

AlexandroffGroupement topology_inter_groupement(FiniteTopology const& t) {
  validate(t);
  int const n = static_cast<int>(t.opens.size());
  std::uint32_t const full = t.m == 0 ? 0u : (1u << t.m) - 1u;
  int const full_ix = open_index(t, full);
  FiniteGroupement g{n, std::vector<int>(n), std::vector<int>(n),
                     std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x) g.s[x] = g.t[x] = x;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.comp[x][y] = open_index(t, t.opens[x] & t.opens[y]);
  return {g, full_ix};
}

namespace {

GMorphism preimage_morphism(FiniteTopology const& t1, FiniteTopology const& t2,
                            std::vector<int> const& point_map, bool unions) {
  validate(t1);
  validate(t2);
  if (static_cast<int>(point_map.size()) != t1.m)
    throw std::invalid_argument("point map must cover the domain ground set");
  for (int v : point_map)
    if (v < 0 || v >= t2.m) throw std::invalid_argument("point map value out of range");
  std::vector<int> map(t2.opens.size());
  for (std::size_t i = 0; i < t2.opens.size(); ++i) {
    std::uint32_t pre = 0;
    for (int x = 0; x < t1.m; ++x)
      if (t2.opens[i] & (1u << point_map[x])) pre |= 1u << x;
    int const ix = open_index(t1, pre);
    if (ix < 0) throw std::invalid_argument("preimage of an open set is not open (map not continuous)");
    map[i] = ix;
  }
  auto const src = unions ? topology_union_groupement(t2) : topology_inter_groupement(t2);
  auto const dst = unions ? topology_union_groupement(t1) : topology_inter_groupement(t1);
  return GMorphism{src.base, dst.base, map};
}

}  // namespace

GMorphism preimage_morphism_union(FiniteTopology const& t1, FiniteTopology const& t2,
                                  std::vector<int> const& point_map) {
  return preimage_morphism(t1, t2, point_map, true);
}

GMorphism preimage_morphism_inter(FiniteTopology const& t1, FiniteTopology const& t2,
                                  std::vector<int> const& point_map) {
  return preimage_morphism(t1, t2, point_map, false);
}

bool check_malex(GMorphism const& f, int alpha1, int alpha2) { return f.map[alpha1] == alpha2; }

GMorphism tilde_functor(GMorphism const& f) {
  GMorphism out{complete(f.src).base, complete(f.dst).base, f.map};
  out.map.push_back(f.dst.n);
  return out;
}

AlexTransformation const_alexis_trans(GMorphism const& f, int alpha2) {
  return AlexTransformation{f, f, std::vector<int>(f.src.n, alpha2),
                            std::vector<int>(f.src.n, alpha2)};
}

namespace {

bool gtralex1_ok(FiniteGroupement const& b2, int alpha2, int f1x, int f2x, int e1, int e2) {
  bool const a = e1 == alpha2 || (b2.s[e1] == b2.s[f1x] && b2.t[e1] == b2.s[f2x]);
  bool const b = e2 == alpha2 || (b2.s[e2] == b2.t[f1x] && b2.t[e2] == b2.t[f2x]);
  return a && b;
}

bool gtralex2_ok(FiniteGroupement const& b1, FiniteGroupement const& b2,
                 std::vector<int> const& f1, std::vector<int> const& f2,
                 std::vector<int> const& e1, std::vector<int> const& e2) {
  for (int x = 0; x < b1.n; ++x)
    for (int y = 0; y < b1.n; ++y) {
      if (!b1.composable(x, y)) continue;
      if (b2.comp[f2[x]][e1[x]] != b2.comp[e2[x]][f1[x]]) return false;
      if (e1[x] != e2[y]) return false;
    }
  return true;
}

}  // namespace

AxiomReport check_gtralex(AlexTransformation const& t) {
  validate_shape(t);
  auto const& b1 = t.f1.src;
  auto const& b2 = t.f1.dst;
  auto const a1 = find_alexis(b1);
  auto const a2 = find_alexis(b2);
  if (!a1 || !a2) throw std::invalid_argument("check_gtralex needs Alexandroff endpoints");
  if (!check_malex(t.f1, *a1, *a2) || !check_malex(t.f2, *a1, *a2))
    throw std::invalid_argument("check_gtralex needs alexis-preserving morphisms");

  AxiomReport report;
  {
    std::optional<Violation> v;
    for (int x = 0; x < b1.n && !v; ++x)
      if (!gtralex1_ok(b2, *a2, t.f1(x), t.f2(x), t.eta1[x], t.eta2[x]))
        v = Violation{{x}, "eta endpoints at " + std::to_string(x),
                      "alexis or (s2 f1, s2 f2)/(t2 f1, t2 f2)"};
    if (v)
      report.add_fail("GTRALEX 1", *v);
    else
      report.add_pass("GTRALEX 1");
  }
  {
    std::optional<Violation> v;
    for (int x = 0; x < b1.n && !v; ++x)
      for (int y = 0; y < b1.n && !v; ++y) {
        if (!b1.composable(x, y)) continue;
        int const l = b2.comp[t.f2(x)][t.eta1[x]];
        int const r = b2.comp[t.eta2[x]][t.f1(x)];
        if (l != r)
          v = Violation{{x, y}, "f2(x)#eta1(x) = " + std::to_string(l),
                        "eta2(x)#f1(x) = " + std::to_string(r)};
        else if (t.eta1[x] != t.eta2[y])
          v = Violation{{x, y}, "eta1(x) = " + std::to_string(t.eta1[x]),
                        "eta2(y) = " + std::to_string(t.eta2[y])};
      }
    if (v)
      report.add_fail("GTRALEX 2", *v);
    else
      report.add_pass("GTRALEX 2");
  }
  {
    // Consequences of GTRALEX 2 applied to the pairs (x, s1(x)) and (t1(x), x).
    std::optional<Violation> v;
    for (int x = 0; x < b1.n && !v; ++x) {
      if (t.eta1[x] != t.eta2[b1.s[x]] || t.eta1[b1.t[x]] != t.eta2[x] ||
          b2.comp[t.f2(x)][t.eta1[x]] != b2.comp[t.eta2[x]][t.f1(x)])
        v = Violation{{x}, "derived eta relations at " + std::to_string(x), "naturality"};
    }
    if (v)
      report.add_fail("derived relations", *v);
    else
      report.add_pass("derived relations");
  }
  return report;
}

AlexTransformation alex_compose(AlexTransformation const& t2, AlexTransformation const& t1) {
  return otimes(t2, t1);
}

AlexTransformation alex_boxtimes(AlexTransformation const& t2, AlexTransformation const& t1) {
  if (t2.f1.src != t1.f1.dst) return t1;
  return alex_compose(whisker_left(t2.f2, t1), whisker_right(t2, t1.f1));
}

AlexTransformation alex_boxdot(AlexTransformation const& t2, AlexTransformation const& t1) {
  if (t2.f1.src != t1.f1.dst) return t1;
  return alex_compose(whisker_right(t2, t1.f2), whisker_left(t2.f1, t1));
}

namespace {

int alexis_or_throw(FiniteGroupement const& g) {
  auto const a = find_alexis(g);
  if (!a) throw std::invalid_argument("expected an Alexandroff groupement");
  return *a;
}

}  // namespace

AlexTransformation alex_sigma0(AlexTransformation const& t) {
  auto const id = identity_morphism(t.f1.src);
  return const_alexis_trans(id, alexis_or_throw(t.f1.src));
}

AlexTransformation alex_tau0(AlexTransformation const& t) {
  auto const id = identity_morphism(t.f1.dst);
  return const_alexis_trans(id, alexis_or_throw(t.f1.dst));
}

AlexTransformation alex_sigma1(AlexTransformation const& t) {
  return const_alexis_trans(t.f1, alexis_or_throw(t.f1.dst));
}

AlexTransformation alex_tau1(AlexTransformation const& t) {
  return const_alexis_trans(t.f2, alexis_or_throw(t.f1.dst));
}

namespace {

// All GTRALEX transformations between alexis-preserving g-morphisms from a
// to b, deterministic order: (f1, f2) lexicographic, then eta1, then eta2.
std::vector<AlexTransformation> alex_transformations(AlexandroffGroupement const& a,
                                                     AlexandroffGroupement const& b) {
  std::vector<GMorphism> morphs;
  for (auto const& f : enum_morphisms(a.base, b.base))
    if (check_malex(f, a.alpha, b.alpha)) morphs.push_back(f);

  std::vector<AlexTransformation> out;
  auto const& b1 = a.base;
  auto const& b2 = b.base;
  for (auto const& f1 : morphs)
    for (auto const& f2 : morphs) {
      // Per-element candidate values permitted by GTRALEX 1.
      std::vector<std::vector<int>> cand1(b1.n), cand2(b1.n);
      for (int x = 0; x < b1.n; ++x)
        for (int e = 0; e < b2.n; ++e) {
          if (e == b.alpha || (b2.s[e] == b2.s[f1(x)] && b2.t[e] == b2.s[f2(x)]))
            cand1[x].push_back(e);
          if (e == b.alpha || (b2.s[e] == b2.t[f1(x)] && b2.t[e] == b2.t[f2(x)]))
            cand2[x].push_back(e);
        }
      std::vector<int> e1(b1.n), e2(b1.n), ix1(b1.n, 0), ix2(b1.n, 0);
      auto advance = [&](std::vector<int>& ix, std::vector<int>& e,
                         std::vector<std::vector<int>> const& cand) {
        for (int x = b1.n - 1; x >= 0; --x) {
          if (++ix[x] < static_cast<int>(cand[x].size())) {
            e[x] = cand[x][ix[x]];
            return true;
          }
          ix[x] = 0;
          e[x] = cand[x][0];
        }
        return false;
      };
      for (int x = 0; x < b1.n; ++x) e1[x] = cand1[x][0];
      do {
        std::fill(ix2.begin(), ix2.end(), 0);
        for (int x = 0; x < b1.n; ++x) e2[x] = cand2[x][0];
        do {
          if (gtralex2_ok(b1, b2, f1.map, f2.map, e1, e2))
            out.push_back(AlexTransformation{f1, f2, e1, e2});
        } while (advance(ix2, e2, cand2));
      } while (advance(ix1, e1, cand1));
    }
  return out;
}

}  // namespace

InterchangeReport interchange_search(InterchangeBounds const& bounds) {
  InterchangeReport rep;
  rep.bounds = bounds;
  rep.boxtimes_interchange.identity = "horizontal interchange (boxtimes)";
  rep.boxdot_interchange.identity = "horizontal interchange (boxdot)";
  rep.boxtimes_vs_boxdot.identity = "boxtimes equals boxdot";
  rep.lemma_pairing.identity = "pairing (eta1, eta3) of chainable transformations";

  std::vector<AlexandroffGroupement> comps;
  for (int n = 1; n <= bounds.n; ++n) {
    EnumerationQuery q;
    q.n = n;
    for (auto const& g : enum_structures(q)) comps.push_back(complete(g));
  }
  int const gcount = static_cast<int>(comps.size());
  rep.num_base_groupements = gcount;

  std::vector<std::vector<AlexTransformation>> fam(
      static_cast<std::size_t>(gcount) * gcount);
  for (int i = 0; i < gcount; ++i)
    for (int j = 0; j < gcount; ++j) {
      fam[i * gcount + j] = alex_transformations(comps[i], comps[j]);
      rep.num_transformations += fam[i * gcount + j].size();
    }

  unsigned long long budget = 0;
  auto spend = [&](unsigned long long k) {
    budget += k;
    if (budget > bounds.quad_cap) throw std::runtime_error("interchange search cap exceeded");
  };
  auto record = [&](IdentitySearchResult& r, InterchangeWitness w) {
    ++r.violations;
    if (r.witnesses.size() < bounds.witness_cap) r.witnesses.push_back(std::move(w));
  };

  // Vertically chainable ordered pairs within one family, by structural f
  // match, with the composite eta maps precomputed (the f components of every
  // quantity compared below agree by construction, so the scan only needs
  // eta vectors).
  struct Chain {
    int lo, hi;  // indices into the family: hi # lo
    std::vector<int> ceta1, ceta2;
  };
  auto chains_of = [&](std::vector<AlexTransformation> const& ts, FiniteGroupement const& mid) {
    std::map<std::vector<int>, std::vector<int>> by_f1;
    for (std::size_t i = 0; i < ts.size(); ++i)
      by_f1[flat_key(ts[i].f1)].push_back(static_cast<int>(i));
    std::vector<Chain> out;
    for (std::size_t lo = 0; lo < ts.size(); ++lo) {
      auto const it = by_f1.find(flat_key(ts[lo].f2));
      if (it == by_f1.end()) continue;
      for (int hi : it->second) {
        Chain c{static_cast<int>(lo), hi, {}, {}};
        int const n1 = static_cast<int>(ts[lo].eta1.size());
        c.ceta1.resize(n1);
        c.ceta2.resize(n1);
        for (int x = 0; x < n1; ++x) {
          c.ceta1[x] = mid.comp[ts[hi].eta1[x]][ts[lo].eta1[x]];
          c.ceta2[x] = mid.comp[ts[hi].eta2[x]][ts[lo].eta2[x]];
        }
        out.push_back(std::move(c));
      }
    }
    return out;
  };
  std::vector<std::vector<Chain>> chains(fam.size());
  for (int i = 0; i < gcount; ++i)
    for (int j = 0; j < gcount; ++j)
      chains[i * gcount + j] = chains_of(fam[i * gcount + j], comps[j].base);

  for (int i = 0; i < gcount; ++i)
    for (int j = 0; j < gcount; ++j) {
      auto const& tij = fam[i * gcount + j];
      for (int k = 0; k < gcount; ++k) {
        auto const& tjk = fam[j * gcount + k];
        auto const& c3 = comps[k].base.comp;
        int const n1 = comps[i].base.n;
        std::size_t const na = tij.size();
        std::size_t const nb = tjk.size();

        // Per-pair horizontal composite eta maps, laid out flat:
        // [((b*na + a)*2 + which_eta)*n1 + x].
        std::vector<int> hbt(nb * na * 2 * n1), hbd(nb * na * 2 * n1);
        for (std::size_t b = 0; b < nb; ++b)
          for (std::size_t a = 0; a < na; ++a) {
            int* bt = &hbt[(b * na + a) * 2 * n1];
            int* bd = &hbd[(b * na + a) * 2 * n1];
            for (int x = 0; x < n1; ++x) {
              bt[x] = c3[tjk[b].f2.map[tij[a].eta1[x]]][tjk[b].eta1[tij[a].f1.map[x]]];
              bt[n1 + x] = c3[tjk[b].f2.map[tij[a].eta2[x]]][tjk[b].eta2[tij[a].f1.map[x]]];
              bd[x] = c3[tjk[b].eta1[tij[a].f2.map[x]]][tjk[b].f1.map[tij[a].eta1[x]]];
              bd[n1 + x] = c3[tjk[b].eta2[tij[a].f2.map[x]]][tjk[b].f1.map[tij[a].eta2[x]]];
            }
          }

        // boxtimes vs boxdot on single horizontally composable pairs. The f
        // components of the two composites agree by construction, so only
        // the eta maps are compared.
        spend(static_cast<unsigned long long>(na) * nb);
        for (std::size_t a = 0; a < na; ++a)
          for (std::size_t b = 0; b < nb; ++b) {
            ++rep.boxtimes_vs_boxdot.checked;
            std::size_t const off = (b * na + a) * 2 * n1;
            if (!std::equal(hbt.begin() + off, hbt.begin() + off + 2 * n1, hbd.begin() + off))
              record(rep.boxtimes_vs_boxdot,
                     {i, j, k, {static_cast<int>(a), static_cast<int>(b)}});
          }

        // Pairing of chainable transformations: well-typed only on equal
        // carriers with matching middle eta maps.
        if (comps[i].base.n == comps[j].base.n && comps[j].base.n == comps[k].base.n) {
          spend(static_cast<unsigned long long>(tij.size()) * tjk.size());
          for (std::size_t a = 0; a < tij.size(); ++a)
            for (std::size_t b = 0; b < tjk.size(); ++b) {
              if (tij[a].eta2 != tjk[b].eta1) continue;
              ++rep.lemma_pairing.checked;
              AlexTransformation cand{compose_gmor(tjk[b].f1, tij[a].f1),
                                      compose_gmor(tjk[b].f2, tij[a].f2), tij[a].eta1,
                                      tjk[b].eta2};
              bool ok = true;
              auto const& b1 = cand.f1.src;
              auto const& b2 = cand.f1.dst;
              for (int x = 0; x < b1.n && ok; ++x)
                ok = gtralex1_ok(b2, comps[k].alpha, cand.f1(x), cand.f2(x), cand.eta1[x],
                                 cand.eta2[x]);
              if (ok) ok = gtralex2_ok(b1, b2, cand.f1.map, cand.f2.map, cand.eta1, cand.eta2);
              if (!ok)
                record(rep.lemma_pairing,
                       {i, j, k, {static_cast<int>(a), static_cast<int>(b)}});
            }
        }

        // Interchange on quadruples: vertical chains on each side. The f
        // components of each side agree by construction (the vertical
        // composite keeps the lower f1 and the upper f2), so only the eta
        // maps of the horizontal-of-vertical vs vertical-of-horizontal
        // composites are compared.
        auto const& cij = chains[i * gcount + j];
        auto const& cjk = chains[j * gcount + k];
        spend(2ull * cij.size() * cjk.size());
        for (auto const& p : cij) {
          std::vector<int> const& pf1 = tij[p.lo].f1.map;
          std::vector<int> const& pf2 = tij[p.hi].f2.map;
          for (auto const& q : cjk) {
            std::vector<int> const& qf1 = tjk[q.lo].f1.map;
            std::vector<int> const& qf2 = tjk[q.hi].f2.map;
            int const* rhi_bt = &hbt[(static_cast<std::size_t>(q.hi) * na + p.hi) * 2 * n1];
            int const* rlo_bt = &hbt[(static_cast<std::size_t>(q.lo) * na + p.lo) * 2 * n1];
            int const* rhi_bd = &hbd[(static_cast<std::size_t>(q.hi) * na + p.hi) * 2 * n1];
            int const* rlo_bd = &hbd[(static_cast<std::size_t>(q.lo) * na + p.lo) * 2 * n1];
            ++rep.boxtimes_interchange.checked;
            bool ok = true;
            for (int x = 0; x < n1 && ok; ++x)
              ok = c3[qf2[p.ceta1[x]]][q.ceta1[pf1[x]]] == c3[rhi_bt[x]][rlo_bt[x]] &&
                   c3[qf2[p.ceta2[x]]][q.ceta2[pf1[x]]] == c3[rhi_bt[n1 + x]][rlo_bt[n1 + x]];
            if (!ok)
              record(rep.boxtimes_interchange, {i, j, k, {p.lo, p.hi, q.lo, q.hi}});
            ++rep.boxdot_interchange.checked;
            ok = true;
            for (int x = 0; x < n1 && ok; ++x)
              ok = c3[q.ceta1[pf2[x]]][qf1[p.ceta1[x]]] == c3[rhi_bd[x]][rlo_bd[x]] &&
                   c3[q.ceta2[pf2[x]]][qf1[p.ceta2[x]]] == c3[rhi_bd[n1 + x]][rlo_bd[n1 + x]];
            if (!ok)
              record(rep.boxdot_interchange, {i, j, k, {p.lo, p.hi, q.lo, q.hi}});
          }
        }
      }
    }
  return rep;
}

}  // namespace grpt
