#include <map>
#include <set>
#include <sstream>

#include "grpt/alexandroff.hpp"
#include "grpt/enumerate.hpp"
#include "grpt/family.hpp"
#include "grpt/key.hpp"
#include "grpt/moore.hpp"
#include "grpt/two_groupement.hpp"

namespace grpt {

namespace {

std::vector<FiniteGroupement> structures_up_to(int n, StructureClass cls, int bound = 4) {
  std::vector<FiniteGroupement> out;
  for (int m = 1; m <= n; ++m) {
    EnumerationQuery q;
    q.n = m;
    q.cls = cls;
    q.bound = bound;
    auto v = enum_structures(q);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

/// All transformation families between star groupements, indexed per
/// ordered endpoint pair.
struct StarUniverse {
  std::vector<FiniteGroupement> stars;
  // trans[i*stars.size()+j]: all g-transformations between all morphism
  // pairs stars[i] -> stars[j].
  std::vector<std::vector<GTransformation>> trans;

  explicit StarUniverse(int n) {
    stars = structures_up_to(n, StructureClass::Star);
    trans.resize(stars.size() * stars.size());
    for (std::size_t i = 0; i < stars.size(); ++i)
      for (std::size_t j = 0; j < stars.size(); ++j) {
        auto const fs = enum_morphisms(stars[i], stars[j]);
        auto& bucket = trans[i * stars.size() + j];
        for (auto const& f1 : fs)
          for (auto const& f2 : fs) {
            auto v = enum_transformations(f1, f2);
            bucket.insert(bucket.end(), v.begin(), v.end());
          }
      }
  }

  std::vector<GTransformation> all() const {
    std::vector<GTransformation> out;
    for (auto const& b : trans) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
};

/// GR 1-3 (optionally CAT 3) of a finite transformation family under the
/// given source/target/composition operators, by structural indexing.
AxiomReport family_report(std::vector<GTransformation> const& family,
                          std::function<GTransformation(GTransformation const&)> const& sf,
                          std::function<GTransformation(GTransformation const&)> const& tf,
                          std::function<GTransformation(GTransformation const&,
                                                        GTransformation const&)> const& cf,
                          bool check_cat3, bool* closed = nullptr) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < family.size(); ++i)
    index.emplace(flat_key(family[i]), static_cast<int>(i));
  bool ok = true;
  auto find = [&](GTransformation const& t) {
    auto const it = index.find(flat_key(t));
    if (it == index.end()) {
      ok = false;
      return 0;
    }
    return it->second;
  };
  std::map<std::pair<int, int>, int> memo;
  auto rep = check_family_axioms(
      static_cast<int>(family.size()), [&](int i) { return find(sf(family[i])); },
      [&](int i) { return find(tf(family[i])); },
      [&](int i, int j) {
        auto [it, inserted] = memo.try_emplace({i, j}, -1);
        if (inserted) it->second = find(cf(family[i], family[j]));
        return it->second;
      },
      check_cat3);
  if (closed) *closed = ok;
  if (!ok) rep.add_fail("closure", Violation{{}, "an operator left the family", ""});
  return rep;
}

/// All monoid structures (table + neutral element) on m elements.
std::vector<FiniteMonoid> all_monoids(int m) {
  std::vector<FiniteMonoid> out;
  std::vector<int> flat(static_cast<std::size_t>(m) * m, 0);
  auto next = [&]() {
    for (int i = static_cast<int>(flat.size()) - 1; i >= 0; --i) {
      if (++flat[i] < m) return true;
      flat[i] = 0;
    }
    return false;
  };
  do {
    auto tab = [&](int x, int y) { return flat[x * m + y]; };
    bool assoc = true;
    for (int x = 0; x < m && assoc; ++x)
      for (int y = 0; y < m && assoc; ++y)
        for (int z = 0; z < m && assoc; ++z)
          assoc = tab(tab(x, y), z) == tab(x, tab(y, z));
    if (!assoc) continue;
    for (int e = 0; e < m; ++e) {
      bool neutral = true;
      for (int x = 0; x < m && neutral; ++x) neutral = tab(e, x) == x && tab(x, e) == x;
      if (!neutral) continue;
      FiniteMonoid mo{m, std::vector<std::vector<int>>(m, std::vector<int>(m)), e};
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) mo.table[x][y] = tab(x, y);
      out.push_back(std::move(mo));
    }
  } while (next());
  return out;
}

/// All topologies on a ground set of m points (m <= 3).
std::vector<FiniteTopology> all_topologies(int m) {
  std::vector<FiniteTopology> out;
  std::uint32_t const full = m == 0 ? 0u : (1u << m) - 1u;
  std::uint32_t const families = 1u << (full + 1);
  for (std::uint32_t fam = 0; fam < families; ++fam) {
    if (!(fam & 1u) || !(fam & (1u << full))) continue;  // must contain {} and X
    FiniteTopology t{m, {}};
    for (std::uint32_t o = 0; o <= full; ++o)
      if (fam & (1u << o)) t.opens.push_back(o);
    bool closed = true;
    auto has = [&](std::uint32_t o) { return (fam & (1u << o)) != 0; };
    for (auto a : t.opens)
      for (auto b : t.opens)
        if (!has(a | b) || !has(a & b)) {
          closed = false;
          break;
        }
    if (closed) out.push_back(std::move(t));
  }
  return out;
}

int count_alexis_candidates(FiniteGroupement const& g) {
  int count = 0;
  for (int a = 0; a < g.n; ++a) {
    if (g.s[a] != a || g.t[a] != a) continue;
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x) {
      if (x != a && (g.s[x] == a || g.t[x] == a)) ok = false;
      if (g.comp[x][a] != x || g.comp[a][x] != x) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

SuiteReport theorem_suite(int n) {
  SuiteReport report;
  report.n = n;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.results.push_back({std::move(name), pass, std::move(detail)});
  };

  auto const all = structures_up_to(n, StructureClass::Groupement);
  auto const cats = structures_up_to(n, StructureClass::Category);
  int const nm = std::min(n, 2);  // bound for morphism/transformation batteries
  auto const small = structures_up_to(nm, StructureClass::Groupement);

  // --- finite-core -------------------------------------------------------
  {
    bool pass = true;
    std::string detail;
    for (auto const& g : all)
      if (!check_axioms(g).ok()) {
        pass = false;
        detail = "a streamed structure fails its own axioms";
      }
    std::set<std::vector<int>> pruned, naive;
    for (int m = 1; m <= std::min(n, 2); ++m) {
      EnumerationQuery q;
      q.n = m;
      for (auto const& g : enum_structures(q)) pruned.insert(flat_key(g));
      for (auto const& g : enum_structures_naive(m, true)) naive.insert(flat_key(g));
    }
    if (pruned != naive) {
      pass = false;
      detail = "pruned and naive enumerations disagree";
    }
    add("enumeration self-consistency and naive cross-check", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (auto const& g : cats) {
      auto const ids = identities(g);
      if (ids != image_of(g.s) || ids != image_of(g.t) || ids != fixed_points_of(g.s) ||
          ids != fixed_points_of(g.t)) {
        pass = false;
        detail = "category with identities != Im/Fix";
      }
    }
    add("category identities equal Im(s), Im(t), Fix(s), Fix(t)", pass, detail);
  }
  {
    bool pass = true;
    for (auto const& g : all) {
      auto const im = image_of(g.s);
      if (im != image_of(g.t) || im != fixed_points_of(g.s) || im != fixed_points_of(g.t))
        pass = false;
    }
    add("Im(s) = Im(t) = Fix(s) = Fix(t) on every groupement", pass);
  }
  {
    // ({0,1}, AND, constant 0): a groupement whose identity set is not Fix(s).
    FiniteGroupement w{2, {0, 0}, {0, 0}, {{0, 0}, {0, 1}}};
    bool const pass = check_axioms(w).ok() && identities(w) == std::set<int>{1} &&
                      fixed_points_of(w.s) == std::set<int>{0};
    add("witness: identities differ from Fix(s) without CAT 3", pass);
  }
  {
    bool pass = true;
    for (auto const& g : all) {
      if (!(dual(dual(g)) == g)) pass = false;
      if (check_axioms(dual(g)).ok() != check_axioms(g).ok()) pass = false;
      if (is_category(dual(g)) != is_category(g) || is_star(dual(g)) != is_star(g)) pass = false;
    }
    add("duality is an involution preserving verdicts", pass);
  }
  {
    bool pass = true;
    std::set<std::vector<int>> seen;
    for (auto const& g : all) {
      if (!(canonicalize_comp(g) == g)) pass = false;  // stream is canonical
      if (!presque_egal(g, canonicalize_comp(g))) pass = false;
      if (!seen.insert(flat_key(g)).second) pass = false;  // no duplicates
    }
    add("canonical stream: idempotent, class-invariant, duplicate-free", pass);
  }
  {
    bool pass = true;
    std::string detail;
    for (auto const& g : cats) {
      try {
        auto const c = to_classic(g);
        validate(c);
        if (!presque_egal(from_classic(c), g)) {
          pass = false;
          detail = "round trip broke presque-égalité";
        }
      } catch (std::exception const& e) {
        pass = false;
        detail = e.what();
      }
    }
    add("classic-category round trip", pass, detail);
  }

  // --- morphisms ---------------------------------------------------------
  {
    std::vector<GMorphism> fs, foncs;
    for (auto const& a : small)
      for (auto const& b : small)
        for (auto const& f : enum_morphisms(a, b)) {
          fs.push_back(f);
          if (check_gfonc(f)) foncs.push_back(f);
        }
    bool pass = true;
    std::string detail;
    try {
      if (!verify_morphism_category(small, fs).ok()) pass = false;
      if (!verify_morphism_category(small, foncs).ok()) pass = false;
    } catch (std::exception const& e) {
      pass = false;
      detail = e.what();
    }
    add("g-morphisms and g-foncteurs close into a category", pass, detail);

    bool dual_pass = true;
    for (auto const& f : fs)
      if (!check_gmor(dual_gmor(f)).ok()) dual_pass = false;
    add("duals of g-morphisms stay g-morphisms", dual_pass);
  }

  // --- transformations ---------------------------------------------------
  StarUniverse uni(nm);
  {
    bool pass = true;
    bool cat3_fails_somewhere = false;
    std::string where;
    for (std::size_t i = 0; i < uni.stars.size() && pass; ++i)
      for (std::size_t j = 0; j < uni.stars.size() && pass; ++j) {
        auto const& family = uni.trans[i * uni.stars.size() + j];
        if (family.empty()) continue;
        auto const rep = family_report(
            family, [](GTransformation const& t) { return sigma1(t); },
            [](GTransformation const& t) { return tau1(t); },
            [](GTransformation const& a, GTransformation const& b) { return otimes(a, b); },
            true);
        for (auto const& c : rep.checks) {
          if (c.axiom == "CAT 3") {
            if (!c.pass) {
              cat3_fails_somewhere = true;
              where = "family " + std::to_string(i) + "->" + std::to_string(j);
            }
          } else if (!c.pass) {
            pass = false;
          }
        }
      }
    add("vertical transformation structures are groupements", pass);
    // The one-element universe collapses too far to exhibit the failure.
    if (n >= 2)
      add("witness: vertical composition is not a category", cat3_fails_somewhere, where);
    else
      add("witness: vertical composition is not a category", true, "bound too small for a witness");
  }
  {
    auto const family = uni.all();
    bool pass = true;
    using Comp = GTransformation (*)(GTransformation const&, GTransformation const&);
    for (Comp comp : {Comp{boxtimes}, Comp{boxdot}}) {
      auto const rep = family_report(
          family, [](GTransformation const& t) { return sigma0(t); },
          [](GTransformation const& t) { return tau0(t); },
          std::function<GTransformation(GTransformation const&, GTransformation const&)>(comp),
          false);
      if (!rep.ok()) pass = false;
    }
    add("horizontal transformation structures are groupements", pass);

    bool rel = true;
    for (auto const& t : family) {
      auto const s0 = sigma0(t), t0 = tau0(t), s1t = sigma1(t), t1t = tau1(t);
      // Prop: the eight operator relations among sigma/tau.
      if (!(sigma0(s1t) == s0 && sigma0(t1t) == s0 && tau0(s1t) == t0 && tau0(t1t) == t0 &&
            sigma1(s0) == s0 && sigma1(t0) == t0 && tau1(s0) == s0 && tau1(t0) == t0))
        rel = false;
      // The four commutations that follow from the eight relations.
      if (!(sigma0(s1t) == sigma1(s0) && tau0(t1t) == tau1(t0) && tau0(s1t) == sigma1(t0) &&
            sigma0(t1t) == tau1(s0)))
        rel = false;
    }
    add("sigma/tau operator relations", rel);
  }
  {
    // GTRANS 2 and its primed variant agree on every GTRANS 1-satisfying
    // candidate pair over star endpoints.
    bool pass = true;
    for (std::size_t i = 0; i < uni.stars.size(); ++i)
      for (std::size_t j = 0; j < uni.stars.size(); ++j) {
        auto const fs = enum_morphisms(uni.stars[i], uni.stars[j]);
        for (auto const& f1 : fs)
          for (auto const& f2 : fs) {
            int const n1 = f1.src.n, n2 = f1.dst.n;
            std::vector<int> e1(n1, 0);
            auto bump = [&](std::vector<int>& v) {
              for (int x = n1 - 1; x >= 0; --x) {
                if (++v[x] < n2) return true;
                v[x] = 0;
              }
              return false;
            };
            do {
              std::vector<int> e2(n1, 0);
              do {
                GTransformation t{f1, f2, e1, e2};
                if (!check_gtrans(t).find("GTRANS 1")->pass) continue;
                if (!check_gtrans2_prime_equiv(t)) pass = false;
              } while (bump(e2));
            } while (bump(e1));
          }
      }
    add("GTRANS 2 equivalent to its primed form under GTRANS 1", pass);
  }
  {
    bool pass = true;
    auto const family = uni.all();
    for (auto const& t : family) {
      for (std::size_t i = 0; i < uni.stars.size(); ++i) {
        for (auto const& f : enum_morphisms(uni.stars[i], t.f1.src))
          if (!check_gtrans(whisker_right(t, f)).ok()) pass = false;
        for (auto const& g : enum_morphisms(t.f1.dst, uni.stars[i]))
          if (!check_gtrans(whisker_left(g, t)).ok()) pass = false;
      }
    }
    add("whiskering preserves g-transformations", pass);
  }
  {
    bool pass = true;
    for (auto const& t : uni.all()) {
      if (!check_gfonc(t.f1) || !check_gfonc(t.f2)) continue;
      try {
        if (!(from_single(to_single(t), t.f1, t.f2) == t)) pass = false;
      } catch (std::exception const&) {
        pass = false;
      }
    }
    add("single-map round trip on g-foncteur transformations", pass);
  }

  // --- Alexandroff -------------------------------------------------------
  {
    bool pass = true;
    for (auto const& g : all) {
      if (count_alexis_candidates(g) > 1) pass = false;
      auto const c = complete(g);
      if (count_alexis_candidates(c.base) != 1 || find_alexis(c.base) != c.alpha) pass = false;
      if (!check_axioms(c.base).ok()) pass = false;
    }
    add("alexis uniqueness and completion axioms", pass);
  }
  {
    bool pass = true;
    for (auto const& a : small) {
      if (!(tilde_functor(identity_morphism(a)) == identity_morphism(complete(a).base)))
        pass = false;
      for (auto const& b : small)
        for (auto const& f : enum_morphisms(a, b)) {
          if (!check_gmor(tilde_functor(f)).ok()) pass = false;
          for (auto const& c : small)
            for (auto const& g : enum_morphisms(b, c))
              if (!(tilde_functor(compose_gmor(g, f)) ==
                    compose_gmor(tilde_functor(g), tilde_functor(f))))
                pass = false;
        }
    }
    add("tilde construction is functorial", pass);
  }
  {
    bool pass = true;
    for (int m = 1; m <= 3; ++m)
      for (auto const& mo : all_monoids(m)) {
        auto const h = monoid_hat(mo);
        if (!check_axioms(h.base).ok() || find_alexis(h.base) != h.alpha) pass = false;
      }
    add("monoid hat construction is an Alexandroff groupement", pass);
  }
  {
    bool pass = true;
    for (int m = 1; m <= 3; ++m)
      for (auto const& t : all_topologies(m)) {
        for (auto const& ag : {topology_union_groupement(t), topology_inter_groupement(t)})
          if (!check_axioms(ag.base).ok() || find_alexis(ag.base) != ag.alpha) pass = false;
      }
    add("topology union/intersection groupements", pass);
  }
  {
    // Continuous point maps induce alexis-preserving g-morphisms by
    // preimages, for both structures.
    bool pass = true;
    for (int m1 = 1; m1 <= 2; ++m1)
      for (int m2 = 1; m2 <= 2; ++m2)
        for (auto const& t1 : all_topologies(m1))
          for (auto const& t2 : all_topologies(m2)) {
            std::vector<int> pm(m1, 0);
            auto bump = [&]() {
              for (int i = m1 - 1; i >= 0; --i) {
                if (++pm[i] < m2) return true;
                pm[i] = 0;
              }
              return false;
            };
            do {
              try {
                auto const fu = preimage_morphism_union(t1, t2, pm);
                auto const fi = preimage_morphism_inter(t1, t2, pm);
                if (!check_gmor(fu).ok() || !check_gmor(fi).ok()) pass = false;
                auto const a2 = topology_union_groupement(t2), a1 = topology_union_groupement(t1);
                if (!check_malex(fu, a2.alpha, a1.alpha)) pass = false;
              } catch (std::invalid_argument const&) {
                // not continuous: nothing to check
              }
            } while (bump());
          }
    add("open-preimage morphisms of continuous maps", pass);
  }
  {
    // An alexis escape passes GTRALEX 1 while failing GTRANS 1.
    bool witness = false;
    for (auto const& g : small) {
      auto const c = complete(g);
      auto const id = identity_morphism(c.base);
      auto const t = const_alexis_trans(id, c.alpha);
      auto const rep = check_gtralex(t);
      if (rep.find("GTRALEX 1")->pass && rep.find("GTRALEX 2")->pass &&
          !check_gtrans(t).find("GTRANS 1")->pass)
        witness = true;
    }
    add("witness: GTRALEX 1 strictly weaker than GTRANS 1", witness);
  }

  // --- 2-groupements -----------------------------------------------------
  {
    bool pass = true;
    for (int m = 1; m <= 3; ++m)
      for (auto const& t : all_topologies(m))
        if (!check_2gr(topology_2gr(t)).ok()) pass = false;
    add("topology 2-groupements", pass);
  }
  {
    bool pass = true;
    std::string detail;
    for (auto const& g : cats) {
      try {
        auto const sq = gcarres(g);
        if (!check_2gr(sq.tg).ok()) pass = false;
        if (!is_category(sq.tg.first) || !is_category(sq.tg.second)) pass = false;
      } catch (std::exception const& e) {
        pass = false;
        detail = e.what();
      }
    }
    add("commuting squares form a categorical 2-groupement", pass, detail);
  }

  // --- Moore (sampled, fixed seed) ---------------------------------------
  {
    bool pass = check_groupement_sampled(1, 2, 0, 40, 17).ok();
    for (int axis = 0; axis < 2; ++axis)
      pass = pass && check_groupement_sampled(2, 2, axis, 15, 23 + axis).ok();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
      auto const c = random_cube(rng, 2, 2, 3);
      if (!check_axis_commutation(c, 0, 1)) pass = false;
      auto const q = random_interchange_quadruple(rng, 2, 2, 0, 1);
      if (!check_interchange(q[0], q[1], q[2], q[3], 0, 1)) pass = false;
    }
    add("sampled Moore path/surface laws", pass);
    add("sampled Moore surface 2-groupement", moore_surface_2gr_sampled(10, 47).ok());
  }

  return report;
}

}  // namespace grpt
