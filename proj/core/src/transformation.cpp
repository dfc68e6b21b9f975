#include "grpt/transformation.hpp"

#include "grpt/key.hpp"

namespace grpt {

std::vector<int> flat_key(FiniteGroupement const& g) {
  std::vector<int> key{g.n};
  key.insert(key.end(), g.s.begin(), g.s.end());
  key.insert(key.end(), g.t.begin(), g.t.end());
  for (auto const& row : g.comp) key.insert(key.end(), row.begin(), row.end());
  return key;
}

std::vector<int> flat_key(GMorphism const& f) {
  auto key = flat_key(f.src);
  auto const d = flat_key(f.dst);
  key.insert(key.end(), d.begin(), d.end());
  key.insert(key.end(), f.map.begin(), f.map.end());
  return key;
}

std::vector<int> flat_key(GTransformation const& t) {
  auto key = flat_key(t.f1);
  auto const k2 = flat_key(t.f2);
  key.insert(key.end(), k2.begin(), k2.end());
  key.insert(key.end(), t.eta1.begin(), t.eta1.end());
  key.insert(key.end(), t.eta2.begin(), t.eta2.end());
  return key;
}

void validate_shape(GTransformation const& t) {
  validate_shape(t.f1);
  validate_shape(t.f2);
  if (t.f1.src != t.f2.src || t.f1.dst != t.f2.dst)
    throw std::invalid_argument("f1 and f2 must be parallel g-morphisms");
  int const n1 = t.f1.src.n;
  int const n2 = t.f1.dst.n;
  if (static_cast<int>(t.eta1.size()) != n1 || static_cast<int>(t.eta2.size()) != n1)
    throw std::invalid_argument("eta maps must have one entry per B1 element");
  for (int v : t.eta1)
    if (v < 0 || v >= n2) throw std::invalid_argument("eta1 entry out of range");
  for (int v : t.eta2)
    if (v < 0 || v >= n2) throw std::invalid_argument("eta2 entry out of range");
}

AxiomReport check_gtrans(GTransformation const& t) {
  AxiomReport report;
  auto const& b1 = t.f1.src;
  auto const& b2 = t.f1.dst;
  int const n1 = b1.n;

  // GTRANS 1: s2 eta1 = s2 f1, t2 eta1 = s2 f2, s2 eta2 = t2 f1, t2 eta2 = t2 f2.
  {
    std::optional<Violation> v;
    for (int x = 0; x < n1 && !v; ++x) {
      if (b2.s[t.eta1[x]] != b2.s[t.f1(x)])
        v = Violation{{x}, "s2(eta1(x)) = " + std::to_string(b2.s[t.eta1[x]]),
                      "s2(f1(x)) = " + std::to_string(b2.s[t.f1(x)])};
      else if (b2.t[t.eta1[x]] != b2.s[t.f2(x)])
        v = Violation{{x}, "t2(eta1(x)) = " + std::to_string(b2.t[t.eta1[x]]),
                      "s2(f2(x)) = " + std::to_string(b2.s[t.f2(x)])};
      else if (b2.s[t.eta2[x]] != b2.t[t.f1(x)])
        v = Violation{{x}, "s2(eta2(x)) = " + std::to_string(b2.s[t.eta2[x]]),
                      "t2(f1(x)) = " + std::to_string(b2.t[t.f1(x)])};
      else if (b2.t[t.eta2[x]] != b2.t[t.f2(x)])
        v = Violation{{x}, "t2(eta2(x)) = " + std::to_string(b2.t[t.eta2[x]]),
                      "t2(f2(x)) = " + std::to_string(b2.t[t.f2(x)])};
    }
    if (v)
      report.add_fail("GTRANS 1", *v);
    else
      report.add_pass("GTRANS 1");
  }

  // GTRANS 2: on composable pairs, f2(x)#eta1(x) = eta2(x)#f1(x) and eta1(x) = eta2(y).
  {
    std::optional<Violation> v;
    for (int x = 0; x < n1 && !v; ++x)
      for (int y = 0; y < n1 && !v; ++y) {
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
      report.add_fail("GTRANS 2", *v);
    else
      report.add_pass("GTRANS 2");
  }

  // Derived relations (eta1 = eta2 s1, eta2 = eta1 t1, eta1 = eta1 s1,
  // eta2 = eta2 t1): a consequence of GTRANS 2, reported as a cross-check.
  {
    std::optional<Violation> v;
    for (int x = 0; x < n1 && !v; ++x) {
      if (t.eta1[x] != t.eta2[b1.s[x]] || t.eta2[x] != t.eta1[b1.t[x]] ||
          t.eta1[x] != t.eta1[b1.s[x]] || t.eta2[x] != t.eta2[b1.t[x]])
        v = Violation{{x}, "derived eta relations at " + std::to_string(x),
                      "eta1 = eta2 s1, eta2 = eta1 t1, eta1 = eta1 s1, eta2 = eta2 t1"};
    }
    if (v)
      report.add_fail("derived relations", *v);
    else
      report.add_pass("derived relations");
  }

  return report;
}

namespace {

bool gtrans2_holds(GTransformation const& t, bool primed) {
  auto const& b1 = t.f1.src;
  auto const& b2 = t.f1.dst;
  for (int x = 0; x < b1.n; ++x)
    for (int y = 0; y < b1.n; ++y) {
      if (!b1.composable(x, y)) continue;
      int const at = primed ? y : x;
      if (b2.comp[t.f2(at)][t.eta1[at]] != b2.comp[t.eta2[at]][t.f1(at)]) return false;
      if (t.eta1[x] != t.eta2[y]) return false;
    }
  return true;
}

}  // namespace

bool check_gtrans2_prime_equiv(GTransformation const& t) {
  return gtrans2_holds(t, false) == gtrans2_holds(t, true);
}

GTransformation sigma1(GMorphism const& f) {
  if (!is_star(f.dst)) throw NotStarError("sigma1/tau1 need a star-groupement destination");
  GTransformation out{f, f, std::vector<int>(f.src.n), std::vector<int>(f.src.n)};
  for (int x = 0; x < f.src.n; ++x) {
    out.eta1[x] = f.dst.s[f(x)];
    out.eta2[x] = f.dst.t[f(x)];
  }
  return out;
}

GTransformation sigma1(GTransformation const& t) { return sigma1(t.f1); }
GTransformation tau1(GTransformation const& t) { return sigma1(t.f2); }

GTransformation otimes(GTransformation const& t2, GTransformation const& t1) {
  if (t2.f1 != t1.f2) return t1;
  auto const& b2 = t1.f1.dst;
  GTransformation out{t1.f1, t2.f2, std::vector<int>(t1.eta1.size()),
                      std::vector<int>(t1.eta2.size())};
  for (std::size_t x = 0; x < t1.eta1.size(); ++x) {
    out.eta1[x] = b2.comp[t2.eta1[x]][t1.eta1[x]];
    out.eta2[x] = b2.comp[t2.eta2[x]][t1.eta2[x]];
  }
  return out;
}

GTransformation whisker_right(GTransformation const& t, GMorphism const& f) {
  if (f.dst != t.f1.src) throw std::invalid_argument("whisker_right endpoint mismatch");
  GTransformation out{compose_gmor(t.f1, f), compose_gmor(t.f2, f),
                      std::vector<int>(f.src.n), std::vector<int>(f.src.n)};
  for (int x = 0; x < f.src.n; ++x) {
    out.eta1[x] = t.eta1[f(x)];
    out.eta2[x] = t.eta2[f(x)];
  }
  return out;
}

GTransformation whisker_left(GMorphism const& g, GTransformation const& t) {
  if (t.f1.dst != g.src) throw std::invalid_argument("whisker_left endpoint mismatch");
  GTransformation out{compose_gmor(g, t.f1), compose_gmor(g, t.f2),
                      std::vector<int>(t.eta1.size()), std::vector<int>(t.eta2.size())};
  for (std::size_t x = 0; x < t.eta1.size(); ++x) {
    out.eta1[x] = g(t.eta1[x]);
    out.eta2[x] = g(t.eta2[x]);
  }
  return out;
}

GTransformation sigma0(GTransformation const& t) {
  auto const id = identity_morphism(t.f1.src);
  return GTransformation{id, id, t.f1.src.s, t.f1.src.t};
}

GTransformation tau0(GTransformation const& t) {
  auto const id = identity_morphism(t.f1.dst);
  return GTransformation{id, id, t.f1.dst.s, t.f1.dst.t};
}

GTransformation boxtimes(GTransformation const& t2, GTransformation const& t1) {
  if (t2.f1.src != t1.f1.dst) return t1;
  return otimes(whisker_left(t2.f2, t1), whisker_right(t2, t1.f1));
}

GTransformation boxdot(GTransformation const& t2, GTransformation const& t1) {
  if (t2.f1.src != t1.f1.dst) return t1;
  return otimes(whisker_right(t2, t1.f2), whisker_left(t2.f1, t1));
}

std::vector<int> to_single(GTransformation const& t) { return t.eta1; }

GTransformation from_single(std::vector<int> const& eta, GMorphism const& f1,
                            GMorphism const& f2) {
  if (f1.src != f2.src || f1.dst != f2.dst)
    throw std::invalid_argument("from_single: f1 and f2 must be parallel");
  if (!check_gmor(f1).ok() || !check_gfonc(f1) || !check_gmor(f2).ok() || !check_gfonc(f2))
    throw std::invalid_argument("from_single: f1 and f2 must be g-foncteurs");
  auto const& b1 = f1.src;
  auto const& b2 = f1.dst;
  if (static_cast<int>(eta.size()) != b1.n)
    throw std::invalid_argument("from_single: eta must have one entry per B1 element");
  for (int x = 0; x < b1.n; ++x)
    if (b2.s[eta[b1.s[x]]] != b2.s[f1(x)] || b2.t[eta[b1.s[x]]] != b2.s[f2(x)])
      throw std::invalid_argument("from_single: endpoint condition s2·eta·s1 = s2·f1 fails");
  for (int x = 0; x < b1.n; ++x)
    if (eta[x] != eta[b1.s[x]])
      throw std::invalid_argument("from_single: eta = eta∘s1 fails");
  for (int x = 0; x < b1.n; ++x)
    if (b2.comp[f2(x)][eta[b1.s[x]]] != b2.comp[eta[b1.t[x]]][f1(x)])
      throw std::invalid_argument("from_single: naturality square fails");
  GTransformation out{f1, f2, eta, std::vector<int>(b1.n)};
  for (int x = 0; x < b1.n; ++x) out.eta2[x] = eta[b1.t[x]];
  return out;
}

}  // namespace grpt
