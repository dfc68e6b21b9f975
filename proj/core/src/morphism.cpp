#include "grpt/morphism.hpp"

#include <map>
#include <stdexcept>

#include "grpt/family.hpp"
#include "grpt/key.hpp"

namespace grpt {

GMorphism identity_morphism(FiniteGroupement const& g) {
  GMorphism f{g, g, std::vector<int>(g.n)};
  for (int x = 0; x < g.n; ++x) f.map[x] = x;
  return f;
}

void validate_shape(GMorphism const& f) {
  validate_shape(f.src);
  validate_shape(f.dst);
  if (static_cast<int>(f.map.size()) != f.src.n)
    throw std::invalid_argument("morphism map must have one entry per source element");
  for (int v : f.map)
    if (v < 0 || v >= f.dst.n) throw std::invalid_argument("morphism map entry out of range");
}

AxiomReport check_gmor(GMorphism const& f) {
  AxiomReport report;
  auto const& a = f.src;
  auto const& b = f.dst;
  std::optional<Violation> v;
  for (int x = 0; x < a.n && !v; ++x)
    for (int y = 0; y < a.n && !v; ++y) {
      if (!a.composable(x, y)) continue;
      if (b.s[f(x)] != b.t[f(y)])
        v = Violation{{x, y}, "s2(f(x)) = " + std::to_string(b.s[f(x)]),
                      "t2(f(y)) = " + std::to_string(b.t[f(y)])};
      else if (f(a.comp[x][y]) != b.comp[f(x)][f(y)])
        v = Violation{{x, y}, "f(x#y) = " + std::to_string(f(a.comp[x][y])),
                      "f(x)#f(y) = " + std::to_string(b.comp[f(x)][f(y)])};
    }
  if (v)
    report.add_fail("GMOR", *v);
  else
    report.add_pass("GMOR");
  return report;
}

bool check_gfonc(GMorphism const& f) {
  for (int x = 0; x < f.src.n; ++x)
    if (f(f.src.s[x]) != f.dst.s[f(x)] || f(f.src.t[x]) != f.dst.t[f(x)]) return false;
  return true;
}

GMorphism compose_gmor(GMorphism const& f2, GMorphism const& f1) {
  if (f2.src != f1.dst) return f1;
  GMorphism out{f1.src, f2.dst, std::vector<int>(f1.src.n)};
  for (int x = 0; x < f1.src.n; ++x) out.map[x] = f2(f1(x));
  return out;
}

GMorphism dual_gmor(GMorphism const& f) {
  return GMorphism{dual(f.src), dual(f.dst), f.map};
}

std::vector<GMorphism> close_under_composition(std::vector<GMorphism> const& fs,
                                               ClosureOptions const& opts) {
  std::vector<GMorphism> family;
  std::map<std::vector<int>, int> index;
  auto add = [&](GMorphism const& f) {
    auto [it, inserted] = index.try_emplace(flat_key(f), static_cast<int>(family.size()));
    if (inserted) family.push_back(f);
    return it->second;
  };
  for (auto const& f : fs) add(f);

  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family.size() > opts.cap) throw std::runtime_error("morphism closure cap exceeded");
    // Compose the newly reached element against everything seen so far, both ways.
    for (std::size_t j = 0; j <= i; ++j) {
      add(compose_gmor(family[i], family[j]));
      add(compose_gmor(family[j], family[i]));
    }
  }
  if (family.size() > opts.cap) throw std::runtime_error("morphism closure cap exceeded");
  return family;
}

AxiomReport verify_morphism_category(std::vector<FiniteGroupement> const& gs,
                                     std::vector<GMorphism> const& fs,
                                     ClosureOptions const& opts) {
  std::map<std::vector<int>, int> known_groupement;
  for (std::size_t i = 0; i < gs.size(); ++i)
    known_groupement.try_emplace(flat_key(gs[i]), static_cast<int>(i));

  std::map<std::vector<int>, bool> has_identity;
  for (auto const& f : fs) {
    if (!known_groupement.contains(flat_key(f.src)) || !known_groupement.contains(flat_key(f.dst)))
      throw std::invalid_argument("morphism endpoints must be listed in gs");
    if (f.src == f.dst && f == identity_morphism(f.src)) has_identity[flat_key(f.src)] = true;
  }
  for (auto const& g : gs)
    if (!has_identity[flat_key(g)])
      throw std::invalid_argument("fs must contain the identity g-morphism of every groupement");

  auto family = close_under_composition(fs, opts);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < family.size(); ++i)
    index.emplace(flat_key(family[i]), static_cast<int>(i));
  auto find = [&](GMorphism const& f) { return index.at(flat_key(f)); };

  int const n = static_cast<int>(family.size());
  std::map<std::pair<int, int>, int> comp_memo;
  auto s = [&](int i) { return find(identity_morphism(family[i].src)); };
  auto t = [&](int i) { return find(identity_morphism(family[i].dst)); };
  auto comp = [&](int i, int j) {
    auto [it, inserted] = comp_memo.try_emplace({i, j}, -1);
    if (inserted) it->second = find(compose_gmor(family[i], family[j]));
    return it->second;
  };
  return check_family_axioms(n, s, t, comp, /*check_cat3=*/true);
}

}  // namespace grpt
