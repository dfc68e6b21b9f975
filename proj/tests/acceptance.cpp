// Acceptance gate: runs the ten release criteria and prints one line per
// criterion with its runtime. Exit code 0 only if all criteria pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grpt/alexandroff.hpp"
#include "grpt/enumerate.hpp"
#include "grpt/io.hpp"
#include "grpt/key.hpp"
#include "grpt/moore.hpp"
#include "grpt/morphism.hpp"
#include "grpt/two_groupement.hpp"

using namespace grpt;
using json = nlohmann::json;

namespace {

std::string const fixtures = GRPT_FIXTURES_DIR;

struct Failure {
  std::string detail;
};

std::vector<std::string> notes;

void fail(std::string const& what) { throw Failure{what}; }

void require(bool ok, std::string const& what) {
  if (!ok) fail(what);
}

std::vector<FiniteGroupement> structures_up_to(int n, StructureClass cls) {
  std::vector<FiniteGroupement> out;
  for (int m = 1; m <= n; ++m) {
    EnumerationQuery q;
    q.n = m;
    q.cls = cls;
    q.bound = 4;
    for (auto& g : enum_structures(q)) out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------

void criterion_counts() {
  // Every streamed structure passes the axioms; the pruned generator agrees
  // with the naive full scan; all pinned counts reproduce bit-exactly.
  for (int n = 1; n <= 3; ++n) {
    EnumerationQuery q;
    q.n = n;
    for (auto const& g : enum_structures(q))
      require(check_axioms(g).ok(), "streamed structure fails axioms at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 2; ++n) {
    EnumerationQuery q;
    q.n = n;
    auto const pruned = enum_structures(q);
    auto const naive = enum_structures_naive(n, true);
    require(pruned.size() == naive.size(), "pruned/naive count mismatch");
    std::set<std::vector<int>> keys;
    for (auto const& g : pruned) keys.insert(flat_key(g));
    for (auto const& g : naive)
      require(keys.count(flat_key(g)) == 1, "naive structure missing from pruned stream");
  }

  std::ifstream in(fixtures + "/pinned_counts.json");
  require(in.good(), "cannot open pinned_counts.json");
  json pinned;
  in >> pinned;
  FiniteMonoid const xm{2, {{0, 1}, {1, 0}}, 0};
  FiniteMonoid const am{2, {{0, 0}, {0, 1}}, 1};
  auto const gx = from_monoid(xm, 0);
  auto const ga = from_monoid(am, 0);
  auto const idx = identity_morphism(gx);
  int verified = 0;
  for (auto const& entry : pinned["counts"]) {
    auto const& q = entry["query"];
    std::string const op = q["op"].get<std::string>();
    long long actual = -1;
    if (op == "enum_structures") {
      EnumerationQuery query;
      query.n = q["n"].get<int>();
      query.bound = 4;
      std::string const cls = q["class"].get<std::string>();
      query.cls = cls == "category"     ? StructureClass::Category
                  : cls == "star"       ? StructureClass::Star
                  : cls == "alexandroff" ? StructureClass::Alexandroff
                                         : StructureClass::Groupement;
      actual = static_cast<long long>(enum_structures(query).size());
    } else if (op == "enum_structures_naive") {
      actual = static_cast<long long>(
          enum_structures_naive(q["n"].get<int>(), q["canonical"].get<bool>()).size());
    } else if (op == "enum_two_groupements") {
      actual = static_cast<long long>(enum_two_groupements(q["n"].get<int>()).size());
    } else if (op == "enum_morphisms") {
      auto const& dst = q["dst"].get<std::string>() == "and@0" ? ga : gx;
      actual = static_cast<long long>(enum_morphisms(gx, dst).size());
    } else if (op == "enum_transformations") {
      actual = static_cast<long long>(enum_transformations(idx, idx).size());
    }
    require(actual == entry["count"].get<long long>(), "pinned count drifted: " + q.dump());
    ++verified;
  }
  require(verified >= 20, "pinned fixture unexpectedly small");
  notes.push_back("counts verified: " + std::to_string(verified));
}

void criterion_identities() {
  for (auto const& g : structures_up_to(3, StructureClass::Groupement)) {
    auto const im = image_of(g.s);
    require(im == image_of(g.t) && im == fixed_points_of(g.s) && im == fixed_points_of(g.t),
            "image/fixed-point equalities fail");
    if (is_category(g)) require(identities(g) == im, "category identities differ from Im(s)");
  }
  FiniteMonoid const am{2, {{0, 0}, {0, 1}}, 1};
  auto const ga = from_monoid(am, 0);
  require(identities(ga) == std::set<int>{1}, "witness identities wrong");
  require(fixed_points_of(ga.s) == std::set<int>{0}, "witness fixed points wrong");
}

void criterion_duality() {
  for (auto const& g : structures_up_to(3, StructureClass::Groupement)) {
    require(dual(dual(g)) == g, "dual is not an involution");
    require(check_axioms(dual(g)).ok() == check_axioms(g).ok(), "dual changes the GR verdict");
    require(is_category(dual(g)) == is_category(g), "dual changes the category verdict");
    require(is_star(dual(g)) == is_star(g), "dual changes the star verdict");
  }
}

void criterion_morphism_category() {
  auto const gs = structures_up_to(2, StructureClass::Groupement);
  std::vector<GMorphism> morphs, foncs;
  for (auto const& a : gs)
    for (auto const& b : gs)
      for (auto const& f : enum_morphisms(a, b)) {
        if (check_gfonc(f)) foncs.push_back(f);
        morphs.push_back(f);
      }
  for (auto const* fam : {&morphs, &foncs}) {
    auto const rep = verify_morphism_category(gs, *fam, ClosureOptions{200000});
    for (auto const& c : rep.checks)
      require(c.pass, "morphism family fails " + c.axiom);
  }
  notes.push_back("morphisms: " + std::to_string(morphs.size()) +
                  ", functorial: " + std::to_string(foncs.size()));
}

void criterion_transformations() {
  auto const suite = theorem_suite(2);
  for (std::string const name : {"vertical transformation structures are groupements",
                                 "witness: vertical composition is not a category",
                                 "horizontal transformation structures are groupements",
                                 "sigma/tau operator relations",
                                 "GTRANS 2 equivalent to its primed form under GTRANS 1"}) {
    bool found = false;
    for (auto const& r : suite.results)
      if (r.name == name) {
        found = true;
        require(r.pass, "battery failed: " + name + " " + r.detail);
      }
    require(found, "battery missing: " + name);
  }
}

void criterion_moore() {
  // 1000 random paths across dimensions 1..3, up to 6 breakpoints.
  for (int dim = 1; dim <= 3; ++dim) {
    auto const rep = check_groupement_sampled(1, dim, 0, dim == 1 ? 334 : 333, 1000 + dim, 6);
    require(rep.ok(), "sampled path laws fail at dim " + std::to_string(dim));
  }
  // 500 surface quadruples: boundary-operator commutation and interchange.
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 500; ++i) {
    require(check_axis_commutation(random_cube(rng, 2, 2), 0, 1), "surface commutation fails");
    auto const q = random_interchange_quadruple(rng, 2, 1, 0, 1);
    require(check_interchange(q[0], q[1], q[2], q[3], 0, 1), "surface interchange fails");
  }
  // 200 three-axis cube families per axis pair.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::mt19937_64 r3(5000 + 10 * i + j);
      for (int trial = 0; trial < 200; ++trial) {
        require(check_axis_commutation(random_cube(r3, 3, 1), i, j), "cube commutation fails");
        auto const q = random_interchange_quadruple(r3, 3, 1, i, j);
        require(check_interchange(q[0], q[1], q[2], q[3], i, j), "cube interchange fails");
      }
    }
}

void criterion_alexandroff() {
  // Alexis uniqueness over every Alexandroff structure with n <= 4.
  for (auto const& g : structures_up_to(4, StructureClass::Alexandroff)) {
    int candidates = 0;
    for (int a = 0; a < g.n; ++a) {
      bool ok = true;
      for (int x = 0; x < g.n && ok; ++x) {
        if (x != a && (g.s[x] == a || g.t[x] == a)) ok = false;
        if (g.comp[x][a] != x || g.comp[a][x] != x) ok = false;
      }
      if (ok) ++candidates;
    }
    require(candidates == 1, "alexis not unique");
  }
  // Completion axioms for every structure with n <= 3.
  for (auto const& g : structures_up_to(3, StructureClass::Groupement)) {
    auto const c = complete(g);
    require(check_axioms(c.base).ok(), "completion breaks the GR axioms");
    require(find_alexis(c.base) == c.alpha, "completion alexis not found");
  }
  // Functor laws of the tilde extension over all chainable pairs at n <= 2.
  auto const gs = structures_up_to(2, StructureClass::Groupement);
  for (auto const& a : gs)
    for (auto const& b : gs) {
      auto const fab = enum_morphisms(a, b);
      for (auto const& c : gs) {
        auto const fbc = enum_morphisms(b, c);
        for (auto const& f : fab)
          for (auto const& g : fbc)
            require(tilde_functor(compose_gmor(g, f)) ==
                        compose_gmor(tilde_functor(g), tilde_functor(f)),
                    "tilde extension is not functorial");
      }
      if (a == b)
        require(tilde_functor(identity_morphism(a)) == identity_morphism(complete(a).base),
                "tilde extension moves the identity");
    }
  // Monoid hat for every monoid with at most 3 elements.
  int monoids = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
    bool more = true;
    while (more) {
      for (int e = 0; e < n; ++e) {
        FiniteMonoid m{n, std::vector<std::vector<int>>(n, std::vector<int>(n)), e};
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) m.table[x][y] = flat[x * n + y];
        try {
          validate(m);
        } catch (std::invalid_argument const&) {
          continue;
        }
        ++monoids;
        auto const h = monoid_hat(m);
        require(check_axioms(h.base).ok(), "monoid hat breaks the GR axioms");
        require(find_alexis(h.base) == h.alpha, "monoid hat alexis not found");
      }
      more = false;
      for (int i = static_cast<int>(flat.size()) - 1; i >= 0; --i) {
        if (++flat[i] < n) {
          more = true;
          break;
        }
        flat[i] = 0;
      }
    }
  }
  require(monoids >= 10, "monoid enumeration unexpectedly small");
  // Topology structures on up to 3 points.
  int topologies = 0;
  for (int m = 1; m <= 3; ++m) {
    std::uint32_t const full = (1u << m) - 1u;
    for (std::uint32_t fam = 0; fam < (1u << (full + 1)); ++fam) {
      FiniteTopology t{m, {}};
      for (std::uint32_t s = 0; s <= full; ++s)
        if (fam & (1u << s)) t.opens.push_back(s);
      try {
        validate(t);
      } catch (std::invalid_argument const&) {
        continue;
      }
      ++topologies;
      for (auto const& ag : {topology_union_groupement(t), topology_inter_groupement(t)}) {
        require(check_axioms(ag.base).ok(), "topology structure breaks the GR axioms");
        require(find_alexis(ag.base) == ag.alpha, "topology alexis not found");
      }
    }
  }
  notes.push_back("monoids: " + std::to_string(monoids) +
                  ", topologies: " + std::to_string(topologies));
}

void criterion_double_structures() {
  for (int m = 1; m <= 3; ++m) {
    std::uint32_t const full = (1u << m) - 1u;
    for (std::uint32_t fam = 0; fam < (1u << (full + 1)); ++fam) {
      FiniteTopology t{m, {}};
      for (std::uint32_t s = 0; s <= full; ++s)
        if (fam & (1u << s)) t.opens.push_back(s);
      try {
        validate(t);
      } catch (std::invalid_argument const&) {
        continue;
      }
      require(check_2gr(topology_2gr(t)).ok(), "topology double structure fails");
    }
  }
  int cats = 0;
  for (auto const& g : structures_up_to(3, StructureClass::Category)) {
    ++cats;
    auto const sq = gcarres(g);
    require(check_2gr(sq.tg).ok(), "square double structure fails");
    require(is_category(sq.tg.first) && is_category(sq.tg.second),
            "square layers are not categories");
  }
  require(moore_surface_2gr_sampled(500, 77).ok(), "sampled Moore double structure fails");
  notes.push_back("categories with <= 3 elements: " + std::to_string(cats));
}

void criterion_search() {
  auto const rep = interchange_search(InterchangeBounds{});
  std::ifstream in(fixtures + "/interchange_n2.json");
  require(in.good(), "cannot open interchange_n2.json");
  std::ostringstream ss;
  ss << in.rdbuf();
  require(serialize(rep) == ss.str(), "search report drifted from the pinned artifact");
  notes.push_back("quadruple identities checked: " +
                  std::to_string(rep.boxtimes_interchange.checked + rep.boxdot_interchange.checked));
}

void criterion_cli() {
  std::ifstream in(fixtures + "/cli_contract.json");
  require(in.good(), "cannot open cli_contract.json");
  json manifest;
  in >> manifest;
  for (auto const& c : manifest["cases"]) {
    std::string cmd = GRPT_CLI_PATH;
    for (auto const& a : c["args"]) {
      auto s = a.get<std::string>();
      if (s.size() > 5 && s.substr(s.size() - 5) == ".json") s = fixtures + "/" + s;
      cmd += " " + s;
    }
    cmd += " > /dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    require(status != -1, "cannot launch the CLI");
    require(WEXITSTATUS(status) == c["expect"].get<int>(),
            "exit code contract broken for: " + c["args"].dump());
  }

  auto round = [&](auto parse, std::string const& file) {
    auto const v = parse(read_file(fixtures + "/" + file));
    require(serialize(v) == [&] {
      auto const again = parse(serialize(v));
      return serialize(again);
    }(), "serialize/parse identity broken for " + file);
  };
  round([](std::string const& s) { return parse_groupement(s); }, "groupement_xor.json");
  round([](std::string const& s) { return parse_monoid(s); }, "monoid_z2.json");
  round([](std::string const& s) { return parse_topology(s); }, "topology_sierpinski.json");
  round([&](std::string const& s) { return parse_morphism(s, fixtures); }, "morphism_id_xor.json");
  round([&](std::string const& s) { return parse_transformation(s, fixtures); },
        "transformation_good.json");
  round([](std::string const& s) { return parse_cube(s); }, "cube_path2.json");
  round([](std::string const& s) { return parse_two_groupement(s); }, "two_groupement_good.json");
}

struct Criterion {
  std::string description;
  void (*run)();
  double budget_seconds;  // 0 = no runtime bound
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {"enumeration oracle consistency and pinned counts", criterion_counts, 30.0},
      {"identity/image/fixed-point laws with the separating witness", criterion_identities, 0},
      {"duality involution preserves all verdicts", criterion_duality, 0},
      {"morphism and functorial families close into categories", criterion_morphism_category,
       60.0},
      {"transformation operator laws and witnesses", criterion_transformations, 0},
      {"Moore cube laws, exact on sampled paths/surfaces/cubes", criterion_moore, 60.0},
      {"Alexandroff constructions and alexis laws", criterion_alexandroff, 0},
      {"double structures: topologies, squares, sampled surfaces", criterion_double_structures,
       0},
      {"interchange search completes and reproduces the pinned report", criterion_search, 60.0},
      {"CLI exit-code contract and serialization identity", criterion_cli, 0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    notes.clear();
    auto const start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].run();
    } catch (Failure const& f) {
      verdict = "FAIL";
      detail = f.detail;
    } catch (std::exception const& e) {
      verdict = "FAIL";
      detail = e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (verdict == "PASS" && criteria[i].budget_seconds > 0 && secs >= criteria[i].budget_seconds) {
      verdict = "FAIL";
      detail = "runtime budget exceeded";
    }
    if (verdict == "FAIL") ++failures;
    std::printf("criterion %2zu %s (%6.2fs): %s", i + 1, verdict.c_str(), secs,
                criteria[i].description.c_str());
    if (!detail.empty()) std::printf(" -- %s", detail.c_str());
    for (auto const& n : notes) std::printf(" [%s]", n.c_str());
    std::printf("\n");
  }
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
