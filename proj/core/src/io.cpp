#include "grpt/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grpt {

using json = nlohmann::ordered_json;

namespace {

json parse_text(std::string const& text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
}

[[noreturn]] void fail(std::string const& path, std::string const& what) {
  throw ParseError("at " + (path.empty() ? "/" : path) + ": " + what);
}

int get_int(json const& j, std::string const& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

json const& member(json const& j, std::string const& key, std::string const& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto const it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

std::vector<int> int_vector(json const& j, std::string const& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

FiniteGroupement groupement_of(json const& j, std::string const& path) {
  FiniteGroupement g;
  g.n = get_int(member(j, "n", path), path + "/n");
  g.s = int_vector(member(j, "s", path), path + "/s");
  g.t = int_vector(member(j, "t", path), path + "/t");
  auto const& comp = member(j, "comp", path);
  if (!comp.is_array()) fail(path + "/comp", "expected an array of rows");
  for (std::size_t x = 0; x < comp.size(); ++x)
    g.comp.push_back(int_vector(comp[x], path + "/comp/" + std::to_string(x)));
  try {
    validate_shape(g);
  } catch (std::invalid_argument const& e) {
    fail(path, e.what());
  }
  return g;
}

json groupement_json(FiniteGroupement const& g) {
  return json{{"n", g.n}, {"s", g.s}, {"t", g.t}, {"comp", g.comp}};
}

FiniteGroupement structure_or_ref(json const& j, std::string const& path,
                                  std::string const& base_dir) {
  if (j.is_string()) {
    std::string p = j.get<std::string>();
    if (!base_dir.empty() && !p.empty() && p[0] != '/') p = base_dir + "/" + p;
    return groupement_of(parse_text(read_file(p)), path + "(" + p + ")");
  }
  return groupement_of(j, path);
}

GMorphism morphism_of(json const& j, std::string const& path, std::string const& base_dir) {
  GMorphism f;
  f.src = structure_or_ref(member(j, "src", path), path + "/src", base_dir);
  f.dst = structure_or_ref(member(j, "dst", path), path + "/dst", base_dir);
  f.map = int_vector(member(j, "map", path), path + "/map");
  try {
    validate_shape(f);
  } catch (std::invalid_argument const& e) {
    fail(path, e.what());
  }
  return f;
}

json morphism_json(GMorphism const& f) {
  return json{{"src", groupement_json(f.src)}, {"dst", groupement_json(f.dst)}, {"map", f.map}};
}

Rat rational_of(json const& j, std::string const& path) {
  if (j.is_number_integer()) return Rat{j.get<long long>()};
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (std::exception const& e) {
    fail(path, e.what());
  }
}

void cube_values_of(json const& j, MooreCube const& c, int axis, std::vector<std::size_t>& ix,
                    std::vector<std::vector<Rat>>& flat, std::string const& path) {
  if (axis == c.k) {
    if (!j.is_array() || static_cast<int>(j.size()) != c.dim)
      fail(path, "expected a vector of dim rationals");
    std::vector<Rat> v(c.dim);
    for (int d = 0; d < c.dim; ++d) v[d] = rational_of(j[d], path + "/" + std::to_string(d));
    flat.push_back(std::move(v));
    return;
  }
  if (!j.is_array() || j.size() != c.grids[axis].size())
    fail(path, "expected one entry per grid coordinate of axis " + std::to_string(axis));
  for (std::size_t i = 0; i < j.size(); ++i) {
    ix[axis] = i;
    cube_values_of(j[i], c, axis + 1, ix, flat, path + "/" + std::to_string(i));
  }
}

json cube_values_json(MooreCube const& c, int axis, std::size_t& cursor) {
  json out = json::array();
  if (axis == c.k) {
    for (auto const& r : c.values[cursor]) out.push_back(to_string(r));
    ++cursor;
    return out;
  }
  for (std::size_t i = 0; i < c.grids[axis].size(); ++i)
    out.push_back(cube_values_json(c, axis + 1, cursor));
  return out;
}

FiniteTopology topology_of(json const& j, std::string const& path) {
  FiniteTopology t;
  t.m = get_int(member(j, "m", path), path + "/m");
  auto const& opens = member(j, "opens", path);
  if (!opens.is_array()) fail(path + "/opens", "expected an array of point lists");
  for (std::size_t i = 0; i < opens.size(); ++i) {
    auto const pts = int_vector(opens[i], path + "/opens/" + std::to_string(i));
    std::uint32_t mask = 0;
    for (int p : pts) {
      if (p < 0 || p >= t.m) fail(path + "/opens/" + std::to_string(i), "point out of range");
      mask |= 1u << p;
    }
    t.opens.push_back(mask);
  }
  try {
    validate(t);
  } catch (std::invalid_argument const& e) {
    fail(path, e.what());
  }
  return t;
}

std::string dump(json const& j) { return j.dump(2) + "\n"; }

json report_json(AxiomReport const& r) {
  json checks = json::array();
  for (auto const& c : r.checks) {
    json e{{"axiom", c.axiom}, {"pass", c.pass}};
    if (c.violation)
      e["violation"] = json{{"witness", c.violation->witness},
                            {"lhs", c.violation->lhs},
                            {"rhs", c.violation->rhs}};
    checks.push_back(std::move(e));
  }
  return json{{"ok", r.ok()}, {"checks", std::move(checks)}};
}

json identity_result_json(IdentitySearchResult const& r) {
  json ws = json::array();
  for (auto const& w : r.witnesses)
    ws.push_back(json{{"b1", w.b1}, {"b2", w.b2}, {"b3", w.b3}, {"trans", w.trans}});
  return json{{"identity", r.identity},
              {"checked", r.checked},
              {"violations", r.violations},
              {"witnesses", std::move(ws)}};
}

}  // namespace

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroupement parse_groupement(std::string const& text) {
  return groupement_of(parse_text(text), "");
}

ClassicCategory parse_classic(std::string const& text) {
  auto const j = parse_text(text);
  ClassicCategory c;
  c.objects = get_int(member(j, "objects", ""), "/objects");
  auto const& ms = member(j, "morphisms", "");
  if (!ms.is_array()) fail("/morphisms", "expected an array of [src,dst] pairs");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto const pair = int_vector(ms[i], "/morphisms/" + std::to_string(i));
    if (pair.size() != 2) fail("/morphisms/" + std::to_string(i), "expected [src,dst]");
    c.morphisms.emplace_back(pair[0], pair[1]);
  }
  c.id = int_vector(member(j, "id", ""), "/id");
  auto const& comp = member(j, "comp", "");
  if (!comp.is_array()) fail("/comp", "expected an array of [x,y,z] triples");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    auto const triple = int_vector(comp[i], "/comp/" + std::to_string(i));
    if (triple.size() != 3) fail("/comp/" + std::to_string(i), "expected [x,y,z]");
    c.comp.push_back({triple[0], triple[1], triple[2]});
  }
  try {
    validate(c);
  } catch (std::invalid_argument const& e) {
    fail("", e.what());
  }
  return c;
}

FiniteMonoid parse_monoid(std::string const& text) {
  auto const j = parse_text(text);
  FiniteMonoid m;
  m.n = get_int(member(j, "n", ""), "/n");
  auto const& table = member(j, "table", "");
  if (!table.is_array()) fail("/table", "expected an array of rows");
  for (std::size_t x = 0; x < table.size(); ++x)
    m.table.push_back(int_vector(table[x], "/table/" + std::to_string(x)));
  m.e = get_int(member(j, "e", ""), "/e");
  try {
    validate(m);
  } catch (std::invalid_argument const& e) {
    fail("", e.what());
  }
  return m;
}

GMorphism parse_morphism(std::string const& text, std::string const& base_dir) {
  return morphism_of(parse_text(text), "", base_dir);
}

GTransformation parse_transformation(std::string const& text, std::string const& base_dir) {
  auto const j = parse_text(text);
  GTransformation t;
  t.f1 = morphism_of(member(j, "f1", ""), "/f1", base_dir);
  t.f2 = morphism_of(member(j, "f2", ""), "/f2", base_dir);
  t.eta1 = int_vector(member(j, "eta1", ""), "/eta1");
  t.eta2 = int_vector(member(j, "eta2", ""), "/eta2");
  try {
    validate_shape(t);
  } catch (std::invalid_argument const& e) {
    fail("", e.what());
  }
  return t;
}

FiniteTopology parse_topology(std::string const& text) {
  return topology_of(parse_text(text), "");
}

MooreCube parse_cube(std::string const& text) {
  auto const j = parse_text(text);
  MooreCube c;
  c.k = get_int(member(j, "k", ""), "/k");
  c.dim = get_int(member(j, "dim", ""), "/dim");
  if (c.k < 1) fail("/k", "cube needs at least one axis");
  auto const& grids = member(j, "grids", "");
  if (!grids.is_array() || static_cast<int>(grids.size()) != c.k)
    fail("/grids", "expected one grid per axis");
  for (std::size_t i = 0; i < grids.size(); ++i) {
    auto const& g = grids[i];
    std::string const p = "/grids/" + std::to_string(i);
    if (!g.is_array()) fail(p, "expected an array of rationals");
    std::vector<Rat> grid;
    for (std::size_t u = 0; u < g.size(); ++u)
      grid.push_back(rational_of(g[u], p + "/" + std::to_string(u)));
    c.grids.push_back(std::move(grid));
  }
  std::vector<std::size_t> ix(c.k, 0);
  cube_values_of(member(j, "values", ""), c, 0, ix, c.values, "/values");
  try {
    validate(c);
  } catch (std::invalid_argument const& e) {
    fail("", e.what());
  }
  return c;
}

TwoGroupement parse_two_groupement(std::string const& text) {
  auto const j = parse_text(text);
  TwoGroupement tg;
  int const n = get_int(member(j, "n", ""), "/n");
  tg.first = groupement_of(member(j, "st1", ""), "/st1");
  tg.second = groupement_of(member(j, "st2", ""), "/st2");
  if (tg.first.n != n || tg.second.n != n) fail("/n", "carrier size mismatch across layers");
  try {
    validate_shape(tg);
  } catch (std::invalid_argument const& e) {
    fail("", e.what());
  }
  return tg;
}

std::string serialize(FiniteGroupement const& g) { return dump(groupement_json(g)); }

std::string serialize(ClassicCategory const& c) {
  json ms = json::array();
  for (auto const& [src, dst] : c.morphisms) ms.push_back(json::array({src, dst}));
  json comp = json::array();
  for (auto const& t : c.comp) comp.push_back(json::array({t[0], t[1], t[2]}));
  return dump(json{{"objects", c.objects}, {"morphisms", ms}, {"id", c.id}, {"comp", comp}});
}

std::string serialize(FiniteMonoid const& m) {
  return dump(json{{"n", m.n}, {"table", m.table}, {"e", m.e}});
}

std::string serialize(GMorphism const& f) { return dump(morphism_json(f)); }

std::string serialize(GTransformation const& t) {
  return dump(json{{"f1", morphism_json(t.f1)},
                   {"f2", morphism_json(t.f2)},
                   {"eta1", t.eta1},
                   {"eta2", t.eta2}});
}

std::string serialize(FiniteTopology const& t) {
  json opens = json::array();
  for (auto mask : t.opens) {
    json pts = json::array();
    for (int p = 0; p < t.m; ++p)
      if (mask & (1u << p)) pts.push_back(p);
    opens.push_back(std::move(pts));
  }
  return dump(json{{"m", t.m}, {"opens", std::move(opens)}});
}

std::string serialize(MooreCube const& c) {
  json grids = json::array();
  for (auto const& g : c.grids) {
    json row = json::array();
    for (auto const& u : g) row.push_back(to_string(u));
    grids.push_back(std::move(row));
  }
  std::size_t cursor = 0;
  return dump(json{{"k", c.k},
                   {"dim", c.dim},
                   {"grids", std::move(grids)},
                   {"values", cube_values_json(c, 0, cursor)}});
}

std::string serialize(TwoGroupement const& tg) {
  return dump(json{{"n", tg.first.n},
                   {"st1", groupement_json(tg.first)},
                   {"st2", groupement_json(tg.second)}});
}

std::string serialize(AxiomReport const& r) { return dump(report_json(r)); }

std::string serialize(SuiteReport const& r) {
  json results = json::array();
  for (auto const& t : r.results)
    results.push_back(json{{"name", t.name}, {"pass", t.pass}, {"detail", t.detail}});
  return dump(json{{"n", r.n}, {"ok", r.ok()}, {"results", std::move(results)}});
}

std::string serialize(InterchangeReport const& r) {
  return dump(json{{"bounds", json{{"n", r.bounds.n},
                                   {"quad_cap", r.bounds.quad_cap},
                                   {"witness_cap", r.bounds.witness_cap}}},
                   {"num_base_groupements", r.num_base_groupements},
                   {"num_transformations", r.num_transformations},
                   {"results", json::array({identity_result_json(r.boxtimes_interchange),
                                            identity_result_json(r.boxdot_interchange),
                                            identity_result_json(r.boxtimes_vs_boxdot),
                                            identity_result_json(r.lemma_pairing)})}});
}

}  // namespace grpt
