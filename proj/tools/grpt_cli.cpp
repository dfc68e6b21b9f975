// Command-line front door: load and validate structure files, run
// classifications and constructions, Moore-cube operations, theorem suites,
// and the interchange counterexample search.
//
// Exit codes: 0 = all checks pass, 1 = axiom/property violation (report
// emitted), 2 = input error (position-annotated message on stderr).

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grpt/alexandroff.hpp"
#include "grpt/enumerate.hpp"
#include "grpt/groupement.hpp"
#include "grpt/io.hpp"
#include "grpt/moore.hpp"
#include "grpt/morphism.hpp"
#include "grpt/two_groupement.hpp"

namespace {

using namespace grpt;

bool machine_output(std::string const& fmt) {
  if (fmt == "machine") return true;
  if (fmt == "text") return false;
  throw CLI::ValidationError("--format must be text or machine");
}

std::string default_format() {
  char const* env = std::getenv("GRPT_FORMAT");
  return env != nullptr ? env : "text";
}

std::string base_dir_of(std::string const& path) {
  auto const slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

void print_report_text(AxiomReport const& rep) {
  for (auto const& c : rep.checks) {
    std::cout << c.axiom << ": " << (c.pass ? "pass" : "FAIL");
    if (c.violation) {
      std::cout << "  witness";
      for (int w : c.violation->witness) std::cout << ' ' << w;
      std::cout << "  lhs=" << c.violation->lhs << " rhs=" << c.violation->rhs;
    }
    std::cout << '\n';
  }
}

int emit_report(AxiomReport const& rep, bool machine) {
  if (machine)
    std::cout << serialize(rep);
  else
    print_report_text(rep);
  return rep.ok() ? 0 : 1;
}

template <typename T>
void print_set(std::string const& label, T const& xs) {
  std::cout << label << ": {";
  bool first = true;
  for (int x : xs) {
    if (!first) std::cout << ", ";
    std::cout << x;
    first = false;
  }
  std::cout << "}\n";
}

// check/classify accept any of the structure schemas; the schema is
// recognized by its distinguishing fields.
enum class FileKind { Groupement, TwoGroupement, Cube, Topology, Morphism, Transformation };

FileKind sniff(std::string const& text) {
  auto has = [&](std::string const& field) {
    return text.find('"' + field + '"') != std::string::npos;
  };
  if (has("st1") && has("st2")) return FileKind::TwoGroupement;
  if (has("grids") && has("values")) return FileKind::Cube;
  if (has("opens")) return FileKind::Topology;
  if (has("eta1") && has("eta2")) return FileKind::Transformation;
  if (has("map") && has("src") && has("dst")) return FileKind::Morphism;
  return FileKind::Groupement;
}

int cmd_check(std::string const& path, bool machine) {
  auto const text = read_file(path);
  switch (sniff(text)) {
    case FileKind::TwoGroupement:
      return emit_report(check_2gr(parse_two_groupement(text)), machine);
    case FileKind::Cube: {
      auto const c = parse_cube(text);  // validation happens in the parser
      if (!machine) std::cout << "well-formed cube: k=" << c.k << " dim=" << c.dim << "\n";
      AxiomReport rep;
      rep.add_pass("cube shape");
      return emit_report(rep, machine);
    }
    case FileKind::Topology: {
      parse_topology(text);  // validation happens in the parser
      AxiomReport rep;
      rep.add_pass("topology axioms");
      return emit_report(rep, machine);
    }
    case FileKind::Transformation:
      return emit_report(check_gtrans(parse_transformation(text, base_dir_of(path))), machine);
    case FileKind::Morphism:
      return emit_report(check_gmor(parse_morphism(text, base_dir_of(path))), machine);
    case FileKind::Groupement:
      return emit_report(check_axioms(parse_groupement(text)), machine);
  }
  return 2;
}

int cmd_classify(std::string const& path, bool machine) {
  auto const g = parse_groupement(read_file(path));
  auto const rep = check_axioms(g);
  bool const groupement = rep.ok();
  bool const category = groupement && is_category(g);
  bool const star = groupement && is_star(g);
  auto const alexis = find_alexis(g);
  auto const ids = identities(g);
  auto const invs = invertibles(g);
  if (machine) {
    std::cout << "{\n"
              << "  \"groupement\": " << (groupement ? "true" : "false") << ",\n"
              << "  \"category\": " << (category ? "true" : "false") << ",\n"
              << "  \"star\": " << (star ? "true" : "false") << ",\n"
              << "  \"alexandroff\": " << (alexis ? "true" : "false") << ",\n"
              << "  \"alexis\": " << (alexis ? std::to_string(*alexis) : "null") << ",\n";
    auto set_json = [](auto const& xs) {
      std::string out = "[";
      bool first = true;
      for (int x : xs) {
        if (!first) out += ", ";
        out += std::to_string(x);
        first = false;
      }
      return out + "]";
    };
    std::cout << "  \"identities\": " << set_json(ids) << ",\n"
              << "  \"invertibles\": " << set_json(invs) << "\n}\n";
  } else {
    std::cout << "groupement: " << (groupement ? "yes" : "no") << '\n'
              << "category: " << (category ? "yes" : "no") << '\n'
              << "star: " << (star ? "yes" : "no") << '\n'
              << "alexandroff: " << (alexis ? "yes (alexis " + std::to_string(*alexis) + ")" : "no")
              << '\n';
    print_set("identities", ids);
    print_set("invertibles", invs);
    if (!groupement) print_report_text(rep);
  }
  return groupement ? 0 : 1;
}

int cmd_suite(int n, bool machine) {
  auto const rep = theorem_suite(n);
  if (machine) {
    std::cout << serialize(rep);
  } else {
    for (auto const& r : rep.results) {
      std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << '\n';
    }
    std::cout << (rep.ok() ? "all batteries passed" : "FAILURES PRESENT") << '\n';
  }
  return rep.ok() ? 0 : 1;
}

int cmd_search(InterchangeBounds const& bounds, bool machine) {
  auto const rep = interchange_search(bounds);
  bool violations = rep.boxtimes_interchange.violations != 0 ||
                    rep.boxdot_interchange.violations != 0 ||
                    rep.boxtimes_vs_boxdot.violations != 0;
  if (machine) {
    std::cout << serialize(rep);
  } else {
    auto line = [](IdentitySearchResult const& r) {
      std::cout << r.identity << ": checked=" << r.checked << " violations=" << r.violations
                << '\n';
    };
    std::cout << "base groupements: " << rep.num_base_groupements
              << "  transformations: " << rep.num_transformations << '\n';
    line(rep.boxtimes_interchange);
    line(rep.boxdot_interchange);
    line(rep.boxtimes_vs_boxdot);
    line(rep.lemma_pairing);
  }
  // The pairing identity is reported, not asserted: it is ill-typed in
  // general and its violations are an expected outcome of the search.
  return violations ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupement toolkit"};
  app.require_subcommand(1);
  std::string format = default_format();
  app.add_option("--format", format, "output format: text | machine")->capture_default_str();

  std::string in1, in2, in3, in4;
  int axis = 0;

  auto* check = app.add_subcommand("check", "axiom report for a structure file");
  check->add_option("file", in1)->required();

  auto* classify = app.add_subcommand("classify", "class flags, identities, invertibles, alexis");
  classify->add_option("file", in1)->required();

  auto* dual_cmd = app.add_subcommand("dual", "swap source/target, transpose composition");
  dual_cmd->add_option("file", in1)->required();

  auto* complete_cmd = app.add_subcommand("complete", "adjoin a fresh alexis");
  complete_cmd->add_option("file", in1)->required();

  auto* hat = app.add_subcommand("hat", "canonical Alexandroff groupement of a monoid");
  hat->add_option("file", in1)->required();

  auto* topo2gr = app.add_subcommand("topo2gr", "union/intersection 2-groupement of a topology");
  topo2gr->add_option("file", in1)->required();

  auto* gc = app.add_subcommand("gcarres", "commuting-square 2-groupement of a category");
  gc->add_option("file", in1)->required();

  auto* moore = app.add_subcommand("moore", "Moore cube operations");
  moore->require_subcommand(1);
  auto* mcompose = moore->add_subcommand("compose", "concatenate two cubes along an axis");
  mcompose->add_option("c2", in1)->required();
  mcompose->add_option("c1", in2)->required();
  mcompose->add_option("--axis", axis)->capture_default_str();
  auto* msource = moore->add_subcommand("source", "source boundary extrusion");
  msource->add_option("file", in1)->required();
  msource->add_option("--axis", axis)->capture_default_str();
  auto* mtarget = moore->add_subcommand("target", "target boundary extrusion");
  mtarget->add_option("file", in1)->required();
  mtarget->add_option("--axis", axis)->capture_default_str();
  auto* minter = moore->add_subcommand("interchange", "check interchange on a quadruple");
  minter->add_option("c1", in1)->required();
  minter->add_option("c2", in2)->required();
  minter->add_option("c3", in3)->required();
  minter->add_option("c4", in4)->required();
  int axis_i = 0, axis_j = 1;
  minter->add_option("--axis-i", axis_i)->capture_default_str();
  minter->add_option("--axis-j", axis_j)->capture_default_str();

  int n = 1;
  std::string cls = "groupement";
  bool canonical = false;
  auto* enumerate = app.add_subcommand("enumerate", "stream all structures of a carrier size");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--class", cls,
                        "groupement | category | star | alexandroff | two-groupement")
      ->capture_default_str();
  enumerate->add_flag("--canonical", canonical, "canonical representatives only (default)");
  enumerate->add_flag("--count-only", "emit only the count");

  auto* suite = app.add_subcommand("suite", "run the theorem batteries up to a carrier bound");
  suite->add_option("--n", n)->required();

  unsigned long long cap = InterchangeBounds{}.quad_cap;
  auto* search = app.add_subcommand("search-interchange",
                                    "exhaustive interchange-law counterexample search");
  search->add_option("--n", n)->required();
  search->add_option("--cap", cap, "quadruple evaluation budget")->capture_default_str();

  std::uint64_t seed = 17;
  int trials = 100;
  auto* msample = moore->add_subcommand("sample", "sampled groupement axioms on random cubes");
  msample->add_option("--k", axis_i, "number of axes")->capture_default_str();
  msample->add_option("--axis", axis)->capture_default_str();
  msample->add_option("--seed", seed)->capture_default_str();
  msample->add_option("--trials", trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    bool const machine = machine_output(format);
    if (*check) return cmd_check(in1, machine);
    if (*classify) return cmd_classify(in1, machine);
    if (*dual_cmd) {
      std::cout << serialize(dual(parse_groupement(read_file(in1))));
      return 0;
    }
    if (*complete_cmd) {
      auto const a = complete(parse_groupement(read_file(in1)));
      std::cout << serialize(a.base);
      if (!machine) std::cout << "alexis: " << a.alpha << '\n';
      return 0;
    }
    if (*hat) {
      auto const a = monoid_hat(parse_monoid(read_file(in1)));
      std::cout << serialize(a.base);
      if (!machine) std::cout << "alexis: " << a.alpha << '\n';
      return 0;
    }
    if (*topo2gr) {
      std::cout << serialize(topology_2gr(parse_topology(read_file(in1))));
      return 0;
    }
    if (*gc) {
      auto const g = parse_groupement(read_file(in1));
      if (!is_category(g)) {
        std::cerr << "input is not a category\n";
        return 1;
      }
      std::cout << serialize(gcarres(g).tg);
      return 0;
    }
    if (*mcompose) {
      auto const c2 = parse_cube(read_file(in1));
      auto const c1 = parse_cube(read_file(in2));
      std::cout << serialize(compose_axis(c2, c1, axis));
      return 0;
    }
    if (*msource) {
      std::cout << serialize(source_axis(parse_cube(read_file(in1)), axis));
      return 0;
    }
    if (*mtarget) {
      std::cout << serialize(target_axis(parse_cube(read_file(in1)), axis));
      return 0;
    }
    if (*minter) {
      auto const c1 = parse_cube(read_file(in1));
      auto const c2 = parse_cube(read_file(in2));
      auto const c3 = parse_cube(read_file(in3));
      auto const c4 = parse_cube(read_file(in4));
      bool const ok = check_interchange(c1, c2, c3, c4, axis_i, axis_j);
      std::cout << (ok ? "interchange holds\n" : "interchange VIOLATED\n");
      return ok ? 0 : 1;
    }
    if (*msample)
      return emit_report(check_groupement_sampled(axis_i == 0 ? 1 : axis_i, 2, axis, trials, seed),
                         machine);
    if (*enumerate) {
      EnumerationQuery q;
      q.n = n;
      q.bound = 4;
      if (cls == "groupement")
        q.cls = StructureClass::Groupement;
      else if (cls == "category")
        q.cls = StructureClass::Category;
      else if (cls == "star")
        q.cls = StructureClass::Star;
      else if (cls == "alexandroff")
        q.cls = StructureClass::Alexandroff;
      else if (cls == "two-groupement")
        q.cls = StructureClass::TwoGroupement;
      else
        throw std::invalid_argument("unknown class: " + cls);
      if (q.cls == StructureClass::TwoGroupement) {
        auto const out = enum_two_groupements(n);
        if (enumerate->count("--count-only")) {
          std::cout << out.size() << '\n';
        } else {
          for (auto const& tg : out) std::cout << serialize(tg);
        }
        return 0;
      }
      auto const out = enum_structures(q);
      if (enumerate->count("--count-only")) {
        std::cout << out.size() << '\n';
      } else {
        for (auto const& g : out) std::cout << serialize(g);
      }
      return 0;
    }
    if (*suite) return cmd_suite(n, machine);
    if (*search) {
      InterchangeBounds b;
      b.n = n;
      b.quad_cap = cap;
      return cmd_search(b, machine);
    }
  } catch (ParseError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
