// Regenerates the pinned regression fixtures. Run from the repository root:
//
//   build/tools/grpt-pin-counts fixtures
//
// writes fixtures/pinned_counts.json and fixtures/interchange_n2.json. The
// counts are computed, never hand-entered; tests compare against the files
// bit-exactly.

#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "grpt/alexandroff.hpp"
#include "grpt/enumerate.hpp"
#include "grpt/groupement.hpp"
#include "grpt/io.hpp"
#include "grpt/morphism.hpp"
#include "grpt/two_groupement.hpp"

using json = nlohmann::ordered_json;
using namespace grpt;

namespace {

json count_entry(std::string const& op, json query, long long count) {
  query["op"] = op;
  return json{{"query", std::move(query)}, {"count", count}};
}

std::string class_name(StructureClass c) {
  switch (c) {
    case StructureClass::Groupement: return "groupement";
    case StructureClass::Category: return "category";
    case StructureClass::Star: return "star";
    case StructureClass::Alexandroff: return "alexandroff";
    case StructureClass::TwoGroupement: return "two-groupement";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  std::string const out_dir = argc > 1 ? argv[1] : "fixtures";

  json counts = json::array();
  for (int n = 1; n <= 3; ++n)
    for (auto cls : {StructureClass::Groupement, StructureClass::Category, StructureClass::Star,
                     StructureClass::Alexandroff}) {
      EnumerationQuery q;
      q.n = n;
      q.cls = cls;
      q.bound = 4;
      counts.push_back(count_entry(
          "enum_structures", json{{"n", n}, {"class", class_name(cls)}},
          static_cast<long long>(enum_structures(q).size())));
    }
  for (auto cls : {StructureClass::Groupement, StructureClass::Alexandroff}) {
    EnumerationQuery q;
    q.n = 4;
    q.cls = cls;
    q.bound = 4;
    counts.push_back(count_entry("enum_structures", json{{"n", 4}, {"class", class_name(cls)}},
                                 static_cast<long long>(enum_structures(q).size())));
  }
  for (int n = 1; n <= 2; ++n)
    counts.push_back(count_entry("enum_structures_naive", json{{"n", n}, {"canonical", true}},
                                 static_cast<long long>(enum_structures_naive(n, true).size())));
  for (int n = 1; n <= 2; ++n)
    counts.push_back(count_entry("enum_two_groupements", json{{"n", n}},
                                 static_cast<long long>(enum_two_groupements(n).size())));

  // Two fixed two-element groupements: (Z/2, xor) and ({0,1}, AND), both
  // based at 0.
  FiniteMonoid const xm{2, {{0, 1}, {1, 0}}, 0};
  FiniteMonoid const am{2, {{0, 0}, {0, 1}}, 1};
  auto const gx = from_monoid(xm, 0);
  auto const ga = from_monoid(am, 0);
  counts.push_back(count_entry("enum_morphisms", json{{"src", "xor@0"}, {"dst", "and@0"}},
                               static_cast<long long>(enum_morphisms(gx, ga).size())));
  counts.push_back(count_entry("enum_morphisms", json{{"src", "xor@0"}, {"dst", "xor@0"}},
                               static_cast<long long>(enum_morphisms(gx, gx).size())));
  auto const idx = identity_morphism(gx);
  counts.push_back(count_entry("enum_transformations",
                               json{{"f1", "id(xor@0)"}, {"f2", "id(xor@0)"}},
                               static_cast<long long>(enum_transformations(idx, idx).size())));

  json root{{"command", "build/tools/grpt-pin-counts fixtures"},
            {"tool_version", "0.1.0"},
            {"counts", std::move(counts)}};
  {
    std::ofstream out(out_dir + "/pinned_counts.json");
    out << root.dump(2) << "\n";
  }

  InterchangeBounds bounds;  // defaults: n = 2
  {
    std::ofstream out(out_dir + "/interchange_n2.json");
    out << serialize(interchange_search(bounds));
  }
  std::cout << "wrote " << out_dir << "/pinned_counts.json and " << out_dir
            << "/interchange_n2.json\n";
  return 0;
}
