#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "grpt/alexandroff.hpp"
#include "grpt/enumerate.hpp"
#include "grpt/groupement.hpp"
#include "grpt/moore.hpp"
#include "grpt/morphism.hpp"
#include "grpt/report.hpp"
#include "grpt/transformation.hpp"
#include "grpt/two_groupement.hpp"

namespace grpt {

/// Raised on malformed files: the message carries a byte position (syntax)
/// or a JSON path (semantic), so callers can point at the offending spot.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path);

// Parsers: JSON text in, validated value out. Morphism/transformation files
// may reference their endpoint structures by file path (resolved against
// base_dir).
FiniteGroupement parse_groupement(std::string const& text);
ClassicCategory parse_classic(std::string const& text);
FiniteMonoid parse_monoid(std::string const& text);
GMorphism parse_morphism(std::string const& text, std::string const& base_dir = "");
GTransformation parse_transformation(std::string const& text, std::string const& base_dir = "");
FiniteTopology parse_topology(std::string const& text);
MooreCube parse_cube(std::string const& text);
TwoGroupement parse_two_groupement(std::string const& text);

// Serializers: stable field and element order; rationals as normalized
// "p/q" strings. serialize(parse(text)) is bit-identical to
// serialize(value) for every schema.
std::string serialize(FiniteGroupement const& g);
std::string serialize(ClassicCategory const& c);
std::string serialize(FiniteMonoid const& m);
std::string serialize(GMorphism const& f);
std::string serialize(GTransformation const& t);
std::string serialize(FiniteTopology const& t);
std::string serialize(MooreCube const& c);
std::string serialize(TwoGroupement const& tg);

std::string serialize(AxiomReport const& r);
std::string serialize(SuiteReport const& r);
std::string serialize(InterchangeReport const& r);

}  // namespace grpt
