#pragma once

#include <vector>

#include "grpt/groupement.hpp"

namespace grpt {

struct GMorphism;
struct GTransformation;

/// Flat integer keys for structural indexing of families in ordered maps.
std::vector<int> flat_key(FiniteGroupement const& g);
std::vector<int> flat_key(GMorphism const& f);
std::vector<int> flat_key(GTransformation const& t);

}  // namespace grpt
