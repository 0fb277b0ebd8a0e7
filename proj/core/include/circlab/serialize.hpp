#pragma once

#include <nlohmann/json.hpp>

#include "circlab/chromatic.hpp"
#include "circlab/extended.hpp"
#include "circlab/free_chromatic.hpp"
#include "circlab/graph.hpp"
#include "circlab/hom_search.hpp"
#include "circlab/rational.hpp"

namespace circlab {

using Json = nlohmann::ordered_json;

/// {num, den}
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// Integer, or the string "inf".
Json to_json(const NatOrInf& value);

/// Image list indexed by vertex.
Json to_json(const HomWitness& witness);
Json to_json(const Coloring& coloring);

/// {classes: [[v...]], support_edges: [[u,v]...], a, b}; an unbounded b is null.
Json to_json(const FreeColoring& coloring);
FreeColoring free_coloring_from_json(const Json& j, std::size_t order);

/// {family, params, operands}
Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json to_json(const VertexSet& set);
Json to_json(const Edge& e);

}  // namespace circlab
